//! Conjugation by simple reflections that never increases length.
//!
//! `w ->_s w'` when `w' = sws` and `l(w') <= l(w)`. Any element reaches a
//! minimal-length element of its conjugacy class along such arrows, and the
//! equal-length arrows partition each length level into cyclic shift classes.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;

use crate::coxeter::{CoxeterSystem, FiniteElement};
use crate::report::LemmaReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowStep {
    pub source: FiniteElement,
    pub generator: usize,
    pub target: FiniteElement,
}

/// All arrows out of `w`, in generator order.
pub fn arrow_targets(sys: &CoxeterSystem, w: &FiniteElement) -> Vec<ArrowStep> {
    let len = sys.length(w);
    (1..=sys.rank())
        .filter_map(|s| {
            let target = sys.conjugate_by_gen(s, w);
            (sys.length(&target) <= len).then(|| ArrowStep {
                source: w.clone(),
                generator: s,
                target,
            })
        })
        .collect()
}

/// Smallest generator whose conjugate is strictly shorter.
fn strict_drop(sys: &CoxeterSystem, w: &FiniteElement) -> Option<ArrowStep> {
    let len = sys.length(w);
    (1..=sys.rank()).find_map(|s| {
        let target = sys.conjugate_by_gen(s, w);
        (sys.length(&target) < len).then(|| ArrowStep {
            source: w.clone(),
            generator: s,
            target,
        })
    })
}

/// Equal-length arrows that actually move `w`.
fn plateau_moves(sys: &CoxeterSystem, w: &FiniteElement) -> Vec<(usize, FiniteElement)> {
    let len = sys.length(w);
    (1..=sys.rank())
        .filter_map(|s| {
            let t = sys.conjugate_by_gen(s, w);
            (t != *w && sys.length(&t) == len).then_some((s, t))
        })
        .collect()
}

/// Follows arrows to a minimal-length element of the conjugacy class.
///
/// Strict drops are taken greedily. When none exists the equal-length level
/// is searched breadth-first for a node that admits one; if the whole level is
/// exhausted the current element is minimal.
pub fn reduce_to_min(sys: &CoxeterSystem, w: &FiniteElement) -> (FiniteElement, Vec<ArrowStep>) {
    let mut cur = w.clone();
    let mut chain = Vec::new();
    loop {
        if let Some(step) = strict_drop(sys, &cur) {
            cur = step.target.clone();
            chain.push(step);
            continue;
        }
        let mut parent: HashMap<FiniteElement, (FiniteElement, usize)> = HashMap::new();
        let mut queue = VecDeque::from([cur.clone()]);
        let mut found = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for (s, t) in plateau_moves(sys, &u) {
                if t == cur || parent.contains_key(&t) {
                    continue;
                }
                parent.insert(t.clone(), (u.clone(), s));
                if let Some(drop) = strict_drop(sys, &t) {
                    found = Some((t, drop));
                    break 'bfs;
                }
                queue.push_back(t);
            }
        }
        let Some((node, drop)) = found else {
            return (cur, chain);
        };
        let mut path = Vec::new();
        let mut back = node;
        while back != cur {
            let (prev, s) = parent[&back].clone();
            path.push(ArrowStep {
                source: prev.clone(),
                generator: s,
                target: back,
            });
            back = prev;
        }
        path.reverse();
        chain.extend(path);
        cur = drop.target.clone();
        chain.push(drop);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicShiftClass {
    pub base: FiniteElement,
    pub members: BTreeSet<FiniteElement>,
    /// No arrow leaves the class, i.e. no member has a strictly shorter
    /// simple conjugate.
    pub terminal: bool,
}

/// Closure of `w` under equal-length arrows. These arrows are symmetric, so
/// the closure is the strongly connected component of `w`.
pub fn cyclic_shift_class(sys: &CoxeterSystem, w: &FiniteElement) -> CyclicShiftClass {
    let mut members = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for (_, t) in plateau_moves(sys, &u) {
            if members.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    let terminal = members.iter().all(|u| strict_drop(sys, u).is_none());
    CyclicShiftClass {
        base: w.clone(),
        members,
        terminal,
    }
}

/// `min { l(u) : u conjugate to w }` by enumerating the class.
pub fn class_min_length(sys: &CoxeterSystem, w: &FiniteElement) -> usize {
    sys.conjugacy_class(w)
        .iter()
        .map(|u| sys.length(u))
        .min()
        .expect("class contains w")
}

/// Minimal class length for every element, one enumeration per class.
pub fn class_minima(sys: &CoxeterSystem) -> HashMap<FiniteElement, usize> {
    let mut out = HashMap::new();
    for w in sys.elements() {
        if out.contains_key(&w) {
            continue;
        }
        let class = sys.conjugacy_class(&w);
        let min = class.iter().map(|u| sys.length(u)).min().unwrap();
        out.extend(class.into_iter().map(|u| (u, min)));
    }
    out
}

fn group_label(sys: &CoxeterSystem) -> String {
    sys.coxeter_type().to_string()
}

/// Every element reaches the minimal length of its class along a valid chain.
pub fn check_reduce_to_min(sys: &CoxeterSystem) -> LemmaReport {
    let minima = class_minima(sys);
    let outcomes: Vec<Option<String>> = sys
        .elements()
        .par_iter()
        .map(|w| {
            let (m, chain) = reduce_to_min(sys, w);
            let mut cur = w.clone();
            for step in &chain {
                let ok = step.source == cur
                    && step.target == sys.conjugate_by_gen(step.generator, &cur)
                    && sys.length(&step.target) <= sys.length(&cur);
                if !ok {
                    return Some(format!("{w}: invalid arrow at s{}", step.generator));
                }
                cur = step.target.clone();
            }
            if cur != m {
                return Some(format!("{w}: chain does not end at {m}"));
            }
            (sys.length(&m) != minima[w]).then(|| {
                format!(
                    "{w}: reached length {} but class minimum is {}",
                    sys.length(&m),
                    minima[w]
                )
            })
        })
        .collect();
    LemmaReport::from_outcomes("arrow-chain-reaches-class-minimum", group_label(sys), outcomes)
}

/// Full support and minimal class length imply elliptic.
pub fn check_min_full_support_elliptic(sys: &CoxeterSystem) -> LemmaReport {
    let minima = class_minima(sys);
    let outcomes: Vec<Option<String>> = sys
        .elements()
        .par_iter()
        .filter(|w| sys.has_full_support(w) && sys.length(w) == minima[*w])
        .map(|w| (!sys.is_elliptic(w)).then(|| format!("{w} is minimal with full support but not elliptic")))
        .collect();
    LemmaReport::from_outcomes("minimal-full-support-is-elliptic", group_label(sys), outcomes)
}

/// Full support and a terminal cyclic shift class imply elliptic.
pub fn check_terminal_elliptic(sys: &CoxeterSystem) -> LemmaReport {
    let outcomes: Vec<Option<String>> = sys
        .elements()
        .par_iter()
        .filter(|w| sys.has_full_support(w) && cyclic_shift_class(sys, w).terminal)
        .map(|w| {
            (!sys.is_elliptic(w))
                .then(|| format!("{w} has terminal class and full support but is not elliptic"))
        })
        .collect();
    LemmaReport::from_outcomes("terminal-full-support-is-elliptic", group_label(sys), outcomes)
}

/// Every arrow stays in the conjugacy class and either stays in the cyclic
/// shift class or strictly shortens; class membership is symmetric.
pub fn check_arrow_structure(sys: &CoxeterSystem) -> LemmaReport {
    let outcomes: Vec<Option<String>> = sys
        .elements()
        .par_iter()
        .map(|w| {
            let class = sys.conjugacy_class(w);
            let cyc = cyclic_shift_class(sys, w);
            for a in arrow_targets(sys, w) {
                if !class.contains(&a.target) {
                    return Some(format!("{w} ->s{} leaves the conjugacy class", a.generator));
                }
                let shorter = sys.length(&a.target) < sys.length(w);
                if !(cyc.members.contains(&a.target) || shorter) {
                    return Some(format!("{w} ->s{} neither cyclic shift nor shorter", a.generator));
                }
            }
            for u in &cyc.members {
                if !cyclic_shift_class(sys, u).members.contains(w) {
                    return Some(format!("{u} in Cyc({w}) but not conversely"));
                }
            }
            None
        })
        .collect();
    LemmaReport::from_outcomes("arrow-structure", group_label(sys), outcomes)
}
