//! Exhaustive and sampled verification sweeps, grouped into named suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::affine::{AffineElement, Cocharacter};
use crate::coxeter::{CoxeterSystem, CoxeterType, FiniteElement, Side};
use crate::error::{Error, Result};
use crate::geck_pfeiffer::{self, cyclic_shift_class};
use crate::genset::GenSet;
use crate::group::{Group, GroupMode, KottwitzPoint};
use crate::reduction::{self, CaseLabel, ReductionCertificate};
use crate::report::LemmaReport;
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Finite Weyl group identities.
    Coxeter,
    Lengths,
    GeckPfeiffer,
    Lemmas,
    Reduction,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "coxeter",
        "lengths",
        "geck-pfeiffer",
        "lemmas",
        "reduction",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "coxeter" => Ok(Suite::Coxeter),
            "lengths" => Ok(Suite::Lengths),
            "geck-pfeiffer" | "gp" => Ok(Suite::GeckPfeiffer),
            "lemmas" | "structure" => Ok(Suite::Lemmas),
            "reduction" => Ok(Suite::Reduction),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!(
                "unknown suite {s:?}; expected one of {}",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Coxeter,
            Suite::Lengths,
            Suite::GeckPfeiffer,
            Suite::Lemmas,
            Suite::Reduction,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Random dominant cocharacters for the length suite.
    pub samples: usize,
    pub seed: u64,
    /// Cocharacters for the reduction suite; defaults per group otherwise.
    pub mus: Option<Vec<Cocharacter>>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            samples: 20,
            seed: 0x5eed,
            mus: None,
        }
    }
}

pub fn run_suite(group: &Group, suite: Suite, cfg: &SweepConfig) -> Vec<LemmaReport> {
    let sys = group.weyl();
    match suite {
        Suite::Coxeter => coxeter_suite(sys),
        Suite::Lengths => length_suite(sys, &random_regular_dominant(sys, cfg.samples, cfg.seed)),
        Suite::GeckPfeiffer => geck_pfeiffer_suite(sys),
        Suite::Lemmas => structure::structure_suite(sys),
        Suite::Reduction => {
            let mus = cfg.mus.clone().unwrap_or_else(|| default_mus(group));
            reduction_suite(group, &mus)
        }
        Suite::All => [
            Suite::Coxeter,
            Suite::Lengths,
            Suite::GeckPfeiffer,
            Suite::Lemmas,
            Suite::Reduction,
        ]
        .into_iter()
        .flat_map(|s| run_suite(group, s, cfg))
        .collect(),
    }
}

fn label(sys: &CoxeterSystem) -> String {
    sys.coxeter_type().to_string()
}

/// Identities of the finite group, each over every element.
pub fn coxeter_suite(sys: &CoxeterSystem) -> Vec<LemmaReport> {
    let els = sys.elements();
    let each = |name: &str, f: &(dyn Fn(&FiniteElement) -> Option<String> + Sync)| {
        LemmaReport::from_outcomes(name, label(sys), els.par_iter().map(f).collect::<Vec<_>>())
    };
    let mut out = vec![
        each("length-inverse", &|w| {
            (sys.length(w) != sys.length(&sys.inverse(w))).then(|| format!("{w}"))
        }),
        each("length-changes-by-one", &|w| {
            (1..=sys.rank()).find_map(|s| {
                let d = sys.length(&sys.left_mul_gen(s, w)) as i64 - sys.length(w) as i64;
                (d.abs() != 1).then(|| format!("{w} s{s}"))
            })
        }),
        each("left-descents-of-inverse", &|w| {
            (sys.descents(w, Side::Left) != sys.descents(&sys.inverse(w), Side::Right))
                .then(|| format!("{w}"))
        }),
        each("descents-empty-iff-identity", &|w| {
            let empty = sys.descents(w, Side::Left).is_empty() && sys.descents(w, Side::Right).is_empty();
            (empty != (*w == sys.identity())).then(|| format!("{w}"))
        }),
        each("reduced-word-roundtrip", &|w| {
            let word = sys.reduced_word(w);
            let ok = word.len() == sys.length(w)
                && sys.element_from_word(&word).as_ref() == Ok(w)
                && word.iter().copied().collect::<GenSet>() == sys.support(w);
            (!ok).then(|| format!("{w}"))
        }),
        each("elliptic-oracles-agree", &|w| {
            (sys.is_elliptic(w) != sys.is_elliptic_by_exhaustion(w)).then(|| format!("{w}"))
        }),
    ];
    if sys.order() <= 720 {
        out.push(each("support-independent-of-reduced-word", &|w| {
            let words = all_reduced_words(sys, w);
            let first = sys.support(w);
            words
                .iter()
                .find(|word| word.iter().copied().collect::<GenSet>() != first)
                .map(|word| format!("{w}: {word:?}"))
        }));
    }
    out.push(LemmaReport::from_outcomes(
        "coxeter-elements-elliptic",
        label(sys),
        sys.coxeter_elements()
            .into_iter()
            .map(|c| (!(sys.is_elliptic(&c) && sys.is_coxeter(&c))).then(|| format!("{c}")))
            .collect::<Vec<_>>(),
    ));
    out
}

/// Every reduced word, by peeling left descents.
pub fn all_reduced_words(sys: &CoxeterSystem, w: &FiniteElement) -> Vec<Vec<usize>> {
    if sys.length(w) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in sys.descents(w, Side::Left).iter() {
        for mut tail in all_reduced_words(sys, &sys.left_mul_gen(s, w)) {
            tail.insert(0, s);
            out.push(tail);
        }
    }
    out
}

/// `samples` random regular dominant cocharacters with coordinates in
/// `[-5, 5]` (type A) or `[1, 5]` in the coweight basis (rank 2).
pub fn random_regular_dominant(sys: &CoxeterSystem, samples: usize, seed: u64) -> Vec<Cocharacter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| match sys.coxeter_type() {
            CoxeterType::A(n) => {
                let mut vals: Vec<i64> = sample(&mut rng, 11, n + 1)
                    .into_iter()
                    .map(|k| k as i64 - 5)
                    .collect();
                vals.sort_unstable_by(|a, b| b.cmp(a));
                Cocharacter::new(vals)
            }
            _ => {
                let v = sample(&mut rng, 25, 1).index(0) as i64;
                Cocharacter::new(vec![v / 5 + 1, v % 5 + 1])
            }
        })
        .collect()
}

/// The two-sided length formula, its shifted form and the four neighbour
/// formulas, all against the hyperplane-count oracle.
pub fn length_suite(sys: &CoxeterSystem, mus: &[Cocharacter]) -> Vec<LemmaReport> {
    let els = sys.elements();
    let els = &els;
    let pairs: Vec<(&Cocharacter, &FiniteElement, &FiniteElement)> = mus
        .iter()
        .flat_map(|mu| els.iter().flat_map(move |a| els.iter().map(move |b| (mu, a, b))))
        .collect();
    let oracle = |lambda: Cocharacter, w: FiniteElement| {
        sys.affine_length_oracle(&AffineElement::new(lambda, w)) as i64
    };
    let len = |w: &FiniteElement| sys.length(w) as i64;

    let two_sided: Vec<Option<String>> = pairs
        .par_iter()
        .map(|&(mu, w1, w2)| {
            let lmu = sys.translation_length(mu).unwrap() as i64;
            // w1 pi^mu w2 = pi^{w1(mu)} w1 w2
            let got = oracle(sys.act_cocharacter(w1, mu), sys.mul(w1, w2));
            let want = len(w2) + lmu - len(w1);
            (got != want).then(|| format!("mu={mu} w1={w1} w2={w2}: {got} != {want}"))
        })
        .collect();

    let shifted: Vec<Option<String>> = pairs
        .par_iter()
        .map(|&(mu, w1, w2)| {
            let lhs = oracle(sys.act_cocharacter(&sys.inverse(w1), mu), w2.clone());
            let rhs = oracle(mu.clone(), sys.mul(w1, w2)) - len(w1);
            (lhs != rhs).then(|| format!("mu={mu} w1={w1} w2={w2}: {lhs} != {rhs}"))
        })
        .collect();

    let closed: Vec<Option<String>> = pairs
        .par_iter()
        .map(|&(mu, v, w)| {
            let x = sys.affine_from_parts(v, mu, w).unwrap();
            let (a, b) = (sys.affine_length(&x).unwrap(), sys.affine_length_oracle(&x));
            (a != b).then(|| format!("{x}: closed {a}, oracle {b}"))
        })
        .collect();

    let neighbours: Vec<Option<String>> = pairs
        .par_iter()
        .filter_map(|&(mu, v, w)| {
            let x = sys.affine_from_parts(v, mu, w).unwrap();
            sys.is_additive(&x).then(|| {
                let lmu = sys.translation_length(mu).unwrap() as i64;
                let vinv = sys.inverse(v);
                (1..=sys.rank()).find_map(|s| {
                    let vs = sys.right_mul_gen(&vinv, s);
                    let vw = sys.mul(&vinv, w);
                    let vws = sys.right_mul_gen(&vw, s);
                    let want = [
                        lmu + len(&vw) - len(&vinv),
                        lmu + len(&vw) - len(&vs),
                        lmu + len(&vws) - len(&vinv),
                        lmu + len(&vws) - len(&vs),
                    ];
                    let sx = sys.left_mul(s, &x).unwrap();
                    let got = [
                        sys.affine_length_oracle(&x) as i64,
                        sys.affine_length_oracle(&sx) as i64,
                        sys.affine_length_oracle(&sys.right_mul(&x, s).unwrap()) as i64,
                        sys.affine_length_oracle(&sys.right_mul(&sx, s).unwrap()) as i64,
                    ];
                    (got != want).then(|| format!("{x} s{s}: {got:?} != {want:?}"))
                })
            })
        })
        .collect();

    let note = format!("{} cocharacters", mus.len());
    vec![
        LemmaReport::from_outcomes("two-sided-length-formula", label(sys), two_sided).with_note(note.clone()),
        LemmaReport::from_outcomes("shifted-length-formula", label(sys), shifted).with_note(note.clone()),
        LemmaReport::from_outcomes("closed-length-matches-oracle", label(sys), closed)
            .with_note(note.clone()),
        LemmaReport::from_outcomes("neighbour-length-formulas", label(sys), neighbours).with_note(note),
    ]
}

pub fn geck_pfeiffer_suite(sys: &CoxeterSystem) -> Vec<LemmaReport> {
    vec![
        geck_pfeiffer::check_reduce_to_min(sys),
        geck_pfeiffer::check_min_full_support_elliptic(sys),
        geck_pfeiffer::check_terminal_elliptic(sys),
        geck_pfeiffer::check_arrow_structure(sys),
    ]
}

/// Three regular dominant cocharacters per group: the staircase, its double
/// and the staircase with a widened outer gap. In `SL_n` the staircase is
/// centred so its coordinates sum to zero.
pub fn default_mus(group: &Group) -> Vec<Cocharacter> {
    let raw: Vec<Vec<i64>> = match group.mode() {
        GroupMode::GL(n) => {
            let base: Vec<i64> = (0..n as i64).rev().collect();
            let mut wide = base.clone();
            wide[0] += 1;
            vec![base.clone(), base.iter().map(|a| 2 * a).collect(), wide]
        }
        GroupMode::SL(n) => {
            let base: Vec<i64> = (0..n as i64).rev().map(|k| 2 * k - (n as i64 - 1)).collect();
            let mut wide = base.clone();
            wide[0] += 1;
            wide[n - 1] -= 1;
            vec![base.clone(), base.iter().map(|a| 2 * a).collect(), wide]
        }
        GroupMode::C2 | GroupMode::G2 => vec![vec![1, 1], vec![2, 1], vec![1, 2]],
    };
    raw.into_iter().map(Cocharacter::new).collect()
}

/// Every additive full-support `pi^{v(mu)} w` for the given `mu`.
pub fn reduction_inputs(group: &Group, mus: &[Cocharacter]) -> Vec<AffineElement> {
    let sys = group.weyl();
    let els = sys.elements();
    let mut out = Vec::new();
    for mu in mus {
        for v in &els {
            for w in els.iter().filter(|w| sys.has_full_support(w)) {
                let x = sys.affine_from_parts(v, mu, w).unwrap();
                if sys.is_additive(&x) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Structural properties of a certificate not already covered by
/// verification: finite length monotone, plateau runs free of repeats and
/// inside one cyclic shift class.
pub fn certificate_invariants(sys: &CoxeterSystem, cert: &ReductionCertificate) -> Option<String> {
    let mut run: Vec<&AffineElement> = Vec::new();
    for (i, step) in cert.steps.iter().enumerate() {
        let (a, b) = (sys.length(step.before.finite()), sys.length(step.after.finite()));
        let ok = if step.case.is_plateau() { a == b } else { b < a };
        if !ok {
            return Some(format!(
                "step {i}: finite length {a} -> {b} under case {}",
                step.case
            ));
        }
        if step.case == CaseLabel::Case1 {
            let w = step.before.finite();
            let sws = sys.conjugate_by_gen(step.generator, w);
            if sys.length(&sws) + 2 != a {
                return Some(format!("step {i}: case 1 with l(sws) != l(w) - 2"));
            }
        }
        if step.case.is_plateau() {
            if run.is_empty() {
                run.push(&step.before);
            }
            run.push(&step.after);
        } else if !run.is_empty() {
            if let Some(e) = plateau_ok(sys, &run) {
                return Some(format!("step {i}: {e}"));
            }
            run.clear();
        }
    }
    if !run.is_empty() {
        return plateau_ok(sys, &run);
    }
    None
}

fn plateau_ok(sys: &CoxeterSystem, run: &[&AffineElement]) -> Option<String> {
    if run.iter().collect::<BTreeSet<_>>().len() != run.len() {
        return Some("plateau revisits an element".into());
    }
    let cyc = cyclic_shift_class(sys, run[0].finite());
    run.iter()
        .find(|x| !cyc.members.contains(x.finite()))
        .map(|x| format!("plateau leaves the cyclic shift class at {x}"))
}

/// Reduces every input, re-verifies each certificate and checks the verdict
/// against the Kottwitz point.
pub fn reduction_suite(group: &Group, mus: &[Cocharacter]) -> Vec<LemmaReport> {
    let sys = group.weyl();
    let inputs = reduction_inputs(group, mus);
    let name = group.name();

    struct Outcome {
        terminates: Option<String>,
        verifies: Option<String>,
        invariants: Option<String>,
        verdict: Option<String>,
        steps: usize,
        cases: Vec<CaseLabel>,
    }

    let results: Vec<Outcome> = inputs
        .par_iter()
        .map(|x| {
            let cert = match reduction::reduce(group, x) {
                Ok(c) => c,
                Err(e) => {
                    let msg = Some(format!("{x}: {e}"));
                    return Outcome {
                        terminates: msg.clone(),
                        verifies: msg.clone(),
                        invariants: msg.clone(),
                        verdict: msg,
                        steps: 0,
                        cases: Vec::new(),
                    };
                }
            };
            let verifies = reduction::verify_certificate(group, &cert)
                .err()
                .map(|f| format!("{x}: {f}"));
            let again = reduction::reduce(group, x).ok();
            let invariants = if again.as_ref() != Some(&cert) {
                Some(format!("{x}: reduction is not deterministic"))
            } else {
                certificate_invariants(sys, &cert).map(|e| format!("{x}: {e}"))
            };
            let kappa = group.kottwitz_point(x);
            let others = other_kappas(kappa);
            let verdict = if !cert.verdict(kappa) {
                Some(format!("{x}: matching Kottwitz point gave empty"))
            } else {
                others
                    .into_iter()
                    .find(|k| cert.verdict(*k))
                    .map(|k| format!("{x}: mismatched Kottwitz point {k} gave non-empty"))
            };
            Outcome {
                terminates: (!cert.terminal_elliptic).then(|| format!("{x}: terminal not elliptic")),
                verifies,
                invariants,
                verdict,
                steps: cert.steps.len(),
                cases: cert.steps.iter().map(|s| s.case).collect(),
            }
        })
        .collect();

    let mut histogram: BTreeMap<CaseLabel, usize> = BTreeMap::new();
    for c in results.iter().flat_map(|o| &o.cases) {
        *histogram.entry(*c).or_default() += 1;
    }
    let max_steps = results.iter().map(|o| o.steps).max().unwrap_or(0);
    let mu_list: BTreeSet<String> = mus.iter().map(|m| m.to_string()).collect();
    let hist: Vec<String> = histogram.iter().map(|(c, n)| format!("{c}:{n}")).collect();
    let note = format!(
        "mu in {{{}}}; {} elements; max {max_steps} steps; cases {}",
        mu_list.into_iter().collect::<Vec<_>>().join(" "),
        inputs.len(),
        hist.join(" ")
    );
    let report = |lemma: &str, pick: fn(&Outcome) -> Option<String>| {
        LemmaReport::from_outcomes(lemma, name.clone(), results.iter().map(pick)).with_note(note.clone())
    };
    vec![
        report("reduction-terminates-elliptic", |o| o.terminates.clone()),
        report("certificate-verifies", |o| o.verifies.clone()),
        report("certificate-invariants", |o| o.invariants.clone()),
        report("verdict-matches-kottwitz", |o| o.verdict.clone()),
    ]
}

/// Points of the same group distinct from `k` (a few for `Z`).
fn other_kappas(k: KottwitzPoint) -> Vec<KottwitzPoint> {
    match k {
        KottwitzPoint::Integer(n) => vec![KottwitzPoint::Integer(n + 1), KottwitzPoint::Integer(n - 1)],
        KottwitzPoint::Trivial => Vec::new(),
        KottwitzPoint::Cyclic { residue, order } => (1..order)
            .map(|d| KottwitzPoint::Cyclic {
                residue: (residue + d).rem_euclid(order),
                order,
            })
            .collect(),
    }
}
