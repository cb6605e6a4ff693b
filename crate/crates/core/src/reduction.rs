//! Reduction certificates.
//!
//! For `x = pi^{v(mu)} w` with `mu` regular dominant, `x` additive and `w` of
//! full support, each step conjugates or multiplies `x` by a simple
//! reflection `s` so that non-emptiness of the successor implies (or is
//! equivalent to) non-emptiness for `x`. The chain ends at an element with
//! elliptic finite part, where non-emptiness is decided by the Kottwitz point.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::affine::AffineElement;
use crate::coxeter::{CoxeterSystem, CoxeterType, FiniteElement, Side};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::group::{Group, KottwitzPoint};

/// Which of the five length configurations a step falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    /// `l(sws) < l(w)`; successor `sx`.
    #[serde(rename = "1")]
    Case1,
    /// `s` a left descent, `l(v^{-1} ws) = l(v^{-1} w) + 1`; successor `sxs`.
    #[serde(rename = "2a")]
    Case2a,
    /// `s` a left descent, `l(v^{-1} ws) = l(v^{-1} w) - 1`; successor `sx`.
    #[serde(rename = "2b")]
    Case2b,
    /// `s` a right descent, `l(v^{-1} s) = l(v^{-1}) - 1`; successor `sxs`.
    #[serde(rename = "3a")]
    Case3a,
    /// `s` a right descent, `l(v^{-1} s) = l(v^{-1}) + 1`; successor `xs`.
    #[serde(rename = "3b")]
    Case3b,
}

/// How non-emptiness transfers from the successor back to `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Implication {
    /// Successor non-empty implies `x` non-empty.
    Forward,
    /// Successor non-empty iff `x` non-empty.
    Equivalence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Successor {
    /// `sx`
    Left,
    /// `xs`
    Right,
    /// `sxs`
    Conjugate,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 5] = [
        CaseLabel::Case1,
        CaseLabel::Case2a,
        CaseLabel::Case2b,
        CaseLabel::Case3a,
        CaseLabel::Case3b,
    ];

    pub fn implication(self) -> Implication {
        if self.is_plateau() {
            Implication::Equivalence
        } else {
            Implication::Forward
        }
    }

    pub fn successor(self) -> Successor {
        match self {
            CaseLabel::Case1 | CaseLabel::Case2b => Successor::Left,
            CaseLabel::Case3b => Successor::Right,
            CaseLabel::Case2a | CaseLabel::Case3a => Successor::Conjugate,
        }
    }

    /// Finite-part length is unchanged.
    pub fn is_plateau(self) -> bool {
        matches!(self, CaseLabel::Case2a | CaseLabel::Case3a)
    }

    /// The chain of inequalities the four lengths must satisfy.
    pub fn pattern_holds(self, l: &LengthPattern) -> bool {
        match self {
            CaseLabel::Case1 | CaseLabel::Case2b | CaseLabel::Case3b => {
                l.x > l.sx && l.sx == l.xs && l.xs > l.sxs
            }
            CaseLabel::Case2a => l.xs > l.x && l.x == l.sxs && l.sxs > l.sx,
            CaseLabel::Case3a => l.sx > l.x && l.x == l.sxs && l.sxs > l.xs,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Case1 => "1",
            CaseLabel::Case2a => "2a",
            CaseLabel::Case2b => "2b",
            CaseLabel::Case3a => "3a",
            CaseLabel::Case3b => "3b",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches("Case").trim_start_matches("case");
        CaseLabel::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Parse(format!("unknown case label {s:?}")))
    }
}

/// `(l(x), l(sx), l(xs), l(sxs))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LengthPattern {
    pub x: usize,
    pub sx: usize,
    pub xs: usize,
    pub sxs: usize,
}

impl LengthPattern {
    pub fn to_array(self) -> [usize; 4] {
        [self.x, self.sx, self.xs, self.sxs]
    }

    pub fn from_array(a: [usize; 4]) -> Self {
        LengthPattern {
            x: a[0],
            sx: a[1],
            xs: a[2],
            sxs: a[3],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub before: AffineElement,
    pub generator: usize,
    pub after: AffineElement,
    pub case: CaseLabel,
    pub lengths: LengthPattern,
}

impl ReductionStep {
    pub fn implication(&self) -> Implication {
        self.case.implication()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub start: AffineElement,
    pub steps: Vec<ReductionStep>,
    pub terminal: AffineElement,
    pub terminal_elliptic: bool,
    /// Kottwitz point of `start`, constant along the chain.
    pub kappa: KottwitzPoint,
}

impl ReductionCertificate {
    /// Non-emptiness for a basic `b` with Kottwitz point `b_kappa`.
    pub fn verdict(&self, b_kappa: KottwitzPoint) -> bool {
        self.terminal_elliptic && self.kappa == b_kappa
    }
}

/// Outcome of [`nonemptiness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nonemptiness {
    pub nonempty: bool,
    pub certificate: ReductionCertificate,
}

fn lengths_of(
    sys: &CoxeterSystem,
    x: &AffineElement,
    s: usize,
    length: impl Fn(&AffineElement) -> Result<usize>,
) -> Result<LengthPattern> {
    let sx = sys.left_mul(s, x)?;
    let xs = sys.right_mul(x, s)?;
    let sxs = sys.right_mul(&sx, s)?;
    Ok(LengthPattern {
        x: length(x)?,
        sx: length(&sx)?,
        xs: length(&xs)?,
        sxs: length(&sxs)?,
    })
}

fn successor(sys: &CoxeterSystem, x: &AffineElement, s: usize, case: CaseLabel) -> Result<AffineElement> {
    match case.successor() {
        Successor::Left => sys.left_mul(s, x),
        Successor::Right => sys.right_mul(x, s),
        Successor::Conjugate => sys.affine_conjugate(s, x),
    }
}

/// The standing hypotheses: regular translation, additive, full support.
pub fn check_hypotheses(group: &Group, x: &AffineElement) -> Result<()> {
    group.check_element(x)?;
    let sys = group.weyl();
    if !sys.is_regular(x.translation()) {
        return Err(Error::NotRegular(x.translation().to_vec()));
    }
    sys.check_additive(x)?;
    sys.check_reuman_type(x)
}

/// `S_w = { s in D(w) : l(sws) <= l(w), sws != w }`.
pub fn candidate_set(group: &Group, x: &AffineElement) -> Result<GenSet> {
    group.check_element(x)?;
    let sys = group.weyl();
    if !sys.is_regular(x.translation()) {
        return Err(Error::NotRegular(x.translation().to_vec()));
    }
    sys.check_additive(x)?;
    Ok(raw_candidates(sys, x.finite()))
}

fn raw_candidates(sys: &CoxeterSystem, w: &FiniteElement) -> GenSet {
    let len = sys.length(w);
    sys.descent_set(w)
        .iter()
        .filter(|&s| {
            let c = sys.conjugate_by_gen(s, w);
            sys.length(&c) <= len && c != *w
        })
        .collect()
}

/// Case selection from the finite data of `x` alone.
fn dispatch(sys: &CoxeterSystem, x: &AffineElement, s: usize) -> Result<CaseLabel> {
    let w = x.finite();
    let lw = sys.length(w);
    let lsws = sys.length(&sys.conjugate_by_gen(s, w));
    if lsws < lw {
        return Ok(CaseLabel::Case1);
    }
    let vinv = sys.inverse(&sys.decompose(x.translation()).v);
    let delta = |a: &FiniteElement, b: &FiniteElement| sys.length(a) as i64 - sys.length(b) as i64;
    if sys.is_descent(w, s, Side::Left) {
        let vw = sys.mul(&vinv, w);
        return match delta(&sys.right_mul_gen(&vw, s), &vw) {
            1 => Ok(CaseLabel::Case2a),
            -1 => Ok(CaseLabel::Case2b),
            _ => unreachable!("simple multiplication changes length by one"),
        };
    }
    if sys.is_descent(w, s, Side::Right) {
        return match delta(&sys.right_mul_gen(&vinv, s), &vinv) {
            -1 => Ok(CaseLabel::Case3a),
            1 => Ok(CaseLabel::Case3b),
            _ => unreachable!("simple multiplication changes length by one"),
        };
    }
    Err(Error::InternalContradiction(format!(
        "s{s} is not a descent of {w}"
    )))
}

/// Applies the case rule for `s` to `x`, checking the length pattern and the
/// additivity of the successor.
pub fn apply_case(group: &Group, x: &AffineElement, s: usize) -> Result<ReductionStep> {
    if !candidate_set(group, x)?.contains(s) {
        group.weyl().generator(s)?;
        return Err(Error::NotACandidate { gen: s });
    }
    step_unchecked(group.weyl(), x, s)
}

fn step_unchecked(sys: &CoxeterSystem, x: &AffineElement, s: usize) -> Result<ReductionStep> {
    let case = dispatch(sys, x, s)?;
    let lengths = lengths_of(sys, x, s, |y| sys.affine_length(y))?;
    if !case.pattern_holds(&lengths) {
        return Err(Error::InternalContradiction(format!(
            "case {case} at s{s} for {x} has lengths {:?}",
            lengths.to_array()
        )));
    }
    let after = successor(sys, x, s, case)?;
    if let Err(e) = sys.check_additive(&after) {
        return Err(Error::InternalContradiction(format!(
            "case {case} at s{s} for {x}: successor {e}"
        )));
    }
    Ok(ReductionStep {
        before: x.clone(),
        generator: s,
        after,
        case,
        lengths,
    })
}

/// A length-decreasing step: Case 1 first, then Case 2b/3b whose successor
/// keeps full support; smallest generator wins ties.
fn strict_step(sys: &CoxeterSystem, x: &AffineElement) -> Result<Option<ReductionStep>> {
    let mut fallback = None;
    for s in raw_candidates(sys, x.finite()).iter() {
        let step = step_unchecked(sys, x, s)?;
        match step.case {
            CaseLabel::Case1 => return Ok(Some(step)),
            CaseLabel::Case2b | CaseLabel::Case3b
                if fallback.is_none() && sys.is_reuman_type(&step.after) =>
            {
                fallback = Some(step)
            }
            _ => {}
        }
    }
    Ok(fallback)
}

fn plateau_steps(sys: &CoxeterSystem, x: &AffineElement) -> Result<Vec<ReductionStep>> {
    let mut out = Vec::new();
    for s in raw_candidates(sys, x.finite()).iter() {
        let step = step_unchecked(sys, x, s)?;
        if step.case.is_plateau() {
            out.push(step);
        }
    }
    Ok(out)
}

fn stuck(sys: &CoxeterSystem, x: &AffineElement, detail: String) -> Error {
    match sys.coxeter_type() {
        CoxeterType::A(_) => {
            Error::InternalContradiction(format!("no admissible step from non-elliptic {x}: {detail}"))
        }
        _ => Error::Stuck {
            element: x.to_string(),
            detail,
        },
    }
}

/// Reduces `x` to an element with elliptic finite part.
///
/// Greedy strict steps are preferred. Without one, the equal-length cases are
/// explored breadth-first (visited set, smallest generator first) until a node
/// admits a strict step.
pub fn reduce(group: &Group, x: &AffineElement) -> Result<ReductionCertificate> {
    check_hypotheses(group, x)?;
    let sys = group.weyl();
    let mut cur = x.clone();
    let mut steps: Vec<ReductionStep> = Vec::new();
    while !sys.is_elliptic(cur.finite()) {
        if let Some(step) = strict_step(sys, &cur)? {
            cur = step.after.clone();
            steps.push(step);
            continue;
        }
        let mut parent: HashMap<AffineElement, ReductionStep> = HashMap::new();
        let mut queue = VecDeque::from([cur.clone()]);
        let mut found = None;
        'bfs: while let Some(node) = queue.pop_front() {
            for step in plateau_steps(sys, &node)? {
                let t = step.after.clone();
                if t == cur || parent.contains_key(&t) {
                    continue;
                }
                parent.insert(t.clone(), step);
                if let Some(exit) = strict_step(sys, &t)? {
                    found = Some((t, exit));
                    break 'bfs;
                }
                queue.push_back(t);
            }
        }
        let Some((node, exit)) = found else {
            let detail = format!(
                "plateau of {} elements has no length-decreasing exit",
                parent.len() + 1
            );
            return Err(stuck(sys, &cur, detail));
        };
        let mut path = Vec::new();
        let mut back = node;
        while back != cur {
            let step = parent.remove(&back).expect("path to plateau root");
            back = step.before.clone();
            path.push(step);
        }
        steps.extend(path.into_iter().rev());
        cur = exit.after.clone();
        steps.push(exit);
    }
    Ok(ReductionCertificate {
        start: x.clone(),
        kappa: group.kottwitz_point(x),
        terminal_elliptic: true,
        terminal: cur,
        steps,
    })
}

/// Decides `X_x(b) != {}` for basic `b` with Kottwitz point `b_kappa`.
pub fn nonemptiness(group: &Group, x: &AffineElement, b_kappa: KottwitzPoint) -> Result<Nonemptiness> {
    let certificate = reduce(group, x)?;
    Ok(Nonemptiness {
        nonempty: certificate.verdict(b_kappa),
        certificate,
    })
}

/// The first problem found in a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyFailure {
    /// Index of the failing step; `None` for the start or terminal.
    pub step: Option<usize>,
    pub reason: String,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

impl std::error::Error for VerifyFailure {}

fn fail<T>(step: Option<usize>, reason: impl Into<String>) -> Result<T, VerifyFailure> {
    Err(VerifyFailure {
        step,
        reason: reason.into(),
    })
}

/// Element-level hypotheses that must hold at every node.
fn node_ok(group: &Group, x: &AffineElement) -> Result<(), String> {
    let sys = group.weyl();
    group.check_element(x).map_err(|e| e.to_string())?;
    if !sys.is_regular(x.translation()) {
        return Err(format!("translation {} is not regular", x.translation()));
    }
    sys.check_additive(x).map_err(|e| e.to_string())?;
    sys.check_reuman_type(x).map_err(|e| e.to_string())
}

/// Re-checks a certificate from scratch.
///
/// Lengths are recomputed with the hyperplane-count formula rather than the
/// closed formula used to build certificates, and the terminal is tested for
/// ellipticity by exhausting its conjugacy class.
pub fn verify_certificate(group: &Group, cert: &ReductionCertificate) -> Result<(), VerifyFailure> {
    let sys = group.weyl();
    node_ok(group, &cert.start).or_else(|e| fail(None, format!("start: {e}")))?;
    let kappa = group.kottwitz_point(&cert.start);
    if cert.kappa != kappa {
        return fail(
            None,
            format!("recorded Kottwitz point {} but start has {kappa}", cert.kappa),
        );
    }
    let mut cur = &cert.start;
    for (i, step) in cert.steps.iter().enumerate() {
        let at = Some(i);
        if step.before != *cur {
            return fail(at, "does not start where the previous step ended");
        }
        let s = step.generator;
        if s == 0 || s > sys.rank() {
            return fail(at, format!("generator s{s} out of range"));
        }
        let w = cur.finite();
        let sws = sys.conjugate_by_gen(s, w);
        if !sys.descent_set(w).contains(s) || sys.length(&sws) > sys.length(w) || sws == *w {
            return fail(at, format!("s{s} is not a candidate for {w}"));
        }
        // finite-data conditions for the recorded case
        let v = sys.eta2(cur).map_err(|e| VerifyFailure {
            step: at,
            reason: e.to_string(),
        })?;
        let vinv = sys.inverse(&v);
        let len = |u: &FiniteElement| sys.length(u) as i64;
        let vw = sys.mul(&vinv, w);
        let left_delta = len(&sys.right_mul_gen(&vw, s)) - len(&vw);
        let right_delta = len(&sys.right_mul_gen(&vinv, s)) - len(&vinv);
        let equal = sys.length(&sws) == sys.length(w);
        let conditions = match step.case {
            CaseLabel::Case1 => sys.length(&sws) + 2 == sys.length(w),
            CaseLabel::Case2a => equal && sys.is_descent(w, s, Side::Left) && left_delta == 1,
            CaseLabel::Case2b => equal && sys.is_descent(w, s, Side::Left) && left_delta == -1,
            CaseLabel::Case3a => equal && sys.is_descent(w, s, Side::Right) && right_delta == -1,
            CaseLabel::Case3b => equal && sys.is_descent(w, s, Side::Right) && right_delta == 1,
        };
        if !conditions {
            return fail(at, format!("case {} does not apply to s{s} at {cur}", step.case));
        }
        let oracle = lengths_of(sys, cur, s, |y| Ok(sys.affine_length_oracle(y))).expect("generator checked");
        if oracle != step.lengths {
            return fail(
                at,
                format!(
                    "recorded lengths {:?}, recomputed {:?}",
                    step.lengths.to_array(),
                    oracle.to_array()
                ),
            );
        }
        if !step.case.pattern_holds(&oracle) {
            return fail(
                at,
                format!("lengths {:?} do not fit case {}", oracle.to_array(), step.case),
            );
        }
        let expected = successor(sys, cur, s, step.case).expect("generator checked");
        if step.after != expected {
            return fail(at, format!("successor should be {expected}"));
        }
        node_ok(group, &step.after).or_else(|e| fail(at, format!("successor: {e}")))?;
        if group.kottwitz_point(&step.after) != kappa {
            return fail(at, "Kottwitz point changes");
        }
        cur = &step.after;
    }
    if cert.terminal != *cur {
        return fail(None, "terminal does not match the last step");
    }
    let elliptic = sys.is_elliptic_by_exhaustion(cur.finite());
    if cert.terminal_elliptic != elliptic {
        return fail(
            None,
            format!(
                "terminal ellipticity recorded as {} but is {elliptic}",
                cert.terminal_elliptic
            ),
        );
    }
    if !elliptic {
        return fail(
            None,
            format!("terminal finite part {} is not elliptic", cur.finite()),
        );
    }
    Ok(())
}
