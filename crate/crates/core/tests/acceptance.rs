//! One line per acceptance criterion, each with its wall-clock bound.
//! Runs without the libtest harness so the lines print in order; exits
//! non-zero if any criterion fails or overruns.

use std::time::{Duration, Instant};

use weyl_reduce::geck_pfeiffer;
use weyl_reduce::reduction::LengthPattern;
use weyl_reduce::structure::structure_suite;
use weyl_reduce::suites::{
    coxeter_suite, default_mus, length_suite, random_regular_dominant, reduction_suite,
};
use weyl_reduce::{
    reduce, verify_certificate, AffineElement, CaseLabel, CoxeterSystem, Group, LemmaReport,
    ReductionCertificate, ReductionStep, Status,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn systems_up_to_s6() -> Vec<CoxeterSystem> {
    let mut out: Vec<CoxeterSystem> = (2..=6).map(|n| CoxeterSystem::symmetric(n).unwrap()).collect();
    out.push(CoxeterSystem::c2());
    out.push(CoxeterSystem::g2());
    out
}

fn all_ok(reports: &[LemmaReport]) -> Outcome {
    match reports.iter().find(|r| !r.ok()) {
        Some(r) => Err(format!(
            "{} on {}: {} counterexamples, first {:?}",
            r.lemma,
            r.group,
            r.counterexamples.len(),
            r.counterexamples.first()
        )),
        None => Ok(format!(
            "{} reports, {} cases checked",
            reports.len(),
            reports.iter().map(|r| r.checked).sum::<usize>()
        )),
    }
}

/// The worked chain in `SL_5`, encoded by hand.
fn hand_chain() -> (Group, ReductionCertificate) {
    let g = Group::sl(5).unwrap();
    let sys = g.weyl();
    let word = |w: &[usize]| sys.element_from_word(w).unwrap();
    let mu = weyl_reduce::Cocharacter::new(vec![2, 1, 0, -1, -2]);
    // translations s4(mu), s1 s4(mu), s3 s1 s4(mu), s4 s3 s1 s4(mu)
    let tr = |w: &[usize]| sys.act_cocharacter(&word(w), &mu);
    let x = AffineElement::new(mu.clone(), word(&[4, 3, 2, 1, 2, 3, 4]));
    let x1 = AffineElement::new(tr(&[4]), word(&[3, 2, 1, 2, 3, 4]));
    let x2 = AffineElement::new(tr(&[1, 4]), word(&[3, 2, 3, 4, 1]));
    let x3 = AffineElement::new(tr(&[3, 1, 4]), word(&[2, 3, 4, 1, 3]));
    let x4 = AffineElement::new(tr(&[4, 3, 1, 4]), word(&[2, 3, 1, 4]));
    let step =
        |before: &AffineElement, generator, after: &AffineElement, case, l: [usize; 4]| ReductionStep {
            before: before.clone(),
            generator,
            after: after.clone(),
            case,
            lengths: LengthPattern::from_array(l),
        };
    let steps = vec![
        step(&x, 4, &x1, CaseLabel::Case1, [27, 26, 26, 25]),
        step(&x1, 1, &x2, CaseLabel::Case1, [26, 25, 25, 24]),
        step(&x2, 3, &x3, CaseLabel::Case2a, [25, 24, 26, 25]),
        step(&x3, 4, &x4, CaseLabel::Case1, [25, 24, 24, 23]),
    ];
    let kappa = g.kottwitz_point(&x);
    let cert = ReductionCertificate {
        start: x,
        steps,
        terminal: x4,
        terminal_elliptic: true,
        kappa,
    };
    (g, cert)
}

fn criterion_1() -> Outcome {
    let (g, chain) = hand_chain();
    verify_certificate(&g, &chain).map_err(|e| format!("hand chain rejected: {e}"))?;
    let cycle = g
        .weyl()
        .cycle_type(chain.terminal.finite())
        .map_err(|e| e.to_string())?;
    if cycle != vec![5] {
        return Err(format!("terminal cycle type {cycle:?}, expected a 5-cycle"));
    }
    let cert = reduce(&g, &chain.start).map_err(|e| e.to_string())?;
    verify_certificate(&g, &cert).map_err(|e| format!("engine certificate rejected: {e}"))?;
    if !cert.terminal_elliptic || cert.steps.len() > 6 {
        return Err(format!(
            "engine: {} steps, terminal elliptic = {}",
            cert.steps.len(),
            cert.terminal_elliptic
        ));
    }
    Ok(format!(
        "hand chain verifies; engine reaches {} in {} steps",
        cert.terminal,
        cert.steps.len()
    ))
}

fn criterion_2() -> Outcome {
    let sys = CoxeterSystem::symmetric(4).unwrap();
    let mus = random_regular_dominant(&sys, 20, 2024);
    let reports: Vec<LemmaReport> = length_suite(&sys, &mus)
        .into_iter()
        .filter(|r| r.lemma == "two-sided-length-formula" || r.lemma == "shifted-length-formula")
        .collect();
    if reports.len() != 2 || reports.iter().any(|r| r.checked != 576 * 20) {
        return Err("expected 576 x 20 cases for each identity".into());
    }
    all_ok(&reports)
}

fn criterion_3() -> Outcome {
    let reports: Vec<LemmaReport> = systems_up_to_s6()
        .iter()
        .map(geck_pfeiffer::check_reduce_to_min)
        .collect();
    all_ok(&reports)
}

fn criterion_4() -> Outcome {
    let reports: Vec<LemmaReport> = systems_up_to_s6()
        .iter()
        .flat_map(|s| {
            [
                geck_pfeiffer::check_min_full_support_elliptic(s),
                geck_pfeiffer::check_terminal_elliptic(s),
            ]
        })
        .collect();
    all_ok(&reports)
}

fn criterion_5() -> Outcome {
    let mut reports = Vec::new();
    for n in 2..=6 {
        let sys = CoxeterSystem::symmetric(n).unwrap();
        for r in structure_suite(&sys) {
            if r.status == Status::Skipped && n > 2 {
                return Err(format!("{} unexpectedly skipped on {}", r.lemma, r.group));
            }
            reports.push(r);
        }
    }
    // type-A-only statements must be skipped outside type A
    let type_a_only = [
        "unique-descent-coxeter",
        "support-losing-descents-coxeter",
        "commuting-descents-commute",
        "commuting-or-support-losing-coxeter",
    ];
    for sys in [CoxeterSystem::c2(), CoxeterSystem::g2()] {
        for r in structure_suite(&sys) {
            let expect_skip = type_a_only.contains(&r.lemma.as_str());
            if expect_skip != (r.status == Status::Skipped) {
                return Err(format!("{} on {}: status {:?}", r.lemma, r.group, r.status));
            }
            reports.push(r);
        }
    }
    all_ok(&reports)
}

fn criterion_6() -> Outcome {
    let groups = [
        Group::gl(4).unwrap(),
        Group::gl(5).unwrap(),
        Group::sl(4).unwrap(),
        Group::sl(5).unwrap(),
        Group::c2(),
        Group::g2(),
    ];
    let mut reports = Vec::new();
    for g in &groups {
        let mus = default_mus(g);
        if mus.len() < 3 {
            return Err(format!("fewer than 3 cocharacters for {}", g.name()));
        }
        reports.extend(reduction_suite(g, &mus));
    }
    all_ok(&reports)
}

fn criterion_7() -> Outcome {
    let mut reports: Vec<LemmaReport> = systems_up_to_s6().iter().flat_map(coxeter_suite).collect();
    for sys in [
        CoxeterSystem::symmetric(4).unwrap(),
        CoxeterSystem::c2(),
        CoxeterSystem::g2(),
    ] {
        let mus = random_regular_dominant(&sys, 5, 7);
        reports.extend(
            length_suite(&sys, &mus).into_iter().filter(|r| {
                r.lemma == "closed-length-matches-oracle" || r.lemma == "neighbour-length-formulas"
            }),
        );
        reports.push(geck_pfeiffer::check_arrow_structure(&sys));
    }
    // certificate invariants (determinism, Kottwitz constancy, plateau
    // safety) over a second set of cocharacters
    for g in [Group::gl(4).unwrap(), Group::c2(), Group::g2()] {
        let sys = g.weyl();
        let mus = random_regular_dominant(sys, 3, 99);
        reports.extend(
            reduction_suite(&g, &mus)
                .into_iter()
                .filter(|r| r.lemma == "certificate-invariants" || r.lemma == "certificate-verifies"),
        );
    }
    all_ok(&reports)
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("worked example replay", criterion_1, 1),
        ("length-formula cross-validation", criterion_2, 10),
        ("cyclic shift reaches class minimum", criterion_3, 60),
        ("ellipticity of minimal and terminal elements", criterion_4, 60),
        ("descent and support structure suite", criterion_5, 120),
        ("non-emptiness sweep", criterion_6, 300),
        ("invariant suite", criterion_7, 300),
    ];
    let mut failed = 0;
    for (i, (name, run, bound)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        let in_time = elapsed <= Duration::from_secs(bound);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time bound; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {}: {status} {name} ({:.3}s / {bound}s) {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
