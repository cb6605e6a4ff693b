use proptest::prelude::*;

use weyl_reduce::parse::{parse_affine, parse_cocharacter, parse_finite};
use weyl_reduce::reduction::{apply_case, candidate_set, check_hypotheses};
use weyl_reduce::{
    nonemptiness, reduce, verify_certificate, AffineElement, CoxeterSystem, Error, Group, KottwitzPoint,
    WireCertificate,
};

fn sl5_example() -> (Group, AffineElement) {
    let g = Group::sl(5).unwrap();
    let w = parse_finite(g.weyl(), "4321234").unwrap();
    let x = g
        .element(parse_cocharacter("2,1,0,-1,-2").unwrap().into_vec(), w)
        .unwrap();
    (g, x)
}

#[test]
fn worked_example_end_to_end() {
    let (g, x) = sl5_example();
    let out = nonemptiness(&g, &x, KottwitzPoint::Trivial).unwrap();
    assert!(out.nonempty);
    let cert = out.certificate;
    assert!((1..=6).contains(&cert.steps.len()));
    assert_eq!(g.weyl().cycle_type(cert.terminal.finite()).unwrap(), vec![5]);
    verify_certificate(&g, &cert).unwrap();

    let json = WireCertificate::from_certificate(&g, &cert).to_json();
    let (g2, back) = WireCertificate::from_json(&json)
        .unwrap()
        .to_certificate()
        .unwrap();
    verify_certificate(&g2, &back).unwrap();
}

#[test]
fn gl_kappa_decides_verdict() {
    let g = Group::gl(3).unwrap();
    let x = parse_affine(g.weyl(), "t[3,1,0] * p[3,2,1]").unwrap();
    assert!(nonemptiness(&g, &x, KottwitzPoint::Integer(4)).unwrap().nonempty);
    assert!(!nonemptiness(&g, &x, KottwitzPoint::Integer(3)).unwrap().nonempty);
}

#[test]
fn s3_longest_element_ends_at_three_cycle() {
    let g = Group::gl(3).unwrap();
    let sys = g.weyl();
    let mu = parse_cocharacter("3,1,0").unwrap();
    let w = parse_finite(sys, "121").unwrap();
    let x = sys.affine_from_parts(&sys.identity(), &mu, &w).unwrap();
    let cert = reduce(&g, &x).unwrap();
    assert_eq!(sys.cycle_type(cert.terminal.finite()).unwrap(), vec![3]);
    verify_certificate(&g, &cert).unwrap();

    // with v = s1 the lengths of v^-1 and w do not add up
    let x = sys
        .affine_from_parts(&parse_finite(sys, "1").unwrap(), &mu, &w)
        .unwrap();
    assert!(matches!(
        reduce(&g, &x),
        Err(Error::NotAdditive { product: 2, sum: 4 })
    ));
}

#[test]
fn hypotheses_are_enforced() {
    let g = Group::sl(5).unwrap();
    let w = parse_finite(g.weyl(), "1").unwrap();
    let x = g.element(vec![2, 1, 0, -1, -2], w).unwrap();
    assert!(matches!(reduce(&g, &x), Err(Error::NotReumanType { .. })));

    let w = parse_finite(g.weyl(), "4321234").unwrap();
    let x = AffineElement::new(parse_cocharacter("2,1,1,-1,-3").unwrap(), w);
    assert!(check_hypotheses(&g, &x).is_err(), "non-regular translation");

    assert!(g
        .element(vec![1, 0, 0, 0, 0], parse_finite(g.weyl(), "1234").unwrap())
        .is_err());
}

#[test]
fn elliptic_start_needs_no_steps() {
    let g = Group::gl(4).unwrap();
    let sys = g.weyl();
    let w = parse_finite(sys, "123").unwrap();
    let x = sys
        .affine_from_parts(&sys.identity(), &parse_cocharacter("3,2,1,0").unwrap(), &w)
        .unwrap();
    let cert = reduce(&g, &x).unwrap();
    assert!(cert.steps.is_empty());
    assert_eq!(cert.terminal, x);
    verify_certificate(&g, &cert).unwrap();
}

#[test]
fn tampering_is_caught() {
    let (g, x) = sl5_example();
    let cert = reduce(&g, &x).unwrap();
    let good = WireCertificate::from_certificate(&g, &cert);

    let mut bad = good.clone();
    bad.steps[0].lengths[0] += 1;
    let (g2, c) = bad.to_certificate().unwrap();
    assert_eq!(verify_certificate(&g2, &c).unwrap_err().step, Some(0));

    let mut bad = good.clone();
    let last = bad.steps.len() - 1;
    bad.steps[last].gen = if bad.steps[last].gen == 1 { 2 } else { 1 };
    let (g2, c) = bad.to_certificate().unwrap();
    assert!(verify_certificate(&g2, &c).is_err());

    let mut bad = good;
    bad.elliptic = !bad.elliptic;
    let (g2, c) = bad.to_certificate().unwrap();
    assert!(verify_certificate(&g2, &c).is_err());
}

/// The element `pi^{v(mu)} w` picked by index, if additive with full support.
fn additive_element(sys: &CoxeterSystem, v: usize, w: usize, mu: &[i64]) -> Option<AffineElement> {
    let els = sys.elements();
    let (v, w) = (&els[v % els.len()], &els[w % els.len()]);
    let x = sys
        .affine_from_parts(v, &weyl_reduce::Cocharacter::new(mu.to_vec()), w)
        .ok()?;
    (sys.is_additive(&x) && sys.has_full_support(w)).then_some(x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduction_invariants(v in 0usize..120, w in 0usize..120, gaps in proptest::collection::vec(1i64..4, 4)) {
        let g = Group::gl(5).unwrap();
        let sys = g.weyl();
        let mut mu = vec![0i64; 5];
        for k in (0..4).rev() {
            mu[k] = mu[k + 1] + gaps[k];
        }
        if let Some(x) = additive_element(sys, v, w, &mu) {
            let cert = reduce(&g, &x).unwrap();
            prop_assert_eq!(&reduce(&g, &x).unwrap(), &cert);
            prop_assert!(verify_certificate(&g, &cert).is_ok());
            prop_assert!(cert.terminal_elliptic);
            for step in &cert.steps {
                prop_assert_eq!(g.kottwitz_point(&step.after), cert.kappa);
                prop_assert!(sys.length(step.after.finite()) <= sys.length(step.before.finite()));
                prop_assert!(step.case.pattern_holds(&step.lengths));
            }
            // every candidate the engine could pick yields a valid step
            for s in candidate_set(&g, &x).unwrap().iter() {
                let st = apply_case(&g, &x, s).unwrap();
                prop_assert!(sys.is_additive(&st.after));
            }
        }
    }

    #[test]
    fn rank_two_reductions(which in 0usize..2, v in 0usize..12, w in 0usize..12, a in 1i64..5, b in 1i64..5) {
        let g = if which == 0 { Group::c2() } else { Group::g2() };
        let sys = g.weyl();
        if let Some(x) = additive_element(sys, v, w, &[a, b]) {
            let cert = reduce(&g, &x).unwrap();
            prop_assert!(verify_certificate(&g, &cert).is_ok());
            prop_assert!(sys.is_elliptic(cert.terminal.finite()));
        }
    }
}
