mod common;

use std::sync::Arc;

use common::*;
use daolab_core::blowup;
use daolab_core::dao::{self, Answer, Certificate, DaoConfig};
use daolab_core::field::PrimeField;
use daolab_core::lab::{self, FamilyConfig, FamilyKind, Outcome};
use daolab_core::monomial::MonomialOrder;
use daolab_core::ring::{IdealHandle, Mode, PresentedRing};
use proptest::prelude::*;

fn rings() -> Vec<Arc<PresentedRing<PrimeField>>> {
    let p2 = ring_fp(2, MonomialOrder::DegRevLex);
    let p3 = ring_fp(3, MonomialOrder::DegRevLex);
    vec![
        graded(fp(), &["x", "y"], vec![]),
        graded(fp(), &["x", "y", "z"], vec![]),
        graded(fp(), &["x", "y", "z"], vec![p3.sub(&p3.pow(&p3.var(2), 2), &p3.mul(&p3.var(0), &p3.var(1)))]),
        graded(fp(), &["x", "y"], vec![p2.pow(&p2.var(1), 2)]),
        graded(fp(), &["x", "y", "z"], vec![p3.add(&p3.pow(&p3.var(0), 3), &p3.add(&p3.pow(&p3.var(1), 3), &p3.pow(&p3.var(2), 3)))]),
    ]
}

fn pair() -> impl Strategy<Value = (usize, Vec<Vec<(Vec<u16>, i64)>>)> {
    (0usize..5).prop_flat_map(|k| {
        let n = if k == 0 || k == 3 { 2 } else { 3 };
        let gen = prop_oneof![raw_form(n, 1, 2), raw_form(n, 2, 3), raw_form(n, 3, 3)];
        (Just(k), prop::collection::vec(gen, 1..=2))
    })
}

fn ideal_of(r: &Arc<PresentedRing<PrimeField>>, raw: &[Vec<(Vec<u16>, i64)>]) -> Option<IdealHandle<PrimeField>> {
    let i = r.ideal(raw.iter().map(|t| build(r.ring(), t)).collect()).ok()?;
    (!i.is_zero() && i.is_proper()).then_some(i)
}

fn weakly_full(r: &Arc<PresentedRing<PrimeField>>, i: &IdealHandle<PrimeField>, k: u32) -> bool {
    let m = r.max_ideal();
    let a = if k == 0 { i.clone() } else { i.product(&r.max_ideal_power(k)) };
    a.product(&m).colon(&m).equals(&a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn relations_between_the_dao_numbers((k, gens) in pair()) {
        let r = rings()[k].clone();
        let Some(i) = ideal_of(&r, &gens) else { return Ok(()) };
        let rep = dao::invariant_report(&r, &i, &DaoConfig::default()).unwrap();
        prop_assert!(rep.d2.value <= rep.d1.value);
        prop_assert_eq!(rep.d1.value, rep.d3.value);
        prop_assert_eq!(rep.d1.scan_value, rep.d3.value, "witness scan disagrees on {}", i.display());
        let reg = rep.rees_regularity.unwrap();
        prop_assert!(rep.d3.value as i64 <= reg as i64);
        // the scan, redone from the definition up to two past the bound
        let top = reg.max(0) as u32 + 2;
        let last_bad = (0..=top).filter(|&k| !weakly_full(&r, &i, k)).max();
        prop_assert_eq!(rep.d3.value, last_bad.map_or(0, |k| k as u64 + 1));
    }

    #[test]
    fn components_vanish_exactly_at_weakly_full_powers((k, gens) in pair()) {
        let r = rings()[k].clone();
        let Some(i) = ideal_of(&r, &gens) else { return Ok(()) };
        let top = blowup::rees_regularity(&r, &i).unwrap().max(0) as u32 + 1;
        for k in 0..=top {
            let a = if k == 0 { i.clone() } else { i.product(&r.max_ideal_power(k)) };
            let weak = dao::is_weakly_m_full(&a).unwrap().is_yes();
            prop_assert_eq!(dao::dao_component_dim(&r, &i, k).unwrap().is_zero(), weak);
            prop_assert_eq!(weak, weakly_full(&r, &i, k));
        }
    }

    // C_j = A^{j+1} : A^j increases and stays inside the closure
    #[test]
    fn ratliff_rush_chain_is_monotone(gens in prop::collection::vec(prop_oneof![raw_form(2, 2, 3), raw_form(2, 3, 4)], 2..=3)) {
        let r = graded(fp(), &["x", "y"], vec![]);
        let a = r.ideal(gens.iter().map(|t| build(r.ring(), t)).collect()).unwrap();
        prop_assume!(dao::has_regular_element(&a));
        let (closure, _) = dao::ratliff_rush(&a, 3, 8).unwrap();
        prop_assert!(closure.contains_ideal(&a));
        let mut prev = a.clone();
        for j in 1..=4 {
            let c = a.power(j + 1).colon(&a.power(j));
            prop_assert!(c.contains_ideal(&prev));
            prop_assert!(closure.contains_ideal(&c));
            prev = c;
        }
    }
}

fn family(kind: FamilyKind, min_vars: usize, max_vars: usize, min_dim: usize, seed: u64) -> FamilyConfig {
    FamilyConfig { kind, min_vars, max_vars, min_degree: 2, max_degree: 3, min_dim, trials: 1, reductions: 1, seed, mode: Mode::Graded }
}

fn samples(fam: &FamilyConfig, count: usize) -> Vec<Arc<PresentedRing<PrimeField>>> {
    let mut rng = dao::trial_rng(fam.seed, 0);
    let mut out = Vec::new();
    while out.len() < count {
        if let Some(r) = lab::sample_ring(&fp(), fam, &mut rng).unwrap() {
            out.push(r);
        }
    }
    out
}

#[test]
fn identity_on_complete_intersections() {
    let cfg = DaoConfig::default();
    let fam = family(FamilyKind::CompleteIntersection, 3, 4, 1, 41);
    for (n, r) in samples(&fam, 12).into_iter().enumerate() {
        let mut rng = dao::trial_rng(41, 100 + n as u64);
        let q = dao::sample_minimal_reduction(&r, &mut rng, &cfg).unwrap();
        let d3 = dao::dao_d3(&r, &q.ideal, &cfg).unwrap().value;
        let s = dao::s_of_m(&r, &cfg).unwrap().value;
        assert_eq!(d3, q.reduction_number.max(s - 1), "{} with {}", r.display(), q.ideal.display());
    }
}

#[test]
fn one_dimensional_rings_have_d3_equal_to_the_reduction_number() {
    let cfg = DaoConfig::default();
    let mut rings = samples(&family(FamilyKind::Hypersurface, 2, 2, 1, 43), 6);
    rings.extend(samples(&family(FamilyKind::CompleteIntersection, 3, 3, 1, 47), 4).into_iter().filter(|r| r.dimension(12).value == 1));
    for (n, r) in rings.iter().enumerate() {
        let mut rng = dao::trial_rng(43, n as u64);
        let q = dao::sample_minimal_reduction(r, &mut rng, &cfg).unwrap();
        assert_eq!(q.ideal.gens().len(), 1);
        assert_eq!(dao::dao_d3(r, &q.ideal, &cfg).unwrap().value, q.reduction_number, "{}", r.display());
    }
}

#[test]
fn rr_recursion_matches_chain_closures() {
    let cfg = DaoConfig::default();
    let mut rings = samples(&family(FamilyKind::Hypersurface, 3, 3, 2, 53), 5);
    rings.extend(samples(&family(FamilyKind::QuadricCone, 3, 4, 2, 59), 5));
    for r in &rings {
        let t = dao::rr_powers_of_m(r, &cfg).unwrap();
        let m = r.max_ideal();
        for k in 1..t.top {
            assert!(t.closure(k + 1).unwrap().colon(&m).equals(t.closure(k).unwrap()));
        }
        for k in 1..=t.top {
            let (chain, _) = dao::ratliff_rush(&r.max_ideal_power(k), 3, 8).unwrap();
            assert!(chain.equals(t.closure(k).unwrap()), "k = {} on {}", k, r.display());
            assert!(chain.contains_ideal(&r.max_ideal_power(k)));
        }
    }
}

#[test]
fn ratliff_rush_of_a_gap_ideal_is_the_power() {
    let r = graded(fp(), &["x", "y"], vec![]);
    let p = r.ring();
    let (x, y) = (p.var(0), p.var(1));
    let mono = |a: u32, b: u32| p.mul(&p.pow(&x, a), &p.pow(&y, b));
    let a = r.ideal(vec![mono(4, 0), mono(3, 1), mono(1, 3), mono(0, 4)]).unwrap();
    assert!(!a.contains(&mono(2, 2)));
    // x^2y^2 * A is inside A^2 already
    assert!(a.power(2).contains_ideal(&r.ideal(vec![mono(2, 2)]).unwrap().product(&a)));
    let (c, cert) = dao::ratliff_rush(&a, 3, 8).unwrap();
    assert!(c.equals(&r.max_ideal_power(4)));
    assert!(matches!(cert, Certificate::CapLimited { stable: true, .. }));
}

#[test]
fn powers_of_m_in_polynomial_rings_have_d3_zero() {
    let cfg = DaoConfig::default();
    for n in 2..=3usize {
        let r = PresentedRing::polynomial(fp(), xyz(n), Mode::Graded).unwrap();
        assert_eq!(blowup::rees_ring_regularity(&r).unwrap(), 0);
        for k in 1..=4 {
            let d = dao::dao_d3(&r, &r.max_ideal_power(k), &cfg).unwrap();
            assert_eq!((d.value, d.certificate), (0, Certificate::Certified));
        }
    }
}

#[test]
fn cap_limited_values_never_verify() {
    let cfg = DaoConfig::default();
    let p = ring_fp(3, MonomialOrder::DegRevLex);
    let r = PresentedRing::new(fp(), xyz(3), vec![p.sub(&p.pow(&p.var(2), 2), &p.mul(&p.var(0), &p.var(1)))], Mode::Local).unwrap();
    let i = r.ideal(vec![r.ring().var(0), r.ring().var(1)]).unwrap();
    let rep = dao::invariant_report(&r, &i, &cfg).unwrap();
    assert!(rep.has_cap_limited());
    assert!(matches!(rep.d3.certificate, Certificate::CapLimited { stable: true, .. }));
    assert_eq!((rep.d3.value, rep.reduction.reduction_number, rep.s_of_m.value), (1, Some(1), 1));
    let s = lab::check_identity_theorem(&r, &i, &cfg).unwrap();
    assert_eq!(s.outcome(), Outcome::Evidence);

    let g = graded(fp(), &["x", "y", "z"], r.defining().to_vec());
    let gi = g.ideal(vec![g.ring().var(0), g.ring().var(1)]).unwrap();
    assert_eq!(lab::check_identity_theorem(&g, &gi, &cfg).unwrap().outcome(), Outcome::Verified);

    let cap = Certificate::CapLimited { cap: 4, window: 2, stable: false };
    let prob = Certificate::Probabilistic { trials: 8 };
    assert_eq!(Certificate::Certified.weakest(prob), prob);
    assert_eq!(prob.weakest(cap), cap);
    assert_eq!(cap.weakest(Certificate::Certified), cap);
}

#[test]
fn reduction_answers() {
    let cfg = DaoConfig::default();
    let r = rings()[2].clone();
    let p = r.ring();
    let red = dao::is_reduction(&r, &r.ideal(vec![p.var(0), p.var(1)]).unwrap(), &cfg).unwrap();
    assert_eq!((red.answer, red.reduction_number), (Answer::Yes, Some(1)));
    let not = dao::is_reduction(&r, &r.ideal(vec![p.var(0), p.var(2)]).unwrap(), &cfg).unwrap();
    assert_eq!((not.answer, not.certificate), (Answer::No, Certificate::Certified));
    assert!(dao::reduction_number(&r, &r.ideal(vec![p.var(0), p.var(2)]).unwrap(), &cfg).is_err());
}

#[test]
fn explorer_is_deterministic() {
    let cfg = DaoConfig::default();
    let fam = FamilyConfig { trials: 6, seed: 9, ..FamilyConfig::default() };
    let (a, an_a) = lab::explore_conjecture(fp(), &fam, &cfg).unwrap();
    let (b, an_b) = lab::explore_conjecture(fp(), &fam, &cfg).unwrap();
    assert_eq!(format!("{:?}{:?}", a, an_a), format!("{:?}{:?}", b, an_b));
    assert!(a.passed());
    let (c, _) = lab::explore_conjecture(fp(), &FamilyConfig { seed: 10, ..fam }, &cfg).unwrap();
    assert_ne!(format!("{:?}", a.inputs), format!("{:?}", c.inputs));
}
