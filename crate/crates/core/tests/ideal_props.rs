mod common;

use std::sync::Arc;

use common::*;
use daolab_core::dao::{self, DaoConfig};
use daolab_core::field::{Field, PrimeField};
use daolab_core::lab;
use daolab_core::monomial::MonomialOrder;
use daolab_core::poly::PolyRing;
use daolab_core::ring::{localized_equal, IdealHandle, Mode, PresentedRing};
use daolab_core::AlgebraError;
use proptest::prelude::*;

fn quadric() -> Arc<PresentedRing<PrimeField>> {
    let p = ring_fp(3, MonomialOrder::DegRevLex);
    graded(fp(), &["x", "y", "z"], vec![p.sub(&p.pow(&p.var(2), 2), &p.mul(&p.var(0), &p.var(1)))])
}

fn forms(r: &Arc<PresentedRing<PrimeField>>, raw: &[Vec<(Vec<u16>, i64)>]) -> IdealHandle<PrimeField> {
    r.ideal(raw.iter().map(|t| build(r.ring(), t)).collect()).unwrap()
}

fn two_forms() -> impl Strategy<Value = Vec<Vec<(Vec<u16>, i64)>>> {
    (1u32..=2, 1u32..=3).prop_flat_map(|(a, b)| prop::collection::vec(prop_oneof![raw_form(3, a, 3), raw_form(3, b, 3)], 1..=2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn colon_brackets(a in two_forms(), b in two_forms(), on_quadric in any::<bool>()) {
        let r = if on_quadric { quadric() } else { graded(fp(), &["x", "y", "z"], vec![]) };
        let (a, b) = (forms(&r, &a), forms(&r, &b));
        let c = a.colon(&b);
        prop_assert!(c.contains_ideal(&a));
        prop_assert!(a.contains_ideal(&b.product(&c)));
    }

    #[test]
    fn powers_are_iterated_products(a in two_forms(), k in 1u32..=3) {
        let r = quadric();
        let a = forms(&r, &a);
        prop_assert!(a.power(k + 1).equals(&a.product(&a.power(k))));
    }

    #[test]
    fn graded_equality_is_mutual_containment(a in two_forms(), b in two_forms()) {
        let r = graded(fp(), &["x", "y", "z"], vec![]);
        let (a, b) = (forms(&r, &a), forms(&r, &b));
        prop_assert!(a.equals(&a));
        prop_assert_eq!(a.equals(&b), b.equals(&a));
        prop_assert_eq!(a.equals(&b), a.contains_ideal(&b) && b.contains_ideal(&a));
        // same ideal, different generators
        let sum = a.sum(&b);
        let re = r.ideal(sum.gens().iter().rev().cloned().collect()).unwrap();
        prop_assert!(sum.equals(&re) && re.equals(&sum));
    }

    #[test]
    fn localized_equality_sees_through_units(a in prop::collection::vec(raw_form(2, 1, 2), 1..=2), u in raw_form(2, 1, 2), k in 1u32..3) {
        let r = PresentedRing::polynomial(fp(), xyz(2), Mode::Local).unwrap();
        let p = r.ring();
        let gens: Vec<_> = a.iter().map(|t| p.mul(&build(p, t), &p.pow(&p.var(0), k))).collect();
        let unit = p.add(&p.one(), &build(p, &u));
        let scaled: Vec<_> = gens.iter().map(|g| p.mul(g, &unit)).collect();
        let (i, j) = (r.ideal(gens).unwrap(), r.ideal(scaled).unwrap());
        prop_assert!(localized_equal(&i, &i).unwrap());
        prop_assert!(localized_equal(&i, &j).unwrap());
        prop_assert!(localized_equal(&j, &i).unwrap());
    }
}

#[test]
fn global_equality_implies_local() {
    let r = PresentedRing::polynomial(fp(), xyz(2), Mode::Local).unwrap();
    let p = r.ring();
    let a = r.ideal(vec![p.var(0), p.var(1)]).unwrap();
    let b = r.ideal(vec![p.add(&p.var(0), &p.var(1)), p.var(1)]).unwrap();
    assert!(localized_equal(&a, &b).unwrap());
    let c = r.ideal(vec![p.add(&p.var(0), &p.pow(&p.var(0), 2))]).unwrap();
    let d = r.ideal(vec![p.var(0)]).unwrap();
    assert!(localized_equal(&c, &d).unwrap());
    assert!(!localized_equal(&d, &a).unwrap());
}

#[test]
fn localized_equality_is_local_only() {
    let r = graded(fp(), &["x", "y"], vec![]);
    let m = r.max_ideal();
    assert!(matches!(localized_equal(&m, &m), Err(AlgebraError::WrongMode { .. })));
}

#[test]
fn depth_zero_rings_are_refused() {
    let p = ring_fp(2, MonomialOrder::DegRevLex);
    let r = graded(fp(), &["x", "y"], vec![p.pow(&p.var(0), 2), p.mul(&p.var(0), &p.var(1))]);
    assert!(!r.depth_positive());
    let cfg = DaoConfig::default();
    assert!(matches!(lab::check_regular_characterization(&r, 2, &cfg), Err(AlgebraError::DepthZero)));
    let i = r.ideal(vec![r.ring().var(1)]).unwrap();
    assert!(matches!(dao::dao_d3(&r, &i, &cfg), Err(AlgebraError::DepthZero)));
}

#[test]
fn quotient_arithmetic_respects_the_relation() {
    let r = quadric();
    let p: &PolyRing<PrimeField> = r.ring();
    let (x, y, z) = (p.var(0), p.var(1), p.var(2));
    let xy = r.ideal(vec![p.mul(&x, &y)]).unwrap();
    assert!(xy.contains(&p.pow(&z, 2)));
    // (x) : z = (x, z) on the cone
    let c = r.ideal(vec![x.clone()]).unwrap().colon(&r.ideal(vec![z.clone()]).unwrap());
    assert!(c.equals(&r.ideal(vec![x, z]).unwrap()));
    assert_eq!(r.max_ideal().quotient_dim(&r.max_ideal_power(2)), Some(3));
    assert!(r.field().is_one(&r.field().one()));
}
