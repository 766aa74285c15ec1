#![allow(dead_code)]

use std::sync::Arc;

use daolab_core::field::{Field, PrimeField, Rationals};
use daolab_core::monomial::{Monomial, MonomialOrder};
use daolab_core::poly::{PolyRing, Polynomial};
use daolab_core::ring::{Mode, PresentedRing};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const P: u64 = 32003;

pub fn fp() -> PrimeField {
    PrimeField::new(P).unwrap()
}

pub fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn xyz(n: usize) -> Vec<String> {
    names(&["x", "y", "z", "w"][..n])
}

pub fn ring_fp(n: usize, order: MonomialOrder) -> PolyRing<PrimeField> {
    PolyRing::new(fp(), xyz(n), order)
}

pub fn ring_q(n: usize, order: MonomialOrder) -> PolyRing<Rationals> {
    PolyRing::new(Rationals, xyz(n), order)
}

pub fn graded<F: Field>(field: F, vars: &[&str], defining: Vec<Polynomial<F>>) -> Arc<PresentedRing<F>> {
    PresentedRing::new(field, names(vars), defining, Mode::Graded).unwrap()
}

/// Raw terms: exponent vectors with small signed coefficients.
pub fn raw_terms(nvars: usize, max_deg: u16, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), -9i64..=9), 0..=max_terms)
}

pub fn build<F: Field>(ring: &PolyRing<F>, raw: &[(Vec<u16>, i64)]) -> Polynomial<F> {
    let f = ring.field();
    let terms = raw.iter().map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c))).collect();
    ring.from_terms(terms)
}

/// Homogeneous terms of degree `d` in `nvars` variables.
pub fn raw_form(nvars: usize, d: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    let monos: Vec<Vec<u16>> = Monomial::all_of_degree(nvars, d).into_iter().map(|m| m.exponents().to_vec()).collect();
    prop::collection::vec((prop::sample::select(monos), -9i64..=9), 1..=max_terms)
}

pub fn rational(f: &Rationals, n: i64, d: i64) -> <Rationals as Field>::Elem {
    f.from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap()
}

/// Substitutes `images[i]` for variable `i` (images live in `target`).
pub fn substitute<F: Field>(p: &Polynomial<F>, target: &PolyRing<F>, images: &[Polynomial<F>]) -> Polynomial<F> {
    let mut acc = target.zero();
    for (m, c) in p.terms() {
        let mut t = target.constant(c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = target.mul(&t, &target.pow(&images[i], e as u32));
            }
        }
        acc = target.add(&acc, &t);
    }
    acc
}
