//! Presented algebras `S/J` in graded or local-at-origin mode, and their ideals.
//!
//! Local mode never computes standard bases. An ideal handle may carry a
//! floor `c` with `m^c ⊆ I` locally; its stored basis is then the basis of
//! `I + J + m^c`, an ideal supported only at the origin, which is determined by
//! its localization. Handles without a floor compare through unit colons.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{self, GbCache, GroebnerBasis};
use crate::hilbert;
use crate::linalg;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Graded,
    Local,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Graded => "graded",
            Mode::Local => "local",
        }
    }
}

/// How far a computed number can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Confidence {
    Certified,
    /// Stable over the window but not backed by a bound.
    HighConfidence,
    /// Cap reached before the pattern stabilized; value is the best estimate.
    Uncertified,
}

impl Confidence {
    pub fn name(self) -> &'static str {
        match self {
            Confidence::Certified => "certified",
            Confidence::HighConfidence => "high_confidence",
            Confidence::Uncertified => "uncertified",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Estimate {
    pub value: u64,
    pub confidence: Confidence,
}

/// Default cap on Hilbert-Samuel lengths in local mode.
pub const DEFAULT_SAMUEL_CAP: u32 = 12;
/// Consecutive values over which the leading difference must be constant.
pub const SAMUEL_WINDOW: usize = 3;
/// Largest floor tried when the global quotient is not zero-dimensional.
const LOOSE_FLOOR_CAP: u32 = 4;

/// The algebra `K[x_1..x_n]/J`.
#[derive(Debug)]
pub struct PresentedRing<F: Field> {
    ring: PolyRing<F>,
    defining: Vec<Polynomial<F>>,
    jgb: Arc<GroebnerBasis<F>>,
    mode: Mode,
    homogeneous: bool,
    cache: GbCache<F>,
}

impl<F: Field> PresentedRing<F> {
    pub fn new(field: F, names: Vec<String>, defining: Vec<Polynomial<F>>, mode: Mode) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(AlgebraError::InvalidArgument(String::from("a ring needs at least one variable")));
        }
        let ring = PolyRing::new(field, names, MonomialOrder::DegRevLex);
        let mut homogeneous = true;
        for g in &defining {
            ring.check(g)?;
            if !ring.is_homogeneous(g) {
                homogeneous = false;
            }
        }
        let defining: Vec<Polynomial<F>> = defining.into_iter().filter(|g| !g.is_zero()).collect();
        if mode == Mode::Graded && !homogeneous {
            return Err(AlgebraError::NotHomogeneous(String::from("the defining ideal")));
        }
        if mode == Mode::Local && defining.iter().any(|g| g.constant_term().is_some()) {
            // a generator with a constant term: either J = (1) or the origin is off the variety
            let gb = GroebnerBasis::compute(&ring, &defining);
            if gb.is_unit() {
                return Err(AlgebraError::TrivialRing);
            }
            return Err(AlgebraError::NotThroughOrigin);
        }
        let cache = GbCache::new();
        let jgb = cache.get_or_compute(&ring, &defining);
        if jgb.is_unit() {
            return Err(AlgebraError::TrivialRing);
        }
        Ok(Arc::new(PresentedRing { ring, defining, jgb, mode, homogeneous, cache }))
    }

    /// The polynomial ring `K[x_1..x_n]` itself.
    pub fn polynomial(field: F, names: Vec<String>, mode: Mode) -> Result<Arc<Self>> {
        Self::new(field, names, Vec::new(), mode)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn defining(&self) -> &[Polynomial<F>] {
        &self.defining
    }

    pub fn defining_gb(&self) -> &GroebnerBasis<F> {
        &self.jgb
    }

    /// True when `J` is generated by forms (always in graded mode).
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn cache(&self) -> &GbCache<F> {
        &self.cache
    }

    /// Groebner basis of `(gens) + J`.
    pub fn gb_with_defining(&self, gens: &[Polynomial<F>]) -> Arc<GroebnerBasis<F>> {
        let mut all: Vec<Polynomial<F>> = self.jgb.basis().to_vec();
        all.extend(gens.iter().cloned());
        self.cache.get_or_compute(&self.ring, &all)
    }

    pub fn variables(&self) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.ring.var(i)).collect()
    }

    pub fn monomials_of_degree(&self, d: u32) -> Vec<Polynomial<F>> {
        let one = self.field().one();
        Monomial::all_of_degree(self.nvars(), d).into_iter().map(|m| self.ring.monomial(m, one.clone())).collect()
    }

    pub fn display(&self) -> String {
        let mut s = alloc::format!("{}[{}]", self.field().name(), self.ring.names().join(","));
        if !self.defining.is_empty() {
            let gens: Vec<String> = self.defining.iter().map(|g| self.ring.display(g)).collect();
            s.push_str(&alloc::format!("/({})", gens.join(", ")));
        }
        s.push(' ');
        s.push_str(self.mode.name());
        s
    }

    /// Handle for `(gens) + J`.
    pub fn ideal(self: &Arc<Self>, gens: Vec<Polynomial<F>>) -> Result<IdealHandle<F>> {
        for g in &gens {
            self.ring.check(g)?;
        }
        let gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let floor = if self.mode == Mode::Local { self.find_floor(&gens) } else { None };
        Ok(IdealHandle::build(self.clone(), gens, floor))
    }

    pub fn max_ideal(self: &Arc<Self>) -> IdealHandle<F> {
        let floor = if self.mode == Mode::Local { Some(1) } else { None };
        IdealHandle::build(self.clone(), self.variables(), floor)
    }

    pub fn unit_ideal(self: &Arc<Self>) -> IdealHandle<F> {
        let floor = if self.mode == Mode::Local { Some(0) } else { None };
        IdealHandle::build(self.clone(), vec![self.ring.one()], floor)
    }

    pub fn zero_ideal(self: &Arc<Self>) -> IdealHandle<F> {
        IdealHandle::build(self.clone(), Vec::new(), None)
    }

    /// `m^k`.
    pub fn max_ideal_power(self: &Arc<Self>, k: u32) -> IdealHandle<F> {
        if k == 0 {
            return self.unit_ideal();
        }
        let floor = if self.mode == Mode::Local { Some(k) } else { None };
        IdealHandle::build(self.clone(), self.monomials_of_degree(k), floor)
    }

    /// Smallest `c` with `m^c ⊆ (gens) + J` locally, by the Nakayama test
    /// `m^c ⊆ (gens) + J + m^{c+1}`.
    fn find_floor(&self, gens: &[Polynomial<F>]) -> Option<u32> {
        if gens.iter().any(|g| g.constant_term().is_some()) {
            return Some(0);
        }
        let global = self.gb_with_defining(gens);
        let cap = if global.is_zero_dimensional() {
            // the local length is at most the global one, and m^length = 0 in an Artinian local ring
            hilbert::count_standard_monomials(global.leads(), self.nvars()).unwrap_or(1).max(1) as u32
        } else {
            LOOSE_FLOOR_CAP
        };
        for c in 1..=cap {
            let mut with_power = gens.to_vec();
            with_power.extend(self.monomials_of_degree(c + 1));
            let gb = self.gb_with_defining(&with_power);
            if gb.contains_all(&self.monomials_of_degree(c)) {
                return Some(c);
            }
        }
        None
    }

    /// Krull dimension. Graded mode and homogeneous local `J` are exact; otherwise from
    /// Hilbert-Samuel lengths up to `cap`.
    pub fn dimension(&self, cap: u32) -> Estimate {
        if self.homogeneous {
            let d = self.jgb.dimension().unwrap_or(0);
            return Estimate { value: d as u64, confidence: Confidence::Certified };
        }
        let (d, _, confidence) = self.samuel_fit(cap);
        Estimate { value: d, confidence }
    }

    /// `μ(m) = n - rank(linear parts of the reduced basis of J)`.
    pub fn embedding_dimension(&self) -> usize {
        let rows: Vec<Vec<F::Elem>> = self.jgb.basis().iter().map(|g| self.ring.linear_part(g)).collect();
        self.nvars() - linalg::rank_dense(self.field(), &rows)
    }

    /// Multiplicity of the maximal ideal.
    pub fn multiplicity(&self, cap: u32) -> Estimate {
        if self.homogeneous {
            let (h, _) = hilbert::reduce_numerator(&self.jgb.hilbert_numerator());
            let e: i64 = h.iter().sum();
            return Estimate { value: e.max(0) as u64, confidence: Confidence::Certified };
        }
        let (_, e, confidence) = self.samuel_fit(cap);
        Estimate { value: e, confidence }
    }

    /// `e = μ(m) - dim R + 1`.
    pub fn has_minimal_multiplicity(&self, cap: u32) -> (bool, Confidence) {
        let d = self.dimension(cap);
        let e = self.multiplicity(cap);
        let mu = self.embedding_dimension() as i64;
        let ok = e.value as i64 == mu - d.value as i64 + 1;
        (ok, d.confidence.max(e.confidence))
    }

    /// Lengths `ℓ(N) = dim_K S/(J + m^N)` for `N = 1..=upto`.
    pub fn samuel_lengths(&self, upto: u32) -> Vec<u64> {
        (1..=upto).map(|n| groebner::kbasis_modulo_power(&self.jgb, n)).collect()
    }

    /// Fits `(dimension, multiplicity, confidence)` from Hilbert-Samuel lengths.
    fn samuel_fit(&self, cap: u32) -> (u64, u64, Confidence) {
        let mut lens: Vec<i64> = Vec::new();
        let mut best = (0u64, 0u64);
        for n in 1..=cap {
            lens.push(groebner::kbasis_modulo_power(&self.jgb, n) as i64);
            if let Some((d, e)) = fit_leading_difference(&lens) {
                best = (d, e);
                if lens.len() >= d as usize + SAMUEL_WINDOW + 1 {
                    return (d, e, Confidence::HighConfidence);
                }
            }
        }
        (best.0, best.1, Confidence::Uncertified)
    }

    /// `depth R > 0`, i.e. `J : m = J` (locally in local mode).
    pub fn depth_positive(self: &Arc<Self>) -> bool {
        let zero = self.zero_ideal();
        let socle = zero.colon(&self.max_ideal());
        socle.equals(&zero)
    }

    /// The d-sequence conditions for `elems` (ring elements given by representatives).
    pub fn is_d_sequence(self: &Arc<Self>, elems: &[Polynomial<F>]) -> Result<bool> {
        if elems.is_empty() {
            return Err(AlgebraError::InvalidArgument(String::from("empty sequence")));
        }
        let m = elems.len();
        for i in 0..m {
            let others: Vec<Polynomial<F>> =
                elems.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, e)| e.clone()).collect();
            if self.ideal(others)?.contains(&elems[i]) {
                return Ok(false);
            }
        }
        let r = &self.ring;
        for i in 0..m {
            let base = self.ideal(elems[..i].to_vec())?;
            let first = i; // the element x_{i+1} in 1-based terms
            for j in i..m {
                let prod = r.mul(&elems[first], &elems[j]);
                let left = base.colon(&self.ideal(vec![prod])?);
                let right = base.colon(&self.ideal(vec![elems[j].clone()])?);
                if !left.equals(&right) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `(d, Δ^d)` when the `d`-th difference of `lens` is positive and constant on its last
/// `SAMUEL_WINDOW` values, for the smallest such `d`.
fn fit_leading_difference(lens: &[i64]) -> Option<(u64, u64)> {
    let mut diff = lens.to_vec();
    for d in 0..lens.len() {
        if diff.len() >= SAMUEL_WINDOW {
            let tail = &diff[diff.len() - SAMUEL_WINDOW..];
            if tail[0] > 0 && tail.iter().all(|&v| v == tail[0]) {
                return Some((d as u64, tail[0] as u64));
            }
        }
        if diff.len() < 2 {
            break;
        }
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
    }
    None
}

/// An ideal of a [`PresentedRing`], given by ambient generators.
#[derive(Clone, Debug)]
pub struct IdealHandle<F: Field> {
    ring: Arc<PresentedRing<F>>,
    gens: Vec<Polynomial<F>>,
    floor: Option<u32>,
    /// `gens` generate only together with `m^floor` (products drop terms past the floor).
    implicit: bool,
    gb: Arc<GroebnerBasis<F>>,
}

impl<F: Field> IdealHandle<F> {
    fn build(ring: Arc<PresentedRing<F>>, gens: Vec<Polynomial<F>>, floor: Option<u32>) -> Self {
        Self::build_with(ring, gens, floor, false)
    }

    fn build_with(ring: Arc<PresentedRing<F>>, gens: Vec<Polynomial<F>>, floor: Option<u32>, implicit: bool) -> Self {
        let gens = compact(&ring, gens);
        let implicit = implicit && floor.is_some_and(|c| c > 0);
        let gb = match floor {
            Some(c) => {
                let mut all = gens.clone();
                all.extend(ring.monomials_of_degree(c));
                ring.gb_with_defining(&all)
            }
            None => ring.gb_with_defining(&gens),
        };
        IdealHandle { ring, gens, floor, implicit, gb }
    }

    fn from_gb(ring: Arc<PresentedRing<F>>, gb: Arc<GroebnerBasis<F>>, floor: Option<u32>) -> Self {
        let gens = compact(&ring, gb.basis().to_vec());
        IdealHandle { ring, gens, floor, implicit: false, gb }
    }

    pub fn ring(&self) -> &Arc<PresentedRing<F>> {
        &self.ring
    }

    /// Ambient generators: the ideal is these plus `J`, plus `m^floor` when
    /// [`Self::has_implicit_power`] holds.
    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn has_implicit_power(&self) -> bool {
        self.implicit
    }

    /// Generators including the implicit power of `m`.
    pub fn full_gens(&self) -> Vec<Polynomial<F>> {
        let mut out = self.gens.clone();
        if let (true, Some(c)) = (self.implicit, self.floor) {
            out.extend(self.ring.monomials_of_degree(c));
        }
        out
    }

    /// Known `c` with `m^c` inside the ideal (local mode only).
    pub fn floor(&self) -> Option<u32> {
        self.floor
    }

    /// Reduced basis of the stored representative.
    pub fn gb(&self) -> &Arc<GroebnerBasis<F>> {
        &self.gb
    }

    fn same_ring(&self, other: &IdealHandle<F>) {
        debug_assert!(Arc::ptr_eq(&self.ring, &other.ring), "ideals of different rings");
    }

    fn local(&self) -> bool {
        self.ring.mode == Mode::Local
    }

    /// Global equality of representatives decides equality.
    fn globally_faithful(&self) -> bool {
        !self.local() || self.floor.is_some() || (self.ring.homogeneous && self.gens.iter().all(|g| self.ring.ring.is_homogeneous(g)))
    }

    pub fn sum(&self, other: &IdealHandle<F>) -> IdealHandle<F> {
        self.same_ring(other);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        let floor = match (self.floor, other.floor) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        };
        IdealHandle::build_with(self.ring.clone(), gens, floor, self.implicit || other.implicit)
    }

    pub fn product(&self, other: &IdealHandle<F>) -> IdealHandle<F> {
        self.same_ring(other);
        let floor = match (self.floor, other.floor) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        let r = &self.ring.ring;
        let (left, right) = (self.full_gens(), other.full_gens());
        let mut gens = Vec::with_capacity(left.len() * right.len());
        for a in &left {
            let da = a.min_degree().unwrap_or(0);
            for b in &right {
                if let Some(c) = floor {
                    if da + b.min_degree().unwrap_or(0) >= c {
                        continue;
                    }
                }
                let mut p = r.mul(a, b);
                if let Some(c) = floor {
                    p = truncate_below(r, &p, c);
                }
                if !p.is_zero() {
                    gens.push(p);
                }
            }
        }
        IdealHandle::build_with(self.ring.clone(), gens, floor, true)
    }

    /// `A^k`, with `A^0` the unit ideal.
    pub fn power(&self, k: u32) -> IdealHandle<F> {
        if k == 0 {
            return self.ring.unit_ideal();
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `A : B`.
    pub fn colon(&self, other: &IdealHandle<F>) -> IdealHandle<F> {
        self.same_ring(other);
        let ring = &self.ring;
        let bgens: Vec<Polynomial<F>> = other.full_gens().into_iter().filter(|g| !self.gb.contains(g)).collect();
        if bgens.is_empty() {
            return ring.unit_ideal();
        }
        if let Some(gb) = groebner::colon_zero_dimensional(&self.gb, &bgens, groebner::LINEAR_COLON_LIMIT) {
            let gb = Arc::new(gb);
            return IdealHandle::from_gb(ring.clone(), gb, self.floor);
        }
        let gens = groebner::colon(&ring.ring, self.gb.basis(), &bgens);
        IdealHandle::build(ring.clone(), gens, self.floor)
    }

    pub fn intersect(&self, other: &IdealHandle<F>) -> IdealHandle<F> {
        self.same_ring(other);
        let gens = groebner::intersect(&self.ring.ring, self.gb.basis(), other.gb.basis());
        let floor = match (self.floor, other.floor) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        IdealHandle::build(self.ring.clone(), gens, floor)
    }

    /// Membership of a ring element (locally in local mode).
    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        if self.gb.contains(f) {
            return true;
        }
        if self.globally_faithful() {
            return false;
        }
        // f ∈ A locally iff A : f contains a unit at the origin
        let colon = groebner::colon(&self.ring.ring, self.gb.basis(), core::slice::from_ref(f));
        colon.iter().any(|g| g.constant_term().is_some())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealHandle<F>) -> bool {
        other.full_gens().iter().all(|g| self.contains(g))
    }

    /// Equality in `R` (after localization in local mode).
    pub fn equals(&self, other: &IdealHandle<F>) -> bool {
        self.same_ring(other);
        if self.floor.is_some() && other.floor.is_some() {
            return self.gb.same_ideal(&other.gb);
        }
        if !self.local() || (self.globally_faithful() && other.globally_faithful() && self.floor.is_none() && other.floor.is_none()) {
            return self.gb.same_ideal(&other.gb);
        }
        localized_equal(self, other).unwrap_or(false)
    }

    /// The unit ideal of `R` (locally: some generator is a unit at the origin).
    pub fn is_unit(&self) -> bool {
        if self.local() {
            self.floor == Some(0) || self.gens.iter().any(|g| g.constant_term().is_some())
        } else {
            self.gb.is_unit()
        }
    }

    /// The zero ideal of `R`.
    pub fn is_zero(&self) -> bool {
        let zero = self.ring.zero_ideal();
        if !self.local() {
            return self.gb.same_ideal(&zero.gb);
        }
        self.full_gens().iter().all(|g| zero.contains(g))
    }

    /// Contained in the maximal ideal.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| self.ring.ring.is_homogeneous(g))
    }

    /// `dim_K self/sub` for `sub ⊆ self`; `None` when infinite or not computable
    /// (local handles without floors).
    pub fn quotient_dim(&self, sub: &IdealHandle<F>) -> Option<u64> {
        self.same_ring(sub);
        let n = self.ring.nvars();
        if self.local() {
            if self.floor.is_none() || sub.floor.is_none() {
                return None;
            }
            let big = hilbert::count_standard_monomials(sub.gb.leads(), n)?;
            let small = hilbert::count_standard_monomials(self.gb.leads(), n)?;
            return Some(big.saturating_sub(small));
        }
        let a = sub.gb.hilbert_numerator();
        let b = self.gb.hilbert_numerator();
        let len = a.len().max(b.len());
        let diff: Vec<i64> = (0..len).map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0)).collect();
        if diff.iter().all(|&c| c == 0) {
            return Some(0);
        }
        let (h, k) = hilbert::reduce_numerator(&diff);
        if k < n {
            return None;
        }
        Some(h.iter().sum::<i64>().max(0) as u64)
    }

    /// `dim_K R/self`, the colength.
    pub fn colength(&self) -> Option<u64> {
        self.ring.unit_ideal().quotient_dim(self)
    }

    /// A minimal homogeneous generating set modulo `J` (graded mode, homogeneous ideals).
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<F>>> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(String::from("the ideal")));
        }
        if self.is_unit() {
            return Ok(vec![self.ring.ring.one()]);
        }
        let mut sorted = self.gens.clone();
        sorted.sort_by_key(|g| g.max_degree());
        let mut chosen: Vec<Polynomial<F>> = Vec::new();
        let mut current = self.ring.jgb.clone();
        for g in sorted {
            if current.contains(&g) {
                continue;
            }
            let nf = current.normal_form(&g);
            current = Arc::new(current.extend(core::slice::from_ref(&nf)));
            chosen.push(self.ring.ring.monic(&nf));
        }
        Ok(chosen)
    }

    pub fn display(&self) -> String {
        let r = &self.ring.ring;
        let parts: Vec<String> = self.gens.iter().map(|g| r.display(g)).collect();
        match (self.implicit, self.floor) {
            (true, Some(c)) => alloc::format!("({}) + m^{}", parts.join(", "), c),
            _ => alloc::format!("({})", parts.join(", ")),
        }
    }
}

/// Reduces generators modulo `J`, drops zeros, normalizes, dedups.
fn compact<F: Field>(ring: &PresentedRing<F>, gens: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let r = &ring.ring;
    let mut out: Vec<Polynomial<F>> = Vec::with_capacity(gens.len());
    let nfs = ring.jgb.normal_forms(&gens);
    for g in nfs {
        if g.is_zero() {
            continue;
        }
        out.push(r.monic(&g));
    }
    out.sort();
    out.dedup();
    out
}

/// Terms of degree `< c`.
fn truncate_below<F: Field>(r: &PolyRing<F>, p: &Polynomial<F>, c: u32) -> Polynomial<F> {
    let terms = p.terms().iter().filter(|t| t.0.degree() < c).cloned().collect();
    r.from_terms(terms)
}

/// Equality after localization at the origin: each generator of one ideal lies in the
/// other, tested as `(B : a) + m = (1)`.
pub fn localized_equal<F: Field>(a: &IdealHandle<F>, b: &IdealHandle<F>) -> Result<bool> {
    if a.ring.mode != Mode::Local {
        return Err(AlgebraError::WrongMode { operation: "localized_equal", required: "local" });
    }
    Ok(locally_contained(a, b) && locally_contained(b, a))
}

/// `a ⊆ b` after localization.
fn locally_contained<F: Field>(a: &IdealHandle<F>, b: &IdealHandle<F>) -> bool {
    let r = &a.ring.ring;
    a.full_gens().iter().all(|g| {
        if b.gb.contains(g) {
            return true;
        }
        let colon = groebner::colon(r, b.gb.basis(), core::slice::from_ref(g));
        colon.iter().any(|h| h.constant_term().is_some())
    })
}
