//! Buchberger's algorithm, normal forms, and the ideal-level constructions
//! built on them (elimination, intersection, colon, component counts).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;
use crate::hilbert;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// Lead monomials with support masks, for quick divisor lookup.
#[derive(Clone, Debug, Default)]
pub(crate) struct DivisorIndex {
    entries: Vec<(u64, Monomial, usize)>,
}

impl DivisorIndex {
    pub(crate) fn push(&mut self, lead: &Monomial, idx: usize) {
        self.entries.push((lead.support_mask(), lead.clone(), idx));
    }

    pub(crate) fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        self.entries.retain(|e| keep(e.2));
    }

    #[inline]
    pub(crate) fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.entries.iter().find(|(lm, lead, _)| lm & !mask == 0 && lead.divides(m)).map(|e| e.2)
    }
}

/// Reduces `terms` by the monic polynomials `polys` indexed in `index`.
/// With `full == false` stops at the first irreducible term.
pub(crate) fn reduce_terms<F: Field>(
    ring: &PolyRing<F>,
    mut terms: Vec<(Monomial, F::Elem)>,
    polys: &[Polynomial<F>],
    index: &DivisorIndex,
    full: bool,
    mut sugar: Option<(&mut u32, &[u32])>,
) -> Vec<(Monomial, F::Elem)> {
    let f = ring.field();
    let mut done = 0;
    while done < terms.len() {
        let Some(k) = index.find(&terms[done].0) else {
            if !full {
                break;
            }
            done += 1;
            continue;
        };
        let g = &polys[k];
        let (m, c) = &terms[done];
        let q = m.div(g.lead_monomial().unwrap()).unwrap();
        if let Some((s, sugars)) = sugar.as_mut() {
            **s = (**s).max(sugars[k] + q.degree());
        }
        let scaled: Vec<(Monomial, F::Elem)> = g.terms()[1..].iter().map(|(t, x)| (t.mul(&q), f.mul(x, c))).collect();
        let merged = ring.merge(&terms[done + 1..], &scaled, true);
        terms.truncate(done);
        terms.extend(merged);
    }
    terms
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a, F: Field> {
    ring: &'a PolyRing<F>,
    polys: Vec<Polynomial<F>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    index: DivisorIndex,
    pairs: Vec<Pair>,
    unit: bool,
}

impl<'a, F: Field> Engine<'a, F> {
    fn new(ring: &'a PolyRing<F>) -> Self {
        Engine {
            ring,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            index: DivisorIndex::default(),
            pairs: Vec::new(),
            unit: false,
        }
    }

    fn lead(&self, i: usize) -> &Monomial {
        self.polys[i].lead_monomial().unwrap()
    }

    /// Adds an element of an already-known Groebner basis without generating pairs.
    fn seed(&mut self, p: Polynomial<F>) {
        let idx = self.polys.len();
        self.index.push(p.lead_monomial().unwrap(), idx);
        self.sugar.push(p.max_degree());
        self.polys.push(p);
        self.active.push(true);
    }

    fn reduce(&self, p: Polynomial<F>, sugar: &mut u32) -> Polynomial<F> {
        let terms = reduce_terms(self.ring, p.into_terms(), &self.polys, &self.index, true, Some((sugar, &self.sugar)));
        self.ring.monic(&Polynomial::from_sorted_terms(self.ring.nvars(), terms))
    }

    fn insert(&mut self, p: Polynomial<F>, sugar: u32) {
        if self.unit {
            return;
        }
        let mut sugar = sugar;
        let h = self.reduce(p, &mut sugar);
        if h.is_zero() {
            return;
        }
        if h.lead_monomial().unwrap().is_one() {
            self.unit = true;
            return;
        }
        self.update(h, sugar);
    }

    /// Gebauer-Moeller pair update for the new element `h`.
    fn update(&mut self, h: Polynomial<F>, sugar: u32) {
        let hi = self.polys.len();
        let hl = h.lead_monomial().unwrap().clone();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        let actives: Vec<usize> = (0..hi).filter(|&g| self.active[g]).collect();
        let cands: Vec<(usize, Monomial, bool)> = actives
            .iter()
            .map(|&g| {
                let gl = self.lead(g);
                (g, hl.lcm(gl), hl.is_coprime(gl))
            })
            .collect();

        // chain criterion among the new pairs; a coprime pair also kills every pair sharing its lcm
        let mut keep = vec![false; cands.len()];
        for a in 0..cands.len() {
            let la = &cands[a].1;
            let dominated = (a + 1..cands.len()).any(|b| cands[b].1.divides(la))
                || (0..a).any(|b| keep[b] && cands[b].1.divides(la));
            keep[a] = cands[a].2 || !dominated;
        }
        let mut new_pairs: Vec<Pair> = Vec::new();
        for (k, (g, lcm, coprime)) in cands.into_iter().enumerate() {
            if !keep[k] || coprime {
                continue;
            }
            let gl = self.lead(g);
            let s = (self.sugar[g] + lcm.degree() - gl.degree()).max(sugar + lcm.degree() - hl.degree());
            new_pairs.push(Pair { i: g, j: hi, lcm, sugar: s });
        }

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !hl.divides(&p.lcm) {
                return true;
            }
            let li = hl.lcm(polys[p.i].lead_monomial().unwrap());
            let lj = hl.lcm(polys[p.j].lead_monomial().unwrap());
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);

        for &g in &actives {
            if hl.divides(self.lead(g)) {
                self.active[g] = false;
            }
        }
        let active = &self.active;
        self.index.retain(|i| active[i]);
        self.index.push(&hl, hi);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => order.cmp(&a.lcm, &b.lcm) == Ordering::Less,
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Polynomial<F> {
        let (gi, gj) = (&self.polys[p.i], &self.polys[p.j]);
        let qi = p.lcm.div(gi.lead_monomial().unwrap()).unwrap();
        let qj = p.lcm.div(gj.lead_monomial().unwrap()).unwrap();
        let one = self.ring.field().one();
        let a = self.ring.mul_term(gi, &qi, &one);
        self.ring.sub_mul_term(&a, &qj, &one, gj)
    }

    fn run(&mut self) {
        while !self.unit {
            let Some(p) = self.select() else { break };
            let gi = &self.polys[p.i];
            let gj = &self.polys[p.j];
            if gi.is_monomial() && gj.is_monomial() {
                continue;
            }
            let s = self.spoly(&p);
            self.insert(s, p.sugar);
        }
    }

    fn finish(self) -> Vec<Polynomial<F>> {
        if self.unit {
            return vec![self.ring.one()];
        }
        let order = self.ring.order();
        let mut basis: Vec<Polynomial<F>> =
            self.polys.into_iter().zip(self.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
        basis.sort_by(|a, b| order.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
        interreduce(self.ring, basis)
    }
}

/// Tail-reduces a minimal basis (leads pairwise non-divisible, sorted ascending).
fn interreduce<F: Field>(ring: &PolyRing<F>, basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut index = DivisorIndex::default();
    for (i, g) in basis.iter().enumerate() {
        index.push(g.lead_monomial().unwrap(), i);
    }
    let mut out = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let mut terms = basis[i].terms().to_vec();
        let lead = terms.remove(0);
        let tail = reduce_terms(ring, terms, &basis, &index, true, None);
        let mut all = Vec::with_capacity(tail.len() + 1);
        all.push(lead);
        all.extend(tail);
        out.push(Polynomial::from_sorted_terms(ring.nvars(), all));
    }
    out
}

/// A reduced Groebner basis: monic, tail-reduced, sorted by ascending lead monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    basis: Vec<Polynomial<F>>,
    index: Vec<Monomial>,
}

impl<F: Field> GroebnerBasis<F> {
    /// Runs Buchberger's algorithm on `gens` in `ring`'s order.
    pub fn compute(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Self {
        let mut e = Engine::new(ring);
        let mut sorted: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| ring.adopt(g)).collect();
        sorted.sort_by(|a, b| a.max_degree().cmp(&b.max_degree()).then_with(|| a.len().cmp(&b.len())));
        for g in sorted {
            let s = g.max_degree();
            e.insert(g, s);
            e.run();
        }
        Self::from_reduced(ring.clone(), e.finish())
    }

    /// Groebner basis of `self + (gens)`, reusing `self` as already complete.
    pub fn extend(&self, gens: &[Polynomial<F>]) -> Self {
        if self.is_unit() {
            return self.clone();
        }
        let ring = &self.ring;
        let mut e = Engine::new(ring);
        for g in &self.basis {
            e.seed(g.clone());
        }
        let mut sorted: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| ring.adopt(g)).collect();
        sorted.sort_by(|a, b| a.max_degree().cmp(&b.max_degree()).then_with(|| a.len().cmp(&b.len())));
        for g in sorted {
            let s = g.max_degree();
            e.insert(g, s);
            e.run();
        }
        Self::from_reduced(ring.clone(), e.finish())
    }

    fn from_reduced(ring: PolyRing<F>, basis: Vec<Polynomial<F>>) -> Self {
        let index = basis.iter().map(|g| g.lead_monomial().unwrap().clone()).collect();
        GroebnerBasis { ring, basis, index }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leads(&self) -> &[Monomial] {
        &self.index
    }

    pub fn is_unit(&self) -> bool {
        self.index.first().is_some_and(|m| m.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    fn divisor_index(&self) -> DivisorIndex {
        let mut idx = DivisorIndex::default();
        for (i, m) in self.index.iter().enumerate() {
            idx.push(m, i);
        }
        idx
    }

    /// Fully reduced normal form of `p`.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let p = self.ring.adopt(p);
        let terms = reduce_terms(&self.ring, p.into_terms(), &self.basis, &self.divisor_index(), true, None);
        Polynomial::from_sorted_terms(self.ring.nvars(), terms)
    }

    /// Normal forms of many polynomials against one divisor index.
    pub fn normal_forms(&self, ps: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        let idx = self.divisor_index();
        ps.iter()
            .map(|p| {
                let terms = reduce_terms(&self.ring, self.ring.adopt(p).into_terms(), &self.basis, &idx, true, None);
                Polynomial::from_sorted_terms(self.ring.nvars(), terms)
            })
            .collect()
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_all(&self, ps: &[Polynomial<F>]) -> bool {
        self.normal_forms(ps).iter().all(|r| r.is_zero())
    }

    /// Same ideal; reduced bases are unique, so this is term-for-term comparison.
    pub fn same_ideal(&self, other: &GroebnerBasis<F>) -> bool {
        self.basis == other.basis
    }

    /// Numerator of the Hilbert series of `S/in(I)`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        hilbert::hilbert_numerator(&self.index)
    }

    /// Krull dimension of `S/I` from the initial ideal; `None` for the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        hilbert::max_independent_set(&self.index, self.ring.nvars())
    }

    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        (0..n).all(|i| self.index.iter().any(|m| m.exponent(i) > 0 && m.degree() == m.exponent(i) as u32))
    }

    /// Standard monomials of a zero-dimensional ideal, if there are at most `limit`.
    pub fn standard_monomials(&self, limit: usize) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        hilbert::standard_monomials(&self.index, self.ring.nvars(), limit)
    }

    pub fn display(&self) -> Vec<String> {
        self.basis.iter().map(|g| self.ring.display(g)).collect()
    }
}

/// Reduced Groebner basis of `(gens)` in `ring`'s order.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    GroebnerBasis::compute(ring, gens)
}

pub fn normal_form<F: Field>(p: &Polynomial<F>, g: &GroebnerBasis<F>) -> Polynomial<F> {
    g.normal_form(p)
}

/// `dim_K (S/I)_d` for a Groebner basis of a homogeneous ideal.
pub fn kdim_component<F: Field>(g: &GroebnerBasis<F>, d: u32) -> u64 {
    let num = g.hilbert_numerator();
    hilbert::series_coefficients(&num, g.ring().nvars(), d as usize)[d as usize] as u64
}

/// `dim_K S/(I + m^N)` with `m` the ideal of the origin; works for inhomogeneous `I`.
pub fn kbasis_modulo_power<F: Field>(g: &GroebnerBasis<F>, n: u32) -> u64 {
    let ring = g.ring();
    if n == 0 || g.is_unit() {
        return 0;
    }
    let power: Vec<Polynomial<F>> = Monomial::all_of_degree(ring.nvars(), n)
        .into_iter()
        .map(|m| ring.monomial(m, ring.field().one()))
        .collect();
    let deg_ring = ring.with_order(MonomialOrder::DegRevLex);
    let base = if ring.order() == MonomialOrder::DegRevLex {
        g.clone()
    } else {
        GroebnerBasis::compute(&deg_ring, g.basis())
    };
    let big = base.extend(&power);
    hilbert::count_standard_monomials(big.leads(), ring.nvars()).unwrap_or(0)
}

/// A ring with one extra variable `t` in front, under an order eliminating it.
fn with_leading_variable<F: Field>(ring: &PolyRing<F>) -> (PolyRing<F>, Vec<usize>) {
    let mut names = vec![String::from("_t")];
    names.extend(ring.names().iter().cloned());
    let big = PolyRing::new(ring.field().clone(), names, MonomialOrder::Elimination { block: 1 });
    let map: Vec<usize> = (1..=ring.nvars()).collect();
    (big, map)
}

/// Generators of `(gens) ∩ K[variables not in block]`, expressed in `ring`.
pub fn eliminate<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>], block: &[usize]) -> Vec<Polynomial<F>> {
    let n = ring.nvars();
    let mut is_elim = vec![false; n];
    for &b in block {
        is_elim[b] = true;
    }
    // eliminated variables first
    let mut map = vec![0usize; n];
    let mut inverse = Vec::with_capacity(n);
    for i in (0..n).filter(|&i| is_elim[i]) {
        map[i] = inverse.len();
        inverse.push(i);
    }
    for i in (0..n).filter(|&i| !is_elim[i]) {
        map[i] = inverse.len();
        inverse.push(i);
    }
    let names: Vec<String> = inverse.iter().map(|&i| ring.names()[i].clone()).collect();
    let k = block.len();
    let big = PolyRing::new(ring.field().clone(), names, MonomialOrder::Elimination { block: k });
    let moved: Vec<Polynomial<F>> = gens.iter().map(|g| ring.map_into(g, &big, &map)).collect();
    let gb = GroebnerBasis::compute(&big, &moved);
    gb.basis()
        .iter()
        .filter(|g| (0..k).all(|i| !g.involves_variable(i)))
        .map(|g| big.map_into(g, ring, &inverse))
        .collect()
}

/// Generators of `(a) ∩ (b)` via `t·A + (1-t)·B` and elimination of `t`.
pub fn intersect<F: Field>(ring: &PolyRing<F>, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let (big, map) = with_leading_variable(ring);
    let t = big.var(0);
    let one_minus_t = big.sub(&big.one(), &t);
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a {
        gens.push(big.mul(&t, &ring.map_into(g, &big, &map)));
    }
    for g in b {
        gens.push(big.mul(&one_minus_t, &ring.map_into(g, &big, &map)));
    }
    let gb = GroebnerBasis::compute(&big, &gens);
    let back: Vec<usize> = (0..big.nvars()).map(|i| i.saturating_sub(1)).collect();
    gb.basis().iter().filter(|g| !g.involves_variable(0)).map(|g| big.map_into(g, ring, &back)).collect()
}

/// Generators of `(a) : f` as `((a) ∩ (f)) / f`.
pub fn colon_element<F: Field>(ring: &PolyRing<F>, a: &[Polynomial<F>], f: &Polynomial<F>) -> Vec<Polynomial<F>> {
    if f.is_zero() {
        return vec![ring.one()];
    }
    intersect(ring, a, core::slice::from_ref(f))
        .iter()
        .map(|g| ring.divide_exact(g, f).expect("intersection with (f) is divisible by f"))
        .collect()
}

/// Generators of `(a) : (b)` as an intersection of element colons.
pub fn colon<F: Field>(ring: &PolyRing<F>, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut acc: Option<Vec<Polynomial<F>>> = None;
    let agb = GroebnerBasis::compute(ring, a);
    for f in b {
        if agb.contains(f) {
            continue;
        }
        let c = colon_element(ring, agb.basis(), f);
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(ring, &prev, &c),
        });
    }
    acc.unwrap_or_else(|| vec![ring.one()])
}

/// Largest number of standard monomials for which the linear-algebra colon is used.
pub const LINEAR_COLON_LIMIT: usize = 4000;

/// `A : (b)` for zero-dimensional `A`, as `A` plus the kernel of `v ↦ (NF(b·v))_b`
/// on the standard monomials. `None` if `A` is not zero-dimensional or too large.
pub fn colon_zero_dimensional<F: Field>(
    a: &GroebnerBasis<F>,
    b: &[Polynomial<F>],
    limit: usize,
) -> Option<GroebnerBasis<F>> {
    let ring = a.ring();
    let f = ring.field();
    let std = a.standard_monomials(limit)?;
    let dim = std.len();
    let pos: BTreeMap<&Monomial, usize> = std.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let bs: Vec<Polynomial<F>> = a.normal_forms(b).into_iter().filter(|x| !x.is_zero()).collect();
    if bs.is_empty() {
        return Some(GroebnerBasis::compute(ring, &[ring.one()]));
    }
    let idx = a.divisor_index();
    // rows: (sparse vector sorted by column, combination of standard monomials)
    type Sparse<E> = Vec<(usize, E)>;
    let mut pivots: BTreeMap<usize, (Sparse<F::Elem>, Sparse<F::Elem>)> = BTreeMap::new();
    let mut kernel: Vec<Polynomial<F>> = Vec::new();

    let sub_sparse = |x: &Sparse<F::Elem>, y: &Sparse<F::Elem>, c: &F::Elem| -> Sparse<F::Elem> {
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
                out.push(x[i].clone());
                i += 1;
            } else if i >= x.len() || y[j].0 < x[i].0 {
                out.push((y[j].0, f.neg(&f.mul(c, &y[j].1))));
                j += 1;
            } else {
                let v = f.sub(&x[i].1, &f.mul(c, &y[j].1));
                if !f.is_zero(&v) {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    };

    for (si, s) in std.iter().enumerate() {
        let mut row: Sparse<F::Elem> = Vec::new();
        for (bi, bp) in bs.iter().enumerate() {
            let prod = ring.mul_term(bp, s, &f.one());
            let nf = reduce_terms(ring, prod.into_terms(), a.basis(), &idx, true, None);
            for (m, c) in nf {
                row.push((bi * dim + pos[&m], c));
            }
        }
        row.sort_by_key(|e| e.0);
        let mut comb: Sparse<F::Elem> = vec![(si, f.one())];
        let mut cur = 0;
        while cur < row.len() {
            let col = row[cur].0;
            if let Some((prow, pcomb)) = pivots.get(&col) {
                let c = row[cur].1.clone();
                row = sub_sparse(&row, prow, &c);
                comb = sub_sparse(&comb, pcomb, &c);
            } else {
                cur += 1;
            }
        }
        if row.is_empty() {
            let terms = comb.into_iter().map(|(k, c)| (std[k].clone(), c)).collect();
            kernel.push(ring.from_terms(terms));
        } else {
            let inv = f.inv(&row[0].1).unwrap();
            let col = row[0].0;
            let row: Sparse<F::Elem> = row.into_iter().map(|(k, c)| (k, f.mul(&c, &inv))).collect();
            let comb: Sparse<F::Elem> = comb.into_iter().map(|(k, c)| (k, f.mul(&c, &inv))).collect();
            pivots.insert(col, (row, comb));
        }
    }
    Some(a.extend(&kernel))
}

/// Key for the Groebner basis cache: order, then the sorted monic generators.
type CacheKey<F> = (u8, usize, Vec<Polynomial<F>>);

/// Session-level memo from generator sets to reduced Groebner bases.
///
/// Values are canonical, so concurrent fills of the same key are harmless.
pub struct GbCache<F: Field> {
    map: spin::Mutex<BTreeMap<CacheKey<F>, Arc<GroebnerBasis<F>>>>,
}

impl<F: Field> Default for GbCache<F> {
    fn default() -> Self {
        GbCache { map: spin::Mutex::new(BTreeMap::new()) }
    }
}

impl<F: Field> core::fmt::Debug for GbCache<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "GbCache({} entries)", self.map.lock().len())
    }
}

impl<F: Field> GbCache<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn key(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> CacheKey<F> {
        let (tag, block) = match ring.order() {
            MonomialOrder::DegRevLex => (0, 0),
            MonomialOrder::Lex => (1, 0),
            MonomialOrder::Elimination { block } => (2, block),
        };
        let mut g: Vec<Polynomial<F>> = gens.iter().filter(|p| !p.is_zero()).map(|p| ring.monic(&ring.adopt(p))).collect();
        g.sort();
        g.dedup();
        (tag, block, g)
    }

    pub fn get_or_compute(&self, ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Arc<GroebnerBasis<F>> {
        let key = Self::key(ring, gens);
        if let Some(hit) = self.map.lock().get(&key) {
            if hit.ring().names() == ring.names() {
                return hit.clone();
            }
        }
        let gb = Arc::new(GroebnerBasis::compute(ring, &key.2));
        self.map.lock().insert(key, gb.clone());
        gb
    }
}

/// Human-readable summary used in error messages.
pub fn describe<F: Field>(g: &GroebnerBasis<F>) -> String {
    let parts = g.display();
    if parts.is_empty() {
        return "(0)".to_string();
    }
    alloc::format!("({})", parts.join(", "))
}
