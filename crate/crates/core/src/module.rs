//! Submodules of graded free modules: Groebner bases, syzygies, Schreyer
//! resolutions and graded Betti numbers.
//!
//! A vector is a list of terms `c·m·e_i` sorted descending in a [`TermOrder`].
//! At level 0 the order compares the weighted degree `deg m + shift_i`, then
//! degrevlex, then the component (smaller index is larger). Each later level
//! carries the Schreyer order induced by the lead terms of the level below.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::hilbert;
use crate::linalg::rank_of_rows;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

pub type VTerm<F> = (Monomial, usize, <F as Field>::Elem);

#[derive(Clone, Debug, PartialEq, Eq)]
struct FrameComp {
    total: Monomial,
    base: usize,
    path: Vec<u32>,
}

/// A module monomial order on a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    shifts: Vec<i32>,
    frame: Option<Vec<FrameComp>>,
}

impl TermOrder {
    /// Weighted-degree order on `S^r` with generator degrees `shifts`.
    pub fn graded(shifts: Vec<i32>) -> Self {
        TermOrder { shifts, frame: None }
    }

    #[inline]
    fn cmp0(&self, m1: &Monomial, c1: usize, m2: &Monomial, c2: usize) -> Ordering {
        let d1 = m1.degree() as i32 + self.shifts[c1];
        let d2 = m2.degree() as i32 + self.shifts[c2];
        d1.cmp(&d2).then_with(|| MonomialOrder::DegRevLex.cmp(m1, m2)).then_with(|| c2.cmp(&c1))
    }

    pub fn cmp(&self, m1: &Monomial, c1: usize, m2: &Monomial, c2: usize) -> Ordering {
        let Some(fr) = &self.frame else {
            return self.cmp0(m1, c1, m2, c2);
        };
        let (a, b) = (&fr[c1], &fr[c2]);
        let d1 = m1.degree() as i32 + a.total.degree() as i32 + self.shifts[a.base];
        let d2 = m2.degree() as i32 + b.total.degree() as i32 + self.shifts[b.base];
        if d1 != d2 {
            return d1.cmp(&d2);
        }
        self.cmp0(&m1.mul(&a.total), a.base, &m2.mul(&b.total), b.base).then_with(|| {
            for (x, y) in a.path.iter().zip(&b.path) {
                if x != y {
                    return y.cmp(x);
                }
            }
            c2.cmp(&c1)
        })
    }

    /// Degree of the basis vector `e_c`.
    pub fn degree(&self, c: usize) -> i32 {
        match &self.frame {
            None => self.shifts[c],
            Some(fr) => fr[c].total.degree() as i32 + self.shifts[fr[c].base],
        }
    }

    pub fn rank(&self) -> usize {
        match &self.frame {
            None => self.shifts.len(),
            Some(fr) => fr.len(),
        }
    }

    /// Schreyer order on the free module whose basis maps to `leads` (lead terms in `self`).
    fn schreyer(&self, leads: &[(Monomial, usize)]) -> TermOrder {
        let frame = leads
            .iter()
            .map(|(m, c)| match &self.frame {
                None => FrameComp { total: m.clone(), base: *c, path: Vec::new() },
                Some(fr) => {
                    let below = &fr[*c];
                    let mut path = below.path.clone();
                    path.push(*c as u32);
                    FrameComp { total: m.mul(&below.total), base: below.base, path }
                }
            })
            .collect();
        TermOrder { shifts: self.shifts.clone(), frame: Some(frame) }
    }
}

/// Sorts and combines raw terms.
pub fn normalize<F: Field>(field: &F, order: &TermOrder, mut terms: Vec<VTerm<F>>) -> Vec<VTerm<F>> {
    terms.sort_by(|a, b| order.cmp(&b.0, b.1, &a.0, a.1));
    let mut out: Vec<VTerm<F>> = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(last) = out.last_mut() {
            if last.0 == t.0 && last.1 == t.1 {
                last.2 = field.add(&last.2, &t.2);
                continue;
            }
        }
        out.push(t);
    }
    out.retain(|t| !field.is_zero(&t.2));
    out
}

/// `a - c·m·b`, both sorted in `order`.
fn sub_scaled<F: Field>(
    field: &F,
    order: &TermOrder,
    a: &[VTerm<F>],
    b: &[VTerm<F>],
    m: &Monomial,
    c: &F::Elem,
) -> Vec<VTerm<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<VTerm<F>> = b.first().map(|t| (t.0.mul(m), t.1, field.mul(&t.2, c)));
    while i < a.len() || bj.is_some() {
        let take_a = match &bj {
            None => true,
            Some(t) => i < a.len() && order.cmp(&a[i].0, a[i].1, &t.0, t.1) != Ordering::Less,
        };
        let equal = take_a && bj.as_ref().is_some_and(|t| a[i].0 == t.0 && a[i].1 == t.1);
        if equal {
            let t = bj.take().unwrap();
            let v = field.sub(&a[i].2, &t.2);
            if !field.is_zero(&v) {
                out.push((t.0, t.1, v));
            }
            i += 1;
        } else if take_a {
            out.push(a[i].clone());
            i += 1;
            continue;
        } else {
            let t = bj.take().unwrap();
            out.push((t.0, t.1, field.neg(&t.2)));
        }
        j += 1;
        bj = b.get(j).map(|t| (t.0.mul(m), t.1, field.mul(&t.2, c)));
    }
    out
}

fn scale<F: Field>(field: &F, v: &[VTerm<F>], c: &F::Elem) -> Vec<VTerm<F>> {
    v.iter().map(|t| (t.0.clone(), t.1, field.mul(&t.2, c))).collect()
}

/// Lead terms `(mask, monomial, component, index)` for divisor lookup.
#[derive(Clone, Debug, Default)]
struct ModIndex {
    entries: Vec<(u64, Monomial, usize, usize)>,
}

impl ModIndex {
    fn push(&mut self, m: &Monomial, c: usize, idx: usize) {
        self.entries.push((m.support_mask(), m.clone(), c, idx));
    }

    fn find(&self, m: &Monomial, c: usize) -> Option<usize> {
        let mask = m.support_mask();
        self.entries.iter().find(|e| e.2 == c && e.0 & !mask == 0 && e.1.divides(m)).map(|e| e.3)
    }
}

/// Reduces `terms` by the monic `reducers`; `on_step(k, q, c)` records each subtraction `c·q·reducers[k]`.
fn reduce_vec<F: Field>(
    field: &F,
    order: &TermOrder,
    mut terms: Vec<VTerm<F>>,
    reducers: &[Vec<VTerm<F>>],
    index: &ModIndex,
    full: bool,
    mut on_step: impl FnMut(usize, &Monomial, &F::Elem),
) -> Vec<VTerm<F>> {
    let mut done = 0;
    while done < terms.len() {
        let (m, c, coef) = &terms[done];
        let Some(k) = index.find(m, *c) else {
            if !full {
                break;
            }
            done += 1;
            continue;
        };
        let g = &reducers[k];
        let q = m.div(&g[0].0).unwrap();
        let coef = coef.clone();
        on_step(k, &q, &coef);
        let rest = sub_scaled(field, order, &terms[done + 1..], &g[1..], &q, &coef);
        terms.truncate(done);
        terms.extend(rest);
    }
    terms
}

struct MPair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: i32,
}

/// Module Buchberger with optional traces (coordinates in the input generators).
struct ModEngine<'a, F: Field> {
    field: &'a F,
    order: &'a TermOrder,
    trace_order: TermOrder,
    vecs: Vec<Vec<VTerm<F>>>,
    traces: Vec<Vec<VTerm<F>>>,
    sugar: Vec<i32>,
    active: Vec<bool>,
    index: ModIndex,
    pairs: Vec<MPair>,
    track: bool,
}

impl<'a, F: Field> ModEngine<'a, F> {
    fn new(field: &'a F, order: &'a TermOrder, ninputs: usize, track: bool) -> Self {
        ModEngine {
            field,
            order,
            trace_order: TermOrder::graded(vec![0; ninputs]),
            vecs: Vec::new(),
            traces: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            index: ModIndex::default(),
            pairs: Vec::new(),
            track,
        }
    }

    fn wdeg(&self, t: &VTerm<F>) -> i32 {
        t.0.degree() as i32 + self.order.degree(t.1)
    }

    fn insert(&mut self, v: Vec<VTerm<F>>, trace: Vec<VTerm<F>>, sugar: i32) {
        let mut trace = trace;
        let mut sugar = sugar;
        let f = self.field;
        let tord = &self.trace_order;
        let traces = &self.traces;
        let sugars = &self.sugar;
        let track = self.track;
        let h = reduce_vec(f, self.order, v, &self.vecs, &self.index, true, |k, q, c| {
            sugar = sugar.max(sugars[k] + q.degree() as i32);
            if track {
                trace = sub_scaled(f, tord, &trace, &traces[k], q, c);
            }
        });
        if h.is_empty() {
            return;
        }
        let inv = f.inv(&h[0].2).unwrap();
        let h = scale(f, &h, &inv);
        let trace = if track { scale(f, &trace, &inv) } else { trace };
        self.update(h, trace, sugar);
    }

    fn update(&mut self, h: Vec<VTerm<F>>, trace: Vec<VTerm<F>>, sugar: i32) {
        let hi = self.vecs.len();
        let (hl, hc) = (h[0].0.clone(), h[0].1);
        let cands: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g] && self.vecs[g][0].1 == hc)
            .map(|g| (g, hl.lcm(&self.vecs[g][0].0)))
            .collect();
        let mut keep = vec![false; cands.len()];
        for a in 0..cands.len() {
            let la = &cands[a].1;
            let dominated = (a + 1..cands.len()).any(|b| cands[b].1.divides(la))
                || (0..a).any(|b| keep[b] && cands[b].1.divides(la));
            keep[a] = !dominated;
        }
        let vecs = &self.vecs;
        self.pairs.retain(|p| {
            if p.comp != hc || !hl.divides(&p.lcm) {
                return true;
            }
            hl.lcm(&vecs[p.i][0].0) == p.lcm || hl.lcm(&vecs[p.j][0].0) == p.lcm
        });
        let hdeg = hl.degree() as i32;
        for (k, (g, lcm)) in cands.into_iter().enumerate() {
            if !keep[k] {
                continue;
            }
            let gdeg = self.vecs[g][0].0.degree() as i32;
            let l = lcm.degree() as i32;
            let s = (self.sugar[g] + l - gdeg).max(sugar + l - hdeg);
            self.pairs.push(MPair { i: g, j: hi, lcm, comp: hc, sugar: s });
        }
        for g in 0..hi {
            if self.active[g] && self.vecs[g][0].1 == hc && hl.divides(&self.vecs[g][0].0) {
                self.active[g] = false;
            }
        }
        self.vecs.push(h);
        self.traces.push(trace);
        self.sugar.push(sugar);
        self.active.push(true);
        let mut index = ModIndex::default();
        for g in 0..self.vecs.len() {
            if self.active[g] {
                index.push(&self.vecs[g][0].0, self.vecs[g][0].1, g);
            }
        }
        self.index = index;
    }

    fn run(&mut self) {
        while !self.pairs.is_empty() {
            let mut best = 0;
            for k in 1..self.pairs.len() {
                let (a, b) = (&self.pairs[k], &self.pairs[best]);
                let better = match a.sugar.cmp(&b.sugar) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => self.order.cmp(&a.lcm, a.comp, &b.lcm, b.comp) == Ordering::Less,
                };
                if better {
                    best = k;
                }
            }
            let p = self.pairs.swap_remove(best);
            let f = self.field;
            let one = f.one();
            let qi = p.lcm.div(&self.vecs[p.i][0].0).unwrap();
            let qj = p.lcm.div(&self.vecs[p.j][0].0).unwrap();
            let a: Vec<VTerm<F>> = self.vecs[p.i].iter().map(|t| (t.0.mul(&qi), t.1, t.2.clone())).collect();
            let s = sub_scaled(f, self.order, &a, &self.vecs[p.j], &qj, &one);
            let tr = if self.track {
                let ta: Vec<VTerm<F>> = self.traces[p.i].iter().map(|t| (t.0.mul(&qi), t.1, t.2.clone())).collect();
                sub_scaled(f, &self.trace_order, &ta, &self.traces[p.j], &qj, &one)
            } else {
                Vec::new()
            };
            self.insert(s, tr, p.sugar);
        }
    }

    /// Active elements sorted by ascending lead, tail-reduced, with their traces.
    fn finish(self) -> (Vec<Vec<VTerm<F>>>, Vec<Vec<VTerm<F>>>) {
        let order = self.order;
        let mut ids: Vec<usize> = (0..self.vecs.len()).filter(|&g| self.active[g]).collect();
        ids.sort_by(|&a, &b| {
            let (x, y) = (&self.vecs[a][0], &self.vecs[b][0]);
            order.cmp(&x.0, x.1, &y.0, y.1)
        });
        let basis: Vec<Vec<VTerm<F>>> = ids.iter().map(|&g| self.vecs[g].clone()).collect();
        let traces: Vec<Vec<VTerm<F>>> = ids.iter().map(|&g| self.traces[g].clone()).collect();
        let mut index = ModIndex::default();
        for (k, v) in basis.iter().enumerate() {
            index.push(&v[0].0, v[0].1, k);
        }
        let mut out_b = Vec::with_capacity(basis.len());
        let mut out_t = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let mut trace = traces[k].clone();
            let f = self.field;
            let tord = &self.trace_order;
            let track = self.track;
            let tail = reduce_vec(f, order, basis[k][1..].to_vec(), &basis, &index, true, |j, q, c| {
                if track {
                    trace = sub_scaled(f, tord, &trace, &traces[j], q, c);
                }
            });
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(basis[k][0].clone());
            v.extend(tail);
            out_b.push(v);
            out_t.push(trace);
        }
        (out_b, out_t)
    }
}

/// Reduced Groebner basis of a submodule of a free module.
#[derive(Clone, Debug)]
pub struct ModuleGb<F: Field> {
    field: F,
    order: TermOrder,
    basis: Vec<Vec<VTerm<F>>>,
    traces: Vec<Vec<VTerm<F>>>,
}

impl<F: Field> ModuleGb<F> {
    pub fn compute(field: &F, order: &TermOrder, gens: &[Vec<VTerm<F>>], track: bool) -> Self {
        let mut e = ModEngine::new(field, order, gens.len(), track);
        let mut ids: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_empty()).collect();
        ids.sort_by_key(|&i| gens[i].iter().map(|t| t.0.degree() as i32 + order.degree(t.1)).max().unwrap_or(0));
        for i in ids {
            let v = normalize(field, order, gens[i].clone());
            if v.is_empty() {
                continue;
            }
            let s = v.iter().map(|t| e.wdeg(t)).max().unwrap();
            let tr = if track { vec![(Monomial::one(v[0].0.nvars()), i, field.one())] } else { Vec::new() };
            e.insert(v, tr, s);
            e.run();
        }
        let (basis, traces) = e.finish();
        ModuleGb { field: field.clone(), order: order.clone(), basis, traces }
    }

    pub fn basis(&self) -> &[Vec<VTerm<F>>] {
        &self.basis
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    fn index(&self) -> ModIndex {
        let mut index = ModIndex::default();
        for (k, v) in self.basis.iter().enumerate() {
            index.push(&v[0].0, v[0].1, k);
        }
        index
    }

    pub fn reduce(&self, v: Vec<VTerm<F>>) -> Vec<VTerm<F>> {
        let v = normalize(&self.field, &self.order, v);
        reduce_vec(&self.field, &self.order, v, &self.basis, &self.index(), true, |_, _, _| {})
    }

    /// Initial monomial ideal in each component.
    pub fn leads_by_component(&self) -> BTreeMap<usize, Vec<Monomial>> {
        let mut out: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
        for v in &self.basis {
            out.entry(v[0].1).or_default().push(v[0].0.clone());
        }
        out
    }
}

/// Schreyer syzygies of a monic Groebner basis `elems` (in `order`), with terms in the
/// induced order `next`. Only pairs whose lead quotient is a minimal generator are kept.
fn schreyer_syzygies<F: Field>(
    field: &F,
    order: &TermOrder,
    next: &TermOrder,
    elems: &[Vec<VTerm<F>>],
) -> Result<Vec<Vec<VTerm<F>>>> {
    let mut index = ModIndex::default();
    for (k, v) in elems.iter().enumerate() {
        index.push(&v[0].0, v[0].1, k);
    }
    let one = field.one();
    let mut out = Vec::new();
    for i in 0..elems.len() {
        let (li, ci) = (&elems[i][0].0, elems[i][0].1);
        let cands: Vec<(usize, Monomial)> =
            (i + 1..elems.len()).filter(|&j| elems[j][0].1 == ci).map(|j| (j, elems[j][0].0.lcm(li).div(li).unwrap())).collect();
        for (a, (j, mji)) in cands.iter().enumerate() {
            let redundant = cands
                .iter()
                .enumerate()
                .any(|(b, (_, other))| b != a && other.divides(mji) && (other != mji || b < a));
            if redundant {
                continue;
            }
            let lj = &elems[*j][0].0;
            let mij = mji.mul(li).div(lj).unwrap();
            let a_vec: Vec<VTerm<F>> = elems[i].iter().map(|t| (t.0.mul(mji), t.1, t.2.clone())).collect();
            let s = sub_scaled(field, order, &a_vec, &elems[*j], &mij, &one);
            let mut sigma: Vec<VTerm<F>> = vec![(mji.clone(), i, one.clone()), (mij, *j, field.neg(&one))];
            let rest = reduce_vec(field, order, s, elems, &index, false, |k, q, c| {
                sigma.push((q.clone(), k, field.neg(c)));
            });
            if !rest.is_empty() {
                return Err(AlgebraError::Inconsistent(String::from("S-vector of a Groebner basis did not reduce to zero")));
            }
            out.push(normalize(field, next, sigma));
        }
    }
    Ok(out)
}

/// A graded free-module presentation `coker(F_1 -> F_0)`, `F_0 = ⊕ S(-d_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModulePresentation<F: Field> {
    ring: PolyRing<F>,
    degrees: Vec<i32>,
    relations: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> GradedModulePresentation<F> {
    /// Checks that each relation is homogeneous for the generator degrees.
    pub fn new(ring: PolyRing<F>, degrees: Vec<i32>, relations: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        for (k, rel) in relations.iter().enumerate() {
            if rel.len() != degrees.len() {
                return Err(AlgebraError::InvalidArgument(alloc::format!(
                    "relation {} has {} entries for {} generators",
                    k,
                    rel.len(),
                    degrees.len()
                )));
            }
            let mut deg: Option<i32> = None;
            for (i, p) in rel.iter().enumerate() {
                ring.check(p)?;
                for t in p.terms() {
                    let d = t.0.degree() as i32 + degrees[i];
                    if *deg.get_or_insert(d) != d {
                        return Err(AlgebraError::NotHomogeneous(alloc::format!("relation {}", k)));
                    }
                }
            }
        }
        Ok(GradedModulePresentation { ring, degrees, relations })
    }

    /// The cyclic module `S/(gens)`.
    pub fn cyclic(ring: PolyRing<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        let rels = gens.iter().filter(|g| !g.is_zero()).map(|g| vec![g.clone()]).collect();
        Self::new(ring, vec![0], rels)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn relations(&self) -> &[Vec<Polynomial<F>>] {
        &self.relations
    }

    /// Twist: every generator degree shifted by `j` (the module `M(-j)`).
    pub fn shifted(&self, j: i32) -> Self {
        let degrees = self.degrees.iter().map(|d| d + j).collect();
        GradedModulePresentation { ring: self.ring.clone(), degrees, relations: self.relations.clone() }
    }

    fn relation_vectors(&self) -> Vec<Vec<VTerm<F>>> {
        self.relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .enumerate()
                    .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| (m.clone(), i, c.clone())))
                    .collect()
            })
            .collect()
    }

    /// Numerator of the Hilbert series of the module over `(1-t)^n`, as `(lowest degree, coefficients)`.
    pub fn hilbert_numerator(&self) -> (i32, Vec<i64>) {
        let order = TermOrder::graded(self.degrees.clone());
        let gb = ModuleGb::compute(self.ring.field(), &order, &self.relation_vectors(), false);
        let leads = gb.leads_by_component();
        let mut acc: BTreeMap<i32, i64> = BTreeMap::new();
        for (c, d) in self.degrees.iter().enumerate() {
            let gens = leads.get(&c).cloned().unwrap_or_default();
            for (k, v) in hilbert::hilbert_numerator(&gens).into_iter().enumerate() {
                *acc.entry(d + k as i32).or_default() += v;
            }
        }
        laurent(acc)
    }
}

fn laurent(acc: BTreeMap<i32, i64>) -> (i32, Vec<i64>) {
    let nz: Vec<(i32, i64)> = acc.into_iter().filter(|e| e.1 != 0).collect();
    let Some(&(lo, _)) = nz.first() else {
        return (0, Vec::new());
    };
    let hi = nz.last().unwrap().0;
    let mut v = vec![0i64; (hi - lo + 1) as usize];
    for (d, c) in nz {
        v[(d - lo) as usize] = c;
    }
    (lo, v)
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i32), u64)>) -> Self {
        BettiTable { entries: entries.into_iter().filter(|e| e.1 != 0).collect() }
    }

    pub fn get(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β)` in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i32), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|e| e.0 .0 == i).map(|e| e.1).sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `max{j - i : β_{i,j} != 0}`; `None` for the zero module.
    pub fn regularity(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| j - i as i32).max()
    }

    /// `Σ_i (-1)^i Σ_j β_{i,j} t^j` as `(lowest degree, coefficients)`.
    pub fn hilbert_numerator(&self) -> (i32, Vec<i64>) {
        let mut acc: BTreeMap<i32, i64> = BTreeMap::new();
        for (&(i, j), &b) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            *acc.entry(j).or_default() += s * b as i64;
        }
        laurent(acc)
    }

    /// Triangular text layout: columns are homological degrees, rows are `j - i`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let Some(pd) = self.projective_dimension() else {
            s.push_str("zero module\n");
            return s;
        };
        let rows: Vec<i32> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i as i32).min().unwrap();
            let hi = self.regularity().unwrap();
            (lo..=hi).collect()
        };
        let width = self
            .entries
            .values()
            .map(|v| v.to_string_len())
            .chain((0..=pd).map(|i| self.total(i).to_string_len()))
            .max()
            .unwrap_or(1);
        let label_width = rows.iter().map(|r| r.to_string_len() + 1).max().unwrap_or(2).max(6);
        let _ = write!(s, "{:>w$}", "", w = label_width);
        for i in 0..=pd {
            let _ = write!(s, " {:>w$}", i, w = width);
        }
        s.push('\n');
        let _ = write!(s, "{:>w$}", "total:", w = label_width);
        for i in 0..=pd {
            let _ = write!(s, " {:>w$}", self.total(i), w = width);
        }
        s.push('\n');
        for r in rows {
            let _ = write!(s, "{:>w$}", alloc::format!("{}:", r), w = label_width);
            for i in 0..=pd {
                let b = self.get(i, r + i as i32);
                if b == 0 {
                    let _ = write!(s, " {:>w$}", ".", w = width);
                } else {
                    let _ = write!(s, " {:>w$}", b, w = width);
                }
            }
            s.push('\n');
        }
        s
    }
}

trait DigitLen {
    fn to_string_len(&self) -> usize;
}

impl DigitLen for u64 {
    fn to_string_len(&self) -> usize {
        alloc::format!("{}", self).len()
    }
}

impl DigitLen for i32 {
    fn to_string_len(&self) -> usize {
        alloc::format!("{}", self).len()
    }
}

impl DigitLen for usize {
    fn to_string_len(&self) -> usize {
        alloc::format!("{}", self).len()
    }
}

/// One level of a Schreyer frame: basis degrees and the differential into the level below.
#[derive(Clone, Debug)]
pub struct FrameLevel<F: Field> {
    pub degrees: Vec<i32>,
    /// Images of the basis vectors (empty at level 0).
    pub differential: Vec<Vec<VTerm<F>>>,
}

/// A (generally non-minimal) graded free resolution from Schreyer's construction.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    field: F,
    levels: Vec<FrameLevel<F>>,
    initial: BTreeMap<usize, Vec<Monomial>>,
    base_degrees: Vec<i32>,
}

/// Stable sort within each lead component by descending exponent of `var`, which keeps the
/// leads of the next level free of that variable.
fn eisenbud_sort<F: Field>(elems: &mut [Vec<VTerm<F>>], var: Option<usize>) {
    elems.sort_by(|a, b| {
        a[0].1.cmp(&b[0].1).then_with(|| match var {
            Some(v) => b[0].0.exponent(v).cmp(&a[0].0.exponent(v)),
            None => Ordering::Equal,
        })
    });
}

impl<F: Field> Resolution<F> {
    pub fn compute(pres: &GradedModulePresentation<F>) -> Result<Self> {
        let field = pres.ring().field().clone();
        let n = pres.ring().nvars();
        let order0 = TermOrder::graded(pres.degrees().to_vec());
        let gb = ModuleGb::compute(&field, &order0, &pres.relation_vectors(), false);
        let initial = gb.leads_by_component();
        let mut levels = vec![FrameLevel { degrees: pres.degrees().to_vec(), differential: Vec::new() }];
        let mut order = order0;
        let mut elems: Vec<Vec<VTerm<F>>> = gb.basis().to_vec();
        let mut k = 1;
        while !elems.is_empty() {
            eisenbud_sort::<F>(&mut elems, if k <= n { Some(k - 1) } else { None });
            let leads: Vec<(Monomial, usize)> = elems.iter().map(|v| (v[0].0.clone(), v[0].1)).collect();
            let next = order.schreyer(&leads);
            let degrees = (0..elems.len()).map(|c| next.degree(c)).collect();
            let syz = schreyer_syzygies(&field, &order, &next, &elems)?;
            levels.push(FrameLevel { degrees, differential: elems });
            elems = syz;
            order = next;
            k += 1;
            if k > n + 2 {
                return Err(AlgebraError::Inconsistent(String::from("Schreyer frame longer than n + 1")));
            }
        }
        Ok(Resolution { field, levels, initial, base_degrees: pres.degrees().to_vec() })
    }

    pub fn levels(&self) -> &[FrameLevel<F>] {
        &self.levels
    }

    /// Ranks of the frame: `Σ_j f_{i,j}` per level.
    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.degrees.len()).collect()
    }

    /// Rank of the constant part of the differential from level `i` in internal degree `j`.
    fn constant_rank(&self, i: usize, j: i32) -> usize {
        if i == 0 || i >= self.levels.len() {
            return 0;
        }
        let f = &self.field;
        let lvl = &self.levels[i];
        let mut rows: Vec<BTreeMap<usize, F::Elem>> = Vec::new();
        for (k, v) in lvl.differential.iter().enumerate() {
            if lvl.degrees[k] != j {
                continue;
            }
            let row: BTreeMap<usize, F::Elem> = v.iter().filter(|t| t.0.is_one()).map(|t| (t.1, t.2.clone())).collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
        rank_of_rows(f, rows)
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = Vec::new();
        for (i, lvl) in self.levels.iter().enumerate() {
            let mut counts: BTreeMap<i32, u64> = BTreeMap::new();
            for &d in &lvl.degrees {
                *counts.entry(d).or_default() += 1;
            }
            for (j, fij) in counts {
                let b = fij as i64 - self.constant_rank(i, j) as i64 - self.constant_rank(i + 1, j) as i64;
                debug_assert!(b >= 0);
                entries.push(((i, j), b.max(0) as u64));
            }
        }
        BettiTable::from_entries(entries)
    }

    /// Hilbert series numerator of the module from its initial submodule.
    pub fn module_hilbert_numerator(&self) -> (i32, Vec<i64>) {
        let mut acc: BTreeMap<i32, i64> = BTreeMap::new();
        for (c, d) in self.base_degrees.iter().enumerate() {
            let gens = self.initial.get(&c).cloned().unwrap_or_default();
            for (k, v) in hilbert::hilbert_numerator(&gens).into_iter().enumerate() {
                *acc.entry(d + k as i32).or_default() += v;
            }
        }
        laurent(acc)
    }

    /// The alternating sum of the Betti numbers and of the frame ranks both reproduce the
    /// Hilbert series numerator of the module.
    pub fn hilbert_identity_holds(&self) -> bool {
        let target = self.module_hilbert_numerator();
        let mut frame: BTreeMap<i32, i64> = BTreeMap::new();
        for (i, lvl) in self.levels.iter().enumerate() {
            let s = if i % 2 == 0 { 1 } else { -1 };
            for &d in &lvl.degrees {
                *frame.entry(d).or_default() += s;
            }
        }
        laurent(frame) == target && self.betti().hilbert_numerator() == target
    }
}

pub fn minimal_free_resolution<F: Field>(pres: &GradedModulePresentation<F>) -> Result<BettiTable> {
    Ok(Resolution::compute(pres)?.betti())
}

/// `max{j - i}` of the Betti table; `None` for the zero module.
pub fn regularity<F: Field>(pres: &GradedModulePresentation<F>) -> Result<Option<i32>> {
    Ok(minimal_free_resolution(pres)?.regularity())
}

/// Generators of the syzygies `{a : Σ a_j v_j = 0}` of vectors `v_j ∈ S^r`.
///
/// `shifts` are the degrees of the components of `S^r` (zeros if `None`).
pub fn syzygy_basis<F: Field>(
    ring: &PolyRing<F>,
    tuple: &[Vec<Polynomial<F>>],
    shifts: Option<&[i32]>,
) -> Vec<Vec<Polynomial<F>>> {
    let f = ring.field();
    let s = tuple.len();
    if s == 0 {
        return Vec::new();
    }
    let r = tuple[0].len();
    let order = TermOrder::graded(shifts.map(|x| x.to_vec()).unwrap_or_else(|| vec![0; r]));
    let vecs: Vec<Vec<VTerm<F>>> = tuple
        .iter()
        .map(|v| {
            v.iter().enumerate().flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| (m.clone(), i, c.clone()))).collect()
        })
        .collect();
    let gb = ModuleGb::compute(f, &order, &vecs, true);
    let elems = gb.basis();
    let traces = &gb.traces;
    let leads: Vec<(Monomial, usize)> = elems.iter().map(|v| (v[0].0.clone(), v[0].1)).collect();
    let next = order.schreyer(&leads);
    let trace_order = TermOrder::graded(vec![0; s]);
    let mut out: Vec<Vec<VTerm<F>>> = Vec::new();

    let push_via_traces = |sigma: &[VTerm<F>], out: &mut Vec<Vec<VTerm<F>>>, extra: Vec<VTerm<F>>| {
        let mut acc: Vec<VTerm<F>> = extra;
        for (m, k, c) in sigma {
            for (tm, tc, tv) in &traces[*k] {
                acc.push((tm.mul(m), *tc, f.mul(c, tv)));
            }
        }
        let v = normalize(f, &trace_order, acc);
        if !v.is_empty() {
            out.push(v);
        }
    };

    match schreyer_syzygies(f, &order, &next, elems) {
        Ok(sigmas) => {
            for sg in &sigmas {
                push_via_traces(sg, &mut out, Vec::new());
            }
        }
        Err(_) => unreachable!("module Groebner basis S-vectors reduce to zero"),
    }
    let index = gb.index();
    for (j, v) in vecs.iter().enumerate() {
        let v = normalize(f, &order, v.clone());
        let mut quot: Vec<VTerm<F>> = Vec::new();
        let rest = reduce_vec(f, &order, v, elems, &index, false, |k, q, c| quot.push((q.clone(), k, c.clone())));
        debug_assert!(rest.is_empty());
        // e_j - Σ d_jk T_k
        let neg: Vec<VTerm<F>> = quot.into_iter().map(|(m, k, c)| (m, k, f.neg(&c))).collect();
        push_via_traces(&neg, &mut out, vec![(Monomial::one(ring.nvars()), j, f.one())]);
    }
    out.into_iter()
        .map(|v| {
            let mut cols: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); s];
            for (m, c, x) in v {
                cols[c].push((m, x));
            }
            cols.into_iter().map(|t| ring.from_terms(t)).collect()
        })
        .collect()
}

/// `Σ a_j v_j`, for checking syzygies.
pub fn combine<F: Field>(ring: &PolyRing<F>, coeffs: &[Polynomial<F>], tuple: &[Vec<Polynomial<F>>]) -> Vec<Polynomial<F>> {
    let r = tuple.first().map_or(0, |v| v.len());
    let mut acc = vec![ring.zero(); r];
    for (a, v) in coeffs.iter().zip(tuple) {
        for (slot, p) in acc.iter_mut().zip(v) {
            *slot = ring.add(slot, &ring.mul(a, p));
        }
    }
    acc
}
