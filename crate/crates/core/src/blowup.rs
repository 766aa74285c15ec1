//! Rees algebra of the maximal ideal, fiber cone, the module `gr_m(I)` and its regularity.
//!
//! `reg R(m, I)` is computed as the Betti-table regularity of `gr_m(I)` over `K[y]`
//! in the Rees grading, where `y_i` stands for `x_i t`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{self, GroebnerBasis};
use crate::module::{self, GradedModulePresentation, Resolution};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{IdealHandle, Mode, PresentedRing};

fn require_graded<F: Field>(r: &PresentedRing<F>, operation: &'static str) -> Result<()> {
    if r.mode() != Mode::Graded {
        return Err(AlgebraError::WrongMode { operation, required: "graded" });
    }
    Ok(())
}

/// Names `y1..yn` for the Rees variables, or `_y1..` when those clash.
fn rees_names(base: &[String]) -> Vec<String> {
    let n = base.len();
    for prefix in ["y", "_y", "__y"] {
        let names: Vec<String> = (1..=n).map(|i| format!("{}{}", prefix, i)).collect();
        if !names.iter().any(|y| base.contains(y)) {
            return names;
        }
    }
    (1..=n).map(|i| format!("_rees{}", i)).collect()
}

/// `R(m) = K[x, y]/L` with `y_i ↦ t x_i`.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    ring: PolyRing<F>,
    nx: usize,
    relations: Vec<Polynomial<F>>,
}

impl<F: Field> ReesPresentation<F> {
    /// `K[x_1..x_n, y_1..y_n]`.
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn base_nvars(&self) -> usize {
        self.nx
    }

    /// Reduced Groebner basis of `L`.
    pub fn relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    /// `K[y_1..y_n]`.
    pub fn y_ring(&self) -> PolyRing<F> {
        let names = self.ring.names()[self.nx..].to_vec();
        PolyRing::new(self.ring.field().clone(), names, MonomialOrder::DegRevLex)
    }

    /// Sets the `x` variables to zero and moves the result into `K[y]`.
    pub fn restrict_to_y(&self, p: &Polynomial<F>, y: &PolyRing<F>) -> Polynomial<F> {
        let n = self.nx;
        let kill: Vec<bool> = (0..2 * n).map(|i| i < n).collect();
        let q = self.ring.set_to_zero(p, &kill);
        let map: Vec<usize> = (0..2 * n).map(|i| i.saturating_sub(n)).collect();
        self.ring.map_into(&q, y, &map)
    }

    /// Checks that `y_i ↦ t x_i` sends every relation into `J K[x, t]`.
    pub fn substitution_holds(&self, r: &PresentedRing<F>) -> bool {
        let n = self.nx;
        let mut names: Vec<String> = r.ring().names().to_vec();
        names.push(String::from("_t"));
        let xt = PolyRing::new(r.field().clone(), names, MonomialOrder::DegRevLex);
        let jlift: Vec<Polynomial<F>> = r.defining().iter().map(|g| r.ring().map_into(g, &xt, &(0..n).collect::<Vec<_>>())).collect();
        let jgb = GroebnerBasis::compute(&xt, &jlift);
        let t = xt.var(n);
        self.relations.iter().all(|g| {
            let mut acc = xt.zero();
            for (m, c) in g.terms() {
                let mut term = xt.constant(c.clone());
                for i in 0..n {
                    let e = m.exponent(i) as u32;
                    if e > 0 {
                        term = xt.mul(&term, &xt.pow(&xt.var(i), e));
                    }
                    let ey = m.exponent(n + i) as u32;
                    if ey > 0 {
                        term = xt.mul(&term, &xt.pow(&xt.mul(&t, &xt.var(i)), ey));
                    }
                }
                acc = xt.add(&acc, &term);
            }
            jgb.contains(&acc)
        })
    }
}

/// Kernel of `K[x, y] -> (S/J)[m t]`, by eliminating `t` from `(y_i - t x_i) + J`.
pub fn rees_presentation<F: Field>(r: &PresentedRing<F>) -> Result<ReesPresentation<F>> {
    require_graded(r, "rees_presentation")?;
    let n = r.nvars();
    let field = r.field().clone();
    let base = r.ring().names().to_vec();
    let ynames = rees_names(&base);

    // K[t, x, y] with t first so a block order eliminates it
    let mut names = vec![String::from("_t")];
    names.extend(base.iter().cloned());
    names.extend(ynames.iter().cloned());
    let big = PolyRing::new(field.clone(), names, MonomialOrder::DegRevLex);
    let xmap: Vec<usize> = (1..=n).collect();
    let mut gens: Vec<Polynomial<F>> = r.defining_gb().basis().iter().map(|g| r.ring().map_into(g, &big, &xmap)).collect();
    let t = big.var(0);
    for i in 0..n {
        gens.push(big.sub(&big.var(1 + n + i), &big.mul(&t, &big.var(1 + i))));
    }
    let kept = groebner::eliminate(&big, &gens, &[0]);

    let mut xy_names = base;
    xy_names.extend(ynames);
    let xy = PolyRing::new(field, xy_names, MonomialOrder::DegRevLex);
    let back: Vec<usize> = (0..=2 * n).map(|i| i.saturating_sub(1)).collect();
    let lifted: Vec<Polynomial<F>> = kept.iter().map(|g| big.map_into(g, &xy, &back)).collect();
    let gb = GroebnerBasis::compute(&xy, &lifted);
    Ok(ReesPresentation { ring: xy, nx: n, relations: gb.basis().to_vec() })
}

/// The fiber cone `K[y]/L̄`, `L̄` the image of `L` under `x ↦ 0`; a copy of `gr_m(R)`.
pub fn fiber_cone_presentation<F: Field>(r: &PresentedRing<F>) -> Result<(PolyRing<F>, Vec<Polynomial<F>>)> {
    let rees = rees_presentation(r)?;
    Ok(fiber_cone_of(&rees))
}

fn fiber_cone_of<F: Field>(rees: &ReesPresentation<F>) -> (PolyRing<F>, Vec<Polynomial<F>>) {
    let y = rees.y_ring();
    let images: Vec<Polynomial<F>> =
        rees.relations.iter().map(|g| rees.restrict_to_y(g, &y)).filter(|g| !g.is_zero()).collect();
    let gb = GroebnerBasis::compute(&y, &images);
    let gens = gb.basis().to_vec();
    (y, gens)
}

/// Presentation of `gr_m(I) = ⊕ I m^k / I m^{k+1}` over `K[y]`, generators in Rees degree 0.
pub fn assoc_module_presentation<F: Field>(r: &PresentedRing<F>, i: &IdealHandle<F>) -> Result<GradedModulePresentation<F>> {
    require_graded(r, "assoc_module_presentation")?;
    if !i.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous(String::from("the ideal")));
    }
    let rees = rees_presentation(r)?;
    assoc_module_from(&rees, i)
}

fn assoc_module_from<F: Field>(rees: &ReesPresentation<F>, i: &IdealHandle<F>) -> Result<GradedModulePresentation<F>> {
    let (y, lbar) = fiber_cone_of(rees);
    if i.is_unit() {
        return GradedModulePresentation::cyclic(y, &lbar);
    }
    let gens = i.minimal_generators()?;
    let s = gens.len();
    if s == 0 {
        return GradedModulePresentation::new(y, Vec::new(), Vec::new());
    }
    let n = rees.nx;
    let xy = &rees.ring;
    let xmap: Vec<usize> = (0..n).collect();
    let mut tuple: Vec<Vec<Polynomial<F>>> = gens.iter().map(|g| vec![i.ring().ring().map_into(g, xy, &xmap)]).collect();
    tuple.extend(rees.relations.iter().map(|l| vec![l.clone()]));
    let syz = module::syzygy_basis(xy, &tuple, None);

    let mut relations: Vec<Vec<Polynomial<F>>> = Vec::new();
    for v in &syz {
        // keep the x-free part, split by Rees degree so each relation is homogeneous
        let mut by_degree: alloc::collections::BTreeMap<u32, Vec<Vec<(crate::monomial::Monomial, F::Elem)>>> =
            alloc::collections::BTreeMap::new();
        for (j, p) in v.iter().take(s).enumerate() {
            for (m, c) in p.terms() {
                if m.partial_degree(0..n) != 0 {
                    continue;
                }
                let b = m.degree();
                let slot = by_degree.entry(b).or_insert_with(|| vec![Vec::new(); s]);
                slot[j].push((m.clone(), c.clone()));
            }
        }
        for (_, cols) in by_degree {
            let row: Vec<Polynomial<F>> = cols.into_iter().map(|t| rees.restrict_to_y(&xy.from_terms(t), &y)).collect();
            if row.iter().any(|p| !p.is_zero()) {
                relations.push(row);
            }
        }
    }
    for g in &lbar {
        for j in 0..s {
            let mut row = vec![y.zero(); s];
            row[j] = g.clone();
            relations.push(row);
        }
    }
    relations.sort();
    relations.dedup();
    GradedModulePresentation::new(y, vec![0; s], relations)
}

/// Minimal free resolution of `gr_m(I)` over `K[y]`.
pub fn assoc_resolution<F: Field>(r: &PresentedRing<F>, i: &IdealHandle<F>) -> Result<Resolution<F>> {
    let pres = assoc_module_presentation(r, i)?;
    Resolution::compute(&pres)
}

/// `reg R(m, I) = reg gr_m(I)`.
pub fn rees_regularity<F: Field>(r: &PresentedRing<F>, i: &IdealHandle<F>) -> Result<i32> {
    require_graded(r, "rees_regularity")?;
    if i.is_zero() {
        return Err(AlgebraError::DegenerateIdeal("zero"));
    }
    let pres = assoc_module_presentation(r, i)?;
    let reg = module::regularity(&pres)?;
    reg.ok_or_else(|| AlgebraError::Inconsistent(String::from("gr_m(I) of a nonzero ideal resolved to zero")))
}

/// `reg R(m) = reg gr_m(R)`.
pub fn rees_ring_regularity<F: Field>(r: &alloc::sync::Arc<PresentedRing<F>>) -> Result<i32> {
    rees_regularity(r, &r.unit_ideal())
}

/// `(dim gr_k, dim D_k, dim Q_k)` for `gr_k = Im^k/Im^{k+1}`, `D_k = (Im^{k+1}:m)/Im^k`
/// and `Q_k = (Im^{k+1}:m)/Im^{k+1}`.
pub fn pq_component_dims<F: Field>(r: &alloc::sync::Arc<PresentedRing<F>>, i: &IdealHandle<F>, k: u32) -> Result<(u64, u64, u64)> {
    let m = r.max_ideal();
    let imk = i.product(&r.max_ideal_power(k));
    let imk1 = imk.product(&m);
    let sat = imk1.colon(&m);
    let unavailable = || AlgebraError::WrongMode { operation: "pq_component_dims", required: "graded" };
    let gr = imk.quotient_dim(&imk1).ok_or_else(unavailable)?;
    let d = sat.quotient_dim(&imk).ok_or_else(unavailable)?;
    let q = sat.quotient_dim(&imk1).ok_or_else(unavailable)?;
    Ok((gr, d, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use alloc::string::ToString;
    use alloc::sync::Arc;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn plane() -> Arc<PresentedRing<Rationals>> {
        PresentedRing::polynomial(Rationals, names(&["x", "y"]), Mode::Graded).unwrap()
    }

    fn quadric() -> Arc<PresentedRing<Rationals>> {
        let p = PolyRing::new(Rationals, names(&["x", "y", "z"]), MonomialOrder::DegRevLex);
        let j = p.sub(&p.pow(&p.var(2), 2), &p.mul(&p.var(0), &p.var(1)));
        PresentedRing::new(Rationals, names(&["x", "y", "z"]), vec![j], Mode::Graded).unwrap()
    }

    #[test]
    fn rees_ideal_of_the_plane() {
        let r = plane();
        let rees = rees_presentation(&r).unwrap();
        let shown: Vec<String> = rees.relations().iter().map(|g| rees.ring().display(g)).collect();
        assert_eq!(shown, vec!["y*y1 - x*y2".to_string()]);
        assert!(rees.substitution_holds(&r));
        let line = PresentedRing::polynomial(Rationals, names(&["x"]), Mode::Graded).unwrap();
        assert!(rees_presentation(&line).unwrap().relations().is_empty());
    }

    #[test]
    fn fiber_cone_of_the_quadric() {
        let (y, lbar) = fiber_cone_presentation(&quadric()).unwrap();
        let shown: Vec<String> = lbar.iter().map(|g| y.display(g)).collect();
        assert_eq!(shown, vec!["y1*y2 - y3^2".to_string()]);
        let (_, none) = fiber_cone_presentation(&plane()).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn regularity_of_diagonal_powers() {
        let r = plane();
        let p = r.ring();
        for a in 2..=3u32 {
            let i = r.ideal(vec![p.pow(&p.var(0), a), p.pow(&p.var(1), a)]).unwrap();
            assert_eq!(rees_regularity(&r, &i).unwrap(), a as i32 - 1);
        }
        assert_eq!(rees_ring_regularity(&r).unwrap(), 0);
        assert_eq!(rees_ring_regularity(&quadric()).unwrap(), 1);
    }

    #[test]
    fn component_dimensions() {
        let r = plane();
        let p = r.ring();
        let i = r.ideal(vec![p.pow(&p.var(0), 2), p.pow(&p.var(1), 2)]).unwrap();
        assert_eq!(pq_component_dims(&r, &i, 0).unwrap(), (2, 1, 3));
        assert_eq!(pq_component_dims(&r, &i, 1).unwrap().1, 0);
        let m = r.max_ideal();
        for k in 0..3 {
            let (gr, d, q) = pq_component_dims(&r, &m, k).unwrap();
            assert_eq!((gr, d, q), (k as u64 + 2, 0, k as u64 + 2));
        }
    }

    #[test]
    fn assoc_module_components() {
        let r = plane();
        let p = r.ring();
        let i = r.ideal(vec![p.pow(&p.var(0), 2), p.pow(&p.var(1), 2)]).unwrap();
        let pres = assoc_module_presentation(&r, &i).unwrap();
        let (shift, num) = pres.hilbert_numerator();
        assert_eq!(shift, 0);
        let dims = crate::hilbert::series_coefficients(&num, 2, 2);
        assert_eq!(dims, vec![2, 4, 5]);
    }

    #[test]
    fn local_mode_is_rejected() {
        let r = PresentedRing::polynomial(Rationals, names(&["x"]), Mode::Local).unwrap();
        assert!(matches!(rees_presentation(&r), Err(AlgebraError::WrongMode { .. })));
    }
}
