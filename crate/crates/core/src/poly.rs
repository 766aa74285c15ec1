//! Sparse multivariate polynomials over a [`Field`].
//!
//! A [`Polynomial`] is plain data: terms sorted in descending order for the
//! monomial order of the [`PolyRing`] that built it. All arithmetic goes
//! through the ring, which owns the field, the variable names and the order.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::Rng;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

// Manual impls: the derives would demand the bound on `F` itself rather than on `F::Elem`.
impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> core::hash::Hash for Polynomial<F> {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        self.terms.hash(state);
    }
}

impl<F: Field> PartialOrd for Polynomial<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order for use as map keys; not a monomial order.
impl<F: Field> Ord for Polynomial<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| self.terms.cmp(&other.terms))
    }
}

/// Result of [`PolyRing::homogeneous_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomogeneousDegree {
    /// The zero polynomial (degree minus infinity).
    Zero,
    Degree(u32),
    Inhomogeneous,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    /// Builds from terms already sorted descending, with nonzero coefficients and distinct monomials.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Smallest total degree of a term (the order of vanishing at the origin).
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).min()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn constant_term(&self) -> Option<&F::Elem> {
        self.terms.last().filter(|t| t.0.is_one()).map(|t| &t.1)
    }

    pub fn involves_variable(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0.exponent(i) > 0)
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }
}

/// A polynomial ring `K[x_0, ..., x_{n-1}]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { field, names, order }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { field: self.field.clone(), names: self.names.clone(), order }
    }

    pub fn check(&self, p: &Polynomial<F>) -> Result<()> {
        if p.nvars != self.nvars() {
            return Err(AlgebraError::SignatureMismatch { expected: self.nvars(), found: p.nvars });
        }
        Ok(())
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial { nvars: self.nvars(), terms: alloc::vec![(Monomial::one(self.nvars()), c)] }
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn monomial(&self, m: Monomial, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            return self.zero();
        }
        Polynomial { nvars: self.nvars(), terms: alloc::vec![(m, c)] }
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Sorts and combines arbitrary terms, dropping zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|t| !self.field.is_zero(&t.1));
        Polynomial { nvars: self.nvars(), terms: out }
    }

    /// Re-sorts a polynomial whose terms were ordered by some other order.
    pub fn adopt(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut terms = p.terms.clone();
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { nvars: p.nvars, terms }
    }

    pub(crate) fn merge(&self, a: &[(Monomial, F::Elem)], b: &[(Monomial, F::Elem)], negate_b: bool) -> Vec<(Monomial, F::Elem)> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_b { f.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { f.sub(&a[i].1, &b[j].1) } else { f.add(&a[i].1, &b[j].1) };
                    if !f.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_b { f.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        out
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        Polynomial { nvars: a.nvars, terms: self.merge(&a.terms, &b.terms, false) }
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        Polynomial { nvars: a.nvars, terms: self.merge(&a.terms, &b.terms, true) }
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        let terms = a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect();
        Polynomial { nvars: a.nvars, terms }
    }

    pub fn scale(&self, a: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        let terms = a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect();
        Polynomial { nvars: a.nvars, terms }
    }

    /// `c * m * a`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, a: &Polynomial<F>, m: &Monomial, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        let terms = a.terms.iter().map(|(t, x)| (t.mul(m), self.field.mul(x, c))).collect();
        Polynomial { nvars: a.nvars, terms }
    }

    /// `a - c * m * b` in a single merge.
    pub fn sub_mul_term(&self, a: &Polynomial<F>, m: &Monomial, c: &F::Elem, b: &Polynomial<F>) -> Polynomial<F> {
        let scaled: Vec<(Monomial, F::Elem)> =
            b.terms.iter().map(|(t, x)| (t.mul(m), self.field.mul(x, c))).collect();
        Polynomial { nvars: a.nvars, terms: self.merge(&a.terms, &scaled, true) }
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = self.zero();
        for (m, c) in &small.terms {
            let part = self.mul_term(large, m, c);
            acc = self.add(&acc, &part);
        }
        acc
    }

    pub fn pow(&self, a: &Polynomial<F>, k: u32) -> Polynomial<F> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Fallible addition/multiplication/scaling with a signature check.
    pub fn try_op(&self, kind: PolyOp, a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(match kind {
            PolyOp::Add => self.add(a, b),
            PolyOp::Sub => self.sub(a, b),
            PolyOp::Mul => self.mul(a, b),
        })
    }

    pub fn leading_term(&self, p: &Polynomial<F>) -> Result<(Monomial, F::Elem)> {
        p.terms.first().cloned().ok_or(AlgebraError::ZeroPolynomial)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, p: &Polynomial<F>) -> Polynomial<F> {
        match p.terms.first() {
            None => p.clone(),
            Some((_, c)) if self.field.is_one(c) => p.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(p, &inv)
            }
        }
    }

    pub fn homogeneous_degree(&self, p: &Polynomial<F>) -> HomogeneousDegree {
        let mut it = p.terms.iter();
        let Some(first) = it.next() else {
            return HomogeneousDegree::Zero;
        };
        let d = first.0.degree();
        if it.all(|t| t.0.degree() == d) {
            HomogeneousDegree::Degree(d)
        } else {
            HomogeneousDegree::Inhomogeneous
        }
    }

    pub fn is_homogeneous(&self, p: &Polynomial<F>) -> bool {
        !matches!(self.homogeneous_degree(p), HomogeneousDegree::Inhomogeneous)
    }

    /// The degree-`d` part.
    pub fn homogeneous_part(&self, p: &Polynomial<F>, d: u32) -> Polynomial<F> {
        let terms = p.terms.iter().filter(|t| t.0.degree() == d).cloned().collect();
        Polynomial { nvars: p.nvars, terms }
    }

    /// Coefficients of the variables in the linear part.
    pub fn linear_part(&self, p: &Polynomial<F>) -> Vec<F::Elem> {
        let mut v = alloc::vec![self.field.zero(); self.nvars()];
        for (m, c) in &p.terms {
            if m.degree() == 1 {
                let i = m.exponents().iter().position(|&e| e == 1).unwrap();
                v[i] = c.clone();
            }
        }
        v
    }

    /// `sum c_i x_i` with independently drawn coefficients, not all zero.
    pub fn random_linear_form<R: Rng + ?Sized>(&self, rng: &mut R) -> Polynomial<F> {
        loop {
            let terms: Vec<_> = (0..self.nvars())
                .map(|i| (Monomial::var(self.nvars(), i), self.field.random(rng)))
                .collect();
            let p = self.from_terms(terms);
            if !p.is_zero() || self.nvars() == 0 {
                return p;
            }
        }
    }

    /// A homogeneous form of degree `d` with random coefficients on every monomial.
    pub fn random_form<R: Rng + ?Sized>(&self, rng: &mut R, d: u32) -> Polynomial<F> {
        let terms =
            Monomial::all_of_degree(self.nvars(), d).into_iter().map(|m| (m, self.field.random(rng))).collect();
        self.from_terms(terms)
    }

    /// Re-indexes variables into `target` (`map[old] = new`).
    pub fn map_into(&self, p: &Polynomial<F>, target: &PolyRing<F>, map: &[usize]) -> Polynomial<F> {
        let terms = p.terms.iter().map(|(m, c)| (m.permute(map, target.nvars()), c.clone())).collect();
        target.from_terms(terms)
    }

    /// Sets the variables flagged in `kill` to zero.
    pub fn set_to_zero(&self, p: &Polynomial<F>, kill: &[bool]) -> Polynomial<F> {
        let terms = p
            .terms
            .iter()
            .filter(|(m, _)| m.exponents().iter().zip(kill).all(|(&e, &k)| e == 0 || !k))
            .cloned()
            .collect();
        Polynomial { nvars: p.nvars, terms }
    }

    /// Exact division `a / b`; `None` if `b` does not divide `a`.
    pub fn divide_exact(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Option<Polynomial<F>> {
        let (bl, bc) = b.terms.first()?;
        let binv = self.field.inv(bc)?;
        let mut rem = a.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = m.div(bl)?;
            let qc = self.field.mul(c, &binv);
            rem = self.sub_mul_term(&rem, &q, &qc, b);
            quot.push((q, qc));
        }
        Some(Polynomial { nvars: a.nvars, terms: quot })
    }

    /// Canonical text form: terms in descending order, `*` between factors, `^` for powers.
    pub fn display(&self, p: &Polynomial<F>) -> String {
        use core::fmt::Write;
        if p.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (idx, (m, c)) in p.terms.iter().enumerate() {
            let (neg, abs) = self.field.format_elem(c);
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.is_one() {
                factors.push(abs);
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(alloc::format!("{}^{}", self.names[i], e)),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}
