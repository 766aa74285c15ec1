//! Dense-exponent monomials and global monomial orders.

use alloc::vec::Vec;
use core::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 16]>;

/// A monomial `x_0^{e_0} ... x_{n-1}^{e_{n-1}}` with its cached total degree.
///
/// The derived `Ord` is structural (used for map keys), not a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: exps.iter().copied().collect(), degree }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// Componentwise `self <= other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i mod 64` set when variable `i` occurs; cheap divisibility pre-filter.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Exponent vector with the variables re-indexed by `map[old] = new`.
    pub fn permute(&self, map: &[usize], new_nvars: usize) -> Monomial {
        let mut exps: Exponents = smallvec::smallvec![0; new_nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] = e;
            }
        }
        Monomial { exps, degree: self.degree }
    }

    /// Degree restricted to the variables in `range`.
    pub fn partial_degree(&self, range: core::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    /// All monomials of total degree `d` in `nvars` variables, in descending lex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur: Exponents = smallvec::smallvec![0; nvars];
        fn rec(i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Monomial>, d: u32) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left as u16;
                out.push(Monomial { exps: cur.clone(), degree: d });
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out, d);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out, d);
        out
    }
}

/// A global monomial order. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Degree-reverse-lexicographic on the first `block` variables, ties broken by
    /// degree-reverse-lexicographic on the rest; eliminates the first block.
    Elimination { block: usize },
}

#[inline]
fn degrevlex_range(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex_range(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination { block } => {
                let (a1, a2) = a.exps.split_at(block);
                let (b1, b2) = b.exps.split_at(block);
                let da1 = a.partial_degree(0..block);
                let db1 = b.partial_degree(0..block);
                degrevlex_range(a1, b1, da1, db1)
                    .then_with(|| degrevlex_range(a2, b2, a.degree - da1, b.degree - db1))
            }
        }
    }

    /// True when the order refines total degree (so homogeneous data stays graded).
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_and_lex() {
        let x2 = m(&[2, 0]);
        let xy = m(&[1, 1]);
        let y3 = m(&[0, 3]);
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&y3, &x2), Ordering::Greater);
        assert_eq!(o.cmp(&x2, &xy), Ordering::Greater);
        let l = MonomialOrder::Lex;
        assert_eq!(l.cmp(&x2, &y3), Ordering::Greater);
        // degrevlex in three variables: xz < y^2
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_order_kills_first_block() {
        let o = MonomialOrder::Elimination { block: 1 };
        // t * x  >  y^5 since t appears
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 1, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 2, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert!(m(&[1, 1, 0]).divides(&a));
        assert_eq!(b.div(&m(&[1, 1, 1])), Some(m(&[1, 0, 0])));
        assert_eq!(a.div(&b), None);
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 3, 1])));
    }

    #[test]
    fn enumerate_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(2, 0).len(), 1);
        assert_eq!(Monomial::all_of_degree(7, 3).len(), 84);
    }
}
