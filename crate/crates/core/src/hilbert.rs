//! Hilbert series of monomial quotients `S/M`.
//!
//! The numerator `N(t)` of `HS(S/M) = N(t) / (1-t)^n` is computed by the
//! pivot recursion `N(M) = N(M + (p)) + t^deg(p) N(M : p)`, bottoming out
//! when the minimal generators are pairwise coprime.

use alloc::vec;
use alloc::vec::Vec;

use crate::monomial::Monomial;

/// Drops generators divisible by another generator (and duplicates).
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Numerator of the Hilbert series of `S/(gens)`, `S` a polynomial ring in `nvars` variables.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    let min = minimalize(gens);
    trim(numerator_rec(min))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let pivot = choose_pivot(&gens);
    let Some((var, e)) = pivot else {
        // pairwise coprime: product of (1 - t^deg g)
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (i, &c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    };
    let n = gens[0].nvars();
    let mut pexps = vec![0u16; n];
    pexps[var] = e;
    let p = Monomial::from_exponents(&pexps);

    let mut plus = gens.clone();
    plus.push(p.clone());
    let plus = minimalize(&plus);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&p)).unwrap()).collect();
    let colon = minimalize(&colon);

    let mut out = numerator_rec(plus);
    let right = numerator_rec(colon);
    poly_add(&mut out, &right, e as usize);
    out
}

/// A variable shared by two generators together with the smallest exponent it
/// has in a generator that is not a pure power of it; `None` when pairwise coprime.
fn choose_pivot(gens: &[Monomial]) -> Option<(usize, u16)> {
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (var, &cnt) = counts.iter().enumerate().max_by_key(|&(i, c)| (*c, core::cmp::Reverse(i)))?;
    if cnt < 2 {
        return None;
    }
    let e = gens
        .iter()
        .filter(|g| g.exponent(var) > 0 && g.degree() > g.exponent(var) as u32)
        .map(|g| g.exponent(var))
        .min()?;
    Some((var, e))
}

/// Coefficients `0..=up_to` of the power series `num(t) / (1-t)^nvars`.
pub fn series_coefficients(num: &[i64], nvars: usize, up_to: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..=up_to).map(|i| num.get(i).copied().unwrap_or(0)).collect();
    for _ in 0..nvars {
        for i in 1..s.len() {
            s[i] += s[i - 1];
        }
    }
    s
}

/// Divides out `(1-t)` as often as possible: returns `(h, k)` with `num = (1-t)^k h`, `h(1) != 0`.
pub fn reduce_numerator(num: &[i64]) -> (Vec<i64>, usize) {
    let mut h = num.to_vec();
    let mut k = 0;
    loop {
        if h.iter().all(|&c| c == 0) {
            return (h, k);
        }
        if h.iter().sum::<i64>() != 0 {
            return (trim(h), k);
        }
        // synthetic division by (1 - t): q_i = sum_{j<=i} h_j
        let mut q = Vec::with_capacity(h.len().saturating_sub(1));
        let mut acc = 0;
        for &c in &h[..h.len() - 1] {
            acc += c;
            q.push(acc);
        }
        h = q;
        k += 1;
    }
}

/// Krull dimension of `S/(gens)` from the pole order of its Hilbert series.
pub fn dimension_from_series(gens: &[Monomial], nvars: usize) -> Option<usize> {
    let num = hilbert_numerator(gens);
    if num.iter().all(|&c| c == 0) {
        return None;
    }
    let (_, k) = reduce_numerator(&num);
    Some(nvars - k)
}

/// Largest set of variables containing the support of no generator.
pub fn max_independent_set(gens: &[Monomial], nvars: usize) -> Option<usize> {
    if gens.iter().any(|g| g.is_one()) {
        return None;
    }
    if nvars > 24 {
        return dimension_from_series(gens, nvars);
    }
    let masks: Vec<u32> = minimalize(gens)
        .iter()
        .map(|g| g.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u32, |m, (i, _)| m | (1 << i)))
        .collect();
    let mut best = 0;
    for u in 0u32..(1u32 << nvars) {
        let size = u.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !u != 0) {
            best = size;
        }
    }
    Some(best)
}

/// Number of monomials outside `(gens)`, or `None` when infinite.
pub fn count_standard_monomials(gens: &[Monomial], nvars: usize) -> Option<u64> {
    let num = hilbert_numerator(gens);
    let (h, k) = reduce_numerator(&num);
    if k < nvars {
        return None;
    }
    Some(h.iter().sum::<i64>() as u64)
}

/// All monomials outside `(gens)`, for a zero-dimensional quotient; `None` if infinite
/// or larger than `limit`.
pub fn standard_monomials(gens: &[Monomial], nvars: usize, limit: usize) -> Option<Vec<Monomial>> {
    let count = count_standard_monomials(gens, nvars)?;
    if count as usize > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut frontier = vec![Monomial::one(nvars)];
    if gens.iter().any(|g| g.is_one()) {
        return Some(out);
    }
    // degree-by-degree: a standard monomial of degree d+1 is x_i times one of degree d
    while !frontier.is_empty() {
        let mut next: Vec<Monomial> = Vec::new();
        for m in &frontier {
            for i in 0..nvars {
                let c = m.mul(&Monomial::var(nvars, i));
                if !gens.iter().any(|g| g.divides(&c)) {
                    next.push(c);
                }
            }
        }
        next.sort();
        next.dedup();
        out.append(&mut frontier);
        frontier = next;
    }
    Some(out)
}
