//! Small exact linear algebra over a [`Field`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::field::Field;

/// Rank of a list of sparse rows by deterministic Gaussian elimination.
pub fn rank_of_rows<F: Field>(f: &F, rows: Vec<BTreeMap<usize, F::Elem>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, F::Elem>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&col, val)) = row.iter().next() else { break };
            let val = val.clone();
            match pivots.get(&col) {
                Some(prow) => {
                    for (c, x) in prow {
                        let cur = row.get(c).cloned().unwrap_or_else(|| f.zero());
                        let nv = f.sub(&cur, &f.mul(&val, x));
                        if f.is_zero(&nv) {
                            row.remove(c);
                        } else {
                            row.insert(*c, nv);
                        }
                    }
                }
                None => {
                    let inv = f.inv(&val).unwrap();
                    let normed = row.into_iter().map(|(c, x)| (c, f.mul(&x, &inv))).collect();
                    pivots.insert(col, normed);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of dense rows.
pub fn rank_dense<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let sparse = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(c, x)| (c, x.clone())).collect())
        .collect();
    rank_of_rows(f, sparse)
}
