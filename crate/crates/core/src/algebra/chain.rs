//! Boundary and coboundary operators of a Δ-complex.

use num_bigint::BigInt;

use super::matrix::IntMatrix;
use crate::complex::DeltaComplex;

/// `∂_k` as a sparse list of rows: `rows[τ]` maps `k`-simplices to the
/// coefficient of `(k-1)`-simplex `τ`.
pub(crate) fn boundary_entries(x: &DeltaComplex, k: usize) -> Vec<Vec<(usize, i64)>> {
    if k == 0 || k > x.dim() {
        return vec![Vec::new(); if k == 0 { 0 } else { x.count(k - 1) }];
    }
    let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); x.count(k - 1)];
    for s in 0..x.count(k) {
        for (j, &f) in x.faces(k, s).iter().enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            match rows[f].iter_mut().find(|(c, _)| *c == s) {
                Some(e) => e.1 += sign,
                None => rows[f].push((s, sign)),
            }
        }
    }
    for r in rows.iter_mut() {
        r.retain(|&(_, v)| v != 0);
        r.sort_unstable();
    }
    rows
}

/// Dense integral boundary matrix `∂_k : C_k → C_{k-1}`.
pub fn boundary_matrix(x: &DeltaComplex, k: usize) -> IntMatrix {
    let rows = if k == 0 { 0 } else { x.count(k - 1) };
    let cols = x.count(k);
    let mut m = IntMatrix::zeros(rows, cols);
    if k > 0 && k <= x.dim() {
        for (r, entries) in boundary_entries(x, k).into_iter().enumerate() {
            for (c, v) in entries {
                m.set(r, c, BigInt::from(v));
            }
        }
    }
    m
}

/// Dense coboundary `δ^k : C^k → C^{k+1}` reduced mod `m` (rows indexed by
/// `(k+1)`-simplices).
pub(crate) fn coboundary_mod(x: &DeltaComplex, k: usize, m: u64) -> Vec<Vec<u64>> {
    let n = x.count(k);
    if k >= x.dim() {
        return Vec::new();
    }
    let mut rows = vec![vec![0u64; n]; x.count(k + 1)];
    for (s, row) in rows.iter_mut().enumerate() {
        for (j, &f) in x.faces(k + 1, s).iter().enumerate() {
            row[f] = if j % 2 == 0 { (row[f] + 1) % m } else { (row[f] + m - 1) % m };
        }
    }
    rows
}

/// Applies `δ` to a cochain of degree `k` with values mod `m`.
pub fn coboundary(x: &DeltaComplex, k: usize, c: &[u64], m: u64) -> Vec<u64> {
    if k >= x.dim() {
        return Vec::new();
    }
    (0..x.count(k + 1))
        .map(|s| {
            x.faces(k + 1, s).iter().enumerate().fold(0u64, |acc, (j, &f)| {
                if j % 2 == 0 {
                    (acc + c[f]) % m
                } else {
                    (acc + m - c[f] % m) % m
                }
            })
        })
        .collect()
}
