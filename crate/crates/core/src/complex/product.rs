//! Staircase (shuffle) triangulation of products of Δ-complexes.
//!
//! A `k`-simplex of `A × B` is a triple `(σ, τ, chain)` with `σ` a
//! `p`-simplex of `A`, `τ` a `q`-simplex of `B` and `chain` a strictly
//! increasing sequence of `k + 1` lattice points in `[0,p] × [0,q]` whose
//! steps are `(1,0)`, `(0,1)` or `(1,1)`, starting at `(0,0)` and ending at
//! `(p,q)`.

use std::collections::HashMap;

use super::DeltaComplex;
use crate::error::{Error, Result};

pub const MAX_PRODUCT_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductCell {
    pub p: usize,
    pub q: usize,
    pub sigma: usize,
    pub tau: usize,
    pub chain: Vec<(usize, usize)>,
}

impl ProductCell {
    /// True when every step advances the first coordinate, i.e. the
    /// projection to the first factor is the non-degenerate simplex `sigma`.
    pub fn projects_onto_first(&self) -> bool {
        self.chain.len() == self.p + 1
    }

    pub fn projects_onto_second(&self) -> bool {
        self.chain.len() == self.q + 1
    }
}

fn chains(p: usize, q: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut cur = vec![(0, 0)];
    fn rec(
        p: usize,
        q: usize,
        steps_left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let (i, j) = *cur.last().unwrap();
        if steps_left == 0 {
            if (i, j) == (p, q) {
                out.push(cur.clone());
            }
            return;
        }
        let rem_i = p - i;
        let rem_j = q - j;
        if rem_i.max(rem_j) > steps_left || rem_i + rem_j < steps_left {
            return;
        }
        for (di, dj) in [(0, 1), (1, 0), (1, 1)] {
            if i + di <= p && j + dj <= q {
                cur.push((i + di, j + dj));
                rec(p, q, steps_left - 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(p, q, k, &mut cur, &mut out);
    out
}

/// Number of staircase chains of length `k` in `[0,p] × [0,q]`.
pub fn chain_count(p: usize, q: usize, k: usize) -> usize {
    chains(p, q, k).len()
}

fn cells(a: &DeltaComplex, b: &DeltaComplex) -> Vec<Vec<ProductCell>> {
    let dim = a.dim() + b.dim();
    let mut out = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let mut layer = Vec::new();
        for p in 0..=k.min(a.dim()) {
            for q in 0..=k.min(b.dim()) {
                if p.max(q) > k || p + q < k {
                    continue;
                }
                let cs = chains(p, q, k);
                for sigma in 0..a.count(p) {
                    for tau in 0..b.count(q) {
                        for chain in &cs {
                            layer.push(ProductCell {
                                p,
                                q,
                                sigma,
                                tau,
                                chain: chain.clone(),
                            });
                        }
                    }
                }
            }
        }
        out.push(layer);
    }
    out
}

/// The product cells of `A × B` in the same order as the simplices of `product(A, B)`.
pub fn product_chains(a: &DeltaComplex, b: &DeltaComplex) -> Vec<Vec<ProductCell>> {
    cells(a, b)
}

fn cell_face(a: &DeltaComplex, b: &DeltaComplex, c: &ProductCell, m: usize) -> ProductCell {
    let k = c.chain.len() - 1;
    let (im, jm) = c.chain[m];
    let i_unique = (m == 0 || c.chain[m - 1].0 != im) && (m == k || c.chain[m + 1].0 != im);
    let j_unique = (m == 0 || c.chain[m - 1].1 != jm) && (m == k || c.chain[m + 1].1 != jm);
    let mut chain: Vec<(usize, usize)> = c
        .chain
        .iter()
        .enumerate()
        .filter(|&(t, _)| t != m)
        .map(|(_, &pt)| pt)
        .collect();
    let (mut p, mut q, mut sigma, mut tau) = (c.p, c.q, c.sigma, c.tau);
    if i_unique {
        sigma = a.face(p, sigma, im);
        p -= 1;
        for pt in chain.iter_mut() {
            if pt.0 > im {
                pt.0 -= 1;
            }
        }
    }
    if j_unique {
        tau = b.face(q, tau, jm);
        q -= 1;
        for pt in chain.iter_mut() {
            if pt.1 > jm {
                pt.1 -= 1;
            }
        }
    }
    ProductCell {
        p,
        q,
        sigma,
        tau,
        chain,
    }
}

/// Triangulated product `|A| × |B|`; total dimension is capped at 4.
pub fn product(a: &DeltaComplex, b: &DeltaComplex) -> Result<DeltaComplex> {
    let dim = a.dim() + b.dim();
    if dim > MAX_PRODUCT_DIM {
        return Err(Error::DimensionOverflow(dim));
    }
    let all = cells(a, b);
    let index: Vec<HashMap<&ProductCell, usize>> = all
        .iter()
        .map(|layer| layer.iter().enumerate().map(|(i, c)| (c, i)).collect())
        .collect();
    let mut layers = Vec::with_capacity(dim + 1);
    for (k, layer) in all.iter().enumerate() {
        let faces: Vec<Vec<usize>> = layer
            .iter()
            .map(|c| {
                if k == 0 {
                    Vec::new()
                } else {
                    (0..=k).map(|m| index[k - 1][&cell_face(a, b, c, m)]).collect()
                }
            })
            .collect();
        layers.push(faces);
    }
    DeltaComplex::new(layers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_counts_match_multinomials() {
        // k!/((p-d)!(q-d)!d!) with d = p + q - k diagonal steps
        fn fact(n: usize) -> usize {
            (1..=n).product()
        }
        for p in 0..=3 {
            for q in 0..=3 {
                for k in p.max(q)..=p + q {
                    let d = p + q - k;
                    let expected = fact(k) / (fact(p - d) * fact(q - d) * fact(d));
                    assert_eq!(chain_count(p, q, k), expected, "p={p} q={q} k={k}");
                }
            }
        }
    }

    #[test]
    fn point_is_a_product_identity() {
        let s2 = DeltaComplex::from_simplicial(&[
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 3],
            vec![0, 1, 2],
        ])
        .unwrap();
        assert_eq!(product(&DeltaComplex::point(), &s2).unwrap(), s2);
        assert_eq!(product(&s2, &DeltaComplex::point()).unwrap(), s2);
    }

    #[test]
    fn dimension_cap() {
        let s2 = DeltaComplex::from_simplicial(&[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(product(&s2, &s2), Err(Error::DimensionOverflow(6)));
    }
}
