//! Quotients of Δ-complexes by order-preserving identifications of simplices.

use super::DeltaComplex;
use crate::error::{Error, Result};

/// Disjoint union; returns the union and, per input, its index offset in each dimension.
pub fn disjoint_union(parts: &[&DeltaComplex]) -> (DeltaComplex, Vec<Vec<usize>>) {
    let dim = parts.iter().map(|p| p.dim()).max().unwrap_or(0);
    let mut layers: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
    let mut offsets = Vec::with_capacity(parts.len());
    for part in parts {
        let off: Vec<usize> = (0..=dim).map(|k| layers[k].len()).collect();
        for k in 0..=part.dim() {
            for fs in &part.layers()[k] {
                let shifted = if k == 0 {
                    Vec::new()
                } else {
                    fs.iter().map(|f| f + off[k - 1]).collect()
                };
                layers[k].push(shifted);
            }
        }
        offsets.push(off);
    }
    (DeltaComplex::new_unchecked(layers), offsets)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Identifies simplices pairwise (`(dim, a, b)`; faces are identified
/// position by position) and deletes the listed top-dimensional simplices.
/// Classes are renumbered by their smallest member.
pub(crate) fn quotient(
    x: &DeltaComplex,
    pairs: &[(usize, usize, usize)],
    removed_top: &[usize],
) -> Result<DeltaComplex> {
    let dim = x.dim();
    let mut uf: Vec<UnionFind> = (0..=dim).map(|k| UnionFind::new(x.count(k))).collect();
    let mut work: Vec<(usize, usize, usize)> = pairs.to_vec();
    while let Some((k, a, b)) = work.pop() {
        if k > dim || a >= x.count(k) || b >= x.count(k) {
            return Err(Error::MalformedComplex(format!(
                "identification ({k}, {a}, {b}) out of range"
            )));
        }
        if uf[k].union(a, b) && k > 0 {
            for j in 0..=k {
                work.push((k - 1, x.face(k, a, j), x.face(k, b, j)));
            }
        }
    }
    let mut removed = vec![false; x.count(dim)];
    for &t in removed_top {
        removed[t] = true;
    }
    let mut new_index: Vec<Vec<usize>> = Vec::with_capacity(dim + 1);
    let mut layers: Vec<Vec<Vec<usize>>> = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let n = x.count(k);
        let mut idx = vec![usize::MAX; n];
        let mut layer = Vec::new();
        for i in 0..n {
            if k == dim && removed[i] {
                continue;
            }
            let r = uf[k].find(i);
            if k == dim && r != i && !removed[r] {
                // top simplices identified with a kept representative
                idx[i] = idx[r];
                continue;
            }
            if idx[r] == usize::MAX {
                idx[r] = layer.len();
                let fs = if k == 0 {
                    Vec::new()
                } else {
                    x.faces(k, r)
                        .iter()
                        .map(|&f| {
                            let rf = uf[k - 1].find(f);
                            new_index[k - 1][rf]
                        })
                        .collect()
                };
                layer.push(fs);
            }
            idx[i] = idx[r];
        }
        new_index.push(idx);
        layers.push(layer);
    }
    DeltaComplex::new(layers)
}
