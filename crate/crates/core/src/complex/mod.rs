//! Ordered Δ-complexes (semi-simplicial sets) and the operations used to
//! build triangulated 3-manifolds: generators, connected sums, products.

mod dcx;
mod generators;
mod glue;
mod product;
mod sum;

use std::collections::{BTreeSet, HashMap};

use crate::algebra::{homology, Coefficients};
use crate::error::{Error, Result};

pub use dcx::{parse_dcx, write_dcx};
pub use generators::{circle, generator, projective_plane, sphere, Generator};
pub use glue::disjoint_union;
pub use product::{chain_count, product, product_chains, ProductCell};
pub use sum::connected_sum;

/// A finite Δ-complex. `faces[k][i]` lists the `k + 1` faces of the `i`-th
/// `k`-simplex; entry `j` is the face opposite ordered vertex `j`.
/// Vertices (`k = 0`) carry no faces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaComplex {
    faces: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedCheckReport {
    pub is_closed_pseudo_manifold: bool,
    pub connected: bool,
    pub orientable: bool,
    pub euler_characteristic: i64,
    /// Codimension-one simplices that are not shared by exactly two top simplices,
    /// with their incidence count.
    pub offending_faces: Vec<(usize, usize)>,
}

impl DeltaComplex {
    /// Builds a complex, checking index ranges and the simplicial identities.
    pub fn new(faces: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let x = DeltaComplex { faces };
        x.check_structure()?;
        Ok(x)
    }

    pub(crate) fn new_unchecked(faces: Vec<Vec<Vec<usize>>>) -> Self {
        DeltaComplex { faces }
    }

    /// A single vertex.
    pub fn point() -> Self {
        DeltaComplex {
            faces: vec![vec![vec![]]],
        }
    }

    /// Builds the Δ-complex of an ordered simplicial complex given by its
    /// facets (vertex lists, sorted internally). Simplices of each dimension
    /// are indexed in lexicographic order of their vertex sets.
    pub fn from_simplicial(facets: &[Vec<usize>]) -> Result<Self> {
        let (x, _) = Self::from_simplicial_indexed(facets)?;
        Ok(x)
    }

    pub(crate) fn from_simplicial_indexed(
        facets: &[Vec<usize>],
    ) -> Result<(Self, Vec<HashMap<Vec<usize>, usize>>)> {
        let dim = facets
            .iter()
            .map(|f| f.len())
            .max()
            .ok_or_else(|| Error::MalformedComplex("no facets".into()))?
            - 1;
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim + 1];
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            // all non-empty subsets
            let n = f.len();
            for mask in 1u32..(1u32 << n) {
                let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                by_dim[s.len() - 1].insert(s);
            }
        }
        let index: Vec<HashMap<Vec<usize>, usize>> = by_dim
            .iter()
            .map(|set| set.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        let mut faces = vec![vec![Vec::new(); by_dim[0].len()]];
        for k in 1..=dim {
            let mut layer = Vec::with_capacity(by_dim[k].len());
            for s in &by_dim[k] {
                let fs = (0..=k)
                    .map(|j| {
                        let mut t = s.clone();
                        t.remove(j);
                        index[k - 1][&t]
                    })
                    .collect();
                layer.push(fs);
            }
            faces.push(layer);
        }
        Ok((DeltaComplex { faces }, index))
    }

    pub fn dim(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn count(&self, k: usize) -> usize {
        self.faces.get(k).map_or(0, |l| l.len())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.faces.iter().map(|l| l.len()).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.faces.iter().map(|l| l.len()).sum()
    }

    pub fn faces(&self, k: usize, i: usize) -> &[usize] {
        &self.faces[k][i]
    }

    pub fn face(&self, k: usize, i: usize, j: usize) -> usize {
        self.faces[k][i][j]
    }

    pub(crate) fn layers(&self) -> &[Vec<Vec<usize>>] {
        &self.faces
    }

    /// The `j`-th ordered vertex of simplex `(k, i)`.
    pub fn vertex(&self, k: usize, i: usize, j: usize) -> usize {
        let (mut k, mut i, mut j) = (k, i, j);
        while k > 0 {
            if j < k {
                i = self.faces[k][i][k];
            } else {
                i = self.faces[k][i][0];
                j -= 1;
            }
            k -= 1;
        }
        i
    }

    pub fn vertices(&self, k: usize, i: usize) -> Vec<usize> {
        (0..=k).map(|j| self.vertex(k, i, j)).collect()
    }

    /// Front face spanned by ordered vertices `0..=p`.
    pub fn front_face(&self, k: usize, i: usize, p: usize) -> usize {
        let mut idx = i;
        for d in (p + 1..=k).rev() {
            idx = self.faces[d][idx][d];
        }
        idx
    }

    /// Back face spanned by ordered vertices `k-q..=k`.
    pub fn back_face(&self, k: usize, i: usize, q: usize) -> usize {
        let mut idx = i;
        for d in (q + 1..=k).rev() {
            idx = self.faces[d][idx][0];
        }
        idx
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    fn check_structure(&self) -> Result<()> {
        if self.faces.is_empty() {
            return Err(Error::MalformedComplex("no dimensions".into()));
        }
        for (k, layer) in self.faces.iter().enumerate() {
            if layer.is_empty() {
                return Err(Error::MalformedComplex(format!("dimension {k} has no simplices")));
            }
            for (i, fs) in layer.iter().enumerate() {
                let expected = if k == 0 { 0 } else { k + 1 };
                if fs.len() != expected {
                    return Err(Error::MalformedComplex(format!(
                        "{k}-simplex {i} has {} faces, expected {expected}",
                        fs.len()
                    )));
                }
                if k > 0 {
                    if let Some(&bad) = fs.iter().find(|&&f| f >= self.faces[k - 1].len()) {
                        return Err(Error::MalformedComplex(format!(
                            "{k}-simplex {i} references missing face {bad}"
                        )));
                    }
                }
            }
        }
        if let Some(v) = self.first_identity_violation() {
            return Err(Error::MalformedComplex(v));
        }
        Ok(())
    }

    /// First violation of `d_i d_j = d_{j-1} d_i` (i < j), if any.
    pub fn first_identity_violation(&self) -> Option<String> {
        for k in 2..self.faces.len() {
            for (s, fs) in self.faces[k].iter().enumerate() {
                for j in 1..=k {
                    for i in 0..j {
                        let lhs = self.faces[k - 1][fs[j]][i];
                        let rhs = self.faces[k - 1][fs[i]][j - 1];
                        if lhs != rhs {
                            return Some(format!(
                                "{k}-simplex {s}: d{i} d{j} = {lhs} but d{} d{i} = {rhs}",
                                j - 1
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    /// Incidence count of each codimension-one simplex in top simplices.
    pub(crate) fn top_incidence(&self) -> Vec<usize> {
        let n = self.dim();
        if n == 0 {
            return Vec::new();
        }
        let mut inc = vec![0usize; self.count(n - 1)];
        for fs in &self.faces[n] {
            for &f in fs {
                inc[f] += 1;
            }
        }
        inc
    }

    pub fn is_closed_pseudo_manifold(&self) -> bool {
        self.dim() > 0 && self.top_incidence().iter().all(|&c| c == 2)
    }

    /// Coherent signs on top simplices making their signed sum a cycle, found
    /// by propagation across shared codimension-one faces. `None` when the
    /// complex is not a closed pseudo-manifold or admits no such signs on some
    /// component.
    pub fn orientation(&self) -> Option<Vec<i8>> {
        if !self.is_closed_pseudo_manifold() {
            return None;
        }
        let n = self.dim();
        let tops = self.count(n);
        // for each codim-1 face, the two (top, position) incidences
        let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.count(n - 1)];
        for (t, fs) in self.faces[n].iter().enumerate() {
            for (j, &f) in fs.iter().enumerate() {
                inc[f].push((t, j));
            }
        }
        let mut sign = vec![0i8; tops];
        for start in 0..tops {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for (j, &f) in self.faces[n][t].iter().enumerate() {
                    let pair = &inc[f];
                    // the other incidence (may be the same top simplex at another position)
                    let (t2, j2) = if pair[0] == (t, j) { pair[1] } else { pair[0] };
                    // sign[t] (-1)^j + sign[t2] (-1)^j2 = 0
                    let want = -sign[t] * parity(j) * parity(j2);
                    if sign[t2] == 0 {
                        sign[t2] = want;
                        stack.push(t2);
                    } else if sign[t2] != want {
                        return None;
                    }
                }
            }
        }
        Some(sign)
    }

    /// Closedness, connectivity, orientability and Euler characteristic.
    pub fn validate(&self) -> Result<ClosedCheckReport> {
        if let Some(v) = self.first_identity_violation() {
            return Err(Error::MalformedComplex(v));
        }
        let inc = self.top_incidence();
        let offending: Vec<(usize, usize)> = inc
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 2)
            .map(|(f, &c)| (f, c))
            .collect();
        let closed = self.dim() > 0 && offending.is_empty();
        let h = homology(self, Coefficients::Integers)?;
        let connected = h.rank(0) == 1;
        let top = self.dim();
        let orientable = closed && connected && h.rank(top) == 1 && h.torsion(top).is_empty();
        Ok(ClosedCheckReport {
            is_closed_pseudo_manifold: closed,
            connected,
            orientable,
            euler_characteristic: self.euler_characteristic(),
            offending_faces: offending,
        })
    }
}

fn parity(j: usize) -> i8 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary_of_4_simplex() -> DeltaComplex {
        let facets: Vec<Vec<usize>> = (0..5)
            .map(|skip| (0..5).filter(|&v| v != skip).collect())
            .collect();
        DeltaComplex::from_simplicial(&facets).unwrap()
    }

    #[test]
    fn sphere_report() {
        let r = boundary_of_4_simplex().validate().unwrap();
        assert!(r.is_closed_pseudo_manifold && r.connected && r.orientable);
        assert_eq!(r.euler_characteristic, 0);
    }

    #[test]
    fn dangling_triangle_is_reported() {
        // ∂Δ⁴ plus an extra triangle glued along an existing edge via a fresh vertex
        let mut facets: Vec<Vec<usize>> = (0..5)
            .map(|skip| (0..5).filter(|&v| v != skip).collect())
            .collect();
        facets.push(vec![0, 1, 5]);
        let x = DeltaComplex::from_simplicial(&facets).unwrap();
        let r = x.validate().unwrap();
        assert!(!r.is_closed_pseudo_manifold);
        assert_eq!(r.offending_faces.len(), 1);
        let (f, c) = r.offending_faces[0];
        assert_eq!(c, 0);
        assert_eq!(x.vertices(2, f), vec![0, 1, 5]);
    }

    #[test]
    fn identity_violation_is_rejected() {
        // a triangle whose edges do not close up
        let faces = vec![
            vec![vec![], vec![], vec![]],
            vec![vec![1, 0], vec![2, 1], vec![2, 0]],
            vec![vec![1, 2, 1]],
        ];
        assert!(matches!(DeltaComplex::new(faces), Err(Error::MalformedComplex(_))));
    }

    #[test]
    fn vertices_and_faces_agree() {
        let x = boundary_of_4_simplex();
        for i in 0..x.count(3) {
            let vs = x.vertices(3, i);
            assert!(vs.windows(2).all(|w| w[0] < w[1]));
            let front = x.front_face(3, i, 1);
            assert_eq!(x.vertices(1, front), vs[..2].to_vec());
            let back = x.back_face(3, i, 2);
            assert_eq!(x.vertices(2, back), vs[1..].to_vec());
        }
    }
}
