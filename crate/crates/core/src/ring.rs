//! Cup products, cohomology ring tables, cup-length and Künneth tensor rings.

use crate::algebra::modp::TaggedEchelon;
use crate::algebra::{cohomology_basis, is_prime, CohomologyBasis};
use crate::complex::{DeltaComplex, ProductCell};
use crate::error::{Error, Result};

/// Alexander–Whitney product `(a ⌣ b)(σ) = a(front_p σ) · b(back_q σ)` mod `m`.
pub fn cup_product(x: &DeltaComplex, p: usize, a: &[u64], q: usize, b: &[u64], m: u64) -> Result<Vec<u64>> {
    let k = p + q;
    if k > x.dim() {
        return Err(Error::DegreeOverflow(k, x.dim()));
    }
    if a.len() != x.count(p) || b.len() != x.count(q) {
        return Err(Error::Invalid(format!(
            "cochain lengths {}/{} do not match simplex counts {}/{}",
            a.len(),
            b.len(),
            x.count(p),
            x.count(q)
        )));
    }
    Ok((0..x.count(k))
        .map(|s| {
            let u = a[x.front_face(k, s, p)] % m;
            if u == 0 {
                return 0;
            }
            u * (b[x.back_face(k, s, q)] % m) % m
        })
        .collect())
}

/// Evaluates a top-degree cocycle on the fundamental cycle: the plain sum of
/// top simplices mod 2, or the oriented sum otherwise.
pub fn kronecker_top(x: &DeltaComplex, u: &[u64], m: u64) -> Result<u64> {
    if !x.is_closed_pseudo_manifold() {
        return Err(Error::NotClosed("fundamental cycle needs a closed pseudo-manifold".into()));
    }
    let n = x.dim();
    if u.len() != x.count(n) {
        return Err(Error::Invalid("cochain is not of top degree".into()));
    }
    if m == 2 {
        return Ok(u.iter().fold(0, |acc, &v| (acc + v) % 2));
    }
    let signs = x.orientation().ok_or(Error::NotOrientable)?;
    Ok(u.iter().zip(signs).fold(0, |acc, (&v, s)| {
        let v = v % m;
        if s > 0 {
            (acc + v) % m
        } else {
            (acc + m - v) % m
        }
    }))
}

/// Pulls a cochain on one factor back to the triangulated product along the
/// projection. `cells` are the product cells of `product(A, B)`.
pub fn pullback_from_factor(cells: &[Vec<ProductCell>], k: usize, u: &[u64], first: bool) -> Vec<u64> {
    cells[k]
        .iter()
        .map(|c| {
            if first && c.p == k && c.projects_onto_first() {
                u[c.sigma]
            } else if !first && c.q == k && c.projects_onto_second() {
                u[c.tau]
            } else {
                0
            }
        })
        .collect()
}

/// Graded ring over `Z/p` given by structure constants on a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyRing {
    pub modulus: u64,
    pub top_degree: usize,
    pub labels: Vec<Vec<String>>,
    /// `products[p][q][i][j]`: coordinates of `e_{p,i} ⌣ e_{q,j}` in degree `p+q`.
    products: Vec<Vec<Vec<Vec<Vec<u64>>>>>,
    /// Value of each top-degree basis class on the fundamental class.
    pub fundamental_pairing: Option<Vec<u64>>,
}

impl CohomologyRing {
    /// Builds a ring from a basis-product callback.
    fn build(
        modulus: u64,
        labels: Vec<Vec<String>>,
        fundamental_pairing: Option<Vec<u64>>,
        mut mul: impl FnMut(usize, usize, usize, usize) -> Result<Vec<u64>>,
    ) -> Result<Self> {
        let top = labels.len().saturating_sub(1);
        let dims: Vec<usize> = labels.iter().map(|l| l.len()).collect();
        let mut products = Vec::with_capacity(top + 1);
        for p in 0..=top {
            let mut row = Vec::with_capacity(top + 1 - p);
            for q in 0..=top - p {
                let mut block = Vec::with_capacity(dims[p]);
                for i in 0..dims[p] {
                    let mut line = Vec::with_capacity(dims[q]);
                    for j in 0..dims[q] {
                        line.push(mul(p, i, q, j)?);
                    }
                    block.push(line);
                }
                row.push(block);
            }
            products.push(row);
        }
        Ok(CohomologyRing {
            modulus,
            top_degree: top,
            labels,
            products,
            fundamental_pairing,
        })
    }

    /// `H^*(point)`.
    pub fn point(m: u64) -> Self {
        CohomologyRing {
            modulus: m,
            top_degree: 0,
            labels: vec![vec!["1".into()]],
            products: vec![vec![vec![vec![vec![1]]]]],
            fundamental_pairing: Some(vec![1]),
        }
    }

    /// `H^*(S^n)` with generator `s` in degree `n`.
    pub fn sphere(n: usize, m: u64) -> Self {
        assert!(n >= 1);
        let mut labels = vec![Vec::new(); n + 1];
        labels[0].push("1".into());
        labels[n].push(format!("s{n}"));
        // only products with the unit land in a non-zero degree
        CohomologyRing::build(m, labels, Some(vec![1]), |_, _, _, _| Ok(vec![1]))
        .expect("sphere table")
    }

    pub fn dim(&self, k: usize) -> usize {
        self.labels.get(k).map_or(0, |l| l.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    /// Coordinates of `e_{p,i} ⌣ e_{q,j}`; empty when `p + q` exceeds the top degree.
    pub fn basis_product(&self, p: usize, i: usize, q: usize, j: usize) -> &[u64] {
        if p + q > self.top_degree {
            return &[];
        }
        &self.products[p][q][i][j]
    }

    /// Product of arbitrary classes given by coordinates.
    pub fn product(&self, p: usize, u: &[u64], q: usize, v: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        let mut out = vec![0u64; self.dim(p + q)];
        if p + q > self.top_degree {
            return out;
        }
        for (i, &a) in u.iter().enumerate() {
            if a % m == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b % m == 0 {
                    continue;
                }
                let f = a % m * (b % m) % m;
                for (o, &c) in out.iter_mut().zip(&self.products[p][q][i][j]) {
                    *o = (*o + f * c) % m;
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<u64> {
        let mut e = vec![0; self.dim(0)];
        if let Some(first) = e.first_mut() {
            *first = 1;
        }
        e
    }

    pub fn basis_vector(&self, k: usize, i: usize) -> Vec<u64> {
        let mut e = vec![0; self.dim(k)];
        e[i] = 1;
        e
    }

    /// Pairing of a top-degree class with the fundamental class.
    pub fn pairing(&self, u: &[u64]) -> Option<u64> {
        let f = self.fundamental_pairing.as_ref()?;
        let m = self.modulus;
        Some(u.iter().zip(f).fold(0, |acc, (&a, &b)| (acc + a % m * b) % m))
    }
}

/// Ring table of `H^*(X; Z/p)` on the deterministic echelon basis, together
/// with the cocycle representatives used.
pub fn ring_with_bases(x: &DeltaComplex, m: u64) -> Result<(CohomologyRing, Vec<CohomologyBasis>)> {
    if !is_prime(m) {
        return Err(Error::CompositeModulus(m));
    }
    let bases = cohomology_basis(x, m)?;
    let labels = bases
        .iter()
        .map(|b| {
            if b.degree == 0 {
                (0..b.len()).map(|i| if i == 0 { "1".to_string() } else { format!("e0.{i}") }).collect()
            } else {
                (0..b.len()).map(|i| format!("e{}.{i}", b.degree)).collect()
            }
        })
        .collect();
    let top = x.dim();
    let pairing = if x.is_closed_pseudo_manifold() && (m == 2 || x.orientation().is_some()) {
        Some(
            bases[top]
                .representatives
                .iter()
                .map(|r| kronecker_top(x, r, m))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let ring = CohomologyRing::build(m, labels, pairing, |p, i, q, j| {
        let c = cup_product(x, p, &bases[p].representatives[i], q, &bases[q].representatives[j], m)?;
        bases[p + q].coordinates(&c)
    })?;
    Ok((ring, bases))
}

pub fn ring_table(x: &DeltaComplex, m: u64) -> Result<CohomologyRing> {
    Ok(ring_with_bases(x, m)?.0)
}

/// A non-zero product of positive-degree basis classes, listed left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupLengthWitness {
    /// `(degree, basis index)` of each factor.
    pub factors: Vec<(usize, usize)>,
    /// Degree and coordinates of the product.
    pub product_class: (usize, Vec<u64>),
    pub length: usize,
}

impl CupLengthWitness {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.0).collect()
    }

    /// Recomputes the product in `r` and checks it against the recorded class.
    pub fn recheck(&self, r: &CohomologyRing) -> bool {
        let mut deg = 0;
        let mut acc = r.unit();
        for &(d, i) in self.factors.iter().rev() {
            if i >= r.dim(d) || d == 0 {
                return false;
            }
            acc = r.product(d, &r.basis_vector(d, i), deg, &acc);
            deg += d;
        }
        self.length == self.factors.len()
            && (deg, &acc) == (self.product_class.0, &self.product_class.1)
            && acc.iter().any(|&c| c % r.modulus != 0)
    }
}

/// Exact cup-length by dynamic programming over attainable subspaces: level
/// `k` keeps, per degree, an independent set of `k`-fold basis products
/// spanning all such products.
pub fn cup_length(r: &CohomologyRing) -> (usize, CupLengthWitness) {
    let m = r.modulus;
    struct Item {
        deg: usize,
        coords: Vec<u64>,
        factors: Vec<(usize, usize)>,
    }
    let mut level: Vec<Item> = Vec::new();
    for d in 1..=r.top_degree {
        let mut ech = TaggedEchelon::new(m, 0);
        for i in 0..r.dim(d) {
            let e = r.basis_vector(d, i);
            if ech.insert(e.clone(), Vec::new()) {
                level.push(Item {
                    deg: d,
                    coords: e,
                    factors: vec![(d, i)],
                });
            }
        }
    }
    if level.is_empty() {
        return (
            0,
            CupLengthWitness {
                factors: Vec::new(),
                product_class: (0, r.unit()),
                length: 0,
            },
        );
    }
    let mut length = 1;
    loop {
        let mut echs: Vec<TaggedEchelon> = (0..=r.top_degree).map(|_| TaggedEchelon::new(m, 0)).collect();
        let mut next = Vec::new();
        for w in &level {
            for e in 1..=r.top_degree - w.deg.min(r.top_degree) {
                for i in 0..r.dim(e) {
                    let d = e + w.deg;
                    let c = r.product(e, &r.basis_vector(e, i), w.deg, &w.coords);
                    if echs[d].insert(c.clone(), Vec::new()) {
                        let mut factors = vec![(e, i)];
                        factors.extend(&w.factors);
                        next.push(Item { deg: d, coords: c, factors });
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
        length += 1;
    }
    let w = &level[0];
    (
        length,
        CupLengthWitness {
            factors: w.factors.clone(),
            product_class: (w.deg, w.coords.clone()),
            length,
        },
    )
}

/// Graded tensor product `R1 ⊗ R2` with `(a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd`.
/// The degree-`n` basis is all pairs `(e_{p,i}, f_{n-p,j})` ordered by `p`, `i`, `j`.
pub fn kunneth_tensor(r1: &CohomologyRing, r2: &CohomologyRing) -> Result<CohomologyRing> {
    if r1.modulus != r2.modulus {
        return Err(Error::ModulusMismatch(r1.modulus, r2.modulus));
    }
    let m = r1.modulus;
    if !is_prime(m) {
        return Err(Error::CompositeModulus(m));
    }
    let top = r1.top_degree + r2.top_degree;
    // index[n] lists (p, i, j)
    let mut index: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); top + 1];
    for (n, slot) in index.iter_mut().enumerate() {
        for p in 0..=n {
            for i in 0..r1.dim(p) {
                for j in 0..r2.dim(n - p) {
                    slot.push((p, i, j));
                }
            }
        }
    }
    let labels = index
        .iter()
        .enumerate()
        .map(|(n, v)| {
            v.iter()
                .map(|&(p, i, j)| format!("{}x{}", r1.labels[p][i], r2.labels[n - p][j]))
                .collect()
        })
        .collect();
    let pairing = match (&r1.fundamental_pairing, &r2.fundamental_pairing) {
        (Some(f1), Some(f2)) => Some(
            index[top]
                .iter()
                .map(|&(p, i, j)| {
                    if p == r1.top_degree {
                        f1[i] * f2[j] % m
                    } else {
                        0
                    }
                })
                .collect(),
        ),
        _ => None,
    };
    let pos: Vec<std::collections::HashMap<(usize, usize, usize), usize>> = index
        .iter()
        .map(|v| v.iter().enumerate().map(|(k, &t)| (t, k)).collect())
        .collect();
    CohomologyRing::build(m, labels, pairing, |n1, a, n2, b| {
        let (p1, i1, j1) = index[n1][a];
        let (p2, i2, j2) = index[n2][b];
        let (q1, q2) = (n1 - p1, n2 - p2);
        let n = n1 + n2;
        let mut out = vec![0u64; index[n].len()];
        let (pa, qb) = (p1 + p2, q1 + q2);
        if pa > r1.top_degree || qb > r2.top_degree {
            return Ok(out);
        }
        let left = r1.basis_product(p1, i1, p2, i2);
        let right = r2.basis_product(q1, j1, q2, j2);
        let neg = (q1 * p2) % 2 == 1;
        for (k, &x) in left.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (l, &y) in right.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let mut v = x * y % m;
                if neg {
                    v = (m - v) % m;
                }
                let t = pos[n][&(pa, k, l)];
                out[t] = (out[t] + v) % m;
            }
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generator;

    #[test]
    fn sphere_ring_products() {
        let s = CohomologyRing::sphere(2, 3);
        assert_eq!(s.dims(), vec![1, 0, 1]);
        assert_eq!(s.basis_product(0, 0, 2, 0), &[1]);
        assert_eq!(cup_length(&s).0, 1);
    }

    #[test]
    fn tensor_with_point_is_identity() {
        let x = generator("RP3", &[]).unwrap();
        let r = ring_table(&x, 2).unwrap();
        let t = kunneth_tensor(&r, &CohomologyRing::point(2)).unwrap();
        assert_eq!(t.dims(), r.dims());
        assert_eq!(cup_length(&t).0, cup_length(&r).0);
    }

    #[test]
    fn two_spheres_have_cup_length_two() {
        let t = kunneth_tensor(&CohomologyRing::sphere(1, 2), &CohomologyRing::sphere(2, 2)).unwrap();
        let (cl, w) = cup_length(&t);
        assert_eq!(cl, 2);
        assert!(w.recheck(&t));
    }

    #[test]
    fn unit_acts_trivially() {
        let x = generator("T3", &[]).unwrap();
        let (r, bases) = ring_with_bases(&x, 2).unwrap();
        for k in 0..=3 {
            for i in 0..r.dim(k) {
                assert_eq!(r.basis_product(0, 0, k, i), r.basis_vector(k, i).as_slice());
            }
        }
        let one = &bases[0].representatives[0];
        let b = &bases[1].representatives[1];
        assert_eq!(&cup_product(&x, 0, one, 1, b, 2).unwrap(), b);
    }

    #[test]
    fn degree_overflow() {
        let x = generator("S3", &[]).unwrap();
        let a = vec![0; x.count(2)];
        assert_eq!(cup_product(&x, 2, &a, 2, &a, 2), Err(Error::DegreeOverflow(4, 3)));
    }

    #[test]
    fn composite_ring_rejected() {
        let x = generator("S3", &[]).unwrap();
        assert_eq!(ring_table(&x, 4), Err(Error::CompositeModulus(4)));
    }
}
