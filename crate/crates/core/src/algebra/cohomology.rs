//! Explicit cohomology representatives over `Z/m`.
//!
//! Over a prime field the basis is the echelon complement of the coboundaries
//! inside the cocycles, taken in lexicographic pivot order. Over a composite
//! modulus the group is presented as a quotient of integer lattices and
//! reported as generators with their orders.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::chain::{boundary_matrix, coboundary, coboundary_mod};
use super::matrix::{smith_normal_form_with_inverses, IntMatrix};
use super::modp::{is_prime, nullspace, TaggedEchelon};
use crate::complex::DeltaComplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Coordinates {
    Field(TaggedEchelon),
    Lattice(LatticeData),
}

#[derive(Debug, Clone)]
struct LatticeData {
    v_inv: IntMatrix,
    g: Vec<BigInt>,
    u2: IntMatrix,
    gen_index: Vec<usize>,
}

/// Generators of `H^k(X; Z/m)` as explicit cocycles, with their orders.
#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    pub modulus: u64,
    pub degree: usize,
    pub representatives: Vec<Vec<u64>>,
    pub orders: Vec<u64>,
    coords: Coordinates,
}

impl CohomologyBasis {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Coordinates of a cocycle's class; coordinate `i` is taken mod `orders[i]`.
    pub fn coordinates(&self, cocycle: &[u64]) -> Result<Vec<u64>> {
        let m = self.modulus;
        let v: Vec<u64> = cocycle.iter().map(|&c| c % m).collect();
        match &self.coords {
            Coordinates::Field(e) => e
                .express(&v)
                .ok_or_else(|| Error::Invalid(format!("cochain is not a degree-{} cocycle", self.degree))),
            Coordinates::Lattice(l) => {
                let n = v.len();
                let mut z = Vec::with_capacity(n);
                for i in 0..n {
                    let mut y = BigInt::zero();
                    for (j, &c) in v.iter().enumerate() {
                        if c != 0 {
                            y += l.v_inv.get(i, j) * BigInt::from(c);
                        }
                    }
                    let (q, r) = y.div_mod_floor(&l.g[i]);
                    if !r.is_zero() {
                        return Err(Error::Invalid(format!(
                            "cochain is not a degree-{} cocycle mod {m}",
                            self.degree
                        )));
                    }
                    z.push(q);
                }
                Ok(l
                    .gen_index
                    .iter()
                    .zip(&self.orders)
                    .map(|(&i, &o)| {
                        let mut w = BigInt::zero();
                        for (j, zj) in z.iter().enumerate() {
                            if !zj.is_zero() {
                                w += l.u2.get(i, j) * zj;
                            }
                        }
                        w.mod_floor(&BigInt::from(o)).to_u64().expect("reduced below order")
                    })
                    .collect())
            }
        }
    }

    /// Cocycle representing `Σ coords[i] · generator_i`.
    pub fn representative(&self, coords: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        let n = self.representatives.first().map_or(0, |r| r.len());
        let mut out = vec![0u64; n];
        for (c, rep) in coords.iter().zip(&self.representatives) {
            if *c % m == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(rep) {
                *o = (*o + (c % m) * r) % m;
            }
        }
        out
    }

    pub fn is_zero_class(&self, coords: &[u64]) -> bool {
        coords.iter().zip(&self.orders).all(|(&c, &o)| c % o == 0)
    }

    fn lattice_data(&self) -> Option<&LatticeData> {
        match &self.coords {
            Coordinates::Lattice(l) => Some(l),
            Coordinates::Field(_) => None,
        }
    }
}

/// `H^k(X; Z/m)` for every degree `k`.
pub fn cohomology_basis(x: &DeltaComplex, m: u64) -> Result<Vec<CohomologyBasis>> {
    (0..=x.dim()).map(|k| cohomology_basis_degree(x, m, k)).collect()
}

pub fn cohomology_basis_degree(x: &DeltaComplex, m: u64, k: usize) -> Result<CohomologyBasis> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    if let Some(v) = x.first_identity_violation() {
        return Err(Error::MalformedComplex(v));
    }
    if k > x.dim() {
        return Err(Error::DegreeOverflow(k, x.dim()));
    }
    if is_prime(m) {
        Ok(field_basis(x, m, k))
    } else {
        lattice_basis(x, m, k)
    }
}

fn field_basis(x: &DeltaComplex, p: u64, k: usize) -> CohomologyBasis {
    let n = x.count(k);
    let cocycles = nullspace(&coboundary_mod(x, k, p), n, p);
    let coboundaries: Vec<Vec<u64>> = if k == 0 {
        Vec::new()
    } else {
        (0..x.count(k - 1))
            .map(|t| {
                let mut e = vec![0u64; x.count(k - 1)];
                e[t] = 1;
                coboundary(x, k - 1, &e, p)
            })
            .collect()
    };
    // first pass: which cocycles are new modulo coboundaries
    let mut plain = TaggedEchelon::new(p, 0);
    for b in &coboundaries {
        plain.insert(b.clone(), Vec::new());
    }
    let reps: Vec<Vec<u64>> = cocycles
        .into_iter()
        .filter(|z| plain.insert(z.clone(), Vec::new()))
        .collect();
    let h = reps.len();
    let mut tagged = TaggedEchelon::new(p, h);
    for b in coboundaries {
        tagged.insert(b, vec![0; h]);
    }
    for (i, z) in reps.iter().enumerate() {
        let mut tag = vec![0; h];
        tag[i] = 1;
        tagged.insert(z.clone(), tag);
    }
    CohomologyBasis {
        modulus: p,
        degree: k,
        orders: vec![p; h],
        representatives: reps,
        coords: Coordinates::Field(tagged),
    }
}

pub(crate) fn lattice_basis(x: &DeltaComplex, m: u64, k: usize) -> Result<CohomologyBasis> {
    let n = x.count(k);
    let mb = BigInt::from(m);
    // δ^k = ∂_{k+1}^T and δ^{k-1} = ∂_k^T
    let delta = if k < x.dim() {
        boundary_matrix(x, k + 1).transpose()
    } else {
        IntMatrix::zeros(0, n)
    };
    let delta_prev = if k > 0 {
        boundary_matrix(x, k).transpose()
    } else {
        IntMatrix::zeros(n, 0)
    };
    let snf = smith_normal_form_with_inverses(&delta);
    let diag = snf.diagonal();
    let g: Vec<BigInt> = (0..n)
        .map(|i| match diag.get(i) {
            Some(d) => &mb / d.gcd(&mb),
            None => BigInt::from(1),
        })
        .collect();
    let v = &snf.v;
    let v_inv = snf.v_inv.expect("inverses tracked");
    // relations of Z'/B' in Z'-coordinates
    let moved = v_inv.mul(&delta_prev);
    let a = delta_prev.cols();
    let mut rel = IntMatrix::zeros(n, a + n);
    for i in 0..n {
        for j in 0..a {
            let e = moved.get(i, j);
            if !e.is_zero() {
                let (q, r) = e.div_mod_floor(&g[i]);
                if !r.is_zero() {
                    return Err(Error::Invalid("coboundary outside cocycle lattice".into()));
                }
                rel.set(i, j, q);
            }
        }
        rel.set(i, a + i, &mb / &g[i]);
    }
    let snf2 = smith_normal_form_with_inverses(&rel);
    let u2 = snf2.u.clone();
    let u2_inv = snf2.u_inv.clone().expect("inverses tracked");
    let mut reps = Vec::new();
    let mut orders = Vec::new();
    let mut gen_index = Vec::new();
    for i in 0..n {
        let e = snf2.s.get(i, i);
        if e == &BigInt::from(1) {
            continue;
        }
        let order = e.to_u64().ok_or_else(|| Error::Overflow("generator order".into()))?;
        // x = V diag(g) U2^{-1} e_i mod m
        let mut rep = vec![0u64; n];
        for (r, out) in rep.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for j in 0..n {
                let w = u2_inv.get(j, i);
                if !w.is_zero() {
                    acc += v.get(r, j) * &g[j] * w;
                }
            }
            *out = acc.mod_floor(&mb).to_u64().expect("reduced mod m");
        }
        reps.push(rep);
        orders.push(order);
        gen_index.push(i);
    }
    Ok(CohomologyBasis {
        modulus: m,
        degree: k,
        representatives: reps,
        orders,
        coords: Coordinates::Lattice(LatticeData {
            v_inv,
            g,
            u2,
            gen_index,
        }),
    })
}

/// Whether a basis was built by the lattice route (composite moduli).
pub fn is_lattice_basis(b: &CohomologyBasis) -> bool {
    b.lattice_data().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generator;

    #[test]
    fn sphere_mod_5_has_degrees_0_and_3() {
        let x = generator("S3", &[]).unwrap();
        let dims: Vec<usize> = cohomology_basis(&x, 5).unwrap().iter().map(|b| b.len()).collect();
        assert_eq!(dims, vec![1, 0, 0, 1]);
    }

    #[test]
    fn representatives_are_cocycles_with_unit_coordinates() {
        let x = generator("T3", &[]).unwrap();
        for b in cohomology_basis(&x, 3).unwrap() {
            for (i, rep) in b.representatives.iter().enumerate() {
                assert!(coboundary(&x, b.degree, rep, 3).iter().all(|&v| v == 0));
                let mut e = vec![0; b.len()];
                e[i] = 1;
                assert_eq!(b.coordinates(rep).unwrap(), e);
            }
        }
    }

    #[test]
    fn lattice_route_matches_field_route_for_primes() {
        let x = generator("L", &[3, 1]).unwrap();
        for k in 0..=3 {
            let field = field_basis(&x, 3, k);
            let lattice = lattice_basis(&x, 3, k).unwrap();
            assert_eq!(field.len(), lattice.len(), "degree {k}");
            assert!(lattice.orders.iter().all(|&o| o == 3));
        }
    }

    #[test]
    fn composite_lens_cohomology() {
        // H^*(L(4,1); Z/4) = Z/4 in every degree
        let x = generator("L", &[4, 1]).unwrap();
        let b = cohomology_basis(&x, 4).unwrap();
        for bk in &b {
            assert_eq!(bk.orders, vec![4], "degree {}", bk.degree);
        }
        // H^*(L(4,1); Z/6): Z/6, Z/2, Z/2, Z/6
        let b = cohomology_basis(&x, 6).unwrap();
        let orders: Vec<Vec<u64>> = b.iter().map(|bk| bk.orders.clone()).collect();
        assert_eq!(orders, vec![vec![6], vec![2], vec![2], vec![6]]);
    }
}
