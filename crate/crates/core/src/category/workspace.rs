//! Lazily computed triangulations, cohomology bases and ring tables for the
//! spaces named in a certificate.

use std::collections::HashMap;

use super::cert::{SpaceDecl, SpaceKind};
use crate::algebra::{cohomology_basis, is_prime, CohomologyBasis};
use crate::complex::{circle, product, product_chains, sphere, DeltaComplex, ProductCell};
use crate::error::{Error, Result};
use crate::manifold::{triangulate_expr, ManifoldExpr};
use crate::ring::{cup_length, cup_product, kronecker_top, kunneth_tensor, pullback_from_factor, ring_with_bases};
use crate::ring::{CohomologyRing, CupLengthWitness};

/// How a space's cohomology can be reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Cocycles on a triangulation.
    Cochain,
    /// Structure constants of a Künneth tensor ring (prime moduli only).
    Tensor,
}

pub fn sphere_complex(n: usize) -> DeltaComplex {
    if n == 1 {
        circle()
    } else {
        sphere(n)
    }
}

/// Largest sphere factor triangulated directly; `3 + 1` is the dimension cap
/// of product triangulations.
const MAX_TRIANGULATED_SPHERE: usize = 1;

pub fn level_of(kind: &SpaceKind, coeffs: Option<u64>) -> Option<Level> {
    match kind {
        SpaceKind::Sphere(_) | SpaceKind::Complex(_) => Some(Level::Cochain),
        SpaceKind::Expr(e) => e.triangulable().then_some(Level::Cochain),
        SpaceKind::Product(e, n) => {
            if !e.triangulable() {
                None
            } else if *n <= MAX_TRIANGULATED_SPHERE {
                Some(Level::Cochain)
            } else if coeffs.is_none_or(is_prime) {
                Some(Level::Tensor)
            } else {
                None
            }
        }
    }
}

#[derive(Default)]
pub struct Workspace {
    spaces: HashMap<String, SpaceKind>,
    complexes: HashMap<String, DeltaComplex>,
    bases: HashMap<(String, u64), Vec<CohomologyBasis>>,
    rings: HashMap<(String, u64), CohomologyRing>,
    cells: HashMap<String, Vec<Vec<ProductCell>>>,
    expr_complexes: HashMap<ManifoldExpr, DeltaComplex>,
}

impl Workspace {
    pub fn new(spaces: &[SpaceDecl]) -> Self {
        let mut w = Workspace::default();
        for s in spaces {
            w.spaces.insert(s.label.clone(), s.kind.clone());
        }
        w
    }

    pub fn add(&mut self, decl: &SpaceDecl) {
        self.spaces.insert(decl.label.clone(), decl.kind.clone());
    }

    pub fn kind(&self, label: &str) -> Result<&SpaceKind> {
        self.spaces
            .get(label)
            .ok_or_else(|| Error::Invalid(format!("undeclared space `{label}`")))
    }

    pub fn level(&self, label: &str, coeffs: Option<u64>) -> Result<Option<Level>> {
        Ok(level_of(self.kind(label)?, coeffs))
    }

    fn expr_complex(&mut self, e: &ManifoldExpr) -> Result<DeltaComplex> {
        if let Some(x) = self.expr_complexes.get(e) {
            return Ok(x.clone());
        }
        let x = triangulate_expr(e)?;
        self.expr_complexes.insert(e.clone(), x.clone());
        Ok(x)
    }

    pub fn complex(&mut self, label: &str) -> Result<&DeltaComplex> {
        if !self.complexes.contains_key(label) {
            let x = match self.kind(label)?.clone() {
                SpaceKind::Expr(e) => self.expr_complex(&e)?,
                SpaceKind::Sphere(n) => sphere_complex(n),
                SpaceKind::Complex(x) => x,
                SpaceKind::Product(e, n) => {
                    if n > MAX_TRIANGULATED_SPHERE {
                        return Err(Error::DimensionOverflow(3 + n));
                    }
                    product(&self.expr_complex(&e)?, &sphere_complex(n))?
                }
            };
            self.complexes.insert(label.to_string(), x);
        }
        Ok(&self.complexes[label])
    }

    pub fn bases(&mut self, label: &str, m: u64) -> Result<&Vec<CohomologyBasis>> {
        let key = (label.to_string(), m);
        if !self.bases.contains_key(&key) {
            let b = cohomology_basis(self.complex(label)?, m)?;
            self.bases.insert(key.clone(), b);
        }
        Ok(&self.bases[&key])
    }

    fn basis(&mut self, label: &str, m: u64, deg: usize) -> Result<&CohomologyBasis> {
        let bs = self.bases(label, m)?;
        bs.get(deg).ok_or(Error::DegreeOverflow(deg, bs.len().saturating_sub(1)))
    }

    /// Ring table over a prime modulus: computed on the triangulation, or as
    /// `H*(M) ⊗ H*(S^n)` for products at tensor level.
    pub fn ring(&mut self, label: &str, m: u64) -> Result<&CohomologyRing> {
        let key = (label.to_string(), m);
        if !self.rings.contains_key(&key) {
            let r = match self.level(label, Some(m))? {
                Some(Level::Tensor) => {
                    let SpaceKind::Product(e, n) = self.kind(label)?.clone() else {
                        unreachable!("only products use tensor level")
                    };
                    let x = self.expr_complex(&e)?;
                    kunneth_tensor(&ring_with_bases(&x, m)?.0, &CohomologyRing::sphere(n, m))?
                }
                Some(Level::Cochain) => ring_with_bases(self.complex(label)?, m)?.0,
                None => return Err(Error::Invalid(format!("space `{label}` has no computable cohomology"))),
            };
            self.rings.insert(key.clone(), r);
        }
        Ok(&self.rings[&key])
    }

    /// Number of basis classes and their orders in degree `deg`.
    pub fn orders(&mut self, label: &str, m: u64, deg: usize) -> Result<Vec<u64>> {
        match self.level(label, Some(m))? {
            Some(Level::Tensor) => {
                let r = self.ring(label, m)?;
                if deg > r.top_degree {
                    return Err(Error::DegreeOverflow(deg, r.top_degree));
                }
                Ok(vec![m; r.dim(deg)])
            }
            _ => Ok(self.basis(label, m, deg)?.orders.clone()),
        }
    }

    pub fn is_zero(&mut self, label: &str, m: u64, deg: usize, coords: &[u64]) -> Result<bool> {
        let orders = self.orders(label, m, deg)?;
        if coords.len() != orders.len() {
            return Err(Error::Invalid(format!(
                "class has {} coordinates but H^{deg}({label}; Z/{m}) has {} generators",
                coords.len(),
                orders.len()
            )));
        }
        Ok(coords.iter().zip(&orders).all(|(&c, &o)| c % o == 0))
    }

    /// Reduces coordinates modulo the generator orders.
    pub fn reduce(&mut self, label: &str, m: u64, deg: usize, coords: &[u64]) -> Result<Vec<u64>> {
        let orders = self.orders(label, m, deg)?;
        if coords.len() != orders.len() {
            return Err(Error::Invalid(format!(
                "class has {} coordinates, expected {}",
                coords.len(),
                orders.len()
            )));
        }
        Ok(coords.iter().zip(&orders).map(|(&c, &o)| c % o).collect())
    }

    /// Left-to-right cup product of classes on one space.
    pub fn cup(&mut self, label: &str, m: u64, classes: &[(usize, Vec<u64>)]) -> Result<(usize, Vec<u64>)> {
        let (d0, c0) = classes.first().ok_or_else(|| Error::Invalid("empty product".into()))?;
        let mut deg = *d0;
        if self.level(label, Some(m))? == Some(Level::Tensor) {
            let r = self.ring(label, m)?;
            let mut acc = c0.clone();
            for (d, c) in &classes[1..] {
                if deg + d > r.top_degree {
                    return Err(Error::DegreeOverflow(deg + d, r.top_degree));
                }
                acc = r.product(deg, &acc, *d, c);
                deg += d;
            }
            return Ok((deg, acc));
        }
        let mut acc = self.basis(label, m, deg)?.representative(c0);
        for (d, c) in &classes[1..] {
            let rep = self.basis(label, m, *d)?.representative(c);
            acc = cup_product(self.complex(label)?, deg, &acc, *d, &rep, m)?;
            deg += d;
        }
        let coords = self.basis(label, m, deg)?.coordinates(&acc)?;
        Ok((deg, coords))
    }

    /// Pulls a class on factor `factor` (1 = the 3-manifold, 2 = the sphere)
    /// back to the product space `label`.
    pub fn pull_projection(
        &mut self,
        label: &str,
        factor_label: &str,
        factor: usize,
        m: u64,
        deg: usize,
        coords: &[u64],
    ) -> Result<Vec<u64>> {
        let SpaceKind::Product(e, n) = self.kind(label)?.clone() else {
            return Err(Error::Invalid(format!("`{label}` is not a product space")));
        };
        match self.level(label, Some(m))? {
            Some(Level::Tensor) => {
                let x = self.expr_complex(&e)?;
                let factor_ring = match factor {
                    1 => ring_with_bases(&x, m)?.0,
                    _ => CohomologyRing::sphere(n, m),
                };
                let r = self.ring(label, m)?;
                let mut out = vec![0; r.dim(deg)];
                for (i, &c) in coords.iter().enumerate() {
                    if c % m == 0 {
                        continue;
                    }
                    let name = match factor {
                        1 => format!("{}x1", factor_ring.labels[deg][i]),
                        _ => format!("1x{}", factor_ring.labels[deg][i]),
                    };
                    let pos = r.labels[deg]
                        .iter()
                        .position(|l| *l == name)
                        .ok_or_else(|| Error::Invalid(format!("no tensor basis element {name}")))?;
                    out[pos] = (out[pos] + c) % m;
                }
                Ok(out)
            }
            Some(Level::Cochain) => {
                if !self.cells.contains_key(label) {
                    let a = self.expr_complex(&e)?;
                    self.cells.insert(label.to_string(), product_chains(&a, &sphere_complex(n)));
                }
                let rep = self.basis(factor_label, m, deg)?.representative(coords);
                let pulled = pullback_from_factor(&self.cells[label], deg, &rep, factor == 1);
                self.basis(label, m, deg)?.coordinates(&pulled)
            }
            None => Err(Error::Invalid(format!("space `{label}` has no computable cohomology"))),
        }
    }

    /// Value of a top-degree class on the fundamental class.
    pub fn top_pairing(&mut self, label: &str, m: u64, coords: &[u64]) -> Result<u64> {
        let top = self.complex(label)?.dim();
        let rep = self.basis(label, m, top)?.representative(coords);
        kronecker_top(self.complex(label)?, &rep, m)
    }

    /// `Z/2` cup-length and a witness, on the triangulation or tensor ring.
    pub fn cup_length(&mut self, label: &str) -> Result<(usize, CupLengthWitness)> {
        Ok(cup_length(self.ring(label, 2)?))
    }
}
