//! Invariants every closed 3-dimensional complex of the suite must satisfy.
//! Each check returns a description of the first failure.

use lscat::algebra::{boundary_matrix, coboundary, cohomology_basis, homology, Coefficients};
use lscat::complex::DeltaComplex;
use lscat::pi1::spine_presentation;
use lscat::ring::{cup_product, ring_table};
use rand::Rng;

use super::{oracle_homology, rank_mod};

pub type Check = Result<(), String>;

pub fn boundary_squared(x: &DeltaComplex) -> Check {
    if let Some(v) = x.first_identity_violation() {
        return Err(v);
    }
    for k in 1..x.dim() {
        if !boundary_matrix(x, k).mul(&boundary_matrix(x, k + 1)).is_zero() {
            return Err(format!("d{k} d{} != 0", k + 1));
        }
    }
    Ok(())
}

fn random_cochain(x: &DeltaComplex, k: usize, m: u64, rng: &mut impl Rng) -> Vec<u64> {
    (0..x.count(k)).map(|_| rng.gen_range(0..m)).collect()
}

pub fn coboundary_squared(x: &DeltaComplex, trials: usize, rng: &mut impl Rng) -> Check {
    for t in 0..trials {
        let m = [2, 3, 5, 12][t % 4];
        let k = t % (x.dim() - 1);
        let c = random_cochain(x, k, m, rng);
        let dd = coboundary(x, k + 1, &coboundary(x, k, &c, m), m);
        if dd.iter().any(|&v| v % m != 0) {
            return Err(format!("delta delta != 0 in degree {k} mod {m}"));
        }
    }
    Ok(())
}

/// `δ(a⌣b) = δa⌣b + (-1)^p a⌣δb` for random (not necessarily closed) cochains.
pub fn leibniz(x: &DeltaComplex, trials: usize, rng: &mut impl Rng) -> Check {
    let n = x.dim();
    for t in 0..trials {
        let m = [2, 3, 7, 12][t % 4];
        let p = rng.gen_range(0..n);
        let q = rng.gen_range(0..n - p);
        let a = random_cochain(x, p, m, rng);
        let b = random_cochain(x, q, m, rng);
        let ab = cup_product(x, p, &a, q, &b, m).unwrap();
        let lhs = coboundary(x, p + q, &ab, m);
        let l = cup_product(x, p + 1, &coboundary(x, p, &a, m), q, &b, m).unwrap();
        let r = cup_product(x, p, &a, q + 1, &coboundary(x, q, &b, m), m).unwrap();
        for s in 0..lhs.len() {
            let rhs = if p % 2 == 0 { (l[s] + r[s]) % m } else { (l[s] + m - r[s]) % m };
            if lhs[s] % m != rhs {
                return Err(format!("Leibniz fails for degrees {p},{q} mod {m} at simplex {s}"));
            }
        }
    }
    Ok(())
}

/// The `Z/2` pairing `H^k × H^{3-k} -> Z/2` is non-degenerate.
pub fn duality_z2(x: &DeltaComplex) -> Check {
    let r = ring_table(x, 2).map_err(|e| e.to_string())?;
    let n = r.top_degree;
    for k in 0..=n {
        if r.dim(k) != r.dim(n - k) {
            return Err(format!("dim H^{k} != dim H^{}", n - k));
        }
        let mat: Vec<Vec<u64>> = (0..r.dim(k))
            .map(|i| {
                (0..r.dim(n - k))
                    .map(|j| r.pairing(r.basis_product(k, i, n - k, j)).unwrap())
                    .collect()
            })
            .collect();
        if rank_mod(mat, 2) != r.dim(k) {
            return Err(format!("pairing degenerate in degree {k}"));
        }
    }
    Ok(())
}

pub fn euler_zero(x: &DeltaComplex) -> Check {
    match x.euler_characteristic() {
        0 => Ok(()),
        c => Err(format!("chi = {c}")),
    }
}

/// Field homology and cohomology dimensions against the prediction from the
/// integral groups.
pub fn universal_coefficients(x: &DeltaComplex) -> Check {
    let integral = oracle_homology(x);
    let divisible = |k: usize, p: u64| integral[k].1.iter().filter(|&&t| t % p == 0).count();
    for p in [2u64, 3, 5] {
        let h = homology(x, Coefficients::Mod(p)).map_err(|e| e.to_string())?;
        let co = cohomology_basis(x, p).map_err(|e| e.to_string())?;
        for k in 0..integral.len() {
            let want = integral[k].0 + divisible(k, p) + if k > 0 { divisible(k - 1, p) } else { 0 };
            if h.rank(k) != want || co[k].len() != want {
                return Err(format!(
                    "degree {k} mod {p}: homology {} cohomology {} predicted {want}",
                    h.rank(k),
                    co[k].len()
                ));
            }
        }
    }
    Ok(())
}

pub fn abelianization_is_h1(x: &DeltaComplex) -> Check {
    let ab = spine_presentation(x).map_err(|e| e.to_string())?.abelianization();
    let h1 = oracle_homology(x).swap_remove(1);
    if (ab.rank, ab.torsion.clone()) == h1 {
        Ok(())
    } else {
        Err(format!("abelianization {ab:?} vs H1 {h1:?}"))
    }
}

pub const TRIALS: usize = 1000;

/// Every property on one complex.
pub fn all(x: &DeltaComplex, rng: &mut impl Rng) -> Vec<(&'static str, Check)> {
    vec![
        ("boundary squared", boundary_squared(x)),
        ("coboundary squared", coboundary_squared(x, TRIALS, rng)),
        ("Leibniz", leibniz(x, TRIALS, rng)),
        ("Z/2 duality", duality_z2(x)),
        ("Euler characteristic", euler_zero(x)),
        ("universal coefficients", universal_coefficients(x)),
        ("abelianization", abelianization_is_h1(x)),
    ]
}
