use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::chain::boundary_entries;
use super::matrix::{smith_normal_form, IntMatrix};
use super::modp::{is_prime, rank as rank_mod_p};
use crate::complex::DeltaComplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Mod(u64),
}

impl Coefficients {
    pub fn check(self) -> Result<Self> {
        match self {
            Coefficients::Mod(m) if m < 2 => Err(Error::BadModulus(m)),
            c => Ok(c),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Mod(m) => write!(f, "Z/{m}"),
        }
    }
}

/// One homology group: `rank` copies of the coefficient ring plus cyclic
/// torsion summands given as an ascending divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroups {
    pub coefficients: Coefficients,
    pub degrees: Vec<DegreeGroup>,
}

impl HomologyGroups {
    pub fn rank(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, k: usize) -> &[u64] {
        self.degrees.get(k).map_or(&[], |g| &g.torsion)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|g| g.rank).collect()
    }

    /// Human-readable table, one `H_k = ...` line per degree.
    pub fn table(&self) -> String {
        let ring = self.coefficients.to_string();
        let mut out = String::new();
        for (k, g) in self.degrees.iter().enumerate() {
            let mut parts = Vec::new();
            match g.rank {
                0 => {}
                1 => parts.push(ring.clone()),
                r => parts.push(format!("{ring}^{r}")),
            }
            parts.extend(g.torsion.iter().map(|d| format!("Z/{d}")));
            let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
            out.push_str(&format!("H_{k} = {body}\n"));
        }
        out
    }
}

/// Rank and invariant factors (> 1) of a sparse integer matrix. Unit pivots
/// are eliminated first; the remaining block goes through dense Smith form.
pub(crate) fn sparse_invariant_factors(rows: Vec<Vec<(usize, i64)>>, ncols: usize) -> (usize, Vec<BigInt>) {
    let mut mat: Vec<BTreeMap<usize, BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in mat.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut alive = vec![true; mat.len()];
    let mut rank = 0;
    loop {
        let mut pivot = None;
        for (r, row) in mat.iter().enumerate() {
            if !alive[r] {
                continue;
            }
            if let Some((&c, _)) = row.iter().find(|(_, v)| v.abs().is_one()) {
                pivot = Some((r, c));
                break;
            }
        }
        let Some((r, c)) = pivot else { break };
        let prow = std::mem::take(&mut mat[r]);
        alive[r] = false;
        for &cc in prow.keys() {
            col_rows[cc].remove(&r);
        }
        let pval = prow[&c].clone();
        let others: Vec<usize> = col_rows[c].iter().copied().collect();
        for i in others {
            let f = &mat[i][&c] * &pval; // pval = ±1, so a/p = a*p
            for (&cc, v) in &prow {
                let entry = mat[i].entry(cc).or_insert_with(BigInt::zero);
                *entry -= &f * v;
                if entry.is_zero() {
                    mat[i].remove(&cc);
                    col_rows[cc].remove(&i);
                } else {
                    col_rows[cc].insert(i);
                }
            }
        }
        rank += 1;
    }
    let rest_rows: Vec<usize> = (0..mat.len()).filter(|&r| alive[r] && !mat[r].is_empty()).collect();
    if rest_rows.is_empty() {
        return (rank, Vec::new());
    }
    let cols: BTreeSet<usize> = rest_rows.iter().flat_map(|&r| mat[r].keys().copied()).collect();
    let col_pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = IntMatrix::zeros(rest_rows.len(), cols.len());
    for (i, &r) in rest_rows.iter().enumerate() {
        for (c, v) in &mat[r] {
            dense.set(i, col_pos[c], v.clone());
        }
    }
    let snf = smith_normal_form(&dense);
    let diag = snf.diagonal();
    let factors: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    (rank + diag.len(), factors)
}

/// As [`sparse_invariant_factors`] with factors converted to `u64`.
pub(crate) fn homology_invariant_factors(rows: Vec<Vec<(usize, i64)>>, ncols: usize) -> (usize, Vec<u64>) {
    let (r, f) = sparse_invariant_factors(rows, ncols);
    (r, f.iter().map(|v| to_u64(v).expect("invariant factor fits in 64 bits")).collect())
}

fn to_u64(v: &BigInt) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Overflow(format!("invariant factor {v} does not fit in 64 bits")))
}

/// Rank and torsion factors of `∂_k` over the given coefficients.
fn boundary_data(x: &DeltaComplex, k: usize, coeffs: Coefficients) -> Result<(usize, Vec<u64>)> {
    if k == 0 || k > x.dim() {
        return Ok((0, Vec::new()));
    }
    let rows = boundary_entries(x, k);
    match coeffs {
        Coefficients::Mod(p) if is_prime(p) => {
            let dense: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![0u64; x.count(k)];
                    for &(c, e) in r {
                        v[c] = e.rem_euclid(p as i64) as u64;
                    }
                    v
                })
                .collect();
            Ok((rank_mod_p(&dense, x.count(k), p), Vec::new()))
        }
        _ => {
            let (r, f) = sparse_invariant_factors(rows, x.count(k));
            Ok((r, f.iter().map(to_u64).collect::<Result<_>>()?))
        }
    }
}

/// Homology of a Δ-complex: over `Z` via invariant factors, over a prime
/// field via ranks, over composite `Z/m` from the integral groups.
pub fn homology(x: &DeltaComplex, coeffs: Coefficients) -> Result<HomologyGroups> {
    homology_with_jobs(x, coeffs, 1)
}

/// As [`homology`], computing the boundary maps on up to `jobs` threads.
pub fn homology_with_jobs(x: &DeltaComplex, coeffs: Coefficients, jobs: usize) -> Result<HomologyGroups> {
    let coeffs = coeffs.check()?;
    if let Some(v) = x.first_identity_violation() {
        return Err(Error::MalformedComplex(v));
    }
    if let Coefficients::Mod(m) = coeffs {
        if !is_prime(m) {
            let integral = homology_with_jobs(x, Coefficients::Integers, jobs)?;
            return Ok(universal_coefficients(&integral, m));
        }
    }
    let dim = x.dim();
    let ks: Vec<usize> = (1..=dim).collect();
    let data: Vec<Result<(usize, Vec<u64>)>> = if jobs > 1 && ks.len() > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ks
                .iter()
                .map(|&k| scope.spawn(move || boundary_data(x, k, coeffs)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("homology worker panicked")).collect()
        })
    } else {
        ks.iter().map(|&k| boundary_data(x, k, coeffs)).collect()
    };
    // bd[k] = data for ∂_k, with ∂_0 = ∂_{dim+1} = 0
    let mut bd: Vec<(usize, Vec<u64>)> = vec![(0, Vec::new())];
    for d in data {
        bd.push(d?);
    }
    bd.push((0, Vec::new()));
    let degrees = (0..=dim)
        .map(|k| DegreeGroup {
            rank: x.count(k) - bd[k].0 - bd[k + 1].0,
            torsion: bd[k + 1].1.clone(),
        })
        .collect();
    Ok(HomologyGroups {
        coefficients: coeffs,
        degrees,
    })
}

/// `H_k(X; Z/m) ≅ H_k(X) ⊗ Z/m ⊕ Tor(H_{k-1}(X), Z/m)`.
pub fn universal_coefficients(integral: &HomologyGroups, m: u64) -> HomologyGroups {
    let degrees = (0..integral.degrees.len())
        .map(|k| {
            let mut orders = vec![m; integral.rank(k)];
            orders.extend(integral.torsion(k).iter().map(|&d| d.gcd(&m)));
            if k > 0 {
                orders.extend(integral.torsion(k - 1).iter().map(|&d| d.gcd(&m)));
            }
            let chain = invariant_factors_of(&orders);
            let rank = chain.iter().filter(|&&d| d == m).count();
            DegreeGroup {
                rank,
                torsion: chain.into_iter().filter(|&d| d != m).collect(),
            }
        })
        .collect();
    HomologyGroups {
        coefficients: Coefficients::Mod(m),
        degrees,
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant-factor chain (ascending, each > 1) of `⊕ Z/orders[i]`.
pub fn invariant_factors_of(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &o in orders {
        for (p, e) in factorize(o) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let len = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
    let mut chain = vec![1u64; len];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            chain[len - 1 - i] *= p.pow(e);
        }
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factor_normalization() {
        assert_eq!(invariant_factors_of(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors_of(&[2, 4, 3]), vec![2, 12]);
        assert_eq!(invariant_factors_of(&[1, 1]), Vec::<u64>::new());
    }

    #[test]
    fn sparse_factors_agree_with_dense() {
        let rows = vec![vec![(0, 2), (1, 4)], vec![(0, 6), (1, 8)]];
        let (r, f) = sparse_invariant_factors(rows, 2);
        assert_eq!(r, 2);
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(4)]);
    }
}
