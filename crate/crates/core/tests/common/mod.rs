#![allow(dead_code)]

pub mod props;

use lscat::complex::{connected_sum, generator, DeltaComplex};

/// Generator names and parameters exercised by the suites.
pub const GENERATORS: &[(&str, &[u64])] = &[
    ("S3", &[]),
    ("S1xS2", &[]),
    ("S1~S2", &[]),
    ("T3", &[]),
    ("RP2xS1", &[]),
    ("L", &[2, 1]),
    ("L", &[3, 1]),
    ("L", &[4, 1]),
    ("L", &[5, 1]),
    ("L", &[5, 2]),
    ("L", &[7, 3]),
];

pub fn label(name: &str, params: &[u64]) -> String {
    match params {
        [p, q] => format!("L({p},{q})"),
        _ => name.to_string(),
    }
}

pub fn generators() -> Vec<(String, DeltaComplex)> {
    GENERATORS
        .iter()
        .map(|&(n, p)| (label(n, p), generator(n, p).unwrap()))
        .collect()
}

/// Every generator plus every unordered pair (with repetition) of generators.
pub fn generators_and_sums() -> Vec<(String, DeltaComplex)> {
    let gens = generators();
    let mut out = gens.clone();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let x = connected_sum(&gens[i].1, &gens[j].1).unwrap();
            out.push((format!("{} # {}", gens[i].0, gens[j].0), x));
        }
    }
    out
}

/// Integral homology of the generators as produced by the brute-force oracle,
/// frozen as `(betti, torsion)` for degrees 0..=3.
pub const BASELINE: &[(&str, [(usize, &[u64]); 4])] = &[
    ("S3", [(1, &[]), (0, &[]), (0, &[]), (1, &[])]),
    ("S1xS2", [(1, &[]), (1, &[]), (1, &[]), (1, &[])]),
    ("S1~S2", [(1, &[]), (1, &[]), (0, &[2]), (0, &[])]),
    ("T3", [(1, &[]), (3, &[]), (3, &[]), (1, &[])]),
    ("RP2xS1", [(1, &[]), (1, &[2]), (0, &[2]), (0, &[])]),
    ("L(2,1)", [(1, &[]), (0, &[2]), (0, &[]), (1, &[])]),
    ("L(3,1)", [(1, &[]), (0, &[3]), (0, &[]), (1, &[])]),
    ("L(4,1)", [(1, &[]), (0, &[4]), (0, &[]), (1, &[])]),
    ("L(5,1)", [(1, &[]), (0, &[5]), (0, &[]), (1, &[])]),
    ("L(5,2)", [(1, &[]), (0, &[5]), (0, &[]), (1, &[])]),
    ("L(7,3)", [(1, &[]), (0, &[7]), (0, &[]), (1, &[])]),
];

/// Integral homology by brute force: dense boundary matrices built from the
/// face lists and diagonalized with checked `i128` arithmetic.
/// Returns `(betti, torsion)` per degree.
pub fn oracle_homology(x: &DeltaComplex) -> Vec<(usize, Vec<u64>)> {
    let n = x.dim();
    // diag[k] = non-zero invariant factors of the boundary C_k -> C_{k-1}
    let mut diag: Vec<Vec<i128>> = vec![Vec::new(); n + 2];
    for k in 1..=n {
        let mut a = vec![vec![0i128; x.count(k)]; x.count(k - 1)];
        for s in 0..x.count(k) {
            for (j, &f) in x.faces(k, s).iter().enumerate() {
                a[f][s] += if j % 2 == 0 { 1 } else { -1 };
            }
        }
        diag[k] = diagonalize(a);
    }
    (0..=n)
        .map(|k| {
            let z = x.count(k) - diag[k].len();
            let b = diag[k + 1].len();
            let tors: Vec<u64> = diag[k + 1].iter().filter(|d| **d > 1).map(|&d| d as u64).collect();
            (z - b, tors)
        })
        .collect()
}

fn diagonalize(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| a[r][c] != 0)
            .min_by_key(|&(r, c)| a[r][c].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = a[r][t] / a[t][t];
            if q != 0 {
                for c in t..cols {
                    a[r][c] = a[r][c].checked_sub(q.checked_mul(a[t][c]).unwrap()).unwrap();
                }
            }
            clean &= a[r][t] == 0;
        }
        for c in t + 1..cols {
            let q = a[t][c] / a[t][t];
            if q != 0 {
                for row in a.iter_mut().skip(t) {
                    row[c] = row[c].checked_sub(q.checked_mul(row[t]).unwrap()).unwrap();
                }
            }
            clean &= a[t][c] == 0;
        }
        if !clean {
            continue;
        }
        // divisibility: fold a non-multiple from the remaining block into row t
        let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % a[t][t] != 0));
        if let Some(r) = bad {
            for c in t..cols {
                a[t][c] += a[r][c];
            }
            continue;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Rank of a matrix over `Z/p`, `p` prime.
pub fn rank_mod(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..a.len()).find(|&r| !a[r][c].is_multiple_of(p)) else {
            continue;
        };
        a.swap(rank, r);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for v in a[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_multiple_of(p) {
                let f = a[r][c] % p;
                for j in 0..cols {
                    a[r][j] = (a[r][j] + p * p - f * a[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}
