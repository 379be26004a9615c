//! Dense linear algebra over the prime field `Z/p`.

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
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

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(rows: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<u64>], ncols: usize, p: u64) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols, p).len()
}

/// Basis of `{x : M x = 0}`, one vector per free column in increasing order,
/// with a 1 in that column.
pub(crate) fn nullspace(rows: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            let x = m[r][free];
            if x != 0 {
                v[c] = (p - x) % p;
            }
        }
        basis.push(v);
    }
    basis
}

/// Incremental echelon basis whose rows carry tag vectors, used to express a
/// vector as a combination of tagged generators modulo an untagged subspace.
#[derive(Debug, Clone)]
pub(crate) struct TaggedEchelon {
    p: u64,
    tag_len: usize,
    rows: Vec<(usize, Vec<u64>, Vec<u64>)>,
}

impl TaggedEchelon {
    pub fn new(p: u64, tag_len: usize) -> Self {
        TaggedEchelon {
            p,
            tag_len,
            rows: Vec::new(),
        }
    }

    /// Reduces `v` (with accompanying `tag`) against the current rows.
    pub fn reduce(&self, v: &mut [u64], tag: &mut [u64]) {
        let p = self.p;
        for (c, row, rtag) in &self.rows {
            let f = v[*c];
            if f == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    *x = (*x + (p - f) * y) % p;
                }
            }
            for (x, &y) in tag.iter_mut().zip(rtag) {
                if y != 0 {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
    }

    /// Inserts `v` with `tag`; returns false when `v` is already in the span.
    pub fn insert(&mut self, mut v: Vec<u64>, mut tag: Vec<u64>) -> bool {
        debug_assert_eq!(tag.len(), self.tag_len);
        self.reduce(&mut v, &mut tag);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[c], self.p);
        for x in v.iter_mut().chain(tag.iter_mut()) {
            *x = *x * inv % self.p;
        }
        self.rows.push((c, v, tag));
        true
    }

    /// Tag of `v` if `v` lies in the span, `None` otherwise.
    pub fn express(&self, v: &[u64]) -> Option<Vec<u64>> {
        let mut v = v.to_vec();
        let mut tag = vec![0u64; self.tag_len];
        self.reduce(&mut v, &mut tag);
        if v.iter().any(|&x| x != 0) {
            return None;
        }
        // reduce() subtracted the combination; the expression is its negative
        Some(tag.iter().map(|&t| (self.p - t) % self.p).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_is_annihilated() {
        let m = vec![vec![1, 1, 0, 1], vec![0, 1, 1, 1]];
        for p in [2, 3, 5] {
            let ns = nullspace(&m, 4, p);
            assert_eq!(ns.len(), 2);
            for v in &ns {
                for row in &m {
                    let s: u64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                    assert_eq!(s % p, 0);
                }
            }
        }
    }

    #[test]
    fn tagged_expression() {
        let p = 5;
        let mut e = TaggedEchelon::new(p, 2);
        assert!(e.insert(vec![1, 2, 0], vec![1, 0]));
        assert!(e.insert(vec![0, 1, 3], vec![0, 1]));
        assert!(!e.insert(vec![1, 3, 3], vec![0, 0]));
        // 2*(1,2,0) + 3*(0,1,3) = (2, 7, 9) = (2, 2, 4) mod 5
        assert_eq!(e.express(&[2, 2, 4]), Some(vec![2, 3]));
        assert_eq!(e.express(&[0, 0, 1]), None);
    }
}
