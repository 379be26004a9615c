//! Dense integer matrices over arbitrary-precision integers and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[i64]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        a.get(n - 1, n - 1) * sign
    }

    /// Diagonal with non-negative entries forming a divisibility chain
    /// (zeros last).
    pub fn is_smith_form(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j && !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        let d: Vec<&BigInt> = (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect();
        if d.iter().any(|v| v.is_negative()) {
            return false;
        }
        d.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(w[0])
            }
        })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    pub(crate) fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j];
            if !v.is_zero() {
                let add = v * f;
                self.data[dst * self.cols + j] += add;
            }
        }
    }

    /// col[dst] += f * col[src]
    pub(crate) fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src];
            if !v.is_zero() {
                let add = v * f;
                self.data[i * self.cols + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[r * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + c];
            *v = -std::mem::take(v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `S = U·A·V` with `S` in Smith form and `U`, `V` unimodular.
#[derive(Debug, Clone)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        (0..self.s.rows().min(self.s.cols()))
            .take_while(|&i| !self.s.get(i, i).is_zero())
            .count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.s.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    smith_with(a, false)
}

/// Smith normal form that also tracks `U⁻¹` and `V⁻¹`.
pub fn smith_normal_form_with_inverses(a: &IntMatrix) -> Snf {
    smith_with(a, true)
}

struct SnfCalc {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    u_inv: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl SnfCalc {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }

    /// row[dst] += f row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row(dst, src, f);
        self.u.add_row(dst, src, f);
        if let Some(ui) = &mut self.u_inv {
            ui.add_col(src, dst, &-f);
        }
    }

    /// col[dst] += f col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col(dst, src, f);
        self.v.add_col(dst, src, f);
        if let Some(vi) = &mut self.v_inv {
            vi.add_row(src, dst, &-f);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        self.u.negate_row(r);
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(r);
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let av = v.abs();
                if best.as_ref().is_none_or(|b| av < b.2) {
                    let one = av.is_one();
                    best = Some((i, j, av));
                    if one {
                        let (bi, bj, _) = best.unwrap();
                        return Some((bi, bj));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            loop {
                let Some((pi, pj)) = self.min_pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let p = self.a.get(t, t).clone();
                let mut clean = true;
                for i in t + 1..self.a.rows() {
                    let v = self.a.get(i, t);
                    if v.is_zero() {
                        continue;
                    }
                    let q = v.div_floor(&p);
                    self.add_row(i, t, &-q);
                    if !self.a.get(i, t).is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.a.cols() {
                    let v = self.a.get(t, j);
                    if v.is_zero() {
                        continue;
                    }
                    let q = v.div_floor(&p);
                    self.add_col(j, t, &-q);
                    if !self.a.get(t, j).is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // divisibility of the remaining block
                let mut fix = None;
                'outer: for i in t + 1..self.a.rows() {
                    for j in t + 1..self.a.cols() {
                        if !self.a.get(i, j).is_multiple_of(&p) {
                            fix = Some(i);
                            break 'outer;
                        }
                    }
                }
                match fix {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn smith_with(a: &IntMatrix, inverses: bool) -> Snf {
    let mut calc = SnfCalc {
        a: a.clone(),
        u: IntMatrix::identity(a.rows()),
        v: IntMatrix::identity(a.cols()),
        u_inv: inverses.then(|| IntMatrix::identity(a.rows())),
        v_inv: inverses.then(|| IntMatrix::identity(a.cols())),
    };
    calc.run();
    Snf {
        s: calc.a,
        u: calc.u,
        v: calc.v,
        u_inv: calc.u_inv,
        v_inv: calc.v_inv,
    }
}
