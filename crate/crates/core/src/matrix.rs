//! Dense exact matrices over arbitrary-precision integers and rationals.
//!
//! Everything here is exact: determinants via fraction-free elimination,
//! Smith normal form for invariant factors, Hermite-style row reduction for
//! integer spans, and rational Gaussian elimination for solving and for
//! signatures by congruence diagonalization. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rat;
use crate::error::Error;

/// Dense row-major matrix over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_q(&self) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }

    /// Determinant by the Bareiss fraction-free algorithm.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let a = m.at(k, j).clone();
                            let b = m.at(i, j).clone();
                            m.set(k, j, b);
                            m.set(i, j, a);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Rank over the rationals (equivalently, rank of the integer row span).
    pub fn rank(&self) -> usize {
        self.hermite_form().rows
    }

    /// Canonical row Hermite normal form: nonzero rows only, positive pivots,
    /// entries above each pivot reduced. Two integer matrices have the same
    /// row span over Z iff their Hermite forms are equal.
    pub fn hermite_form(&self) -> IntMat {
        let mut rows = self.row_vecs();
        let cols = self.cols;
        let mut pivot_row = 0usize;
        for col in 0..cols {
            // clear the column below pivot_row with gcd row operations
            let mut r = pivot_row;
            while r < rows.len() {
                if rows[r][col].is_zero() {
                    r += 1;
                    continue;
                }
                if r != pivot_row && !rows[pivot_row][col].is_zero() {
                    // combine rows pivot_row and r to leave gcd in pivot_row
                    let a = rows[pivot_row][col].clone();
                    let b = rows[r][col].clone();
                    let eg = a.extended_gcd(&b);
                    let (g, s, t) = (eg.gcd, eg.x, eg.y);
                    let (ca, cb) = (&a / &g, &b / &g);
                    for j in 0..cols {
                        let x = rows[pivot_row][j].clone();
                        let y = rows[r][j].clone();
                        rows[pivot_row][j] = &s * &x + &t * &y;
                        rows[r][j] = -&cb * &x + &ca * &y;
                    }
                } else if r != pivot_row {
                    rows.swap(pivot_row, r);
                } else {
                    r += 1;
                }
            }
            if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
                if rows[pivot_row][col].is_negative() {
                    for x in rows[pivot_row].iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
                // reduce entries above the pivot
                let p = rows[pivot_row][col].clone();
                for i in 0..pivot_row {
                    let q = rows[i][col].div_floor(&p);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let v = &rows[i][j] - &q * &rows[pivot_row][j];
                            rows[i][j] = v;
                        }
                    }
                }
                pivot_row += 1;
            }
        }
        rows.truncate(pivot_row);
        if rows.is_empty() {
            IntMat::zero(0, cols)
        } else {
            IntMat::from_rows(rows)
        }
    }

    /// Diagonal of the Smith normal form, as non-negative integers
    /// d_1 | d_2 | ... (including unit and zero entries).
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let (nr, nc) = (self.rows, self.cols);
        let mut m = self.clone();
        let n = nr.min(nc);
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            loop {
                // find entry of minimal nonzero absolute value in the trailing block
                let mut best: Option<(usize, usize)> = None;
                for i in k..nr {
                    for j in k..nc {
                        if !m.at(i, j).is_zero()
                            && best.is_none_or(|(bi, bj)| m.at(i, j).abs() < m.at(bi, bj).abs())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else {
                    diag.push(BigInt::zero());
                    break;
                };
                m.swap_rows(k, bi);
                m.swap_cols(k, bj);
                let mut dirty = false;
                let pivot = m.at(k, k).clone();
                for i in k + 1..nr {
                    let q = div_nearest(m.at(i, k), &pivot);
                    if !q.is_zero() {
                        for j in k..nc {
                            let v = m.at(i, j) - &q * m.at(k, j);
                            m.set(i, j, v);
                        }
                    }
                    if !m.at(i, k).is_zero() {
                        dirty = true;
                    }
                }
                for j in k + 1..nc {
                    let q = div_nearest(m.at(k, j), &pivot);
                    if !q.is_zero() {
                        for i in k..nr {
                            let v = m.at(i, j) - &q * m.at(i, k);
                            m.set(i, j, v);
                        }
                    }
                    if !m.at(k, j).is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // divisibility condition: pivot must divide the trailing block
                let mut fixed = true;
                'scan: for i in k + 1..nr {
                    for j in k + 1..nc {
                        if !(m.at(i, j) % &pivot).is_zero() {
                            for jj in k..nc {
                                let v = m.at(k, jj) + m.at(i, jj);
                                m.set(k, jj, v);
                            }
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
                if fixed {
                    diag.push(pivot.abs());
                    break;
                }
            }
        }
        diag
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

/// Rounding division used by the Smith reduction to shrink remainders fast.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// For a nonzero integer vector v, returns (K, u, g) where the rows of K are
/// a basis of the saturated kernel { x : x.v = 0 }, u.v = g, and g = gcd(v).
/// Built from a unimodular transform, so the kernel basis is primitive.
pub fn kernel_of_dot(v: &[BigInt]) -> (IntMat, Vec<BigInt>, BigInt) {
    let n = v.len();
    assert!(n > 0 && v.iter().any(|x| !x.is_zero()), "zero vector");
    let mut u = IntMat::identity(n);
    let mut w: Vec<BigInt> = v.to_vec();
    for i in 1..n {
        if w[i].is_zero() {
            continue;
        }
        if w[0].is_zero() {
            u.swap_rows(0, i);
            w.swap(0, i);
            continue;
        }
        let eg = w[0].extended_gcd(&w[i]);
        let (g, s, t) = (eg.gcd, eg.x, eg.y);
        let (c0, ci) = (&w[0] / &g, &w[i] / &g);
        for j in 0..n {
            let x = u.at(0, j).clone();
            let y = u.at(i, j).clone();
            u.set(0, j, &s * &x + &t * &y);
            u.set(i, j, -&ci * &x + &c0 * &y);
        }
        w[0] = g;
        w[i] = BigInt::zero();
    }
    if w[0].is_negative() {
        w[0] = -w[0].clone();
        for j in 0..n {
            let x = -u.at(0, j).clone();
            u.set(0, j, x);
        }
    }
    let g = w[0].clone();
    let sol = u.row(0).to_vec();
    let kernel = IntMat::from_rows((1..n).map(|i| u.row(i).to_vec()).collect());
    (kernel, sol, g)
}

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// Entries as integers, if every denominator is 1.
    pub fn to_int(&self) -> Option<IntMat> {
        let mut out = IntMat::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.at(i, j).is_integer() {
                    return None;
                }
                out.set(i, j, self.at(i, j).to_integer());
            }
        }
        Some(out)
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Solves self * X = rhs by Gaussian elimination. None if singular.
    pub fn solve(&self, rhs: &QMat) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for k in 0..n {
            let pivot = (k..n).find(|&i| !a.at(i, k).is_zero())?;
            if pivot != k {
                for j in 0..n {
                    let t = a.at(k, j).clone();
                    a.set(k, j, a.at(pivot, j).clone());
                    a.set(pivot, j, t);
                }
                for j in 0..m {
                    let t = b.at(k, j).clone();
                    b.set(k, j, b.at(pivot, j).clone());
                    b.set(pivot, j, t);
                }
            }
            let d = a.at(k, k).clone();
            for i in 0..n {
                if i == k || a.at(i, k).is_zero() {
                    continue;
                }
                let f = a.at(i, k) / &d;
                for j in k..n {
                    let v = a.at(i, j) - &f * a.at(k, j);
                    a.set(i, j, v);
                }
                for j in 0..m {
                    let v = b.at(i, j) - &f * b.at(k, j);
                    b.set(i, j, v);
                }
            }
        }
        let mut x = QMat::zero(n, m);
        for i in 0..n {
            let d = a.at(i, i).clone();
            for j in 0..m {
                x.set(i, j, b.at(i, j) / &d);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMat> {
        let mut id = QMat::zero(self.rows, self.rows);
        for i in 0..self.rows {
            id.set(i, i, Rat::one());
        }
        self.solve(&id)
    }

    /// Signature (n_plus, n_minus) of a non-degenerate symmetric matrix by
    /// exact congruence diagonalization. A run of zero diagonal entries is
    /// handled by splitting off the rank-2 hyperbolic block, which
    /// contributes (+1, -1).
    pub fn symmetric_signature(&self) -> Result<(usize, usize), Error> {
        assert!(self.is_symmetric(), "signature of non-symmetric matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut plus = 0usize;
        let mut minus = 0usize;
        let mut k = 0usize;
        while k < n {
            if a.at(k, k).is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a.at(j, j).is_zero()) {
                    a.sym_swap(k, j);
                } else {
                    // all remaining diagonal entries vanish
                    let Some(j) = (k + 1..n).find(|&j| !a.at(k, j).is_zero()) else {
                        return Err(Error::SingularGram);
                    };
                    a.sym_swap(k + 1, j);
                    let b = a.at(k, k + 1).clone();
                    for i in k + 2..n {
                        // clear entries against the hyperbolic pair (k, k+1)
                        let fk = a.at(i, k + 1) / &b;
                        let fk1 = a.at(i, k) / &b;
                        a.sym_row_sub(i, k, &fk);
                        a.sym_row_sub(i, k + 1, &fk1);
                    }
                    plus += 1;
                    minus += 1;
                    k += 2;
                    continue;
                }
            }
            let d = a.at(k, k).clone();
            for i in k + 1..n {
                if !a.at(i, k).is_zero() {
                    let f = a.at(i, k) / &d;
                    a.sym_row_sub(i, k, &f);
                }
            }
            if d.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            k += 1;
        }
        Ok((plus, minus))
    }

    fn sym_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= f * row_k and col_i -= f * col_k, preserving symmetry.
    fn sym_row_sub(&mut self, i: usize, k: usize, f: &Rat) {
        if f.is_zero() {
            return;
        }
        let n = self.cols;
        for j in 0..n {
            let v = self.at(i, j) - f * self.at(k, j);
            self.set(i, j, v);
        }
        for j in 0..n {
            let v = self.at(j, i) - f * self.at(j, k);
            self.set(j, i, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn det_and_rank() {
        let u = IntMat::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(u.det(), int(-1));
        assert_eq!(u.rank(), 2);
        let a4 = IntMat::from_i64(&[
            &[2, -1, 0, 0],
            &[-1, 2, -1, 0],
            &[0, -1, 2, -1],
            &[0, 0, -1, 2],
        ]);
        assert_eq!(a4.det(), int(5));
        let sing = IntMat::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det(), int(0));
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn smith_form() {
        let m = IntMat::from_i64(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let d = m.smith_diagonal();
        assert_eq!(d, vec![int(1), int(3), int(21), int(0)]);
        let h41 = IntMat::from_i64(&[
            &[2, 1, 0, 0],
            &[1, 2, 0, 1],
            &[0, 0, 82, 41],
            &[0, 1, 41, 28],
        ]);
        assert_eq!(h41.smith_diagonal(), vec![int(1), int(1), int(41), int(41)]);
    }

    #[test]
    fn hermite_span_equality() {
        let a = IntMat::from_i64(&[&[2, 0, 1], &[0, 1, 0]]);
        let b = IntMat::from_i64(&[&[2, 1, 1], &[-2, 0, -1]]);
        assert_eq!(a.hermite_form(), b.hermite_form());
        let c = IntMat::from_i64(&[&[2, 0, 1], &[0, 2, 0]]);
        assert_ne!(a.hermite_form(), c.hermite_form());
    }

    #[test]
    fn kernel_of_dot_vector() {
        let v = vec![int(4), int(6), int(9)];
        let (k, sol, g) = kernel_of_dot(&v);
        assert_eq!(g, int(1));
        let dot =
            |row: &[BigInt]| -> BigInt { row.iter().zip(&v).map(|(a, b)| a * b).sum() };
        assert_eq!(dot(&sol), int(1));
        assert_eq!(k.rows(), 2);
        for i in 0..2 {
            assert_eq!(dot(k.row(i)), int(0));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = QMat::from_rows(vec![
            vec![rat(2), rat(1)],
            vec![rat(1), rat(3)],
        ]);
        let inv = a.inverse().unwrap();
        let prod = a.mul(&inv);
        assert_eq!(prod.at(0, 0), &rat(1));
        assert_eq!(prod.at(0, 1), &rat(0));
        let sing = QMat::from_rows(vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
        ]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn signatures() {
        let u = IntMat::from_i64(&[&[0, 1], &[1, 0]]).to_q();
        assert_eq!(u.symmetric_signature().unwrap(), (1, 1));
        let pd = IntMat::from_i64(&[&[2, 1], &[1, 2]]).to_q();
        assert_eq!(pd.symmetric_signature().unwrap(), (2, 0));
        let nd = IntMat::from_i64(&[&[-2, 0], &[0, -3]]).to_q();
        assert_eq!(nd.symmetric_signature().unwrap(), (0, 2));
        let uu = IntMat::from_i64(&[
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 5],
            &[0, 0, 5, 0],
        ])
        .to_q();
        assert_eq!(uu.symmetric_signature().unwrap(), (2, 2));
        let sing = IntMat::from_i64(&[&[1, 1], &[1, 1]]).to_q();
        assert!(sing.symmetric_signature().is_err());
    }
}
