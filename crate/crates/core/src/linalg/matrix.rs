use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<S> {
    pub matrix: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S> Rref<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// All solutions of `A x = b`: `particular + span(nullspace)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<S> {
    pub particular: Matrix<S>,
    pub nullspace: Vec<Vec<S>>,
    /// For every nullspace vector, the free column it was generated from.
    pub free_columns: Vec<usize>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data has the wrong length");
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from its rows. The column count must be given so that
    /// matrices with zero rows keep their shape.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<S>>) -> Self {
        let mut data = Vec::new();
        let mut n = 0;
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
            n += 1;
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "ragged columns");
        }
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = Vec<S>> + '_ {
        (0..self.rows).map(move |r| self.row(r).to_vec())
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Row-major entries.
    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn into_data(self) -> Vec<S> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<&S> {
        self.data.iter().find(|x| !x.is_zero())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows.start + r, cols.start + c).clone())
    }

    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().unwrap();
            for c in col..m.cols {
                let v = m.get(row, c).clone() * inv.clone();
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let pivot_entry = m.get(row, c);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c).clone() - factor.clone() * pivot_entry.clone();
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let rref = self.rref();
        kernel_from_rref(&rref, self.cols).0
    }

    /// Solves `A X = B` for a matrix right-hand side.
    pub fn solve(&self, b: &Self) -> Result<Solution<S>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.rows });
        }
        let n = self.cols;
        let rref = self.hstack(b).rref();
        if rref.pivots.iter().any(|&p| p >= n) {
            return Err(Error::InconsistentSystem);
        }
        let mut particular = Self::zeros(n, b.cols);
        for (r, &p) in rref.pivots.iter().enumerate() {
            for k in 0..b.cols {
                particular.set(p, k, rref.matrix.get(r, n + k).clone());
            }
        }
        let (nullspace, free_columns) = kernel_from_rref(&rref, n);
        Ok(Solution { particular, nullspace, free_columns })
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let sol = self.solve(&Self::identity(self.rows)).ok()?;
        sol.nullspace.is_empty().then_some(sol.particular)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u32).is_zero()
    }
}

/// Kernel vectors read off an RREF of a matrix whose first `n` columns are
/// the coefficient columns.
fn kernel_from_rref<S: Scalar>(rref: &Rref<S>, n: usize) -> (Vec<Vec<S>>, Vec<usize>) {
    let pivot_cols: Vec<usize> = rref.pivots.iter().copied().filter(|&p| p < n).collect();
    let mut is_pivot = vec![false; n];
    for &p in &pivot_cols {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut v = vec![S::zero(); n];
            v[f] = S::one();
            for (r, &p) in pivot_cols.iter().enumerate() {
                v[p] = -rref.matrix.get(r, f).clone();
            }
            v
        })
        .collect();
    (vectors, free)
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::<S>::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * rhs.cols + c;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Linear combination `sum coeffs[k] * vectors[k]`.
pub fn combine<S: Scalar>(coeffs: &[S], vectors: &[Vec<S>], len: usize) -> Vec<S> {
    let mut out = vec![S::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
    }
    out
}

/// Linear combination of equally shaped matrices.
pub fn combine_matrices<S: Scalar>(coeffs: &[S], mats: &[Matrix<S>], rows: usize, cols: usize) -> Matrix<S> {
    let mut out = Matrix::<S>::zeros(rows, cols);
    for (c, m) in coeffs.iter().zip(mats) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.data.iter_mut().zip(&m.data) {
            if !x.is_zero() {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, F5};

    type Q = Rational;

    #[test]
    fn rref_examples() {
        let id = Matrix::<Q>::identity(2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);

        let z = Matrix::<Q>::zeros(3, 3);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());

        // [[2,4],[1,2]] -> [[1,2],[0,0]]
        let m = Matrix::<Q>::from_i64_rows(&[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::<Q>::identity(3);
        let b = Matrix::from_i64_rows(&[&[4], &[-1], &[7]]);
        let s = id.solve(&b).unwrap();
        assert_eq!(s.particular, b);
        assert!(s.nullspace.is_empty());

        let z = Matrix::<Q>::zeros(2, 2);
        let s = z.solve(&Matrix::zeros(2, 1)).unwrap();
        assert!(s.particular.is_zero());
        assert_eq!(s.nullspace.len(), 2);

        let s = z.solve(&Matrix::from_i64_rows(&[&[1], &[0]]));
        assert_eq!(s, Err(Error::InconsistentSystem));
    }

    /// Brute-force enumeration of all 25 vectors of F_5^2 solving x + y = 2.
    #[test]
    fn solve_over_f5_matches_enumeration() {
        let a = Matrix::<F5>::from_i64_rows(&[&[1, 1]]);
        let b = Matrix::<F5>::from_i64_rows(&[&[2]]);
        let s = a.solve(&b).unwrap();
        assert_eq!(s.particular, Matrix::from_i64_rows(&[&[2], &[0]]));
        assert_eq!(s.nullspace.len(), 1);

        let mut enumerated = Vec::new();
        for x in 0..5 {
            for y in 0..5 {
                if (x + y) % 5 == 2 {
                    enumerated.push((x as u64, y as u64));
                }
            }
        }
        let n = &s.nullspace[0];
        let mut generated: Vec<(u64, u64)> = (0..5)
            .map(|t| {
                let t = F5::from_i64(t);
                let x = *s.particular.get(0, 0) + t * n[0];
                let y = *s.particular.get(1, 0) + t * n[1];
                (x.value(), y.value())
            })
            .collect();
        generated.sort();
        assert_eq!(generated, enumerated);
        // nullspace is span{[1,4]}
        assert_eq!(F5::from_i64(4) * n[0], n[1]);
    }

    #[test]
    fn inverse_and_nilpotency() {
        let m = Matrix::<Q>::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let n = Matrix::<Q>::from_i64_rows(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        assert!(n.is_nilpotent());
        assert!(n.inverse().is_none());
        assert!(!m.is_nilpotent());
    }
}
