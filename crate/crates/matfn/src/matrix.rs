//! Dense row-major matrices over real or complex entries.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{Float, Zero};

use crate::complex::Complex;
use crate::error::Error;
use crate::scalar::{Entry, Scalar};

/// A dense matrix with entries of type `E`, stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<E: Entry> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Entry> Matrix<E> {
    /// A rows x cols matrix of zeros.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![E::zero(); rows * cols] }
    }

    /// The n x n identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = E::one();
        }
        m
    }

    /// Builds from a flat row-major slice. Panics if the length does not match.
    pub fn from_rows(rows: usize, cols: usize, data: &[E]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, data: data.to_vec() }
    }

    /// Builds a square matrix, checking shape and that every entry is finite.
    pub fn try_square(n: usize, data: &[E]) -> Result<Self, Error> {
        if data.len() != n * n {
            return Err(Error::ShapeMismatch { rows: n, cols: n, len: data.len() });
        }
        if data.iter().any(|e| !e.is_finite_entry()) {
            return Err(Error::NotFinite);
        }
        Ok(Matrix { rows: n, cols: n, data: data.to_vec() })
    }

    /// Builds entry-by-entry from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix. Panics on rectangular input.
    pub fn n(&self) -> usize {
        assert!(self.is_square(), "matrix is not square");
        self.rows
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose; plain transpose for real entries.
    pub fn conj_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> E {
        let mut t = E::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t + self[(i, i)];
        }
        t
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: E) -> Self {
        let data = self.data.iter().map(|&e| e * s).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// The operator 1-norm: the maximum absolute column sum.
    pub fn one_norm(&self) -> E::Real {
        let mut best = E::Real::zero();
        for j in 0..self.cols {
            let mut s = E::Real::zero();
            for i in 0..self.rows {
                s = s + self[(i, j)].modulus();
            }
            if s > best {
                best = s;
            }
        }
        best
    }

    /// The largest entry modulus.
    pub fn max_abs(&self) -> E::Real {
        let mut best = E::Real::zero();
        for e in &self.data {
            let m = e.modulus();
            if m > best {
                best = m;
            }
        }
        best
    }

    /// The largest Euclidean column norm.
    pub fn max_col_norm(&self) -> E::Real {
        let mut best = E::Real::zero();
        for j in 0..self.cols {
            let mut s = E::Real::zero();
            for i in 0..self.rows {
                let m = self[(i, j)].modulus();
                s = s + m * m;
            }
            let s = s.sqrt();
            if s > best {
                best = s;
            }
        }
        best
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|e| e.is_finite_entry())
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[E]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Copies `block` into this matrix with top-left corner at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix<E>) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![E::zero(); self.rows];
        for i in 0..self.rows {
            let mut s = E::zero();
            for j in 0..self.cols {
                s = s + self[(i, j)] * v[j];
            }
            out[i] = s;
        }
        out
    }

    /// A^k by repeated multiplication (k is small throughout this crate).
    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn map<F: Entry>(&self, f: impl Fn(E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| f(e)).collect(),
        }
    }
}

impl<T: Scalar> Matrix<T> {
    /// Embeds a real matrix into the complex matrix with zero imaginary part.
    pub fn to_complex(&self) -> Matrix<Complex<T>> {
        self.map(Complex::from_real)
    }

    /// True when the matrix equals its transpose to within `tol` entrywise.
    pub fn is_symmetric(&self, tol: T) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if (self[(i, j)] - self[(j, i)]).abs() > tol {
                    return false;
                }
            }
        }
        true
    }
}

impl<T: Scalar> Matrix<Complex<T>> {
    pub fn real_part(&self) -> Matrix<T> {
        self.map(|z| z.re)
    }

    pub fn imag_part(&self) -> Matrix<T> {
        self.map(|z| z.im)
    }

    /// The largest |Im| over all entries.
    pub fn max_imag(&self) -> T {
        let mut best = T::zero();
        for e in &self.data {
            if e.im.abs() > best {
                best = e.im.abs();
            }
        }
        best
    }
}

impl<E: Entry> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<E: Entry> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<E: Entry> Add for &Matrix<E> {
    type Output = Matrix<E>;
    fn add(self, rhs: Self) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<E: Entry> Sub for &Matrix<E> {
    type Output = Matrix<E>;
    fn sub(self, rhs: Self) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<E: Entry> Neg for &Matrix<E> {
    type Output = Matrix<E>;
    fn neg(self) -> Matrix<E> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| -e).collect(),
        }
    }
}

impl<E: Entry> Mul for &Matrix<E> {
    type Output = Matrix<E>;
    fn mul(self, rhs: Self) -> Matrix<E> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<E: Entry> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<E: Entry> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} matrix:", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
