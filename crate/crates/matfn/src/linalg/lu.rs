//! LU factorization with partial pivoting, over real or complex entries.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Entry;

/// Packed LU factors of a square matrix with a row permutation.
pub struct Lu<E: Entry> {
    lu: Matrix<E>,
    perm: Vec<usize>,
    swaps: usize,
}

/// Factors `a` as `P A = L U`, failing with `Singular` when a pivot falls
/// at or below `pivot_tol` in modulus.
pub fn lu_factor<E: Entry>(a: &Matrix<E>, pivot_tol: E::Real) -> Result<Lu<E>> {
    let n = a.n();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut swaps = 0;

    for k in 0..n {
        let mut pivot_row = k;
        let mut pivot_mag = lu[(k, k)].modulus();
        for i in (k + 1)..n {
            let m = lu[(i, k)].modulus();
            if m > pivot_mag {
                pivot_mag = m;
                pivot_row = i;
            }
        }
        if pivot_mag <= pivot_tol {
            return Err(Error::Singular);
        }
        if pivot_row != k {
            lu.swap_rows(k, pivot_row);
            perm.swap(k, pivot_row);
            swaps += 1;
        }
        let inv_pivot = E::one() / lu[(k, k)];
        for i in (k + 1)..n {
            let factor = lu[(i, k)] * inv_pivot;
            lu[(i, k)] = factor;
            for j in (k + 1)..n {
                let update = factor * lu[(k, j)];
                lu[(i, j)] = lu[(i, j)] - update;
            }
        }
    }
    Ok(Lu { lu, perm, swaps })
}

impl<E: Entry> Lu<E> {
    fn n(&self) -> usize {
        self.lu.rows()
    }

    /// Solves `A x = b`.
    pub fn solve_vec(&self, b: &[E]) -> Vec<E> {
        let n = self.n();
        assert_eq!(b.len(), n);
        let mut x: Vec<E> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let t = self.lu[(i, j)] * x[j];
                x[i] = x[i] - t;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let t = self.lu[(i, j)] * x[j];
                x[i] = x[i] - t;
            }
            x[i] = x[i] / self.lu[(i, i)];
        }
        x
    }

    /// Solves `A X = B` column by column.
    pub fn solve_mat(&self, b: &Matrix<E>) -> Matrix<E> {
        assert_eq!(b.rows(), self.n());
        let mut x = Matrix::zeros(b.rows(), b.cols());
        for j in 0..b.cols() {
            let col = self.solve_vec(&b.col(j));
            x.set_col(j, &col);
        }
        x
    }

    pub fn inverse(&self) -> Matrix<E> {
        self.solve_mat(&Matrix::identity(self.n()))
    }

    /// Determinant from the pivot product and the permutation sign.
    pub fn det(&self) -> E {
        let mut d = if self.swaps.is_multiple_of(2) { E::one() } else { -E::one() };
        for i in 0..self.n() {
            d = d * self.lu[(i, i)];
        }
        d
    }
}

/// Inverse of `a`, with the pivot threshold derived from `a` itself.
pub fn inverse<E: Entry>(a: &Matrix<E>, pivot_tol: E::Real) -> Result<Matrix<E>> {
    Ok(lu_factor(a, pivot_tol)?.inverse())
}

/// Determinant of `a`; returns zero instead of failing on singular input.
pub fn det<E: Entry>(a: &Matrix<E>) -> E {
    match lu_factor(a, E::Real::zero()) {
        Ok(f) => f.det(),
        Err(_) => E::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Complex;

    #[test]
    fn identity_inverse() {
        let i = Matrix::<f64>::identity(4);
        let inv = inverse(&i, 0.0).unwrap();
        assert!((&inv - &i).max_abs() < 1e-15);
    }

    #[test]
    fn diagonal_inverse() {
        let d = Matrix::from_rows(2, 2, &[2.0, 0.0, 0.0, 4.0]);
        let inv = inverse(&d, 0.0).unwrap();
        let expected = Matrix::from_rows(2, 2, &[0.5, 0.0, 0.0, 0.25]);
        assert!((&inv - &expected).max_abs() < 1e-15);
    }

    #[test]
    fn random_inverse_residual() {
        // Fixed 5x5 matrix with no special structure.
        let a = Matrix::from_rows(
            5,
            5,
            &[
                0.8, -0.3, 0.5, 0.1, -0.9, 0.2, 1.1, -0.4, 0.7, 0.3, -0.6, 0.4,
                0.9, -0.2, 0.5, 0.3, -0.7, 0.1, 1.2, -0.4, 0.5, 0.2, -0.8, 0.6,
                1.0,
            ],
        );
        let inv = inverse(&a, 1e-14).unwrap();
        let resid = (&(&a * &inv) - &Matrix::identity(5)).one_norm();
        assert!(resid < 1e-12, "residual {resid}");
    }

    #[test]
    fn singular_detected() {
        let s = Matrix::from_rows(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(matches!(inverse(&s, 1e-12), Err(Error::Singular)));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = Matrix::<f64>::from_rows(3, 3, &[2.0, 0.0, 1.0, -1.0, 3.0, 2.0, 0.0, 1.0, -2.0]);
        // det = 2*(3*-2 - 2*1) - 0 + 1*(-1*1 - 0) = -16 - 1 = -17
        assert!((det(&a) - (-17.0)).abs() < 1e-12);
        let s = Matrix::from_rows(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert_eq!(det(&s), 0.0);
    }

    #[test]
    fn complex_solve() {
        let i = Complex::<f64>::i();
        let one = Complex::from_real(1.0);
        let a = Matrix::from_rows(2, 2, &[one, i, -i, one + one]);
        let inv = inverse(&a, 1e-14).unwrap();
        let resid = (&(&a * &inv) - &Matrix::identity(2)).one_norm();
        assert!(resid < 1e-14, "residual {resid}");
    }
}
