//! Polynomial evaluation at a matrix argument.

use crate::matrix::Matrix;
use crate::scalar::Entry;

/// Evaluates `p(A)` by Horner's scheme.
///
/// Coefficients are given in descending degree order, so
/// `poly_eval(&[1.0, -2.0, 3.0, -1.0], &a)` computes
/// `A^3 - 2 A^2 + 3 A - I`. An empty coefficient list yields the zero
/// matrix.
pub fn poly_eval<E: Entry>(coeffs: &[E::Real], a: &Matrix<E>) -> Matrix<E> {
    let n = a.n();
    let mut acc = Matrix::zeros(n, n);
    for &c in coeffs {
        acc = &(&acc * a) + &Matrix::identity(n).scale(E::from_real(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_polynomial() {
        let a = Matrix::from_rows(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let p = poly_eval(&[5.0], &a);
        assert_eq!(p, Matrix::identity(2).scale(5.0));
    }

    #[test]
    fn cubic_matches_explicit_powers() {
        let a = Matrix::from_rows(2, 2, &[0.5, -1.0, 2.0, 0.25]);
        // p(X) = X^3 - 2 X^2 + 3 X - 1
        let p = poly_eval(&[1.0, -2.0, 3.0, -1.0], &a);
        let explicit = &(&(&a.pow(3) - &a.pow(2).scale(2.0)) + &a.scale(3.0))
            - &Matrix::identity(2);
        assert!((&p - &explicit).max_abs() < 1e-14);
    }

    #[test]
    fn empty_coefficients_give_zero() {
        let a = Matrix::<f64>::identity(3);
        assert_eq!(poly_eval(&[], &a).max_abs(), 0.0);
    }
}
