//! Inverse scaling and squaring: an independent route to the principal
//! logarithm, used to cross-check the Jordan-form construction.

use crate::error::{Error, Result};
use crate::matfuncs::{expm, principal_sqrt, relative_diff};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tol::Tolerances;

/// Which round-trip a residual certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualKind {
    /// `exp(X)` should reproduce `A`.
    Log,
    /// `X^2` should reproduce `A`.
    Sqrt,
    /// `X^p` should reproduce `A`.
    Root(u32),
}

/// Relative round-trip residual of a candidate function value `x` for the
/// input `a`, in the operator 1-norm.
pub fn residual<T: Scalar>(a: &Matrix<T>, x: &Matrix<T>, kind: ResidualKind) -> T {
    let got = match kind {
        ResidualKind::Log => expm(x),
        ResidualKind::Sqrt => x * x,
        ResidualKind::Root(p) => x.pow(p as usize),
    };
    relative_diff(&got, a)
}

/// Outcome of [`iss_log`] with its convergence diagnostics.
#[derive(Clone, Debug)]
pub struct IssReport<T: Scalar> {
    pub value: Matrix<T>,
    /// Number of square roots taken before the series.
    pub k: usize,
    /// Number of series terms summed.
    pub series_terms: usize,
    /// `||B - I||_1` of the matrix the series was applied to.
    pub final_closeness: T,
}

/// Principal logarithm by inverse scaling and squaring: take principal
/// square roots until the iterate is within 1-norm distance 0.25 of the
/// identity, sum the logarithm series there, and scale back by `2^k`.
///
/// Fails with `BudgetExceeded` if `k_max` square roots do not bring the
/// iterate close enough, and propagates any error of the square-root step
/// (`Singular`, `NegativeEigenvalue`, ...).
pub fn iss_log<T: Scalar>(
    a: &Matrix<T>,
    k_max: usize,
    tol: &Tolerances<T>,
) -> Result<IssReport<T>> {
    let n = a.n();
    let close_enough = T::of(0.25);
    let mut b = a.clone();
    let mut k = 0usize;
    let mut closeness = (&b - &Matrix::identity(n)).one_norm();
    while closeness > close_enough {
        if k == k_max {
            return Err(Error::BudgetExceeded {
                k_max,
                closeness: closeness.to_f64().unwrap_or(f64::NAN),
            });
        }
        b = principal_sqrt(&b, tol)?.value;
        k += 1;
        closeness = (&b - &Matrix::identity(n)).one_norm();
    }

    // Mercator series for log(I + N), stopped once the tail bound
    // ||N||^(m+1) / ((m+1)(1 - ||N||)) falls below machine epsilon.
    let nil = &b - &Matrix::identity(n);
    let nnorm = nil.one_norm();
    let mut sum = Matrix::zeros(n, n);
    let mut power = Matrix::identity(n);
    let mut terms = 0usize;
    let mut tail = nnorm;
    for m in 1..=200usize {
        power = &power * &nil;
        let mr = T::from_usize(m).unwrap();
        let coeff = if m % 2 == 0 { -(T::one() / mr) } else { T::one() / mr };
        sum = &sum + &power.scale(coeff);
        terms = m;
        tail = tail * nnorm;
        let bound = tail / (T::from_usize(m + 1).unwrap() * (T::one() - nnorm));
        if bound < T::epsilon() {
            break;
        }
    }

    Ok(IssReport {
        value: sum.scale(T::of(2.0).powi(k as i32)),
        k,
        series_terms: terms,
        final_closeness: closeness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn identity_needs_no_roots() {
        let r = iss_log(&Matrix::<f64>::identity(3), 40, &Tolerances::default()).unwrap();
        assert_eq!(r.k, 0);
        assert_eq!(r.value.max_abs(), 0.0);
    }

    #[test]
    fn diagonal_log() {
        let a = Matrix::from_rows(2, 2, &[2.0, 0.0, 0.0, 3.0]);
        let r = iss_log(&a, 40, &Tolerances::default()).unwrap();
        assert!(r.k >= 1);
        assert!((r.value[(0, 0)] - 2.0f64.ln()).abs() < 1e-12);
        assert!((r.value[(1, 1)] - 3.0f64.ln()).abs() < 1e-12);
        assert!(r.value[(0, 1)].abs() < 1e-12);
        assert!(residual(&a, &r.value, ResidualKind::Log) < 1e-12);
    }

    #[test]
    fn rotation_log_matches_generator() {
        let theta = 0.4f64;
        let a = Matrix::from_rows(2, 2, &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()]);
        let r = iss_log(&a, 40, &Tolerances::default()).unwrap();
        let expect = Matrix::from_rows(2, 2, &[0.0, -theta, theta, 0.0]);
        assert!((&r.value - &expect).max_abs() < 1e-12, "got {}", r.value);
    }

    #[test]
    fn budget_exhaustion_reports_closeness() {
        let a = Matrix::from_rows(2, 2, &[100.0, 0.0, 0.0, 1.0]);
        match iss_log(&a, 0, &Tolerances::default()) {
            Err(Error::BudgetExceeded { k_max: 0, closeness }) => {
                assert!((closeness - 99.0).abs() < 1e-9);
            }
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn negative_eigenvalue_propagates() {
        let a = Matrix::from_rows(2, 2, &[-2.0, 0.0, 0.0, 3.0]);
        assert!(matches!(
            iss_log(&a, 40, &Tolerances::default()),
            Err(Error::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn residual_kinds_round_trip() {
        let a = Matrix::from_rows(2, 2, &[4.0, 0.0, 0.0, 9.0]);
        let sqrt = Matrix::from_rows(2, 2, &[2.0, 0.0, 0.0, 3.0]);
        assert!(residual(&a, &sqrt, ResidualKind::Sqrt).to_f64().unwrap() < 1e-15);
        let cube = Matrix::from_rows(2, 2, &[8.0, 0.0, 0.0, 27.0]);
        assert!(residual(&cube, &sqrt, ResidualKind::Root(3)).to_f64().unwrap() < 1e-15);
    }
}
