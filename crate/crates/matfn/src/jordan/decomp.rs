//! Additive and multiplicative Jordan decompositions.

use crate::error::{Error, Result};
use crate::linalg::lu::lu_factor;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tol::Tolerances;

use super::real::real_jordan_form;
use super::RealBlockSpec;

/// Splits `A = S + N` with `S` semisimple, `N` nilpotent and `S N = N S`.
///
/// `S` is obtained by dropping the block superdiagonals of the real Jordan
/// form in the chain basis; the decomposition itself is unique even though
/// the basis is not.
pub fn additive_jordan_decomposition<T: Scalar>(
    a: &Matrix<T>,
    tol: &Tolerances<T>,
) -> Result<(Matrix<T>, Matrix<T>)> {
    let form = real_jordan_form(a, tol)?;
    let d = form.structure.diagonal_part();
    let f = lu_factor(&form.p, T::zero()).map_err(|_| Error::ChainFailure)?;
    let p_inv = f.inverse();
    let s = &(&form.p * &d) * &p_inv;
    let n = a - &s;
    Ok((s, n))
}

/// Splits an invertible `A = S U = U S` with `S` semisimple and `U`
/// unipotent (`U = I + S^{-1} N`).
pub fn multiplicative_jordan_decomposition<T: Scalar>(
    a: &Matrix<T>,
    tol: &Tolerances<T>,
) -> Result<(Matrix<T>, Matrix<T>)> {
    let form = real_jordan_form(a, tol)?;
    let ctol = tol.cluster_tol(a);
    for b in &form.structure.blocks {
        let modulus = match *b {
            RealBlockSpec::Single { eigenvalue, .. } => eigenvalue.abs(),
            RealBlockSpec::Pair { lambda, mu, .. } => lambda.hypot(mu),
        };
        if modulus <= ctol {
            return Err(Error::Singular);
        }
    }
    let d = form.structure.diagonal_part();
    let f = lu_factor(&form.p, T::zero()).map_err(|_| Error::ChainFailure)?;
    let p_inv = f.inverse();
    let s = &(&form.p * &d) * &p_inv;
    // U = S^{-1} A = I + S^{-1} N.
    let u = lu_factor(&s, T::zero())?.solve_mat(a);
    Ok((s, u))
}
