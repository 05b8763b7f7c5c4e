//! Householder reduction to upper Hessenberg form.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Reduces a square real matrix to upper Hessenberg form by an orthogonal
/// similarity. Only the Hessenberg matrix is returned; the transform itself
/// is not accumulated because the eigenvalue solver does not need it.
pub fn hessenberg<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let n = a.n();
    let mut h = a.clone();
    if n < 3 {
        return h;
    }
    for k in 0..(n - 2) {
        // Householder vector annihilating column k below the subdiagonal.
        // Skip when those entries are already zero so that Hessenberg input
        // passes through bit-exact.
        let mut x: Vec<T> = ((k + 1)..n).map(|i| h[(i, k)]).collect();
        if x[1..].iter().all(|&v| v == T::zero()) {
            continue;
        }
        let xnorm = x.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
        if xnorm == T::zero() {
            continue;
        }
        let alpha = if x[0] >= T::zero() { -xnorm } else { xnorm };
        x[0] = x[0] - alpha;
        let vnorm = x.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
        if vnorm == T::zero() {
            continue;
        }
        for e in x.iter_mut() {
            *e = *e / vnorm;
        }
        let two = T::of(2.0);

        // H <- P H from the left (rows k+1..n).
        for j in 0..n {
            let mut dot = T::zero();
            for (t, i) in ((k + 1)..n).enumerate() {
                dot = dot + x[t] * h[(i, j)];
            }
            let s = two * dot;
            for (t, i) in ((k + 1)..n).enumerate() {
                let upd = s * x[t];
                h[(i, j)] = h[(i, j)] - upd;
            }
        }
        // H <- H P from the right (columns k+1..n).
        for i in 0..n {
            let mut dot = T::zero();
            for (t, j) in ((k + 1)..n).enumerate() {
                dot = dot + h[(i, j)] * x[t];
            }
            let s = two * dot;
            for (t, j) in ((k + 1)..n).enumerate() {
                let upd = s * x[t];
                h[(i, j)] = h[(i, j)] - upd;
            }
        }
        h[(k + 1, k)] = alpha;
        for i in (k + 2)..n {
            h[(i, k)] = T::zero();
        }
    }
    h
}
