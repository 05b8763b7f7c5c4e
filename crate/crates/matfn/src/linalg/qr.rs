//! Householder QR with column pivoting; rank and kernel extraction.

use num_traits::{Float, One, Zero};

use crate::matrix::Matrix;
use crate::scalar::Entry;

/// Column-pivoted QR factors `A P = Q R` with `Q` accumulated in full.
pub struct PivotedQr<E: Entry> {
    q: Matrix<E>,
    r: Matrix<E>,
    perm: Vec<usize>,
}

/// Factors `a` (m x n) with Householder reflections, pivoting the column of
/// largest remaining norm to the front at each step.
pub fn pivoted_qr<E: Entry>(a: &Matrix<E>) -> PivotedQr<E> {
    let m = a.rows();
    let n = a.cols();
    let steps = m.min(n);
    let mut r = a.clone();
    let mut q: Matrix<E> = Matrix::identity(m);
    let mut perm: Vec<usize> = (0..n).collect();

    for k in 0..steps {
        // Pivot: bring the column with the largest tail norm to position k.
        let mut best = k;
        let mut best_norm = E::Real::zero();
        for j in k..n {
            let mut s = E::Real::zero();
            for i in k..m {
                let v = r[(i, j)].modulus();
                s = s + v * v;
            }
            if s > best_norm {
                best_norm = s;
                best = j;
            }
        }
        if best != k {
            r.swap_cols(k, best);
            perm.swap(k, best);
        }

        // Householder vector for column k, rows k..m.
        let mut x: Vec<E> = (k..m).map(|i| r[(i, k)]).collect();
        let xnorm = vec_norm(&x);
        if xnorm <= E::Real::zero() {
            continue;
        }
        // alpha = -phase(x0) * ||x||, with phase(0) = 1, makes v^H x real.
        let x0 = x[0];
        let phase = if x0.modulus() > E::Real::zero() {
            x0 / E::from_real(x0.modulus())
        } else {
            E::one()
        };
        let alpha = -phase * E::from_real(xnorm);
        x[0] = x[0] - alpha;
        let vnorm = vec_norm(&x);
        if vnorm <= E::Real::zero() {
            continue;
        }
        let inv = E::from_real(E::Real::one() / vnorm);
        for e in x.iter_mut() {
            *e = *e * inv;
        }

        // R <- H R on rows k..m; H = I - 2 v v^H.
        for j in k..n {
            let mut dot = E::zero();
            for (t, i) in (k..m).enumerate() {
                dot = dot + x[t].conj() * r[(i, j)];
            }
            let two_dot = (E::one() + E::one()) * dot;
            for (t, i) in (k..m).enumerate() {
                let upd = x[t] * two_dot;
                r[(i, j)] = r[(i, j)] - upd;
            }
        }
        // Q <- Q H on columns k..m.
        for i in 0..m {
            let mut dot = E::zero();
            for (t, j) in (k..m).enumerate() {
                dot = dot + q[(i, j)] * x[t];
            }
            let two_dot = (E::one() + E::one()) * dot;
            for (t, j) in (k..m).enumerate() {
                let upd = two_dot * x[t].conj();
                q[(i, j)] = q[(i, j)] - upd;
            }
        }
        // Clean the subdiagonal of column k explicitly.
        r[(k, k)] = alpha;
        for i in (k + 1)..m {
            r[(i, k)] = E::zero();
        }
    }
    PivotedQr { q, r, perm }
}

impl<E: Entry> PivotedQr<E> {
    pub fn q(&self) -> &Matrix<E> {
        &self.q
    }

    pub fn r(&self) -> &Matrix<E> {
        &self.r
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Numerical rank: diagonal entries of `R` above `tol` in modulus.
    ///
    /// Column pivoting makes the diagonal nonincreasing, so the count is
    /// taken up to the first entry at or below the threshold.
    pub fn rank(&self, tol: E::Real) -> usize {
        let steps = self.r.rows().min(self.r.cols());
        for k in 0..steps {
            if self.r[(k, k)].modulus() <= tol {
                return k;
            }
        }
        steps
    }
}

/// Rank of `m` at threshold `tol`.
pub fn rank<E: Entry>(m: &Matrix<E>, tol: E::Real) -> usize {
    pivoted_qr(m).rank(tol)
}

/// Orthonormal basis of the kernel of `m`, via full QR of the adjoint:
/// the trailing columns of `Q` from `m^H = Q R` span the null space of `m`.
/// Returns the rank alongside the basis vectors.
pub fn kernel<E: Entry>(m: &Matrix<E>, tol: E::Real) -> (usize, Vec<Vec<E>>) {
    let f = pivoted_qr(&m.conj_transpose());
    let rk = f.rank(tol);
    let n = m.cols();
    let basis = (rk..n).map(|j| f.q.col(j)).collect();
    (rk, basis)
}

pub(crate) fn vec_norm<E: Entry>(v: &[E]) -> E::Real {
    let mut s = E::Real::zero();
    for e in v {
        let m = e.modulus();
        s = s + m * m;
    }
    s.sqrt()
}
