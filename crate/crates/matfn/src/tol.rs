//! Tolerance bundle threaded through every decision point.

use crate::matrix::Matrix;
use crate::scalar::{Entry, Scalar};

/// Tolerances for eigenvalue clustering, rank decisions and residual checks.
///
/// `cluster` and `rank` default to matrix-dependent values when left unset:
///
/// * cluster tolerance: `n * ||A||_1 * eps^(1/2)`
/// * rank tolerance: `n * eps * (largest column norm)`
///
/// The residual tolerance defaults to `1e-10`. All three can be overridden,
/// and must be nonnegative.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances<T: Scalar> {
    cluster: Option<T>,
    rank: Option<T>,
    residual: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Tolerances { cluster: None, rank: None, residual: T::of(1e-10) }
    }
}

impl<T: Scalar> Tolerances<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Overrides the eigenvalue clustering tolerance.
    pub fn with_cluster(mut self, tol: T) -> Self {
        assert!(tol >= T::zero(), "cluster tolerance must be nonnegative");
        self.cluster = Some(tol);
        self
    }

    /// Overrides the rank decision tolerance.
    pub fn with_rank(mut self, tol: T) -> Self {
        assert!(tol >= T::zero(), "rank tolerance must be nonnegative");
        self.rank = Some(tol);
        self
    }

    /// Overrides the residual acceptance tolerance.
    pub fn with_residual(mut self, tol: T) -> Self {
        assert!(tol >= T::zero(), "residual tolerance must be nonnegative");
        self.residual = tol;
        self
    }

    pub fn residual(&self) -> T {
        self.residual
    }

    /// Clustering tolerance for the eigenvalues of `a`.
    pub fn cluster_tol(&self, a: &Matrix<T>) -> T {
        self.cluster.unwrap_or_else(|| {
            let n = T::from_usize(a.n()).unwrap();
            n * a.one_norm() * T::epsilon().sqrt()
        })
    }

    /// Rank tolerance for a single matrix `m`.
    pub fn rank_tol<E: Entry<Real = T>>(&self, m: &Matrix<E>) -> T {
        self.rank.unwrap_or_else(|| {
            let n = T::from_usize(m.rows().max(m.cols())).unwrap();
            n * T::epsilon() * m.max_col_norm()
        })
    }

    /// Rank tolerance for the k-th power in a Jordan staircase.
    ///
    /// Two effects require thresholds beyond the plain per-matrix rank
    /// tolerance of `m_k = m^k`:
    ///
    /// * rounding noise in the power scales with `||m||^k`, not `||m^k||`,
    ///   which collapses when `m` is nearly nilpotent;
    /// * eigenvalues merged into one cluster leave singular values up to the
    ///   cluster radius in `m`, hence up to roughly that radius to the k-th
    ///   power in `m^k`.
    pub fn staircase_tol<E: Entry<Real = T>>(
        &self,
        m1_norm: T,
        mk: &Matrix<E>,
        k: usize,
        cluster_tol: T,
    ) -> T {
        let base = match self.rank {
            Some(t) => t,
            None => {
                let n = T::from_usize(mk.rows().max(mk.cols())).unwrap();
                let scale = mk.max_col_norm().max(m1_norm.powi(k as i32));
                n * T::epsilon() * scale
            }
        };
        let two = T::of(2.0);
        base.max((two * cluster_tol).powi(k as i32))
    }
}
