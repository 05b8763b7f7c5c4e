//! Real matrix functions built on the real Jordan form.
//!
//! The crate computes real logarithms, square roots and p-th roots of dense
//! real matrices, decides when a real logarithm or square root exists, and
//! exposes the Jordan machinery (complex and real Jordan forms, additive and
//! multiplicative decompositions) that the constructions rest on.
//!
//! Everything is generic over the scalar type (`f32` or `f64`) through the
//! [`Scalar`] trait; [`RealMatrix`] and [`ComplexMatrix`] are the `f64`
//! aliases most callers want.

pub mod complex;
pub mod error;
pub mod iss;
pub mod jordan;
pub mod linalg;
pub mod matfuncs;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod tol;

pub use complex::Complex;
pub use error::{Error, OffendingBlock, Result};
pub use iss::{iss_log, residual, IssReport, ResidualKind};
pub use jordan::{
    additive_jordan_decomposition, jordan_chains, jordan_structure,
    multiplicative_jordan_decomposition, pair_negative_blocks, real_jordan_form,
    ComplexJordanForm, JordanBlockSpec, JordanStructure, RealBlockSpec, RealJordanForm,
    RealJordanStructure,
};
pub use linalg::{det, eigenvalues, inverse, Eigenvalue};
pub use matfuncs::{
    expm, expm_scaled, has_real_log, has_real_sqrt, log_unipotent, principal_log,
    principal_root, principal_sqrt, real_log, real_sqrt, root_unipotent, Branch,
    ExistenceVerdict, FnResult,
};
pub use matrix::Matrix;
pub use poly::poly_eval;
pub use scalar::{Entry, Scalar};
pub use tol::Tolerances;

/// Dense real matrix with `f64` entries.
pub type RealMatrix = Matrix<f64>;

/// Dense complex matrix with `f64` parts.
pub type ComplexMatrix = Matrix<Complex<f64>>;
