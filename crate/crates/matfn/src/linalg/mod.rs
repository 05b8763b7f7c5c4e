//! Dense factorizations and the eigenvalue solver.

pub mod eig;
pub mod hessenberg;
pub mod lu;
pub mod qr;
pub mod schur;

pub use eig::{eigenvalues, Eigenvalue};
pub use lu::{det, inverse, lu_factor, Lu};
pub use qr::{kernel, pivoted_qr, rank, PivotedQr};
