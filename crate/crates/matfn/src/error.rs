//! Error taxonomy shared by every operation in the crate.

use thiserror::Error;

/// A Jordan block cited in a failure or verdict: eigenvalue, size, count.
///
/// Diagnostics are reported in `f64`, which is lossless for both supported
/// scalar types.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OffendingBlock {
    pub eigenvalue: f64,
    pub size: usize,
    pub count: usize,
}

impl std::fmt::Display for OffendingBlock {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.eigenvalue, self.size, self.count)
    }
}

fn join_blocks(blocks: &[OffendingBlock]) -> String {
    blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ")
}

/// Everything that can go wrong across the library.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("QR iteration did not converge within {sweeps} sweeps")]
    NonConvergence { sweeps: usize },

    #[error("matrix is singular to working precision")]
    Singular,

    #[error("matrix entries must be finite")]
    NotFinite,

    #[error("expected a {rows}x{cols} matrix, got {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("Jordan structure inconsistent: eigenvalue {eigenvalue} has multiplicity {multiplicity} but staircase dimension {found}")]
    StructureInconsistent { eigenvalue: f64, multiplicity: usize, found: usize },

    #[error("failed to extract an independent Jordan chain generator")]
    ChainFailure,

    #[error("odd negative Jordan blocks, no real logarithm or square root: {}", join_blocks(offending))]
    ParityViolation { offending: Vec<OffendingBlock> },

    #[error("matrix is not unipotent within the stated nilpotency bound {bound}")]
    NotUnipotent { bound: usize },

    #[error("no real logarithm exists{}{}", if *invertible { "" } else { " (matrix is singular)" }, if offending.is_empty() { String::new() } else { format!(": odd negative blocks {}", join_blocks(offending)) })]
    NoRealLog { invertible: bool, offending: Vec<OffendingBlock> },

    #[error("no real square root exists{}{}", if *invertible { "" } else { " (matrix is singular)" }, if offending.is_empty() { String::new() } else { format!(": odd negative blocks {}", join_blocks(offending)) })]
    NoRealSqrt { invertible: bool, offending: Vec<OffendingBlock> },

    #[error("matrix has a negative real eigenvalue {eigenvalue}; principal branch undefined")]
    NegativeEigenvalue { eigenvalue: f64 },

    #[error("square root stage exceeded budget k_max={k_max} (closeness reached {closeness})")]
    BudgetExceeded { k_max: usize, closeness: f64 },
}

pub type Result<V> = std::result::Result<V, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_message_lists_blocks() {
        let e = Error::ParityViolation {
            offending: vec![OffendingBlock { eigenvalue: -1.0, size: 2, count: 1 }],
        };
        let msg = e.to_string();
        assert!(msg.contains("(-1, 2, 1)"), "message was: {msg}");
    }

    #[test]
    fn singular_log_message() {
        let e = Error::NoRealLog { invertible: false, offending: vec![] };
        assert!(e.to_string().contains("singular"));
    }
}
