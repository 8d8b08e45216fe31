use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid biclique spec: {0}")]
    InvalidSpec(String),

    #[error("degenerate parameters: all six counts are zero (k = 0)")]
    DegenerateParameters,

    #[error("polynomial degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("expected a monic integer cubic, got {0}")]
    InvalidCubic(String),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("{what} exceeds the brute-force guard ({got} > {limit})")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("matching sequence is not realizable inside K_{{{j},{k}}}: entry {index} came out negative")]
    InconsistentMatchingNumbers { j: usize, k: usize, index: usize },

    #[error("infeasible family parameters: {0}")]
    InfeasibleFamily(String),

    #[error("feasibility scan exhausted (case {case}, cap {cap})")]
    ScanExhausted { case: u8, cap: i64 },

    #[error("formula integrity failure: {0}")]
    FormulaIntegrity(String),

    #[error("value does not fit the target integer width: {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
