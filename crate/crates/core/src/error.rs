use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix of {rows}x{cols} exceeds the supported 64x64 limit")]
    TooLarge { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("element index {index} out of range for a ground set of {size}")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("deletion and contraction sets overlap")]
    OverlappingMinorSets,

    #[error("invalid family specification: {0}")]
    InvalidFamily(String),

    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    InvalidVertex { vertex: usize, count: usize },

    #[error("search budget exhausted after {nodes} nodes")]
    ResourceExhausted { nodes: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no certificate found: {0}")]
    NoCertificate(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("parameters outside the supported regime: {0}")]
    OutOfRegime(String),
}
