use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("coordinate index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("vector does not live in this representation's model: {0}")]
    ModelMismatch(String),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("tuple is not a row contraction: largest eigenvalue of sum A_i A_i* is {max_eigenvalue}")]
    NotContractive { max_eigenvalue: f64 },

    #[error("resource cap exceeded: level {k} needs {needed} basis vectors, cap is {cap}")]
    ResourceCap { k: usize, needed: u128, cap: usize },

    #[error("integer overflow computing {0}")]
    Overflow(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generators are not orthonormal-wandering to depth {depth} (worst deviation {deviation})")]
    NotWandering { depth: usize, deviation: f64 },

    #[error("operation not supported for this variant/backend: {0}")]
    Unsupported(String),

    #[error("spec file error: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
