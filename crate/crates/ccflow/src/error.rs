//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by algebra construction, geometry evaluation and integration.
#[derive(Debug, Error)]
pub enum CcError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("frame is rank-deficient at the evaluated point (rank {rank} < {expected})")]
    SingularFrame { rank: usize, expected: usize },

    #[error("metric restricted to the distribution is not positive-definite")]
    InvalidMetric,

    #[error("operation requires a Hamiltonian but the model declares none")]
    MissingHamiltonian,

    #[error("implicit midpoint failed to converge at step {step} (increment {increment:e})")]
    MidpointNoConvergence { step: usize, increment: f64 },

    #[error("state became non-finite at step {step}")]
    Divergence { step: usize },

    #[error("trajectory entered the coordinate singularity r < {tube:e} at step {step}")]
    CoordinateSingularity { step: usize, tube: f64 },

    #[error("initial velocity violates the constraints (max violation {violation:e})")]
    InadmissibleVelocity { violation: f64 },

    #[error("constraint Gram matrix is singular along the motion")]
    ConstraintDegeneracy,

    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown model `{0}`")]
    UnknownModel(String),
}

pub type Result<T> = std::result::Result<T, CcError>;
