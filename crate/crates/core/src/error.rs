use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("local dimensions must be at least 2 (got {0}x{1})")]
    InvalidDimension(usize, usize),

    #[error("expected {expected} amplitudes for the given dimensions, got {got}")]
    AmplitudeLength { expected: usize, got: usize },

    #[error("state has zero norm")]
    ZeroNorm,

    #[error("amplitudes contain non-finite values")]
    NonFinite,

    #[error("dimension mismatch: {0:?} vs {1:?}")]
    DimensionMismatch((usize, usize), (usize, usize)),

    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),

    #[error("generator dimension must be at least 2 (got {0})")]
    GeneratorDimension(usize),

    #[error("operator of size {size} does not match dims {dims:?}")]
    OperatorSize { size: usize, dims: (usize, usize) },

    #[error("coefficients are not normalized (sum of squares {0})")]
    CoefficientNorm(f64),

    #[error("{coefficients} coefficients for {states} states")]
    CoefficientCount { coefficients: usize, states: usize },

    #[error("at least {required} states are required, got {got}")]
    TooFewStates { required: usize, got: usize },

    #[error("superposition norm vanishes ({0:e})")]
    VanishingNorm(f64),

    #[error("bounds require {required} states but the set is {found}")]
    ClassPrecondition {
        required: crate::OrthoClass,
        found: crate::OrthoClass,
    },

    #[error("operation requires exactly two states, got {0}")]
    NotAPair(usize),

    #[error("{m} states exceed the partition cap of {cap}")]
    PartitionCap { m: usize, cap: usize },

    #[error("two-qubit refinement needs m = 2 and 2x2 dims")]
    RefinementUnavailable,

    #[error("infeasible ensemble: {0}")]
    InfeasibleEnsemble(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
