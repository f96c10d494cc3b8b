use thiserror::Error;

/// Errors produced by the linear-algebra kernel and the state/score layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("entry count {got} does not match {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },

    #[error("matrix dimension {0} exceeds the supported maximum {max}", max = crate::linalg::MAX_DIM)]
    DimensionCap(usize),

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions {a_rows}x{a_cols} and {b_rows}x{b_cols} are incompatible")]
    ShapeMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },

    #[error("subsystem dims multiply to {product}, matrix dimension is {dim}")]
    DimsMismatch { product: usize, dim: usize },

    #[error("subsystem dimension must be positive")]
    ZeroDim,

    #[error("mask length {got} does not match subsystem count {expected}")]
    MaskLength { expected: usize, got: usize },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemIndex { index: usize, count: usize },

    #[error("keep set is empty")]
    EmptyKeep,

    #[error("duplicate subsystem index {0} in keep set")]
    DuplicateIndex(usize),

    #[error("matrix is not Hermitian: max |h - h†| entry is {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("not a valid density matrix: {0}")]
    InvalidDensity(String),

    #[error("state has {got} amplitudes, expected {expected}")]
    AmplitudeCount { expected: usize, got: usize },

    #[error("state squared norm deviates from 1 by {0:e}")]
    NotNormalized(f64),

    #[error("operation needs {expected} subsystems of dimension 2, state has dims {got:?}")]
    NotThreeQubits { expected: usize, got: Vec<usize> },

    #[error("state must have at least two parties, got {0}")]
    TooFewParties(usize),

    #[error("nodal subsystem has dimension {0}, expected a qubit")]
    NodalNotQubit(usize),

    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("score parts must both be three-party: {left} vs {right} pair terms")]
    PairArity { left: usize, right: usize },

    #[error("negativity must be nonnegative, got {0}")]
    NegativeScorePart(f64),

    #[error("rejection sampler exceeded {0} attempts; rng looks broken")]
    SamplerStalled(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
