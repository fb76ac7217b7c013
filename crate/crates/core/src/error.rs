use thiserror::Error;

/// Errors raised by the algebra and combinatorics routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field configuration: {0}")]
    FieldConfig(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("negative exponent {exponent} on variable {var}")]
    NegativeExponent { var: char, exponent: i64 },

    #[error("invalid module exponents (i, j, l) = ({i}, {j}, {l}): need i + j = l with i, j > 0, or i = j = 0")]
    InvalidModule { i: i64, j: i64, l: i64 },

    #[error("presentation mismatch: {left} vs {right}")]
    PresentationMismatch { left: String, right: String },

    #[error("{0} does not divide {1}")]
    NotDivisor(u32, u32),

    #[error("twist {k} out of range [0, {r})")]
    TwistOutOfRange { k: u32, r: u32 },

    #[error("branch exponent {b} is not a unit modulo {l}")]
    NotAUnit { b: u32, l: u32 },

    #[error("power map exponent {name} = ({numerator})/{l} is not a nonnegative integer")]
    NonIntegralPower { name: char, numerator: i64, l: u32 },

    #[error("operation requires a specialized t, got generic mode")]
    GenericModeRejected,

    #[error("map is not well defined: {0}")]
    NotWellDefined(String),

    #[error("cokernel computation did not stabilize by degree {0}")]
    NonStabilizing(u32),

    #[error("oracle: {0}")]
    Oracle(String),

    #[error("graph: {0}")]
    Graph(String),

    #[error("unstable: 2g - 2 + n = {0} must be positive")]
    Unstable(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
