use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Reciprocal requested for a series whose constant term is not a unit.
    #[error("series constant term {0} is not +1 or -1; reciprocal would leave the integers")]
    NonUnitConstant(BigInt),

    /// Composition or inversion with a nonzero constant term in the inner series.
    #[error("inner series has nonzero constant term {0}")]
    NonZeroConstant(BigInt),

    /// Compositional inverse needs a unit linear coefficient.
    #[error("series linear coefficient {0} is not +1 or -1; no integral compositional inverse")]
    NonUnitLinear(BigInt),

    #[error("truncation order {available} is too small for index {needed}; rebuild with order >= {needed}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("({n}, {k}) lies outside the triangle (need k <= n)")]
    OutsideTriangle { n: usize, k: usize },

    #[error("method `{method}` is not available for m = {m}")]
    UnsupportedMethod { method: &'static str, m: usize },

    #[error("{what} = {got} exceeds the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    #[error("invalid restricted subset: {0}")]
    InvalidSubset(String),

    #[error("invalid metatile spec: {0}")]
    InvalidSpec(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0}")]
    Domain(String),

    #[error("unknown identity `{name}`; valid names: {}", valid.join(", "))]
    UnknownIdentity {
        name: String,
        valid: Vec<&'static str>,
    },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
