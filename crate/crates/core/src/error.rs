use thiserror::Error;

use crate::exactnum::ExactError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("unknown builtin {0:?} (expected one of trivial, fermion, dirac, toric, fibonacci)")]
    UnknownBuiltin(String),

    #[error("s-matrix is not symmetric at ({row}, {col}); input is not a modular tensor category")]
    AsymmetricSMatrix { row: String, col: String },

    #[error("{0:?} is not an admissible V- (needs V-⊠V- = 1 and twist 1/2)")]
    NotVminus(String),

    #[error("category has no V- candidate; it is not pre-Clifford")]
    NotPreClifford,

    #[error("several V- candidates {0:?}; choose one explicitly")]
    AmbiguousVminus(Vec<String>),

    #[error("zeta value of {label:?} is {value}, not ±1; input is not a consistent pre-Clifford category")]
    ZetaNotSign { label: String, value: String },

    #[error("zeta is not multiplicative: N_{{{m},{n}}}^{{{p}}} > 0 but zeta({p}) != zeta({m})·zeta({n})")]
    ZetaNotMultiplicative { m: String, n: String, p: String },

    #[error("total dimension {total} is not divisible by {parts}; structural inconsistency of the input")]
    Divisibility { total: u64, parts: u64 },

    #[error("invalid minimal model parameters: {0}")]
    InvalidMinimalModel(String),

    #[error("internal count mismatch: {0}")]
    CountMismatch(String),

    #[error("{0}")]
    Verma(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
