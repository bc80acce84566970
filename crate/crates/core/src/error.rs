use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group model: {0}")]
    InvalidModel(String),

    #[error("unsupported index rule `{0}`")]
    UnsupportedIndexRule(String),

    #[error("operands belong to different group models")]
    ModelMismatch,

    #[error("expected {expected} entries, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("cannot combine an empty list of classes")]
    EmptyCombination,

    #[error("{name}: not a division algebra of the declared degree {degree} (model index {index})")]
    NotDivision { name: String, degree: u64, index: u64 },

    #[error("{name}: reduced dimension {prime}^{k} requires 0 <= {k} < {s}")]
    ReducedDimension {
        name: String,
        prime: u64,
        k: u32,
        s: u32,
    },

    #[error("p-adic valuation of 0 is undefined")]
    ZeroValuation,

    /// A precondition of the index-reduction formula or of a criterion
    /// (degree equality, non-empty inputs, ranges) does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A hypothesis of a classification theorem does not hold, so the
    /// criterion is inapplicable rather than false.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
