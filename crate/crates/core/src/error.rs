use thiserror::Error;

/// Everything that can go wrong while building or transforming finite
/// graph-like structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("label `{0}` is malformed (empty, unbalanced brackets, or a top-level comma)")]
    BadLabel(String),

    #[error("`{label}` is not an element of {context}")]
    UnknownLabel { label: String, context: String },

    #[error("map is not total: `{0}` has no image")]
    NotTotal(String),

    #[error("shape mismatch: {0}")]
    Mismatch(String),

    #[error("{what} of size {size} exceeds the bound {bound}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("enumeration needs {needed} raw assignments, budget is {budget}")]
    Budget { needed: u128, budget: u64 },

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("object is not simple")]
    NotSimple,

    #[error("object is not cosimple")]
    NotCosimple,

    #[error("{op} is not available for presentation {presentation}")]
    Unsupported {
        op: &'static str,
        presentation: &'static str,
    },

    #[error("structure violated: {0}")]
    Violation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
