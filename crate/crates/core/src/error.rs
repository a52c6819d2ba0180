use thiserror::Error;

/// Every failure the library can report. Verification outcomes that are
/// expected to be inspected (axiom reports, verdicts) are values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot mix elements of Q(zeta_{left}) and Q(zeta_{right})")]
    IncompatibleCyclotomicOrder { left: u32, right: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element 0 is not a two-sided identity (witness {witness})")]
    NoIdentity { witness: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("malformed multiplication table: {0}")]
    BadTable(String),
    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("invalid group datum: {0}")]
    InvalidGroupDatum(String),
    #[error("coradical filtration stabilizes at dimension {reached} < {dim}: not pointed")]
    NotPointed { reached: usize, dim: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not central")]
    NotCentral,

    #[error("localization at {subset} derives 1 = 0")]
    InconsistentLocalization { subset: String },
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("truncation degree {0} is too small (need N >= 1)")]
    TruncationTooSmall(usize),
    #[error("truncation ideal is not stable under the action of {h}")]
    TruncationNotStable { h: String },
    #[error("generator map violates the defining relation {relation} at ({h}, {k})")]
    UniversalPropertyViolated { h: String, k: String, relation: String },

    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
}

impl Error {
    /// Stable machine-readable name used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::IncompatibleCyclotomicOrder { .. } => "IncompatibleCyclotomicOrder",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::NoIdentity { .. } => "NoIdentity",
            Error::NoInverse { .. } => "NoInverse",
            Error::BadTable(_) => "BadTable",
            Error::OrderTooLarge { .. } => "OrderTooLarge",
            Error::InvalidGroupDatum(_) => "InvalidGroupDatum",
            Error::NotPointed { .. } => "NotPointed",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotIdempotent => "NotIdempotent",
            Error::NotCentral => "NotCentral",
            Error::InconsistentLocalization { .. } => "InconsistentLocalization",
            Error::UnsupportedPresentation(_) => "UnsupportedPresentation",
            Error::TruncationTooSmall(_) => "TruncationTooSmall",
            Error::TruncationNotStable { .. } => "TruncationNotStable",
            Error::UniversalPropertyViolated { .. } => "UniversalPropertyViolated",
            Error::Parse(_) => "Parse",
            Error::UnknownLabel(_) => "UnknownLabel",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
