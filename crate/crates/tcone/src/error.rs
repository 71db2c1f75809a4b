use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    Empty,
    #[error("generators must be positive")]
    NonPositive,
    #[error("gcd of generators is {0}, expected 1")]
    GcdNotOne(u64),
    #[error("generator {0} is a combination of the others")]
    NotMinimal(u64),
    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),
    #[error("expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("order is not nice in x{var}: {alpha} vs {beta}")]
    OrderNotNice {
        var: usize,
        alpha: String,
        beta: String,
    },
    #[error("generators do not match the expected structure: {0}")]
    StructureMismatch(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("embedding dimension {0} is not supported here")]
    DimensionUnsupported(usize),
    #[error("ideal is not of the required shape: {0}")]
    ShapeMismatch(String),
    #[error("ideals carry different binomials")]
    BinomialMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Empty => "Empty",
            Error::NonPositive => "NonPositive",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::NotMinimal(_) => "NotMinimal",
            Error::NotMember(_) => "NotMember",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::OrderNotNice { .. } => "OrderNotNice",
            Error::StructureMismatch(_) => "StructureMismatch",
            Error::NotApplicable(_) => "NotApplicable",
            Error::DimensionUnsupported(_) => "DimensionUnsupported",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::BinomialMismatch => "BinomialMismatch",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
