use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("elements or subspaces belong to different algebras")]
    AlgebraMismatch,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("prime {p} is not good for {family}")]
    BadPrime { family: String, p: u64 },
    #[error("psl(n|n) needs p not dividing n (n = {n}, p = {p})")]
    PslBadPrime { n: usize, p: u64 },
    #[error("alpha must avoid 0 and -1 in the field (got {0})")]
    BadAlpha(String),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("element is not even")]
    OddElement,
    #[error("no unique sign makes the combination central-compatible: {0}")]
    AmbiguousSign(String),
    #[error("not a positive system: {0}")]
    NotAPositiveSystem(String),
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("seed is not contained in the ambient subspace")]
    SeedOutsideAmbient,
    #[error("theorem hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

impl Error {
    /// Stable machine-readable name used in CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrimeModulus(_) => "NonPrimeModulus",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::BadParams(_) => "BadParams",
            Error::BadPrime { .. } => "BadPrime",
            Error::PslBadPrime { .. } => "PslBadPrime",
            Error::BadAlpha(_) => "BadAlpha",
            Error::BadPartition(_) => "BadPartition",
            Error::OddElement => "OddElement",
            Error::AmbiguousSign(_) => "AmbiguousSign",
            Error::NotAPositiveSystem(_) => "NotAPositiveSystem",
            Error::NotASubalgebra => "NotASubalgebra",
            Error::SeedOutsideAmbient => "SeedOutsideAmbient",
            Error::HypothesisViolation(_) => "HypothesisViolation",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::Parse(_) => "Parse",
            Error::Construction(_) => "Construction",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
