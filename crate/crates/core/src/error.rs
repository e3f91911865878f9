use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("algebra is not cocommutative: {0}")]
    NotCocommutative(String),
    #[error("algebra is not commutative: {0}")]
    NotCommutative(String),
    #[error("characteristic {p} divides {n}")]
    CharacteristicDivides { p: u64, n: u64 },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("degree {degree} out of range (available up to {max})")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("action not compatible with the differential in degree {0}")]
    ActionNotCompatible(usize),
    #[error("action leaves the subspace in degree {0}")]
    ActionLeavesSubspace(usize),
    #[error("not a subcomplex in degree {0}")]
    NotASubcomplex(usize),
    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    /// Stable machine-readable tag used in CLI and Python error reports.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotAGroup(_) => "NotAGroup",
            Error::InvalidPrime(_) => "InvalidPrime",
            Error::NotCocommutative(_) => "NotCocommutative",
            Error::NotCommutative(_) => "NotCommutative",
            Error::CharacteristicDivides { .. } => "CharacteristicDivides",
            Error::InvalidModule(_) => "InvalidModule",
            Error::InvalidBimodule(_) => "InvalidBimodule",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::ActionNotCompatible(_) => "ActionNotCompatible",
            Error::ActionLeavesSubspace(_) => "ActionLeavesSubspace",
            Error::NotASubcomplex(_) => "NotASubcomplex",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::Schema(_) => "Schema",
            Error::CheckFailed(_) => "CheckFailed",
        }
    }
}
