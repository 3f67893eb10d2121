use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds cap: {what} (cap {cap})")]
    OrderCapExceeded { what: String, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("action image for acting generator {generator} is not an automorphism of the normal factor")]
    NotAnAutomorphism { generator: usize },

    #[error("action does not extend to a homomorphism of the acting group")]
    NotAHomomorphism,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup lattice exceeds cap: {what} (cap {cap})")]
    LatticeCapExceeded { what: String, cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("no quotient of the group lies in the class")]
    NoResidual,

    #[error("unsupported formation for this operation: {0}")]
    UnsupportedFormation(String),

    #[error("unknown builtin group: {0}")]
    UnknownBuiltin(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("unknown formation: {0}")]
    UnknownFormation(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("cached record disagrees with recomputation: {0}")]
    CacheMismatch(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// True for the cap-style failures that suites record as skips.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. } | Error::LatticeCapExceeded { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
