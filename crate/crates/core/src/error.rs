use thiserror::Error;

use crate::algebra::Bidegree;

/// Errors produced by the library.
///
/// The variants are grouped by the exit code the command-line front end maps
/// them to; see [`Error::exit_code`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: operands live in different rings")]
    RingMismatch,

    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("the zero ideal has no {0}")]
    ZeroIdeal(&'static str),

    #[error("polynomial is not bihomogeneous: {0}")]
    NotBihomogeneous(String),

    #[error("expected bidegree {expected}, found {found}")]
    WrongBidegree { expected: Bidegree, found: Bidegree },

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("negative bidegree {0} is outside the Hilbert function's domain")]
    NegativeBidegree(Bidegree),

    #[error("singular block matrix: {0}")]
    SingularMatrix(String),

    #[error("the ideal does not define an empty variety")]
    NotEmptyVariety,

    #[error("monomial ideal is not bi-Borel fixed: {witness} is missing")]
    NotBiBorel { witness: String },

    #[error("search box {needed} exceeds the configured cap {cap}")]
    BoxCapExceeded { needed: Bidegree, cap: Bidegree },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("usage: {0}")]
    Usage(String),

    #[error("bigeneric initial ideal is unstable across seeds {seeds:?}: {detail}")]
    Instability { seeds: (u64, u64), detail: String },

    #[error("contradiction: {message}\n--- state ---\n{dump}")]
    Contradiction { message: String, dump: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code for this error: 1 usage, 2 parse, 3 math contract or
    /// contradiction, 4 genericity instability.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Io(_) => 1,
            Error::Parse { .. } => 2,
            Error::Instability { .. } => 4,
            _ => 3,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
