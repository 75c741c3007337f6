use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vector is not in the span of the given columns")]
    NotInSpan,

    #[error("minor size mismatch: {rows} rows vs {cols} columns")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("entry ({row}, {col}) is not homogeneous of the degree required by the twists")]
    NotHomogeneous { row: usize, col: usize },

    #[error("hook kernel {kind}(d={d}, p={p}, q={q}) has {found} columns but the rank formula gives {expected}")]
    RankFormulaMismatch { kind: char, d: usize, p: i64, q: i64, found: usize, expected: usize },

    #[error("cache file {path} failed integrity checks: {reason}")]
    CacheIntegrity { path: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
