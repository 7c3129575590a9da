use thiserror::Error;

/// Errors shared across the crate.
///
/// Numerical routines that can report a partial answer carry it in the
/// variant so callers can decide whether the residual is acceptable.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size error: {0}")]
    Size(String),

    #[error("range error: {0}")]
    Range(String),

    #[error("argument error: {0}")]
    Argument(String),

    #[error("{a} is not invertible modulo {q}")]
    NotInvertible { a: i64, q: u64 },

    #[error("integer overflow in {0}")]
    Overflow(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature accuracy target missed: residual estimate {residual:.3e} (partial value retained)")]
    Accuracy { partial: (f64, f64), residual: f64 },

    #[error("cell budget of {budget} exceeded; partial value retained with residual {residual:.3e}")]
    Budget {
        budget: usize,
        partial: (f64, f64),
        residual: f64,
    },

    #[error("gamma evaluated at a pole (non-positive integer {0})")]
    Pole(f64),

    #[error("contour too close to a pole: sigma = {sigma}")]
    Contour { sigma: f64 },

    #[error("truncation insufficient: tail estimate {tail:.3e}; suggested height {suggested}")]
    Truncation { tail: f64, suggested: f64 },

    #[error("wrong branch: {0}")]
    WrongBranch(String),

    #[error("corrupt cache: {field} mismatch in {path}")]
    CorruptCache { path: String, field: String },

    #[error("cache kind mismatch in {path}: stored {stored}, requested {requested}")]
    KindMismatch {
        path: String,
        stored: String,
        requested: String,
    },

    #[error("degenerate fit input: {0}")]
    Degenerate(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("config error at {path}:{line}: {msg}")]
    Config {
        path: String,
        line: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
