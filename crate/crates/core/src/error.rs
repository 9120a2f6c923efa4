use num_complex::Complex64;
use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at {0}")]
    Pole(Complex64),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("unsupported index {0}")]
    UnsupportedIndex(i64),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("series failed to converge after {terms} terms")]
    NonConvergence { terms: usize },
    #[error("constant Taylor coefficient is zero")]
    ZeroConstantTerm,
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("function vanishes (or blows up) on the path near {0}")]
    ZeroOnPath(Complex64),
    #[error("zero or pole within the guard margin of the rectangle boundary")]
    BoundaryHit,
    #[error("quadrature budget exceeded (error estimate {0:e})")]
    QuadratureBudget(f64),
    #[error("record at {0} lies outside the rectangle")]
    RecordOutsideRect(Complex64),
    #[error("singularity at {0}")]
    Singularity(Complex64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: ordinates are not strictly increasing")]
    NonMonotone { line: usize },
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
