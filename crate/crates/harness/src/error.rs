use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid override for `{check}`: {msg}")]
    InvalidOverride { check: String, msg: String },
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("invalid filter pattern: {0}")]
    Filter(#[from] glob::PatternError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] littlewood::Error),
}

pub type HarnessResult<T> = std::result::Result<T, HarnessError>;
