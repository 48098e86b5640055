use thiserror::Error;

/// Errors produced anywhere in the pipeline.
///
/// `Parse` and `Invalid` are user-input problems (CLI exit code 1).
/// `NotNice` is a user-facing condition with a remedy (supply isotoped
/// images). `Internal` means a structural invariant of the library itself
/// failed and is never the user's fault (exit code 3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{file}:{line}:{col}: {msg}")]
    Parse {
        file: String,
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("diagram is not nice: interior regions {regions:?} are neither bigons nor squares; supply isotoped monodromy images")]
    NotNice { regions: Vec<usize> },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// CLI exit code class for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Invalid(_) | Error::NotNice { .. } => 1,
            Error::Internal(_) => 3,
        }
    }
}
