use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Pass = 0,
    Mismatch = 1,
    Input = 2,
    Overflow = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}:{line}: {message}")]
    Malformed { path: PathBuf, line: usize, message: String },
    #[error(transparent)]
    Core(#[from] eqlines_core::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl AppError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> AppError {
        AppError::Io { path: path.into(), source }
    }

    pub fn exit_status(&self) -> ExitStatus {
        use eqlines_core::Error as E;
        match self {
            AppError::Core(E::Overflow(_) | E::InexactDivision { .. }) => ExitStatus::Overflow,
            _ => ExitStatus::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
