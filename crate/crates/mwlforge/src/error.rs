use mwlforge_core::Error;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitKind {
    Pass,
    InvariantFailure,
    BadInput,
}

impl ExitKind {
    pub fn code(self) -> i32 {
        match self {
            ExitKind::Pass => 0,
            ExitKind::InvariantFailure => 1,
            ExitKind::BadInput => 2,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    BadInput(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn kind(&self) -> ExitKind {
        match self {
            CliError::BadInput(_) | CliError::Io { .. } => ExitKind::BadInput,
            CliError::Core(e) => match e {
                Error::Parse { .. } | Error::UnknownVariable(_) | Error::InvalidPlace(_) | Error::SingularCurve => {
                    ExitKind::BadInput
                }
                _ => ExitKind::InvariantFailure,
            },
            CliError::Invariant(_) => ExitKind::InvariantFailure,
        }
    }

    /// The machine-readable record written to stderr.
    pub fn record(&self) -> serde_json::Value {
        serde_json::json!({
            "status": "error",
            "kind": self.kind(),
            "exit_code": self.kind().code(),
            "message": self.to_string(),
        })
    }
}

pub type CliResult<T> = Result<T, CliError>;
