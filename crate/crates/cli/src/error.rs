use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unknown label `{label}`")]
    UnknownLabel {
        label: String,
        line: usize,
        column: usize,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Argument(String),
    #[error(transparent)]
    Core(#[from] connspace::Error),
}

impl CliError {
    /// 2 for malformed arguments, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Argument(_) => 2,
            _ => 1,
        }
    }
}
