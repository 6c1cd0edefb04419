use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{file}: line {line}, column {column}: {msg}")]
    Json { file: String, line: usize, column: usize, msg: String },
    #[error("{context}: {err}")]
    Core { context: String, err: lacune_core::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {err}")]
    Io { path: String, err: std::io::Error },
}

pub trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError>;
}

impl<T> Context<T> for Result<T, lacune_core::Error> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError> {
        self.map_err(|err| CliError::Core { context: what(), err })
    }
}
