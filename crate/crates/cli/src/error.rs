use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] formagraph::Error),

    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },

    #[error("{0} asserted case(s) failed")]
    Assertions(usize),
}

impl CliError {
    /// 1 for failed assertions, 2 for usage and input errors, 3 for caps.
    pub fn exit_code(&self) -> ExitCode {
        use formagraph::Error as E;
        let code = match self {
            CliError::Assertions(_) => 1,
            CliError::Core(E::CacheMismatch(_)) => 1,
            CliError::Core(e) if e.is_cap() => 3,
            CliError::Usage(_) | CliError::Core(_) | CliError::Write { .. } => 2,
        };
        ExitCode::from(code)
    }
}
