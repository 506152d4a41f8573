use kanext_core::{AutomatonError, LanguageError, PresentationError, RewriteError};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// 1 for bad input, 2 when a completion or reduction budget runs out,
    /// 3 for anything that indicates a bug.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Rewrite(
                RewriteError::RoundsExhausted { .. } | RewriteError::StepBudgetExceeded(_),
            ) => 2,
            Error::Automaton(_) | Error::Language(_) => 3,
            _ => 1,
        }
    }
}
