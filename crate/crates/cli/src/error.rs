use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] zkgenus_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        use zkgenus_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Csv(e) if e.is_io_error() => 3,
            CliError::Csv(_) => 1,
            CliError::Core(e) => match e {
                E::Io(_) => 3,
                E::Domain(_)
                | E::Precondition(_)
                | E::Parse(_)
                | E::Json(_)
                | E::ResourceLimit(_)
                | E::UnsupportedDimension(_)
                | E::UnsupportedFace { .. } => 2,
                _ => 1,
            },
        }
    }
}
