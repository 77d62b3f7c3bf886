use std::path::PathBuf;
use thiserror::Error;

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config, or input files (exit 2).
    #[error("{0}")]
    Input(String),

    /// A numerical check failed (exit 3).
    #[error("{0}")]
    Invariant(String),

    /// A library call failed in the named pipeline stage.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        source: conformon::Error,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 0 success, 2 input/validation, 3 numerical invariant, 4 solver
    /// non-convergence.
    pub fn exit_code(&self) -> i32 {
        use conformon::Error as E;
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Invariant(_) => 3,
            CliError::Stage { source, .. } => match source {
                E::InvalidInput(_) => 2,
                E::NonFiniteDerivative { .. }
                | E::InconsistentCurvature { .. }
                | E::CollapsedToTrivial { .. } => 3,
                E::NoConvergence { .. } | E::Stagnation { .. } => 4,
            },
        }
    }
}

/// Attaches a stage name to library errors.
pub(crate) trait StageExt<T> {
    fn stage(self, stage: &'static str) -> Result<T, CliError>;
}

impl<T> StageExt<T> for conformon::Result<T> {
    fn stage(self, stage: &'static str) -> Result<T, CliError> {
        self.map_err(|source| CliError::Stage { stage, source })
    }
}
