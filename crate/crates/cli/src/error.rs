use thiserror::Error;

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_COST_GUARD: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Engine(#[from] snrep::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use snrep::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Engine(E::CostGuard { .. }) => EXIT_COST_GUARD,
            CliError::Engine(
                E::InvalidPermutation(_)
                | E::InvalidPartition(_)
                | E::InvalidTableau(_)
                | E::SizeMismatch { .. }
                | E::ShapeMismatch { .. }
                | E::IndexOutOfRange { .. },
            ) => EXIT_USAGE,
            _ => EXIT_VERIFY_FAILED,
        }
    }
}
