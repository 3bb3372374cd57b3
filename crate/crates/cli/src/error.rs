use pentile_core::bounds::BoundsError;
use pentile_core::coxgroup::WordError;
use pentile_core::hypgeo::{ClassTag, GeometryError};
use pentile_core::tiling::TilingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("not axial: {0}")]
    NotAxial(ClassTag),
    #[error("cannot parse word: {0}")]
    Word(#[from] WordError),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error("no axial words found after {attempts} attempts")]
    NoSamples { attempts: u64 },
    #[error("invalid bound input: {0}")]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0} of the samples failed")]
    Failures(usize),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::NotAxial(_) => 2,
            CliError::Word(_) | CliError::Usage(_) => 3,
            CliError::NoSamples { .. } => 4,
            CliError::Bounds(_) => 5,
            CliError::Failures(_) => 1,
            CliError::Geometry(GeometryError::NotAxial(_)) => 2,
            CliError::Tiling(TilingError::NotAxial(_)) => 2,
            CliError::Geometry(_) | CliError::Tiling(_) | CliError::Io(_) => 1,
        }
    }
}
