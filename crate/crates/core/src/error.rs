use thiserror::Error;

/// Errors surfaced by the solvers and the benchmark harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("decision variable {variable} has an empty domain")]
    EmptyDomain { variable: usize },

    #[error("{nc} containers exceed the bay capacity of {capacity} cells")]
    CapacityExceeded { nc: u64, capacity: u64 },

    #[error("repair failed: {0}")]
    RepairFailed(String),

    #[error("infeasible vector: {0}")]
    Infeasible(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("empty parameter sweep")]
    EmptySweep,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than runtime
    /// failures; the CLI maps these to exit code 2.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidParams(_)
                | Error::EmptyDomain { .. }
                | Error::CapacityExceeded { .. }
                | Error::EmptySweep
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
