//! Job files, output documents and the corpus runner behind the `tdy`
//! binary.

pub mod corpus;
pub mod job;
pub mod report;
pub mod run;

pub use job::{Basis, Format, Job, JobSpec};
pub use report::{ClassDoc, Report};
pub use run::{run, run_source};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// The job does not match the schema.
    #[error("schema error: {0}")]
    Schema(String),
    /// A precondition of the underlying computation failed.
    #[error("{0}")]
    Math(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Math(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

/// Runs `f`, turning a panic into [`CliError::Internal`].
pub fn guarded<T>(f: impl FnOnce() -> Result<T, CliError>) -> Result<T, CliError> {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            Err(CliError::Internal(msg))
        }
    }
}
