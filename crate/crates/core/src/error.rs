use thiserror::Error;

use crate::multigraph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    /// A vertex set whose smaller side has zero volume, so its edge expansion is undefined.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid colouring: {0}")]
    InvalidColoring(String),

    #[error("graph has {vertices} vertices, enumeration cap is {cap}")]
    TooLarge { vertices: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("instance generation failed after {attempts} attempts: {reason}")]
    Generation { attempts: usize, reason: String },

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn in_stage(self, stage: &'static str) -> Self {
        match self {
            e @ Error::Stage { .. } => e,
            e => Error::Stage {
                stage,
                source: Box::new(e),
            },
        }
    }

    /// The innermost error, looking through stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    /// True for errors caused by the caller's inputs violating a documented
    /// precondition (as opposed to parse or I/O problems).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self.root(),
            Error::UnknownVertex(_)
                | Error::Degenerate(_)
                | Error::Precondition(_)
                | Error::InvalidColoring(_)
                | Error::TooLarge { .. }
                | Error::Generation { .. }
        )
    }
}
