use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a graph fails to be (3,4)-biregular.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiregularError {
    #[error("vertex counts {y_count}/{x_count} are not of the form 4k/3k")]
    Shape { y_count: usize, x_count: usize },
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    Degree {
        vertex: VertexId,
        degree: usize,
        expected: usize,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("input is not simple (parallel edges present); such multigraphs need not have a path factor with degree-3 endpoints")]
    NotSimple,
    #[error("input is not (3,4)-biregular: {0}")]
    NotBiregular(#[from] BiregularError),
    #[error("instance too large for exhaustive search: k = {k}, limit is {limit}")]
    TooLarge { k: usize, limit: usize },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("generation failed: {0}")]
    Generation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A property the algorithms guarantee was observed to be false. This is a
    /// bug in this crate, never a problem with the input.
    #[error("internal defect: {0}")]
    Defect(String),
}

impl Error {
    pub fn is_defect(&self) -> bool {
        matches!(self, Error::Defect(_))
    }
}
