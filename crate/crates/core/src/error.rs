use thiserror::Error;

use crate::graph::Triangle;
use crate::recognition::Obstruction;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    NoSuchVertex { vertex: usize, n: usize },

    #[error("graph is not diamond-free and K4-free: {0}")]
    NotDiamondK4Free(Obstruction),

    #[error("graph is not prismatic: {0}")]
    NotPrismatic(Obstruction),

    #[error("graph is orientable, but a non-orientable prismatic graph is required")]
    Orientable,

    #[error("graph contains a claw: {0}")]
    NotClawFree(Obstruction),

    #[error("{what}: size {actual} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid {family} parameters: {clause}")]
    InvalidParameter { family: String, clause: String },

    #[error("vertex set misses triangle {0}")]
    NotHittingSet(Triangle),

    #[error("no hitting set of size at most {0} exists")]
    NoSmallHittingSet(usize),

    #[error("family {0} has no constructive hitting set")]
    NoConstructiveSet(String),

    #[error("structural theorem violated: {0}")]
    StructureViolation(String),

    #[error("invalid clique cover: {0}")]
    InvalidCover(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn param(family: impl Into<String>, clause: impl Into<String>) -> Self {
        Error::InvalidParameter {
            family: family.into(),
            clause: clause.into(),
        }
    }
}
