use std::fmt;

use crate::boundary::Report;
use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("{0}{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),

    #[error("roots must be three distinct vertices of the graph, got {0:?}")]
    BadRoots([Vertex; 3]),

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("graph has no {0}-clique")]
    NoClique(usize),

    #[error("oracle scale exceeded: {order} vertices, limit is {limit}")]
    OracleScaleExceeded { order: usize, limit: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(Report),

    #[error("internal contradiction, input was not a valid boundary instance: {0}")]
    InternalContradiction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn contradiction(msg: impl fmt::Display) -> Self {
        Error::InternalContradiction(msg.to_string())
    }
}
