use thiserror::Error;

use crate::exact::ExactResult;
use crate::graph::VertexId;
use crate::sparsify::Certificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("{0} vertices exceed the supported maximum")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge is not part of the base graph")]
    EdgeNotInBase,
    #[error("expected {expected} vertex labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("vertex labels must be strictly increasing")]
    UnsortedLabels,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph is not twinless strongly connected")]
    NotTwinlessStronglyConnected,
    #[error("graph has fewer than 3 vertices")]
    TooFewVertices,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SparsifyError {
    #[error("input graph is not 2-vertex-connected")]
    Not2VertexConnected,
    #[error("no edge joins two twinless components of the graph without vertex {x}")]
    NoCrossEdge { x: VertexId },
    #[error("input graph is not 2-vertex-twinless connected: {0}")]
    InputNot2Vtc(Certificate),
    #[error("twinless component count did not drop after adding an edge for vertex {x}")]
    NoProgress { x: VertexId },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("input graph is not 2-vertex-connected")]
    Not2VertexConnected,
    #[error("input graph is not 2-vertex-twinless connected: {0}")]
    InputNot2Vtc(Certificate),
    #[error("search budget exhausted after {} nodes", .partial.nodes_explored)]
    BudgetExceeded { partial: Box<ExactResult> },
    #[error(transparent)]
    Sparsify(#[from] SparsifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
