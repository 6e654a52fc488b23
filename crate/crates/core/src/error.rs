use thiserror::Error;

use crate::graph::{EdgeId, VertexId};
use crate::walk::Walk;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {vertex}{}", .edge.map(|e| format!(" (edge {e})")).unwrap_or_default())]
    UnknownVertex { vertex: VertexId, edge: Option<EdgeId> },

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },

    #[error("graphs do not share the same underlying edge set")]
    UnderlyingMismatch,

    #[error("invalid walk at step {index}: {reason}")]
    InvalidWalk { index: usize, reason: String },

    #[error("walk is not closed")]
    NotClosed,

    #[error("walks cannot be concatenated: first ends at {end}, second starts at {start}")]
    EndpointMismatch { end: VertexId, start: VertexId },

    #[error("rotation index {index} out of range for closed walk of length {len}")]
    RotationOutOfRange { index: usize, len: usize },

    #[error("edge {0} belongs to the spanning forest")]
    TreeEdge(EdgeId),

    #[error("endpoints of edge {0} lie in different components of the forest")]
    DifferentComponents(EdgeId),

    #[error("edge set {0:?} is not a cycle")]
    NotACycle(Vec<EdgeId>),

    #[error("cycle set is not theta co-additive")]
    NotCoAdditive(Box<crate::walksys::Theta>),

    #[error("walk oracle disagrees with the reconstructed signature on {0}")]
    OracleDisagreement(Walk),

    #[error("loop on vertex {0}: construction requires a loopless graph")]
    LoopNotAllowed(VertexId),

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("negative edges do not induce a bipartite graph")]
    NegativeSubgraphNotBipartite(Walk),
}

pub type Result<T> = std::result::Result<T, Error>;
