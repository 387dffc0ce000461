//! Strong orientations of bridgeless mixed graphs with certified diameter bounds.
//!
//! A mixed graph has both undirected edges and arcs. This crate orients the
//! undirected edges so that the result is strongly connected, keeps every
//! pre-existing arc, and certifies an upper bound on the diameter of the
//! orientation in terms of `n` and the maximum undirected degree. It also
//! ships an exact brute-force oracle for small graphs and generators for the
//! extremal families that show the certified bounds are tight.

pub mod engine;
pub mod families;
pub mod graph;
pub mod hub;
pub mod oracle;
pub mod partition;
pub mod reach;
pub mod sweep;

#[cfg(test)]
pub(crate) mod testgraphs;

use graph::VertexId;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {id} out of range for graph with {n} vertices")]
    BadVertex { id: VertexId, n: usize },
    #[error("loop at vertex {0} rejected")]
    LoopRejected(VertexId),
    #[error("edge between {0} and {1} already present")]
    DuplicatePair(VertexId, VertexId),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is not mixed-connected")]
    NotConnected,
    #[error("no edge between {0} and {1}")]
    NoEdge(VertexId, VertexId),
    #[error("no orientable cycle through the edge between {0} and {1}")]
    NoCycle(VertexId, VertexId),
    #[error("no orientable path from {from} to {to}")]
    Unreachable { from: VertexId, to: VertexId },
    #[error("conflicting orientations required for the edge between {0} and {1}")]
    IncompatibleOrientation(VertexId, VertexId),
    #[error("no core cycle covers out-neighbor {y} alone: {dump}")]
    NoEligibleX { y: VertexId, dump: String },
    #[error("conflicted neighbor {0} is not covered by any constructed cycle")]
    ZNotCovered(VertexId),
    #[error("repair vertex for the out-paths is not unique: {0}")]
    MultipleZ0(String),
    #[error("repair vertex for the in-paths is not unique: {0}")]
    MultipleT0(String),
    #[error("partial orientation admits no strongly connected extension")]
    NoStrongExtension,
    #[error("orientation diameter {measured} exceeds the structural bound {bound}")]
    BoundViolated { measured: usize, bound: usize },
    #[error("graph has an undirected bridge or is not mixed-connected")]
    NotBridgeless,
    #[error("vertex sets do not form a bipartition with the base vertex on the B side")]
    NotBipartite,
    #[error("{count} undirected edges exceed the enumeration limit {limit}")]
    TooManyEdges { count: usize, limit: usize },
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("{family} with max undirected degree {delta_star} exists only as a figure; not generated")]
    UnsupportedFigureOnly { family: String, delta_star: usize },
    #[error("construction self-check failed: {0}")]
    ConstructionMismatch(String),
    #[error("random generation retries exhausted")]
    RetriesExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
