//! Weighted directed graph snapshots and the differential tuple between them.

use std::fmt;

use thiserror::Error;

mod snapshot;
mod text;
mod tuple;

pub use snapshot::GraphSnapshot;
pub use text::{
    parse_snapshot, read_snapshot_file, snapshot_to_string, write_snapshot, TextFormatError,
};
pub use tuple::{apply, diff, ApplyError, GraphDifferentialTuple, WeightDelta, WEIGHT_EPSILON};

/// Label identifying a node. Two labels name the same node iff they are
/// byte-for-byte equal; there is no structural matching of any kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(String);

impl NodeId {
    pub fn new(id: impl Into<String>) -> Result<Self, GraphError> {
        let id = id.into();
        if id.is_empty() {
            return Err(GraphError::EmptyNodeId);
        }
        Ok(NodeId(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for NodeId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("node id must be non-empty")]
    EmptyNodeId,
    #[error("self-loop on `{0}` is not allowed")]
    SelfLoop(NodeId),
    #[error("weight {weight} on `{from}` -> `{to}` is outside [0, 1]")]
    WeightOutOfRange { from: NodeId, to: NodeId, weight: f64 },
    #[error("duplicate edge `{from}` -> `{to}`")]
    DuplicateEdge { from: NodeId, to: NodeId },
    #[error("edge endpoint `{0}` is not a node of the snapshot")]
    MissingEndpoint(NodeId),
}
