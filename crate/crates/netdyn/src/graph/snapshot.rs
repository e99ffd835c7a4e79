use std::collections::{BTreeMap, BTreeSet};

use super::{GraphError, NodeId};

/// Weighted directed graph observed over one period.
///
/// At most one edge exists per ordered node pair, weights lie in `[0, 1]`,
/// self-loops are rejected, and every edge endpoint is a node. Nodes and
/// edges iterate in lexicographic order, so equal snapshots always
/// serialize identically.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GraphSnapshot {
    nodes: BTreeSet<NodeId>,
    // Adjacency keyed by source then target. Inner maps are never empty,
    // otherwise two structurally equal snapshots could compare unequal.
    out_edges: BTreeMap<NodeId, BTreeMap<NodeId, f64>>,
    edge_count: usize,
}

impl GraphSnapshot {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// True when the snapshot has no nodes (and therefore no edges).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains_node(&self, node: &NodeId) -> bool {
        self.nodes.contains(node)
    }

    pub fn weight(&self, from: &NodeId, to: &NodeId) -> Option<f64> {
        self.out_edges.get(from).and_then(|outs| outs.get(to)).copied()
    }

    pub fn contains_edge(&self, from: &NodeId, to: &NodeId) -> bool {
        self.weight(from, to).is_some()
    }

    /// Nodes in lexicographic order.
    pub fn nodes(&self) -> impl Iterator<Item = &NodeId> {
        self.nodes.iter()
    }

    /// Edges as `(from, to, weight)` in lexicographic `(from, to)` order.
    pub fn edges(&self) -> impl Iterator<Item = (&NodeId, &NodeId, f64)> {
        self.out_edges
            .iter()
            .flat_map(|(from, outs)| outs.iter().map(move |(to, weight)| (from, to, *weight)))
    }

    /// Inserts a node; inserting an existing node is a no-op.
    pub fn add_node(&mut self, node: NodeId) {
        self.nodes.insert(node);
    }

    /// Inserts a directed edge, adding both endpoints to the node set.
    pub fn add_edge(&mut self, from: NodeId, to: NodeId, weight: f64) -> Result<(), GraphError> {
        if from == to {
            return Err(GraphError::SelfLoop(from));
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(GraphError::WeightOutOfRange { from, to, weight });
        }
        let outs = self.out_edges.entry(from.clone()).or_default();
        if outs.contains_key(&to) {
            return Err(GraphError::DuplicateEdge { from, to });
        }
        outs.insert(to.clone(), weight);
        self.nodes.insert(from);
        self.nodes.insert(to);
        self.edge_count += 1;
        Ok(())
    }

    /// True when both snapshots have the same nodes and edges and every
    /// weight agrees within `epsilon`.
    pub fn approx_eq(&self, other: &Self, epsilon: f64) -> bool {
        self.nodes == other.nodes
            && self.edge_count == other.edge_count
            && self
                .edges()
                .all(|(from, to, w)| matches!(other.weight(from, to), Some(v) if (w - v).abs() <= epsilon))
    }

    /// Assembles a snapshot from parts already known to satisfy the
    /// invariants, re-checking them all the same.
    pub(crate) fn from_parts(
        nodes: BTreeSet<NodeId>,
        mut out_edges: BTreeMap<NodeId, BTreeMap<NodeId, f64>>,
    ) -> Result<Self, GraphError> {
        out_edges.retain(|_, outs| !outs.is_empty());
        let mut edge_count = 0;
        for (from, outs) in &out_edges {
            if !nodes.contains(from) {
                return Err(GraphError::MissingEndpoint(from.clone()));
            }
            for (to, &weight) in outs {
                if from == to {
                    return Err(GraphError::SelfLoop(from.clone()));
                }
                if !(0.0..=1.0).contains(&weight) {
                    return Err(GraphError::WeightOutOfRange {
                        from: from.clone(),
                        to: to.clone(),
                        weight,
                    });
                }
                if !nodes.contains(to) {
                    return Err(GraphError::MissingEndpoint(to.clone()));
                }
                edge_count += 1;
            }
        }
        Ok(GraphSnapshot { nodes, out_edges, edge_count })
    }
}
