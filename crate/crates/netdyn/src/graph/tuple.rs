use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::{GraphError, GraphSnapshot, NodeId};

/// Weights closer than this are treated as unchanged when two snapshots
/// are compared. Weights are message-count ratios, so drift below this
/// threshold can only be floating-point noise.
pub const WEIGHT_EPSILON: f64 = 1e-9;

/// A weight change on an edge that exists in both snapshots.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightDelta {
    pub from: NodeId,
    pub to: NodeId,
    /// Target weight minus source weight. Always exceeds
    /// [`WEIGHT_EPSILON`] in magnitude; the sign tells whether the
    /// connection strengthened or weakened.
    pub delta: f64,
}

/// Everything that changed between a source and a target snapshot:
/// which nodes appeared and disappeared, which edges appeared and
/// disappeared, and how the weights of surviving edges moved.
///
/// The tuple also records the sizes of both snapshots and the number of
/// edges they share, which the distance measures need as denominators.
/// Applying the tuple to the source snapshot with [`apply`] rebuilds the
/// target exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphDifferentialTuple {
    added_nodes: BTreeSet<NodeId>,
    removed_nodes: BTreeSet<NodeId>,
    // Target-graph weights ride along so that apply() can reconstruct
    // the target; for reporting and measures only the pairs matter.
    added_edges: BTreeMap<(NodeId, NodeId), f64>,
    removed_edges: BTreeSet<(NodeId, NodeId)>,
    modified_weights: Vec<WeightDelta>,
    common_edge_count: usize,
    source_nodes: usize,
    source_edges: usize,
    target_nodes: usize,
    target_edges: usize,
}

impl GraphDifferentialTuple {
    /// Nodes present only in the target, in lexicographic order.
    pub fn added_nodes(&self) -> impl Iterator<Item = &NodeId> {
        self.added_nodes.iter()
    }

    /// Nodes present only in the source, in lexicographic order.
    pub fn removed_nodes(&self) -> impl Iterator<Item = &NodeId> {
        self.removed_nodes.iter()
    }

    /// Edges present only in the target, as `(from, to)` pairs in
    /// lexicographic order.
    pub fn added_edges(&self) -> impl Iterator<Item = (&NodeId, &NodeId)> {
        self.added_edges.keys().map(|(from, to)| (from, to))
    }

    /// Edges present only in the source, as `(from, to)` pairs in
    /// lexicographic order.
    pub fn removed_edges(&self) -> impl Iterator<Item = (&NodeId, &NodeId)> {
        self.removed_edges.iter().map(|(from, to)| (from, to))
    }

    /// Weight changes on shared edges, ordered by `(from, to)`.
    pub fn modified_weights(&self) -> &[WeightDelta] {
        &self.modified_weights
    }

    pub fn added_node_count(&self) -> usize {
        self.added_nodes.len()
    }

    pub fn removed_node_count(&self) -> usize {
        self.removed_nodes.len()
    }

    pub fn added_edge_count(&self) -> usize {
        self.added_edges.len()
    }

    pub fn removed_edge_count(&self) -> usize {
        self.removed_edges.len()
    }

    pub fn modified_weight_count(&self) -> usize {
        self.modified_weights.len()
    }

    /// Number of edges the two snapshots share, weight changes included.
    pub fn common_edge_count(&self) -> usize {
        self.common_edge_count
    }

    /// `(node count, edge count)` of the source snapshot.
    pub fn source_sizes(&self) -> (usize, usize) {
        (self.source_nodes, self.source_edges)
    }

    /// `(node count, edge count)` of the target snapshot.
    pub fn target_sizes(&self) -> (usize, usize) {
        (self.target_nodes, self.target_edges)
    }

    /// Sum of `|delta|` over all weight changes.
    pub fn abs_delta_sum(&self) -> f64 {
        self.modified_weights.iter().map(|d| d.delta.abs()).sum()
    }

    /// True when nothing changed, i.e. the snapshots are equal within
    /// [`WEIGHT_EPSILON`].
    pub fn is_empty(&self) -> bool {
        self.added_nodes.is_empty()
            && self.removed_nodes.is_empty()
            && self.added_edges.is_empty()
            && self.removed_edges.is_empty()
            && self.modified_weights.is_empty()
    }
}

/// Compares two snapshots and returns the differential tuple describing
/// how to get from `source` to `target`.
///
/// Nodes and edges match purely by label: there is no isomorphism
/// search, a renamed node counts as one removal plus one addition.
pub fn diff(source: &GraphSnapshot, target: &GraphSnapshot) -> GraphDifferentialTuple {
    let added_nodes: BTreeSet<NodeId> =
        target.nodes().filter(|n| !source.contains_node(n)).cloned().collect();
    let removed_nodes: BTreeSet<NodeId> =
        source.nodes().filter(|n| !target.contains_node(n)).cloned().collect();

    let mut added_edges = BTreeMap::new();
    let mut modified_weights = Vec::new();
    let mut common_edge_count = 0;
    for (from, to, target_weight) in target.edges() {
        match source.weight(from, to) {
            None => {
                added_edges.insert((from.clone(), to.clone()), target_weight);
            }
            Some(source_weight) => {
                common_edge_count += 1;
                let delta = target_weight - source_weight;
                if delta.abs() > WEIGHT_EPSILON {
                    modified_weights.push(WeightDelta {
                        from: from.clone(),
                        to: to.clone(),
                        delta,
                    });
                }
            }
        }
    }

    let removed_edges: BTreeSet<(NodeId, NodeId)> = source
        .edges()
        .filter(|(from, to, _)| !target.contains_edge(from, to))
        .map(|(from, to, _)| (from.clone(), to.clone()))
        .collect();

    GraphDifferentialTuple {
        added_nodes,
        removed_nodes,
        added_edges,
        removed_edges,
        modified_weights,
        common_edge_count,
        source_nodes: source.node_count(),
        source_edges: source.edge_count(),
        target_nodes: target.node_count(),
        target_edges: target.edge_count(),
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ApplyError {
    #[error("tuple removes node `{0}` which is absent from the base snapshot")]
    RemovedNodeAbsent(NodeId),
    #[error("tuple adds node `{0}` which is already present in the base snapshot")]
    AddedNodePresent(NodeId),
    #[error("tuple removes edge `{from}` -> `{to}` which is absent from the base snapshot")]
    RemovedEdgeAbsent { from: NodeId, to: NodeId },
    #[error("tuple adds edge `{from}` -> `{to}` which is already present in the base snapshot")]
    AddedEdgePresent { from: NodeId, to: NodeId },
    #[error("tuple modifies edge `{from}` -> `{to}` which is absent from the base snapshot")]
    ModifiedEdgeAbsent { from: NodeId, to: NodeId },
    #[error("tuple both removes and weight-modifies edge `{from}` -> `{to}`")]
    ModifiedEdgeRemoved { from: NodeId, to: NodeId },
    #[error("modified weight on `{from}` -> `{to}` lands at {weight}, outside [0, 1]")]
    WeightOutOfRange { from: NodeId, to: NodeId, weight: f64 },
    #[error("edge `{from}` -> `{to}` survives but its endpoint `{node}` is removed")]
    DanglingEdge { from: NodeId, to: NodeId, node: NodeId },
    #[error("applying the tuple produced an invalid snapshot: {0}")]
    Snapshot(#[from] GraphError),
}

/// Replays a differential tuple on top of `base`, producing the target
/// snapshot the tuple was computed against.
///
/// For any snapshots `a` and `b`, `apply(a, &diff(a, b))` equals `b`
/// within [`WEIGHT_EPSILON`]. Every inconsistency between the tuple and
/// `base` (removing something absent, adding something present, weight
/// pushed outside `[0, 1]`, an edge left without its endpoint) is
/// reported as an error and nothing is silently repaired.
pub fn apply(
    base: &GraphSnapshot,
    tuple: &GraphDifferentialTuple,
) -> Result<GraphSnapshot, ApplyError> {
    for node in &tuple.removed_nodes {
        if !base.contains_node(node) {
            return Err(ApplyError::RemovedNodeAbsent(node.clone()));
        }
    }
    for node in &tuple.added_nodes {
        if base.contains_node(node) {
            return Err(ApplyError::AddedNodePresent(node.clone()));
        }
    }

    let mut nodes: BTreeSet<NodeId> = base.nodes().cloned().collect();
    for node in &tuple.removed_nodes {
        nodes.remove(node);
    }
    for node in &tuple.added_nodes {
        nodes.insert(node.clone());
    }

    let mut out_edges: BTreeMap<NodeId, BTreeMap<NodeId, f64>> = BTreeMap::new();
    for (from, to, weight) in base.edges() {
        out_edges.entry(from.clone()).or_default().insert(to.clone(), weight);
    }

    for (from, to) in &tuple.removed_edges {
        let removed = out_edges.get_mut(from).and_then(|outs| outs.remove(to));
        if removed.is_none() {
            return Err(ApplyError::RemovedEdgeAbsent { from: from.clone(), to: to.clone() });
        }
    }

    for change in &tuple.modified_weights {
        let pair = (change.from.clone(), change.to.clone());
        if tuple.removed_edges.contains(&pair) {
            return Err(ApplyError::ModifiedEdgeRemoved { from: pair.0, to: pair.1 });
        }
        let Some(weight) =
            out_edges.get_mut(&change.from).and_then(|outs| outs.get_mut(&change.to))
        else {
            return Err(ApplyError::ModifiedEdgeAbsent { from: pair.0, to: pair.1 });
        };
        let moved = *weight + change.delta;
        // The sum may stick out of [0, 1] by a rounding hair; clamp that,
        // reject anything larger.
        if !(-WEIGHT_EPSILON..=1.0 + WEIGHT_EPSILON).contains(&moved) {
            return Err(ApplyError::WeightOutOfRange { from: pair.0, to: pair.1, weight: moved });
        }
        *weight = moved.clamp(0.0, 1.0);
    }

    for ((from, to), &weight) in &tuple.added_edges {
        if base.contains_edge(from, to) {
            return Err(ApplyError::AddedEdgePresent { from: from.clone(), to: to.clone() });
        }
        out_edges.entry(from.clone()).or_default().insert(to.clone(), weight);
    }

    for (from, outs) in &out_edges {
        for to in outs.keys() {
            for endpoint in [from, to] {
                if !nodes.contains(endpoint) {
                    return Err(ApplyError::DanglingEdge {
                        from: from.clone(),
                        to: to.clone(),
                        node: endpoint.clone(),
                    });
                }
            }
        }
    }

    Ok(GraphSnapshot::from_parts(nodes, out_edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> NodeId {
        NodeId::new(s).unwrap()
    }

    fn graph(edges: &[(&str, &str, f64)]) -> GraphSnapshot {
        let mut g = GraphSnapshot::new();
        for &(from, to, w) in edges {
            g.add_edge(n(from), n(to), w).unwrap();
        }
        g
    }

    #[test]
    fn diff_of_identical_snapshots_is_empty() {
        let g = graph(&[("a", "b", 0.5), ("b", "c", 1.0)]);
        let t = diff(&g, &g);
        assert!(t.is_empty());
        assert_eq!(t.common_edge_count(), 2);
        assert_eq!(t.source_sizes(), (3, 2));
        assert_eq!(t.target_sizes(), (3, 2));
    }

    #[test]
    fn weight_drift_below_epsilon_is_not_a_modification() {
        let a = graph(&[("a", "b", 0.5)]);
        let b = graph(&[("a", "b", 0.5 + WEIGHT_EPSILON / 2.0)]);
        assert!(diff(&a, &b).is_empty());

        let c = graph(&[("a", "b", 0.5 + 2e-9)]);
        let t = diff(&a, &c);
        assert_eq!(t.modified_weight_count(), 1);
        assert!(t.modified_weights()[0].delta > 0.0);
    }

    #[test]
    fn renamed_node_is_removal_plus_addition() {
        let mut a = GraphSnapshot::new();
        a.add_node(n("old"));
        let mut b = GraphSnapshot::new();
        b.add_node(n("new"));
        let t = diff(&a, &b);
        assert_eq!(t.added_node_count(), 1);
        assert_eq!(t.removed_node_count(), 1);
        assert_eq!(t.common_edge_count(), 0);
    }

    #[test]
    fn reversed_edge_is_remove_plus_add() {
        let a = graph(&[("a", "b", 0.5)]);
        let b = graph(&[("b", "a", 0.5)]);
        let t = diff(&a, &b);
        assert_eq!(t.added_edge_count(), 1);
        assert_eq!(t.removed_edge_count(), 1);
        assert_eq!(t.modified_weight_count(), 0);
        assert_eq!(t.common_edge_count(), 0);
    }

    #[test]
    fn apply_rebuilds_the_target() {
        let a = graph(&[("a", "b", 0.5), ("b", "c", 0.25), ("c", "a", 1.0)]);
        let mut b = graph(&[("a", "b", 0.75), ("b", "c", 0.25), ("d", "a", 0.1)]);
        b.add_node(n("e"));
        let rebuilt = apply(&a, &diff(&a, &b)).unwrap();
        assert_eq!(rebuilt, b);
    }

    #[test]
    fn apply_of_empty_tuple_is_identity() {
        let g = graph(&[("a", "b", 0.5)]);
        assert_eq!(apply(&g, &diff(&g, &g)).unwrap(), g);
    }

    #[test]
    fn apply_rejects_mismatched_base() {
        let a = graph(&[("a", "b", 0.5), ("c", "d", 0.5)]);
        let mut b = graph(&[("a", "b", 0.5)]);
        b.add_node(n("e"));
        let t = diff(&a, &b);

        // diff removed nodes c and d; a base without them cannot host the tuple
        let other = graph(&[("a", "b", 0.5)]);
        assert!(matches!(apply(&other, &t), Err(ApplyError::RemovedNodeAbsent(_))));

        // a base that already has node e cannot re-add it
        let mut with_e = a.clone();
        with_e.add_node(n("e"));
        assert!(matches!(apply(&with_e, &t), Err(ApplyError::AddedNodePresent(_))));
    }

    #[test]
    fn apply_rejects_missing_removed_edge() {
        let a = graph(&[("a", "b", 0.5), ("a", "c", 0.5)]);
        let b = graph(&[("a", "b", 0.5)]);
        let t = diff(&a, &b);
        // base lacks the a->c edge the tuple removes (node c kept via b->c)
        let other = graph(&[("a", "b", 0.5), ("b", "c", 1.0)]);
        assert!(matches!(apply(&other, &t), Err(ApplyError::RemovedEdgeAbsent { .. })));
    }

    #[test]
    fn apply_rejects_present_added_edge() {
        let a = graph(&[("a", "b", 0.5)]);
        let b = graph(&[("a", "b", 0.5), ("b", "a", 0.25)]);
        let t = diff(&a, &b);
        assert!(matches!(apply(&b, &t), Err(ApplyError::AddedEdgePresent { .. })));
    }

    #[test]
    fn apply_rejects_missing_modified_edge() {
        let a = graph(&[("a", "b", 0.4), ("b", "a", 0.4)]);
        let b = graph(&[("a", "b", 0.9), ("b", "a", 0.4)]);
        let t = diff(&a, &b);
        let other = graph(&[("b", "a", 0.4), ("a", "c", 0.4), ("c", "b", 0.1)]);
        assert!(matches!(apply(&other, &t), Err(ApplyError::ModifiedEdgeAbsent { .. })));
    }

    #[test]
    fn apply_rejects_weight_pushed_outside_unit_interval() {
        let a = graph(&[("a", "b", 0.2)]);
        let b = graph(&[("a", "b", 0.9)]);
        let t = diff(&a, &b); // delta +0.7
        let other = graph(&[("a", "b", 0.8)]);
        assert!(matches!(apply(&other, &t), Err(ApplyError::WeightOutOfRange { .. })));
    }

    #[test]
    fn apply_clamps_rounding_spill() {
        let a = graph(&[("a", "b", 0.3)]);
        let b = graph(&[("a", "b", 1.0)]);
        let t = diff(&a, &b); // delta 0.7
                              // 0.30000000000000004 + 0.7 lands a rounding hair above 1.0
        let other = graph(&[("a", "b", 0.30000000000000004)]);
        let rebuilt = apply(&other, &t).unwrap();
        assert_eq!(rebuilt.weight(&n("a"), &n("b")), Some(1.0));
    }

    #[test]
    fn apply_rejects_dangling_edge() {
        let mut a = graph(&[("a", "b", 0.5)]);
        a.add_node(n("c"));
        let b = graph(&[("a", "b", 0.5)]);
        let t = diff(&a, &b); // removes node c
                              // in this base, c has an incident edge the tuple does not remove
        let other = graph(&[("a", "b", 0.5), ("c", "a", 0.5)]);
        assert!(matches!(apply(&other, &t), Err(ApplyError::DanglingEdge { .. })));
    }

    #[test]
    fn tuple_counts_match_set_sizes() {
        let a = graph(&[("a", "b", 0.5), ("b", "c", 0.5), ("c", "a", 0.5)]);
        let b = graph(&[("a", "b", 0.9), ("b", "c", 0.5), ("d", "a", 0.5)]);
        let t = diff(&a, &b);
        assert_eq!(t.added_nodes().count(), t.added_node_count());
        assert_eq!(t.removed_nodes().count(), t.removed_node_count());
        assert_eq!(t.added_edges().count(), t.added_edge_count());
        assert_eq!(t.removed_edges().count(), t.removed_edge_count());
        assert_eq!(t.modified_weights().len(), t.modified_weight_count());
        assert_eq!(t.common_edge_count(), 2);
    }
}
