use crate::graph::GraphDifferentialTuple;

use super::{CoefficientVector, MeasureError};

/// One way of scoring a differential tuple.
///
/// Implementations are stateless strategies; the built-in four live in
/// the [`MeasureRegistry`](super::MeasureRegistry) under the names
/// `sum`, `normalized_sum`, `relative_sum` and `edge_modification`.
pub trait DistanceMeasure {
    /// Stable name: the registry key, the CSV column, the chart file tag.
    fn name(&self) -> &'static str;

    /// Scores one tuple. Coefficients weight the five kinds of change;
    /// measures that ignore them state so in their docs.
    fn evaluate(
        &self,
        tuple: &GraphDifferentialTuple,
        coefficients: &CoefficientVector,
    ) -> Result<f64, MeasureError>;
}

/// Coefficient-weighted count of changes: each added or removed node,
/// each added or removed edge and each weight modification contributes
/// its coefficient. Unbounded; grows with the amount of change.
pub fn sum_distance(tuple: &GraphDifferentialTuple, coefficients: &CoefficientVector) -> f64 {
    coefficients.added_nodes() * tuple.added_node_count() as f64
        + coefficients.removed_nodes() * tuple.removed_node_count() as f64
        + coefficients.added_edges() * tuple.added_edge_count() as f64
        + coefficients.removed_edges() * tuple.removed_edge_count() as f64
        + coefficients.modified_weights() * tuple.modified_weight_count() as f64
}

/// [`sum_distance`] scaled by the total size of both snapshots
/// (`|V1| + |V2| + |E1| + |E2|`). Stays in `[0, 1]` for coefficients in
/// `[0, 1]`: 0 for identical snapshots, 1 when nothing carries over.
/// Undefined when both snapshots are empty.
pub fn normalized_sum(
    tuple: &GraphDifferentialTuple,
    coefficients: &CoefficientVector,
) -> Result<f64, MeasureError> {
    let (source_nodes, source_edges) = tuple.source_sizes();
    let (target_nodes, target_edges) = tuple.target_sizes();
    let denominator = source_nodes + source_edges + target_nodes + target_edges;
    if denominator == 0 {
        return Err(MeasureError::EmptyGraphPair);
    }
    Ok(sum_distance(tuple, coefficients) / denominator as f64)
}

/// [`sum_distance`] scaled by the size of the source snapshot alone
/// (`|V1| + |E1|`): change relative to where the network started. Can
/// exceed 1 when the network grows strongly. Undefined when the source
/// snapshot is empty.
pub fn relative_sum(
    tuple: &GraphDifferentialTuple,
    coefficients: &CoefficientVector,
) -> Result<f64, MeasureError> {
    let (source_nodes, source_edges) = tuple.source_sizes();
    let denominator = source_nodes + source_edges;
    if denominator == 0 {
        return Err(MeasureError::EmptySourceGraph);
    }
    Ok(sum_distance(tuple, coefficients) / denominator as f64)
}

/// Mean absolute weight change over the edges both snapshots share, 0
/// when they share none. Ignores coefficients entirely, and lies in
/// `[0, 1]` because weights do.
pub fn edge_modification(tuple: &GraphDifferentialTuple) -> f64 {
    if tuple.common_edge_count() == 0 {
        return 0.0;
    }
    tuple.abs_delta_sum() / tuple.common_edge_count() as f64
}

/// [`sum_distance`] as a registry strategy.
pub struct SumDistance;

impl DistanceMeasure for SumDistance {
    fn name(&self) -> &'static str {
        "sum"
    }

    fn evaluate(
        &self,
        tuple: &GraphDifferentialTuple,
        coefficients: &CoefficientVector,
    ) -> Result<f64, MeasureError> {
        Ok(sum_distance(tuple, coefficients))
    }
}

/// [`normalized_sum`] as a registry strategy.
pub struct NormalizedSum;

impl DistanceMeasure for NormalizedSum {
    fn name(&self) -> &'static str {
        "normalized_sum"
    }

    fn evaluate(
        &self,
        tuple: &GraphDifferentialTuple,
        coefficients: &CoefficientVector,
    ) -> Result<f64, MeasureError> {
        normalized_sum(tuple, coefficients)
    }
}

/// [`relative_sum`] as a registry strategy.
pub struct RelativeSum;

impl DistanceMeasure for RelativeSum {
    fn name(&self) -> &'static str {
        "relative_sum"
    }

    fn evaluate(
        &self,
        tuple: &GraphDifferentialTuple,
        coefficients: &CoefficientVector,
    ) -> Result<f64, MeasureError> {
        relative_sum(tuple, coefficients)
    }
}

/// [`edge_modification`] as a registry strategy. Ignores coefficients.
pub struct EdgeModification;

impl DistanceMeasure for EdgeModification {
    fn name(&self) -> &'static str {
        "edge_modification"
    }

    fn evaluate(
        &self,
        tuple: &GraphDifferentialTuple,
        _coefficients: &CoefficientVector,
    ) -> Result<f64, MeasureError> {
        Ok(edge_modification(tuple))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diff, GraphSnapshot, NodeId};

    fn n(s: &str) -> NodeId {
        NodeId::new(s).unwrap()
    }

    fn graph(nodes: &[&str], edges: &[(&str, &str, f64)]) -> GraphSnapshot {
        let mut g = GraphSnapshot::new();
        for node in nodes {
            g.add_node(n(node));
        }
        for &(from, to, w) in edges {
            g.add_edge(n(from), n(to), w).unwrap();
        }
        g
    }

    #[test]
    fn sum_weights_each_component_by_its_coefficient() {
        // 1 added node, 1 removed node, 1 removed edge, 1 modification
        let a = graph(&["d"], &[("a", "b", 0.5), ("b", "c", 0.5), ("c", "a", 0.5)]);
        let b = graph(&["e"], &[("a", "b", 0.9), ("b", "c", 0.5)]);
        let t = diff(&a, &b);
        assert_eq!(t.removed_edge_count(), 1);
        assert_eq!(sum_distance(&t, &CoefficientVector::ones()), 4.0);
        let half = CoefficientVector::new(0.5, 0.5, 0.5, 0.5, 0.5).unwrap();
        assert_eq!(sum_distance(&t, &half), 2.0);
        let only_nodes = CoefficientVector::new(1.0, 1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(sum_distance(&t, &only_nodes), 2.0);
    }

    #[test]
    fn normalized_sum_is_one_for_disjoint_snapshots() {
        let a = graph(&[], &[("a", "b", 0.5)]);
        let b = graph(&[], &[("c", "d", 0.5)]);
        let t = diff(&a, &b);
        assert_eq!(normalized_sum(&t, &CoefficientVector::ones()).unwrap(), 1.0);
    }

    #[test]
    fn normalized_sum_is_zero_for_identical_snapshots() {
        let g = graph(&[], &[("a", "b", 0.5)]);
        let t = diff(&g, &g);
        assert_eq!(normalized_sum(&t, &CoefficientVector::ones()).unwrap(), 0.0);
    }

    #[test]
    fn normalized_sum_of_two_empty_snapshots_is_undefined() {
        let t = diff(&GraphSnapshot::new(), &GraphSnapshot::new());
        assert_eq!(
            normalized_sum(&t, &CoefficientVector::ones()),
            Err(MeasureError::EmptyGraphPair)
        );
    }

    #[test]
    fn relative_sum_measures_against_the_source_size() {
        // source: one lonely node; target adds three more
        let a = graph(&["a"], &[]);
        let b = graph(&["a", "b", "c", "d"], &[]);
        let t = diff(&a, &b);
        assert_eq!(relative_sum(&t, &CoefficientVector::ones()).unwrap(), 3.0);
    }

    #[test]
    fn relative_sum_of_empty_source_is_undefined() {
        let b = graph(&["a"], &[]);
        let t = diff(&GraphSnapshot::new(), &b);
        assert_eq!(
            relative_sum(&t, &CoefficientVector::ones()),
            Err(MeasureError::EmptySourceGraph)
        );
    }

    #[test]
    fn edge_modification_averages_absolute_deltas_over_common_edges() {
        let a = graph(&[], &[("a", "b", 0.2), ("b", "c", 0.9), ("c", "a", 0.5)]);
        let b = graph(&[], &[("a", "b", 0.6), ("b", "c", 0.7), ("c", "a", 0.5)]);
        let t = diff(&a, &b);
        // |0.4| + |-0.2| over 3 common edges
        assert!((edge_modification(&t) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn edge_modification_is_zero_without_common_edges() {
        let a = graph(&[], &[("a", "b", 0.9)]);
        let b = graph(&[], &[("b", "a", 0.1)]);
        let t = diff(&a, &b);
        assert_eq!(t.common_edge_count(), 0);
        assert_eq!(edge_modification(&t), 0.0);
    }

    #[test]
    fn strategy_objects_agree_with_the_functions() {
        let a = graph(&["d"], &[("a", "b", 0.5), ("b", "c", 0.5)]);
        let b = graph(&[], &[("a", "b", 0.25), ("c", "a", 1.0)]);
        let t = diff(&a, &b);
        let c = CoefficientVector::new(1.0, 0.5, 1.0, 0.5, 1.0).unwrap();
        assert_eq!(SumDistance.evaluate(&t, &c).unwrap(), sum_distance(&t, &c));
        assert_eq!(NormalizedSum.evaluate(&t, &c).unwrap(), normalized_sum(&t, &c).unwrap());
        assert_eq!(RelativeSum.evaluate(&t, &c).unwrap(), relative_sum(&t, &c).unwrap());
        assert_eq!(EdgeModification.evaluate(&t, &c).unwrap(), edge_modification(&t));
    }
}
