use crate::graph::{diff, GraphDifferentialTuple, GraphSnapshot};

use super::{
    edge_modification, normalized_sum, relative_sum, sum_distance, CoefficientVector, Combination,
    CombinationId, MeasureError,
};

/// All four measures for one consecutive snapshot pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurePoint {
    /// 1-based: point `i` compares snapshot `i+1` against snapshot `i`.
    pub pair_index: usize,
    pub sum: f64,
    pub normalized_sum: f64,
    pub relative_sum: f64,
    pub edge_modification: f64,
}

impl MeasurePoint {
    pub fn from_tuple(
        pair_index: usize,
        tuple: &GraphDifferentialTuple,
        coefficients: &CoefficientVector,
    ) -> Result<Self, MeasureError> {
        Ok(MeasurePoint {
            pair_index,
            sum: sum_distance(tuple, coefficients),
            normalized_sum: normalized_sum(tuple, coefficients)?,
            relative_sum: relative_sum(tuple, coefficients)?,
            edge_modification: edge_modification(tuple),
        })
    }

    /// Looks a component up by measure name, bridging from
    /// [`MeasureRegistry`](super::MeasureRegistry) names to fields.
    pub fn value(&self, measure_name: &str) -> Option<f64> {
        match measure_name {
            "sum" => Some(self.sum),
            "normalized_sum" => Some(self.normalized_sum),
            "relative_sum" => Some(self.relative_sum),
            "edge_modification" => Some(self.edge_modification),
            _ => None,
        }
    }
}

/// The four measures across every consecutive snapshot pair, under one
/// coefficient combination.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureSeries {
    pub combination: CombinationId,
    pub points: Vec<MeasurePoint>,
    /// True once each component has been rescaled by its own maximum
    /// (see [`normalize_series`]).
    pub normalized: bool,
}

/// Evaluates one combination over consecutive pairs of pre-computed
/// tuples. `tuples[i]` must be the diff of snapshot `i+1` against
/// snapshot `i`.
pub fn series_from_tuples(
    tuples: &[GraphDifferentialTuple],
    combination: &Combination,
) -> Result<MeasureSeries, MeasureError> {
    if tuples.is_empty() {
        return Err(MeasureError::TooFewSnapshots(1));
    }
    let points = tuples
        .iter()
        .enumerate()
        .map(|(i, tuple)| MeasurePoint::from_tuple(i + 1, tuple, &combination.coefficients))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MeasureSeries { combination: combination.id, points, normalized: false })
}

/// Diffs consecutive snapshots and evaluates one combination over the
/// resulting tuples. Needs at least two snapshots.
pub fn measure_series(
    snapshots: &[GraphSnapshot],
    combination: &Combination,
) -> Result<MeasureSeries, MeasureError> {
    if snapshots.len() < 2 {
        return Err(MeasureError::TooFewSnapshots(snapshots.len()));
    }
    let tuples: Vec<GraphDifferentialTuple> =
        snapshots.windows(2).map(|pair| diff(&pair[0], &pair[1])).collect();
    series_from_tuples(&tuples, combination)
}

/// Rescales each of the four component series by its own maximum, so
/// every component peaks at exactly 1 and different combinations become
/// comparable on one chart. A component that is 0 everywhere stays 0.
pub fn normalize_series(series: &MeasureSeries) -> MeasureSeries {
    let max =
        |pick: fn(&MeasurePoint) -> f64| series.points.iter().map(pick).fold(0.0_f64, f64::max);
    let scale = |value: f64, max: f64| if max > 0.0 { value / max } else { value };

    let sum_max = max(|p| p.sum);
    let normalized_sum_max = max(|p| p.normalized_sum);
    let relative_sum_max = max(|p| p.relative_sum);
    let edge_modification_max = max(|p| p.edge_modification);

    MeasureSeries {
        combination: series.combination,
        points: series
            .points
            .iter()
            .map(|p| MeasurePoint {
                pair_index: p.pair_index,
                sum: scale(p.sum, sum_max),
                normalized_sum: scale(p.normalized_sum, normalized_sum_max),
                relative_sum: scale(p.relative_sum, relative_sum_max),
                edge_modification: scale(p.edge_modification, edge_modification_max),
            })
            .collect(),
        normalized: true,
    }
}
