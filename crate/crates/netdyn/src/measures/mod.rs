//! Distance measures over differential tuples.
//!
//! A [`CoefficientVector`] weights the five kinds of change; the four
//! measures turn one [`GraphDifferentialTuple`](crate::graph::GraphDifferentialTuple)
//! into a score. Each measure is a plain function and also a
//! [`DistanceMeasure`] strategy object, registered by name in a
//! [`MeasureRegistry`] so callers can select measures at runtime.

use thiserror::Error;

mod coefficients;
mod csv;
mod measure;
mod registry;
mod series;

pub use coefficients::{CoefficientVector, Combination, CombinationId};
pub use csv::{format_value, series_to_csv_string, write_series_csv, SERIES_CSV_HEADER};
pub use measure::{
    edge_modification, normalized_sum, relative_sum, sum_distance, DistanceMeasure,
    EdgeModification, NormalizedSum, RelativeSum, SumDistance,
};
pub use registry::MeasureRegistry;
pub use series::{
    measure_series, normalize_series, series_from_tuples, MeasurePoint, MeasureSeries,
};

#[derive(Debug, Error, PartialEq)]
pub enum MeasureError {
    #[error("coefficient `{name}` is {value}, outside [0, 1]")]
    CoefficientOutOfRange { name: &'static str, value: f64 },
    #[error("combination index {0} is outside 1..=31")]
    InvalidCombinationIndex(u8),
    #[error("normalized sum is undefined when both snapshots are empty")]
    EmptyGraphPair,
    #[error("relative sum is undefined when the source snapshot is empty")]
    EmptySourceGraph,
    #[error("a series needs at least 2 snapshots, got {0}")]
    TooFewSnapshots(usize),
    #[error("a measure named `{0}` is already registered")]
    DuplicateMeasureName(&'static str),
}
