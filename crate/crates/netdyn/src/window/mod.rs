//! Event logs and time-window slicing.
//!
//! An event is one directed message `sender -> recipient` at a unix
//! timestamp. A [`WindowSpec`] lays a grid of fixed-length, possibly
//! overlapping windows over the log; [`build_snapshot`] turns one
//! window's events into a weighted [`GraphSnapshot`](crate::graph::GraphSnapshot).

use thiserror::Error;

use crate::graph::NodeId;

mod build;
mod log;
mod slice;

pub use build::build_snapshot;
pub use log::{read_event_log, read_event_log_file, write_event_log, LogError, ParsedLog};
pub use slice::{slice_windows, Window, WindowSet, WindowSpec, SECS_PER_DAY};

/// One message: who sent, who received, when (unix seconds).
///
/// A valid record never points a node at itself; self-loop rows in raw
/// input are dropped during ingestion, before records are built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRecord {
    pub sender: NodeId,
    pub recipient: NodeId,
    pub timestamp: i64,
}

impl EventRecord {
    pub fn new(sender: NodeId, recipient: NodeId, timestamp: i64) -> Result<Self, WindowError> {
        if sender == recipient {
            return Err(WindowError::SelfLoopEvent(sender));
        }
        if timestamp < 0 {
            return Err(WindowError::NegativeTimestamp(timestamp));
        }
        Ok(EventRecord { sender, recipient, timestamp })
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum WindowError {
    #[error("event log contains no events")]
    EmptyLog,
    #[error("window length must be at least 1 day")]
    ZeroWindow,
    #[error("window step must be at least 1 day")]
    ZeroStep,
    #[error("step of {step} days exceeds the window length of {window} days")]
    StepExceedsWindow { window: u32, step: u32 },
    #[error("event timestamp {0} is negative")]
    NegativeTimestamp(i64),
    #[error("event sender and recipient are both `{0}`")]
    SelfLoopEvent(NodeId),
}
