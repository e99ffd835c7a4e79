//! Event-log files: one `sender,recipient,unix_timestamp` row per line,
//! `#` for comments, blank lines ignored.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use thiserror::Error;

use crate::graph::NodeId;

use super::EventRecord;

#[derive(Debug, Error)]
pub enum LogError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("node id `{0}` contains a delimiter and cannot be written")]
    UnencodableId(String),
}

/// A parsed log plus what ingestion had to leave out.
#[derive(Debug)]
pub struct ParsedLog {
    /// Events sorted by timestamp; rows sharing a timestamp keep file order.
    pub events: Vec<EventRecord>,
    /// Rows whose sender equals their recipient. Dropped, not errors.
    pub self_loops_dropped: usize,
    /// Malformed rows skipped; stays 0 unless skipping was requested.
    pub bad_lines_skipped: usize,
}

/// Reads an event log. A malformed row aborts with its line number
/// unless `skip_bad_lines` is set, in which case it is counted instead.
pub fn read_event_log<R: BufRead>(reader: R, skip_bad_lines: bool) -> Result<ParsedLog, LogError> {
    let mut events = Vec::new();
    let mut self_loops_dropped = 0;
    let mut bad_lines_skipped = 0;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let row = line.trim_end_matches('\r');
        if row.trim().is_empty() || row.starts_with('#') {
            continue;
        }
        match parse_row(row) {
            Ok(Some(event)) => events.push(event),
            Ok(None) => self_loops_dropped += 1,
            Err(reason) => {
                if skip_bad_lines {
                    bad_lines_skipped += 1;
                } else {
                    return Err(LogError::Malformed { line: idx + 1, reason });
                }
            }
        }
    }

    events.sort_by_key(|e| e.timestamp);
    Ok(ParsedLog { events, self_loops_dropped, bad_lines_skipped })
}

pub fn read_event_log_file(path: &Path, skip_bad_lines: bool) -> Result<ParsedLog, LogError> {
    read_event_log(BufReader::new(File::open(path)?), skip_bad_lines)
}

// Ok(None) flags a self-loop row; Err carries the reason for a bad one.
fn parse_row(row: &str) -> Result<Option<EventRecord>, String> {
    let fields: Vec<&str> = row.split(',').collect();
    if fields.len() != 3 {
        return Err(format!("expected 3 comma-separated fields, got {}", fields.len()));
    }
    let sender = NodeId::new(fields[0].trim()).map_err(|_| "sender id is empty".to_string())?;
    let recipient =
        NodeId::new(fields[1].trim()).map_err(|_| "recipient id is empty".to_string())?;
    let raw_ts = fields[2].trim();
    let timestamp: i64 = raw_ts.parse().map_err(|_| format!("invalid timestamp `{raw_ts}`"))?;
    if timestamp < 0 {
        return Err(format!("negative timestamp {timestamp}"));
    }
    if sender == recipient {
        return Ok(None);
    }
    Ok(Some(EventRecord { sender, recipient, timestamp }))
}

pub fn write_event_log<W: Write>(events: &[EventRecord], writer: &mut W) -> Result<(), LogError> {
    for event in events {
        for id in [&event.sender, &event.recipient] {
            if id.as_str().contains([',', '\n', '\r']) {
                return Err(LogError::UnencodableId(id.as_str().to_string()));
            }
        }
        writeln!(writer, "{},{},{}", event.sender, event.recipient, event.timestamp)?;
    }
    Ok(())
}
