use std::ops::Range;

use super::{EventRecord, WindowError};

pub const SECS_PER_DAY: i64 = 86_400;

/// Slicing grid: window length, step between window starts, and an
/// optional pinned origin.
///
/// `step == window` tiles the log back to back; a smaller step makes
/// consecutive windows overlap. Steps larger than the window would
/// leave unobserved gaps and are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    window_days: u32,
    step_days: u32,
    origin: Option<i64>,
}

impl WindowSpec {
    pub fn new(window_days: u32, step_days: u32) -> Result<Self, WindowError> {
        if window_days == 0 {
            return Err(WindowError::ZeroWindow);
        }
        if step_days == 0 {
            return Err(WindowError::ZeroStep);
        }
        if step_days > window_days {
            return Err(WindowError::StepExceedsWindow { window: window_days, step: step_days });
        }
        Ok(WindowSpec { window_days, step_days, origin: None })
    }

    /// Pins the first window's start to an absolute timestamp. Without
    /// this, slicing starts at 00:00:00 UTC of the earliest event's day.
    pub fn with_origin(mut self, origin: i64) -> Self {
        self.origin = Some(origin);
        self
    }

    pub fn window_days(&self) -> u32 {
        self.window_days
    }

    pub fn step_days(&self) -> u32 {
        self.step_days
    }

    pub fn origin(&self) -> Option<i64> {
        self.origin
    }

    fn window_secs(&self) -> i64 {
        i64::from(self.window_days) * SECS_PER_DAY
    }

    fn step_secs(&self) -> i64 {
        i64::from(self.step_days) * SECS_PER_DAY
    }
}

/// One slice of the log.
#[derive(Debug, Clone, Copy)]
pub struct Window<'a> {
    /// 1-based position in the grid.
    pub index: usize,
    /// Inclusive start, unix seconds.
    pub start: i64,
    /// Exclusive end, unix seconds.
    pub end: i64,
    /// Events with `start <= timestamp < end`, ordered by timestamp.
    pub events: &'a [EventRecord],
}

/// Result of slicing: the sorted log, the emitted windows, and counts of
/// events that fell outside every window.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowSet {
    events: Vec<EventRecord>,
    bounds: Vec<(i64, i64, Range<usize>)>,
    origin: i64,
    skipped_before_origin: usize,
    skipped_trailing: usize,
}

impl WindowSet {
    /// Number of windows.
    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// Start of the first window.
    pub fn origin(&self) -> i64 {
        self.origin
    }

    /// Events earlier than the origin (possible when the origin is
    /// pinned by hand). They belong to no window.
    pub fn skipped_before_origin(&self) -> usize {
        self.skipped_before_origin
    }

    /// Events past the end of the last emitted window. The grid never
    /// emits a short final window, so a trailing stretch of the log is
    /// dropped rather than half-observed.
    pub fn skipped_trailing(&self) -> usize {
        self.skipped_trailing
    }

    /// The full log, sorted by timestamp.
    pub fn events(&self) -> &[EventRecord] {
        &self.events
    }

    pub fn get(&self, index: usize) -> Option<Window<'_>> {
        let (start, end, range) = self.bounds.get(index)?;
        Some(Window {
            index: index + 1,
            start: *start,
            end: *end,
            events: &self.events[range.clone()],
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = Window<'_>> {
        (0..self.len()).map(|i| self.get(i).expect("index in range"))
    }
}

/// Cuts an event log into fixed-length windows.
///
/// The log is sorted by timestamp first (stably, so records sharing a
/// timestamp keep their input order). The span to cover runs from the
/// origin through the end of the day of the last event; windows are laid
/// every `step` days and emitted as long as they fit inside that span in
/// full, so the grid covers the whole log except a trailing remnant
/// shorter than one window. An event lands in every window whose
/// half-open interval contains its timestamp; with overlapping windows
/// that is more than one.
pub fn slice_windows(
    mut events: Vec<EventRecord>,
    spec: &WindowSpec,
) -> Result<WindowSet, WindowError> {
    if events.is_empty() {
        return Err(WindowError::EmptyLog);
    }
    if !events.is_sorted_by_key(|e| e.timestamp) {
        events.sort_by_key(|e| e.timestamp);
    }

    let origin = spec
        .origin()
        .unwrap_or_else(|| events[0].timestamp.div_euclid(SECS_PER_DAY) * SECS_PER_DAY);
    let skipped_before_origin = events.partition_point(|e| e.timestamp < origin);
    let last = events.last().expect("log is non-empty").timestamp;

    let mut bounds = Vec::new();
    let mut skipped_trailing = 0;
    if last >= origin {
        let covered_secs = last - origin + 1;
        let span_days = (covered_secs + SECS_PER_DAY - 1) / SECS_PER_DAY;
        let window_days = i64::from(spec.window_days());
        if span_days >= window_days {
            let step_days = i64::from(spec.step_days());
            let count = (span_days - window_days) / step_days + 1;
            bounds.reserve(count as usize);
            for i in 0..count {
                let start = origin + i * spec.step_secs();
                let end = start + spec.window_secs();
                let lo = events.partition_point(|e| e.timestamp < start);
                let hi = events.partition_point(|e| e.timestamp < end);
                bounds.push((start, end, lo..hi));
            }
        }
        let horizon = bounds.last().map_or(origin, |(_, end, _)| *end);
        skipped_trailing = events.len() - events.partition_point(|e| e.timestamp < horizon);
    }

    Ok(WindowSet { events, bounds, origin, skipped_before_origin, skipped_trailing })
}
