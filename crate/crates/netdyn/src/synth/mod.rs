//! Synthetic bursty event logs.
//!
//! Every node runs its own renewal process: it waits a random gap, sends
//! one message to a uniformly chosen other node, and repeats until the
//! span runs out. Gaps follow a power law (density exponent `alpha`,
//! minimum gap `min_gap_secs`), which yields the bursty rhythm of human
//! communication: long silences broken by flurries of activity.
//!
//! Generation is a pure function of the spec. The RNG is ChaCha12
//! seeded from `seed`, with stream `i` dedicated to node `i`, so the
//! same spec reproduces the same log byte for byte and adding a node
//! never reshuffles the others' traffic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::graph::NodeId;
use crate::window::{EventRecord, SECS_PER_DAY};

/// Exclusive bounds for the gap-density exponent. Below the range the
/// process has no burst structure to speak of; above it the tail is so
/// light the log degenerates toward a regular pulse.
pub const ALPHA_MIN: f64 = 1.5;
pub const ALPHA_MAX: f64 = 2.5;

#[derive(Debug, Error, PartialEq)]
pub enum SynthError {
    #[error("alpha must lie strictly between {ALPHA_MIN} and {ALPHA_MAX}, got {0}")]
    AlphaOutOfRange(f64),
    #[error("need at least 2 nodes so every sender has someone to write to, got {0}")]
    TooFewNodes(u32),
    #[error("span must be at least 1 day")]
    ZeroSpan,
    #[error("minimum gap must be at least 1 second")]
    ZeroMinGap,
}

/// Parameters of one synthetic log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthSpec {
    node_count: u32,
    span_days: u32,
    alpha: f64,
    min_gap_secs: u32,
    seed: u64,
}

impl SynthSpec {
    pub fn new(
        node_count: u32,
        span_days: u32,
        alpha: f64,
        min_gap_secs: u32,
        seed: u64,
    ) -> Result<Self, SynthError> {
        if node_count < 2 {
            return Err(SynthError::TooFewNodes(node_count));
        }
        if span_days == 0 {
            return Err(SynthError::ZeroSpan);
        }
        if min_gap_secs == 0 {
            return Err(SynthError::ZeroMinGap);
        }
        if !(alpha > ALPHA_MIN && alpha < ALPHA_MAX) {
            return Err(SynthError::AlphaOutOfRange(alpha));
        }
        Ok(SynthSpec { node_count, span_days, alpha, min_gap_secs, seed })
    }

    pub fn node_count(&self) -> u32 {
        self.node_count
    }

    pub fn span_days(&self) -> u32 {
        self.span_days
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn min_gap_secs(&self) -> u32 {
        self.min_gap_secs
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn span_secs(&self) -> i64 {
        i64::from(self.span_days) * SECS_PER_DAY
    }
}

/// Generates the log described by `spec`, sorted by timestamp.
///
/// All timestamps lie in `[0, span_secs)`. Gaps are drawn by inverting
/// the power-law tail: `gap = min_gap * u^(-1 / (alpha - 1))` for
/// uniform `u` in `(0, 1]`, rounded up to whole seconds, so every gap
/// is at least `min_gap_secs`.
pub fn generate_log(spec: &SynthSpec) -> Vec<EventRecord> {
    let node_count = spec.node_count;
    let labels: Vec<NodeId> = {
        let width = spec.node_count.to_string().len();
        (1..=node_count)
            .map(|i| NodeId::new(format!("n{i:0width$}")).expect("label is non-empty"))
            .collect()
    };

    let span_secs = spec.span_secs();
    let min_gap = f64::from(spec.min_gap_secs);
    let tail_exponent = -1.0 / (spec.alpha - 1.0);

    let mut events = Vec::new();
    for (node_index, sender) in labels.iter().enumerate() {
        let mut rng = ChaCha12Rng::seed_from_u64(spec.seed);
        rng.set_stream(node_index as u64);

        let mut now: i64 = 0;
        loop {
            // 1 - u moves the draw from [0, 1) to (0, 1]
            let u = 1.0 - rng.random::<f64>();
            let gap = min_gap * u.powf(tail_exponent);
            // the tail makes astronomically long gaps possible; bail in
            // f64 before an i64 conversion could overflow
            if now as f64 + gap >= span_secs as f64 {
                break;
            }
            now += gap.ceil() as i64;
            if now >= span_secs {
                break;
            }
            let draw = rng.random_range(0..node_count - 1) as usize;
            let recipient_index = if draw >= node_index { draw + 1 } else { draw };
            events.push(EventRecord {
                sender: sender.clone(),
                recipient: labels[recipient_index].clone(),
                timestamp: now,
            });
        }
    }

    events.sort_by_key(|e| e.timestamp);
    events
}
