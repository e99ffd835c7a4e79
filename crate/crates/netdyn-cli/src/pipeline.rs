//! End-to-end pipeline: event log in, measure tables and charts out.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use rayon::prelude::*;

use netdyn::graph::{diff, snapshot_to_string, GraphSnapshot};
use netdyn::measures::{
    format_value, series_from_tuples, series_to_csv_string, CoefficientVector, Combination,
    CombinationId, MeasureRegistry,
};
use netdyn::window::{build_snapshot, read_event_log_file, slice_windows, WindowSet, WindowSpec};

use crate::svg;

/// Which coefficient combinations a run evaluates: a subset of the
/// 31-row table plus any ad-hoc vectors given on the command line.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationSelection {
    table_indices: Vec<u8>,
    custom: Vec<CoefficientVector>,
}

impl CombinationSelection {
    /// `table` is `all`, `none`, or a comma list of indices 1-31;
    /// `custom` holds one `a,b,c,d,e` string per extra vector.
    pub fn parse(table: &str, custom: &[String]) -> Result<Self> {
        let table = table.trim();
        let table_indices: Vec<u8> = if table.eq_ignore_ascii_case("all") {
            (1..=31).collect()
        } else if table.eq_ignore_ascii_case("none") {
            Vec::new()
        } else {
            let mut indices = Vec::new();
            let mut seen = BTreeSet::new();
            for part in table.split(',') {
                let part = part.trim();
                let index: u8 = part.parse().with_context(|| {
                    format!(
                        "bad combination index `{part}` (expected `all`, `none`, or numbers 1-31)"
                    )
                })?;
                ensure!((1..=31).contains(&index), "combination index {index} out of range 1-31");
                ensure!(seen.insert(index), "combination index {index} given twice");
                indices.push(index);
            }
            indices
        };
        ensure!(custom.len() <= 255, "at most 255 custom coefficient vectors");
        let custom =
            custom.iter().map(|text| parse_coefficients(text)).collect::<Result<Vec<_>>>()?;
        ensure!(
            !table_indices.is_empty() || !custom.is_empty(),
            "no coefficient combinations selected"
        );
        Ok(CombinationSelection { table_indices, custom })
    }

    /// Table rows in the order given, then custom vectors numbered from 1.
    pub fn combinations(&self) -> Vec<Combination> {
        let mut all: Vec<Combination> = self
            .table_indices
            .iter()
            .map(|&index| Combination::table(index).expect("indices validated at parse time"))
            .collect();
        for (i, &coefficients) in self.custom.iter().enumerate() {
            all.push(Combination::custom(i as u8 + 1, coefficients));
        }
        all
    }
}

/// Parses `a,b,c,d,e` into a coefficient vector, rejecting anything
/// outside [0, 1].
pub fn parse_coefficients(text: &str) -> Result<CoefficientVector> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    ensure!(
        parts.len() == 5,
        "expected 5 comma-separated coefficients (added nodes, removed nodes, \
         added edges, removed edges, weight changes), got {}",
        parts.len()
    );
    let mut values = [0.0f64; 5];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part.parse().with_context(|| format!("bad coefficient `{part}`"))?;
    }
    let [an, rn, ae, re, mw] = values;
    Ok(CoefficientVector::new(an, rn, ae, re, mw)?)
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub input: PathBuf,
    pub out_dir: PathBuf,
    pub window_days: u32,
    pub step_days: u32,
    /// Pins the window grid; defaults to midnight of the first event's day.
    pub origin: Option<i64>,
    pub skip_bad_lines: bool,
    pub selection: CombinationSelection,
    /// Also write one peak-scaled SVG chart per measure and combination.
    pub charts: bool,
}

/// What a run did, for the status line and the skip warnings.
#[derive(Debug)]
pub struct PipelineSummary {
    pub events_parsed: usize,
    pub self_loops_dropped: usize,
    pub bad_lines_skipped: usize,
    pub skipped_before_origin: usize,
    pub skipped_trailing: usize,
    pub window_count: usize,
    pub pair_count: usize,
    pub files_written: Vec<PathBuf>,
}

struct LoadedLog {
    set: WindowSet,
    events_parsed: usize,
    self_loops_dropped: usize,
    bad_lines_skipped: usize,
}

fn load_windows(
    input: &Path,
    window_days: u32,
    step_days: u32,
    origin: Option<i64>,
    skip_bad_lines: bool,
) -> Result<LoadedLog> {
    let parsed = read_event_log_file(input, skip_bad_lines)
        .with_context(|| format!("reading {}", input.display()))?;
    let mut spec = WindowSpec::new(window_days, step_days)?;
    if let Some(origin) = origin {
        spec = spec.with_origin(origin);
    }
    let events_parsed = parsed.events.len();
    let set = slice_windows(parsed.events, &spec)?;
    Ok(LoadedLog {
        set,
        events_parsed,
        self_loops_dropped: parsed.self_loops_dropped,
        bad_lines_skipped: parsed.bad_lines_skipped,
    })
}

/// Slices the log, diffs consecutive windows, and writes one measure
/// CSV per selected combination (plus charts when asked). The registry
/// decides which measures get charts, so a newly registered measure
/// shows up without touching this function.
pub fn run_pipeline(
    config: &PipelineConfig,
    registry: &MeasureRegistry,
) -> Result<PipelineSummary> {
    let loaded = load_windows(
        &config.input,
        config.window_days,
        config.step_days,
        config.origin,
        config.skip_bad_lines,
    )?;
    let set = &loaded.set;
    if set.len() < 2 {
        bail!(
            "log covers only {} full {}-day window(s); need at least 2 to compare",
            set.len(),
            config.window_days
        );
    }

    fs::create_dir_all(&config.out_dir)
        .with_context(|| format!("creating {}", config.out_dir.display()))?;

    let snapshots: Vec<GraphSnapshot> = (0..set.len())
        .into_par_iter()
        .map(|i| build_snapshot(&set.get(i).expect("index in range")))
        .collect();

    let mut files_written = Vec::new();

    let manifest_path = config.out_dir.join("windows.txt");
    write_atomic(&manifest_path, window_manifest(set, &snapshots).as_bytes())?;
    files_written.push(manifest_path);

    let combinations = config.selection.combinations();
    let combo_path = config.out_dir.join("combinations.txt");
    write_atomic(&combo_path, combination_manifest(&combinations).as_bytes())?;
    files_written.push(combo_path);

    let tuples: Vec<_> = snapshots.par_windows(2).map(|pair| diff(&pair[0], &pair[1])).collect();

    let per_combination: Vec<Vec<(PathBuf, String)>> = combinations
        .par_iter()
        .map(|combination| {
            let tag = combination.id.file_tag();
            let series = series_from_tuples(&tuples, combination)
                .with_context(|| format!("evaluating combination {tag}"))?;
            let mut outputs = vec![(
                config.out_dir.join(format!("measures_{tag}.csv")),
                series_to_csv_string(&[&series]),
            )];
            if config.charts {
                for measure in registry.iter() {
                    let name = measure.name();
                    let mut points = Vec::with_capacity(tuples.len());
                    for (i, tuple) in tuples.iter().enumerate() {
                        let value = measure
                            .evaluate(tuple, &combination.coefficients)
                            .with_context(|| format!("{name} on window pair {}", i + 1))?;
                        points.push((i + 1, value));
                    }
                    let peak = points.iter().map(|&(_, v)| v).fold(0.0f64, f64::max);
                    if peak > 0.0 {
                        for (_, value) in points.iter_mut() {
                            *value /= peak;
                        }
                    }
                    let title = match combination.id {
                        CombinationId::Table(index) => {
                            format!("{name}, combination {index} (peak-scaled)")
                        }
                        CombinationId::Custom(ordinal) => {
                            format!("{name}, custom vector {ordinal} (peak-scaled)")
                        }
                    };
                    outputs.push((
                        config.out_dir.join(format!("chart_{tag}_{name}.svg")),
                        svg::line_chart(&title, "window pair", &points),
                    ));
                }
            }
            Ok(outputs)
        })
        .collect::<Result<Vec<_>>>()?;

    for (path, content) in per_combination.into_iter().flatten() {
        write_atomic(&path, content.as_bytes())?;
        files_written.push(path);
    }

    Ok(PipelineSummary {
        events_parsed: loaded.events_parsed,
        self_loops_dropped: loaded.self_loops_dropped,
        bad_lines_skipped: loaded.bad_lines_skipped,
        skipped_before_origin: set.skipped_before_origin(),
        skipped_trailing: set.skipped_trailing(),
        window_count: set.len(),
        pair_count: set.len() - 1,
        files_written,
    })
}

#[derive(Debug, Clone)]
pub struct SliceConfig {
    pub input: PathBuf,
    pub out_dir: PathBuf,
    pub window_days: u32,
    pub step_days: u32,
    pub origin: Option<i64>,
    pub skip_bad_lines: bool,
}

/// Slices the log and writes each window as its own snapshot file, for
/// feeding pairs back into `diff` or into other tools.
pub fn slice_pipeline(config: &SliceConfig) -> Result<PipelineSummary> {
    let loaded = load_windows(
        &config.input,
        config.window_days,
        config.step_days,
        config.origin,
        config.skip_bad_lines,
    )?;
    let set = &loaded.set;
    if set.is_empty() {
        bail!("log shorter than one full {}-day window; nothing to slice", config.window_days);
    }

    fs::create_dir_all(&config.out_dir)
        .with_context(|| format!("creating {}", config.out_dir.display()))?;

    let snapshots: Vec<GraphSnapshot> = (0..set.len())
        .into_par_iter()
        .map(|i| build_snapshot(&set.get(i).expect("index in range")))
        .collect();

    let mut files_written = Vec::new();

    let manifest_path = config.out_dir.join("windows.txt");
    write_atomic(&manifest_path, window_manifest(set, &snapshots).as_bytes())?;
    files_written.push(manifest_path);

    for (window, snapshot) in set.iter().zip(&snapshots) {
        let path = config.out_dir.join(format!("window_{:04}.snap", window.index));
        let text = snapshot_to_string(snapshot)
            .with_context(|| format!("encoding window {}", window.index))?;
        write_atomic(&path, text.as_bytes())?;
        files_written.push(path);
    }

    Ok(PipelineSummary {
        events_parsed: loaded.events_parsed,
        self_loops_dropped: loaded.self_loops_dropped,
        bad_lines_skipped: loaded.bad_lines_skipped,
        skipped_before_origin: set.skipped_before_origin(),
        skipped_trailing: set.skipped_trailing(),
        window_count: set.len(),
        pair_count: set.len() - 1,
        files_written,
    })
}

fn window_manifest(set: &WindowSet, snapshots: &[GraphSnapshot]) -> String {
    let mut text = String::from("# window start end nodes edges\n");
    for (window, snapshot) in set.iter().zip(snapshots) {
        text.push_str(&format!(
            "{} {} {} {} {}\n",
            window.index,
            window.start,
            window.end,
            snapshot.node_count(),
            snapshot.edge_count(),
        ));
    }
    text
}

fn combination_manifest(combinations: &[Combination]) -> String {
    let mut text =
        String::from("# tag added_nodes removed_nodes added_edges removed_edges weight_changes\n");
    for combination in combinations {
        let [an, rn, ae, re, mw] = combination.coefficients.components();
        text.push_str(&format!(
            "{} {} {} {} {} {}\n",
            combination.id.file_tag(),
            format_value(an),
            format_value(rn),
            format_value(ae),
            format_value(re),
            format_value(mw),
        ));
    }
    text
}

/// Writes through a temp sibling and renames, so an interrupted run
/// never leaves a half-written file behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let file_name =
        path.file_name().with_context(|| format!("`{}` has no file name", path.display()))?;
    let tmp = dir.join(format!(".{}.tmp{}", file_name.to_string_lossy(), std::process::id()));
    let result = fs::write(&tmp, bytes).and_then(|()| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.with_context(|| format!("writing {}", path.display()))
}
