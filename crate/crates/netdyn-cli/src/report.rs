//! Plain-text rendering of a differential tuple, for the `diff`
//! subcommand.

use netdyn::graph::GraphDifferentialTuple;
use netdyn::measures::{format_value, CoefficientVector, DistanceMeasure};

/// Renders what changed between two snapshots, section by section, then
/// the requested measures. A measure whose denominator is empty prints
/// as undefined instead of failing the whole report.
pub fn render_diff_report(
    tuple: &GraphDifferentialTuple,
    measures: &[&dyn DistanceMeasure],
    coefficients: &CoefficientVector,
) -> String {
    let (source_nodes, source_edges) = tuple.source_sizes();
    let (target_nodes, target_edges) = tuple.target_sizes();
    let mut out = String::new();
    out.push_str(&format!("Nodes: {source_nodes} -> {target_nodes}\n"));
    out.push_str(&format!("Edges: {source_edges} -> {target_edges}\n"));
    out.push('\n');

    section(&mut out, "New nodes", tuple.added_nodes().map(|n| n.to_string()));
    section(&mut out, "Departed nodes", tuple.removed_nodes().map(|n| n.to_string()));
    section(
        &mut out,
        "New connections",
        tuple.added_edges().map(|(from, to)| format!("{from} -> {to}")),
    );
    section(
        &mut out,
        "Dropped connections",
        tuple.removed_edges().map(|(from, to)| format!("{from} -> {to}")),
    );
    section(
        &mut out,
        "Weight changes",
        tuple
            .modified_weights()
            .iter()
            .map(|change| format!("{} -> {}  {:+.9}", change.from, change.to, change.delta)),
    );

    if !measures.is_empty() {
        let [an, rn, ae, re, mw] = coefficients.components();
        out.push_str(&format!("Measures (coefficients {an}, {rn}, {ae}, {re}, {mw}):\n"));
        let width = measures.iter().map(|m| m.name().len()).max().unwrap_or(0);
        for measure in measures {
            let rendered = match measure.evaluate(tuple, coefficients) {
                Ok(value) => format_value(value),
                Err(err) => format!("undefined ({err})"),
            };
            out.push_str(&format!("  {:<width$}  {rendered}\n", measure.name()));
        }
    }
    out
}

fn section<I: Iterator<Item = String>>(out: &mut String, heading: &str, items: I) {
    out.push_str(heading);
    out.push_str(":\n");
    let mut empty = true;
    for item in items {
        out.push_str("  ");
        out.push_str(&item);
        out.push('\n');
        empty = false;
    }
    if empty {
        out.push_str("  (none)\n");
    }
    out.push('\n');
}
