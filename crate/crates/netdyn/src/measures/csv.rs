//! CSV export of measure series.

use std::io::{self, Write};

use super::{CombinationId, MeasurePoint, MeasureSeries};

pub const SERIES_CSV_HEADER: &str =
    "pair_index,combination,sum,normalized_sum,relative_sum,edge_modification";

/// Nine significant digits, plain decimal notation. Zero prints as `0`.
/// Every value the measures produce is non-negative.
pub fn format_value(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Writes one or more series as CSV. Rows are sorted by pair index and
/// then by combination (table rows in index order, customs after), so
/// the same series always produce byte-identical output.
pub fn write_series_csv<W: Write>(
    series_list: &[&MeasureSeries],
    writer: &mut W,
) -> io::Result<()> {
    let mut rows: Vec<(usize, CombinationId, &MeasurePoint)> = series_list
        .iter()
        .flat_map(|series| {
            series.points.iter().map(|point| (point.pair_index, series.combination, point))
        })
        .collect();
    rows.sort_by_key(|row| (row.0, row.1));

    writeln!(writer, "{SERIES_CSV_HEADER}")?;
    for (pair_index, combination, point) in rows {
        writeln!(
            writer,
            "{pair_index},{combination},{},{},{},{}",
            format_value(point.sum),
            format_value(point.normalized_sum),
            format_value(point.relative_sum),
            format_value(point.edge_modification),
        )?;
    }
    Ok(())
}

pub fn series_to_csv_string(series_list: &[&MeasureSeries]) -> String {
    let mut buf = Vec::new();
    write_series_csv(series_list, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV text is always utf-8")
}
