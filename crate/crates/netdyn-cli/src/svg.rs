//! Minimal SVG line charts, written by hand so the output is
//! byte-stable and needs no plotting dependency.

use std::fmt::Write;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const MARGIN_LEFT: f64 = 56.0;
const MARGIN_RIGHT: f64 = 16.0;
const MARGIN_TOP: f64 = 32.0;
const MARGIN_BOTTOM: f64 = 40.0;
/// Past this many points the per-point circles just smear the line.
const MAX_MARKED_POINTS: usize = 200;

/// Renders one series as a line chart. Values are expected in [0, 1]
/// (callers peak-scale first); anything outside is clamped so a stray
/// value cannot push the polyline off the canvas.
pub fn line_chart(title: &str, x_label: &str, points: &[(usize, f64)]) -> String {
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let first = points.first().map(|&(i, _)| i).unwrap_or(0);
    let last = points.last().map(|&(i, _)| i).unwrap_or(1);
    let span = (last.saturating_sub(first)).max(1) as f64;
    let to_x = |index: usize| MARGIN_LEFT + index.saturating_sub(first) as f64 / span * plot_w;
    let to_y = |value: f64| MARGIN_TOP + (1.0 - value.clamp(0.0, 1.0)) * plot_h;

    let mut s = String::new();
    s.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">"#
    ));
    s.push('\n');
    s.push_str(&format!(r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#));
    s.push('\n');
    s.push_str(&format!(
        r#"<text x="{:.2}" y="20" text-anchor="middle" font-size="14">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        escape(title)
    ));
    s.push('\n');

    for tick in [0.0, 0.5, 1.0] {
        let y = to_y(tick);
        let color = if tick == 0.0 { "#333" } else { "#ddd" };
        s.push_str(&format!(
            r#"<line x1="{MARGIN_LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{color}"/>"#,
            WIDTH - MARGIN_RIGHT
        ));
        s.push('\n');
        s.push_str(&format!(
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end" font-size="11">{tick}</text>"#,
            MARGIN_LEFT - 8.0,
            y + 4.0
        ));
        s.push('\n');
    }
    s.push_str(&format!(
        r##"<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{:.2}" stroke="#333"/>"##,
        to_y(0.0)
    ));
    s.push('\n');

    let mut x_ticks = vec![first, first + last.saturating_sub(first) / 2, last];
    x_ticks.dedup();
    for index in x_ticks {
        let x = to_x(index);
        s.push_str(&format!(
            r##"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="#333"/>"##,
            to_y(0.0),
            to_y(0.0) + 5.0
        ));
        s.push('\n');
        s.push_str(&format!(
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle" font-size="11">{index}</text>"#,
            to_y(0.0) + 18.0
        ));
        s.push('\n');
    }
    s.push_str(&format!(
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 6.0,
        escape(x_label)
    ));
    s.push('\n');

    if !points.is_empty() {
        let mut line =
            String::from(r##"<polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points=""##);
        for &(index, value) in points {
            write!(line, "{:.2},{:.2} ", to_x(index), to_y(value)).expect("writing to a String");
        }
        line.pop();
        line.push_str("\"/>");
        s.push_str(&line);
        s.push('\n');
        if points.len() <= MAX_MARKED_POINTS {
            for &(index, value) in points {
                s.push_str(&format!(
                    r##"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="#1f77b4"/>"##,
                    to_x(index),
                    to_y(value)
                ));
                s.push('\n');
            }
        }
    }

    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
