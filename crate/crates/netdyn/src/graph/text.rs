//! Plain-text snapshot files.
//!
//! ```text
//! # nodes: 3 edges: 2
//! N a
//! N b
//! N c
//! E a b 0.500000000
//! E b c 1.000000000
//! ```
//!
//! The header states the counts, `N` lines declare nodes, `E` lines
//! declare edges with nine decimal places of weight. Output is sorted
//! (nodes lexicographic, edges by from then to) so equal snapshots
//! produce byte-identical files. Fields are whitespace-delimited, which
//! is why ids containing whitespace cannot be written.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use thiserror::Error;

use super::{GraphSnapshot, NodeId};

#[derive(Debug, Error)]
pub enum TextFormatError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("node id `{0}` contains whitespace and cannot be written")]
    UnencodableId(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

fn encodable(id: &NodeId) -> Result<&str, TextFormatError> {
    let s = id.as_str();
    if s.chars().any(char::is_whitespace) {
        return Err(TextFormatError::UnencodableId(s.to_string()));
    }
    Ok(s)
}

pub fn write_snapshot<W: Write>(
    snapshot: &GraphSnapshot,
    writer: &mut W,
) -> Result<(), TextFormatError> {
    writeln!(writer, "# nodes: {} edges: {}", snapshot.node_count(), snapshot.edge_count())?;
    for node in snapshot.nodes() {
        writeln!(writer, "N {}", encodable(node)?)?;
    }
    for (from, to, weight) in snapshot.edges() {
        writeln!(writer, "E {} {} {:.9}", encodable(from)?, encodable(to)?, weight)?;
    }
    Ok(())
}

pub fn snapshot_to_string(snapshot: &GraphSnapshot) -> Result<String, TextFormatError> {
    let mut buf = Vec::new();
    write_snapshot(snapshot, &mut buf)?;
    Ok(String::from_utf8(buf).expect("snapshot text is always utf-8"))
}

fn parse_err(line: usize, reason: impl Into<String>) -> TextFormatError {
    TextFormatError::Parse { line, reason: reason.into() }
}

/// Parses the text produced by [`write_snapshot`].
///
/// The header must come first; `N` and `E` lines may then appear in any
/// order as long as every edge endpoint is declared before use. Blank
/// lines and further `#` lines are ignored. Errors carry the 1-based
/// line number.
pub fn parse_snapshot(text: &str) -> Result<GraphSnapshot, TextFormatError> {
    let mut lines = text.lines().enumerate();

    let (expected_nodes, expected_edges) = loop {
        let Some((idx, raw)) = lines.next() else {
            return Err(parse_err(1, "missing `# nodes: <n> edges: <m>` header"));
        };
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        break parse_header(line).ok_or_else(|| {
            parse_err(idx + 1, format!("expected `# nodes: <n> edges: <m>`, got `{line}`"))
        })?;
    };

    let mut declared: BTreeSet<NodeId> = BTreeSet::new();
    let mut snapshot = GraphSnapshot::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "N" => {
                if fields.len() != 2 {
                    return Err(parse_err(line_no, "node line must be `N <id>`"));
                }
                let node = NodeId::new(fields[1]).map_err(|e| parse_err(line_no, e.to_string()))?;
                if !declared.insert(node.clone()) {
                    return Err(parse_err(line_no, format!("node `{node}` declared twice")));
                }
                snapshot.add_node(node);
            }
            "E" => {
                if fields.len() != 4 {
                    return Err(parse_err(line_no, "edge line must be `E <from> <to> <weight>`"));
                }
                let from = NodeId::new(fields[1]).map_err(|e| parse_err(line_no, e.to_string()))?;
                let to = NodeId::new(fields[2]).map_err(|e| parse_err(line_no, e.to_string()))?;
                for endpoint in [&from, &to] {
                    if !declared.contains(endpoint) {
                        return Err(parse_err(
                            line_no,
                            format!("edge endpoint `{endpoint}` is not a declared node"),
                        ));
                    }
                }
                let weight: f64 = fields[3]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("invalid weight `{}`", fields[3])))?;
                snapshot
                    .add_edge(from, to, weight)
                    .map_err(|e| parse_err(line_no, e.to_string()))?;
            }
            other => {
                return Err(parse_err(line_no, format!("unknown line tag `{other}`")));
            }
        }
    }

    if snapshot.node_count() != expected_nodes {
        return Err(parse_err(
            1,
            format!(
                "header claims {} nodes, file declares {}",
                expected_nodes,
                snapshot.node_count()
            ),
        ));
    }
    if snapshot.edge_count() != expected_edges {
        return Err(parse_err(
            1,
            format!(
                "header claims {} edges, file declares {}",
                expected_edges,
                snapshot.edge_count()
            ),
        ));
    }
    Ok(snapshot)
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "#" || fields[1] != "nodes:" || fields[3] != "edges:" {
        return None;
    }
    Some((fields[2].parse().ok()?, fields[4].parse().ok()?))
}

pub fn read_snapshot_file(path: &Path) -> Result<GraphSnapshot, TextFormatError> {
    parse_snapshot(&fs::read_to_string(path)?)
}
