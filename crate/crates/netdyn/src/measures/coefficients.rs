use std::fmt;

use super::MeasureError;

/// Importance weights for the five kinds of change a differential tuple
/// records. Each coefficient lies in `[0, 1]`; setting one to 0 makes
/// the measures blind to that kind of change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientVector {
    added_nodes: f64,
    removed_nodes: f64,
    added_edges: f64,
    removed_edges: f64,
    modified_weights: f64,
}

impl CoefficientVector {
    pub fn new(
        added_nodes: f64,
        removed_nodes: f64,
        added_edges: f64,
        removed_edges: f64,
        modified_weights: f64,
    ) -> Result<Self, MeasureError> {
        for (name, value) in [
            ("added_nodes", added_nodes),
            ("removed_nodes", removed_nodes),
            ("added_edges", added_edges),
            ("removed_edges", removed_edges),
            ("modified_weights", modified_weights),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(MeasureError::CoefficientOutOfRange { name, value });
            }
        }
        Ok(CoefficientVector {
            added_nodes,
            removed_nodes,
            added_edges,
            removed_edges,
            modified_weights,
        })
    }

    /// Every kind of change counts in full.
    pub fn ones() -> Self {
        CoefficientVector {
            added_nodes: 1.0,
            removed_nodes: 1.0,
            added_edges: 1.0,
            removed_edges: 1.0,
            modified_weights: 1.0,
        }
    }

    pub fn added_nodes(&self) -> f64 {
        self.added_nodes
    }

    pub fn removed_nodes(&self) -> f64 {
        self.removed_nodes
    }

    pub fn added_edges(&self) -> f64 {
        self.added_edges
    }

    pub fn removed_edges(&self) -> f64 {
        self.removed_edges
    }

    pub fn modified_weights(&self) -> f64 {
        self.modified_weights
    }

    /// The five coefficients in tuple-component order: added nodes,
    /// removed nodes, added edges, removed edges, modified weights.
    pub fn components(&self) -> [f64; 5] {
        [
            self.added_nodes,
            self.removed_nodes,
            self.added_edges,
            self.removed_edges,
            self.modified_weights,
        ]
    }

    /// The 31 canonical on/off combinations, in index order (1-based).
    /// Every non-zero binary coefficient vector appears exactly once.
    pub fn combinations() -> Vec<CoefficientVector> {
        COMBINATION_ROWS.iter().map(CoefficientVector::from_row).collect()
    }

    /// One row of the canonical table, `index` in `1..=31`.
    pub fn combination(index: u8) -> Result<CoefficientVector, MeasureError> {
        let row = COMBINATION_ROWS
            .get(usize::from(index).wrapping_sub(1))
            .ok_or(MeasureError::InvalidCombinationIndex(index))?;
        Ok(CoefficientVector::from_row(row))
    }

    fn from_row(row: &[u8; 5]) -> CoefficientVector {
        CoefficientVector {
            added_nodes: f64::from(row[0]),
            removed_nodes: f64::from(row[1]),
            added_edges: f64::from(row[2]),
            removed_edges: f64::from(row[3]),
            modified_weights: f64::from(row[4]),
        }
    }
}

// Columns: added nodes, removed nodes, added edges, removed edges,
// modified weights. The index order is part of the CLI contract
// (combination 7 scores added nodes plus added edges, 31 everything),
// so rows must never be reordered.
const COMBINATION_ROWS: [[u8; 5]; 31] = [
    [1, 0, 0, 0, 0], // 1
    [0, 1, 0, 0, 0], // 2
    [0, 0, 1, 0, 0], // 3
    [0, 0, 0, 1, 0], // 4
    [0, 0, 0, 0, 1], // 5
    [1, 1, 0, 0, 0], // 6
    [1, 0, 1, 0, 0], // 7
    [1, 0, 0, 1, 0], // 8
    [1, 0, 0, 0, 1], // 9
    [0, 1, 1, 0, 0], // 10
    [0, 1, 0, 1, 0], // 11
    [0, 1, 0, 0, 1], // 12
    [0, 0, 1, 1, 0], // 13
    [0, 0, 1, 0, 1], // 14
    [0, 0, 0, 1, 1], // 15
    [0, 0, 1, 1, 1], // 16
    [0, 1, 0, 1, 1], // 17
    [0, 1, 1, 0, 1], // 18
    [0, 1, 1, 1, 0], // 19
    [1, 0, 1, 1, 0], // 20
    [1, 0, 0, 1, 1], // 21
    [1, 0, 1, 0, 1], // 22
    [1, 1, 0, 1, 0], // 23
    [1, 1, 0, 0, 1], // 24
    [1, 1, 1, 0, 0], // 25
    [1, 1, 1, 1, 0], // 26
    [0, 1, 1, 1, 1], // 27
    [1, 0, 1, 1, 1], // 28
    [1, 1, 0, 1, 1], // 29
    [1, 1, 1, 0, 1], // 30
    [1, 1, 1, 1, 1], // 31
];

/// Which coefficient vector a series was computed with: a row of the
/// canonical table, or an ad-hoc custom vector (numbered in the order
/// given on the command line).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CombinationId {
    Table(u8),
    Custom(u8),
}

impl CombinationId {
    /// Tag used in output file names: `c07` for table row 7, `custom1`
    /// for the first custom vector. Table tags are zero-padded so the
    /// files list in index order.
    pub fn file_tag(&self) -> String {
        match self {
            CombinationId::Table(index) => format!("c{index:02}"),
            CombinationId::Custom(ordinal) => format!("custom{ordinal}"),
        }
    }
}

impl fmt::Display for CombinationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombinationId::Table(index) => write!(f, "{index}"),
            CombinationId::Custom(_) => f.write_str("custom"),
        }
    }
}

/// A coefficient vector together with its identity, ready to evaluate
/// over a series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Combination {
    pub id: CombinationId,
    pub coefficients: CoefficientVector,
}

impl Combination {
    pub fn table(index: u8) -> Result<Self, MeasureError> {
        Ok(Combination {
            id: CombinationId::Table(index),
            coefficients: CoefficientVector::combination(index)?,
        })
    }

    pub fn custom(ordinal: u8, coefficients: CoefficientVector) -> Self {
        Combination { id: CombinationId::Custom(ordinal), coefficients }
    }

    /// All 31 table rows in index order.
    pub fn all_table() -> Vec<Combination> {
        (1..=31).map(|i| Combination::table(i).expect("indices 1..=31 are valid")).collect()
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn rejects_out_of_range_coefficients() {
        assert!(matches!(
            CoefficientVector::new(1.0, 0.5, -0.1, 0.0, 0.0),
            Err(MeasureError::CoefficientOutOfRange { name: "added_edges", .. })
        ));
        assert!(matches!(
            CoefficientVector::new(1.2, 0.0, 0.0, 0.0, 0.0),
            Err(MeasureError::CoefficientOutOfRange { name: "added_nodes", .. })
        ));
        assert!(matches!(
            CoefficientVector::new(0.0, 0.0, 0.0, 0.0, f64::NAN),
            Err(MeasureError::CoefficientOutOfRange { name: "modified_weights", .. })
        ));
        assert!(CoefficientVector::new(0.0, 1.0, 0.25, 0.5, 0.75).is_ok());
    }

    #[test]
    fn combination_table_covers_every_nonzero_binary_vector_once() {
        let rows = CoefficientVector::combinations();
        assert_eq!(rows.len(), 31);
        let mut seen = BTreeSet::new();
        for row in &rows {
            let mask: u32 = row.components().iter().fold(0, |acc, &c| {
                assert!(c == 0.0 || c == 1.0);
                (acc << 1) | (c as u32)
            });
            assert!(mask > 0, "all-zero row");
            assert!(seen.insert(mask), "duplicate row {mask:05b}");
        }
        assert_eq!(seen, (1..=31).collect());
    }

    #[test]
    fn combination_lookup_matches_the_table() {
        let seven = CoefficientVector::combination(7).unwrap();
        assert_eq!(seven.components(), [1.0, 0.0, 1.0, 0.0, 0.0]);
        let thirty_one = CoefficientVector::combination(31).unwrap();
        assert_eq!(thirty_one.components(), [1.0; 5]);
        assert_eq!(
            CoefficientVector::combination(0),
            Err(MeasureError::InvalidCombinationIndex(0))
        );
        assert_eq!(
            CoefficientVector::combination(32),
            Err(MeasureError::InvalidCombinationIndex(32))
        );
    }

    #[test]
    fn file_tags_sort_in_index_order() {
        let mut tags: Vec<String> = (1..=31).map(|i| CombinationId::Table(i).file_tag()).collect();
        let sorted = {
            let mut t = tags.clone();
            t.sort();
            t
        };
        assert_eq!(tags, sorted);
        assert_eq!(tags.remove(6), "c07");
        assert_eq!(CombinationId::Custom(2).file_tag(), "custom2");
    }

    #[test]
    fn combination_ids_order_table_rows_before_customs() {
        assert!(CombinationId::Table(31) < CombinationId::Custom(1));
        assert!(CombinationId::Table(2) < CombinationId::Table(10));
        assert_eq!(CombinationId::Table(7).to_string(), "7");
        assert_eq!(CombinationId::Custom(1).to_string(), "custom");
    }
}
