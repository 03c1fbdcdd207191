//! Cell-by-cell comparison of the computed classification with the
//! reference tables.

use std::fmt;

use serde::Serialize;

use crate::catalog::Catalog;
use crate::classify::{enumerate_finite, enumerate_generic, enumerate_infinite, fibers_label, ClassifyError};
use crate::golden;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Match,
    Mismatch,
    /// The reference cell contradicts the Euler-number count of its own row
    /// and the computed value is the consistent one.
    Erratum,
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellStatus::Match => "PASS",
            CellStatus::Mismatch => "FAIL",
            CellStatus::Erratum => "ERRATUM",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub column: &'static str,
    pub reference: String,
    pub computed: String,
    pub status: CellStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowComparison {
    pub class: String,
    pub cells: Vec<Cell>,
}

impl RowComparison {
    pub fn status(&self) -> CellStatus {
        if self.cells.iter().any(|c| c.status == CellStatus::Mismatch) {
            CellStatus::Mismatch
        } else if self.cells.iter().any(|c| c.status == CellStatus::Erratum) {
            CellStatus::Erratum
        } else {
            CellStatus::Match
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub name: &'static str,
    pub rows: Vec<RowComparison>,
    /// Computed rows with no reference counterpart, or reference rows that
    /// were not computed.
    pub unmatched: Vec<String>,
}

impl TableComparison {
    pub fn cells(&self) -> impl Iterator<Item = (&str, &Cell)> {
        self.rows.iter().flat_map(|r| r.cells.iter().map(move |c| (r.class.as_str(), c)))
    }

    pub fn mismatches(&self) -> usize {
        self.cells().filter(|(_, c)| c.status == CellStatus::Mismatch).count() + self.unmatched.len()
    }

    /// `(class, column)` of every erratum cell.
    pub fn errata(&self) -> Vec<(String, &'static str)> {
        self.cells()
            .filter(|(_, c)| c.status == CellStatus::Erratum)
            .map(|(r, c)| (r.to_string(), c.column))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TablesReport {
    pub tables: Vec<TableComparison>,
}

impl TablesReport {
    /// No mismatches; certified errata are allowed.
    pub fn passed(&self) -> bool {
        self.tables.iter().all(|t| t.mismatches() == 0)
    }

    pub fn table(&self, name: &str) -> Option<&TableComparison> {
        self.tables.iter().find(|t| t.name == name)
    }
}

fn cell(column: &'static str, reference: impl ToString, computed: impl ToString) -> Cell {
    let (reference, computed) = (reference.to_string(), computed.to_string());
    let status = if reference == computed { CellStatus::Match } else { CellStatus::Mismatch };
    Cell { column, reference, computed, status }
}

/// A numeric cell whose reference value may be a certified erratum:
/// `consistent` is what the row's own configuration forces.
fn checked_cell(column: &'static str, reference: u32, computed: u32, consistent: u32) -> Cell {
    let status = if reference == computed {
        CellStatus::Match
    } else if reference != consistent && computed == consistent {
        CellStatus::Erratum
    } else {
        CellStatus::Mismatch
    };
    Cell { column, reference: reference.to_string(), computed: computed.to_string(), status }
}

fn opt(v: Option<u32>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

pub const POSITIVE_RANK_TABLE: &str = "positive rank";
pub const FINITE_TABLE: &str = "finite";
pub const GENERAL_TABLE: &str = "general position";

/// Compares all three computed tables with the reference values.
pub fn compare_tables(catalog: &Catalog) -> Result<TablesReport, ClassifyError> {
    let infinite = enumerate_infinite();
    let finite = enumerate_finite(catalog)?;
    let generic = enumerate_generic(&finite, &infinite);

    let mut pos = TableComparison { name: POSITIVE_RANK_TABLE, rows: Vec::new(), unmatched: Vec::new() };
    for g in &golden::POSITIVE_RANK {
        match infinite.iter().find(|r| r.class.as_deref() == Some(g.class)) {
            Some(r) => pos.rows.push(RowComparison {
                class: g.class.into(),
                cells: vec![
                    cell("fibers", fibers_label(g.fibers), r.fibers_label()),
                    cell("2a+b", g.euler_small, r.euler_residual),
                    cell("MW rank", g.mw_rank, r.mw_rank),
                ],
            }),
            None => pos.unmatched.push(format!("reference {} not computed", g.class)),
        }
    }
    pos.unmatched.extend(infinite.iter().filter(|r| r.class.is_none()).map(|r| format!("extra {}", r.fibers_label())));

    let mut fin = TableComparison { name: FINITE_TABLE, rows: Vec::new(), unmatched: Vec::new() };
    for g in &golden::FINITE {
        match finite.iter().find(|r| r.class.as_deref() == Some(g.class)) {
            Some(r) => fin.rows.push(RowComparison {
                class: g.class.into(),
                cells: vec![
                    cell("fibers", fibers_label(g.fibers), r.fibers_label()),
                    cell("MW", g.mw_group, r.mw_group_label.as_deref().unwrap_or("-")),
                    checked_cell("iii+i2", g.slack, r.slack_iii_i2, g.picard_slack()),
                    checked_cell("3iii+2i2+2ii+i1", g.residual, r.euler_residual, g.noether_residual()),
                ],
            }),
            None => fin.unmatched.push(format!("reference {} not computed", g.class)),
        }
    }

    let mut gen = TableComparison { name: GENERAL_TABLE, rows: Vec::new(), unmatched: Vec::new() };
    for g in &golden::FINITE_GENERAL {
        match generic.iter().find(|r| r.class.as_deref() == Some(g.class)) {
            Some(r) => {
                let i1 = r.generic_i1;
                let cells = vec![
                    cell("fibers", fibers_label(g.fibers), r.fibers_label()),
                    cell("MW", g.mw_group, r.mw_group_label.as_deref().unwrap_or("-")),
                    cell("i2", g.i2, opt(r.generic_i2)),
                    match (i1, g.noether_i1()) {
                        (Some(c), Some(n)) => checked_cell("i1", g.i1, c, n),
                        _ => cell("i1", g.i1, opt(i1)),
                    },
                ];
                gen.rows.push(RowComparison { class: g.class.into(), cells });
            }
            None => gen.unmatched.push(format!("reference {} not computed", g.class)),
        }
    }

    Ok(TablesReport { tables: vec![pos, fin, gen] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_catalog;

    #[test]
    fn only_certified_errata_differ() {
        let rep = compare_tables(&build_catalog(true)).unwrap();
        assert!(rep.passed());
        assert!(rep.table(POSITIVE_RANK_TABLE).unwrap().errata().is_empty());
        let e = |n| rep.table(n).unwrap().errata();
        assert_eq!(
            e(FINITE_TABLE),
            [("2.8".to_string(), "3iii+2i2+2ii+i1"), ("2.10".to_string(), "3iii+2i2+2ii+i1")]
        );
        assert_eq!(e(GENERAL_TABLE), [("2.8".to_string(), "i1"), ("2.10".to_string(), "i1")]);
    }

    #[test]
    fn checked_cell_statuses() {
        assert_eq!(checked_cell("x", 8, 8, 10).status, CellStatus::Match);
        assert_eq!(checked_cell("x", 8, 10, 10).status, CellStatus::Erratum);
        assert_eq!(checked_cell("x", 8, 9, 10).status, CellStatus::Mismatch);
        assert_eq!(checked_cell("x", 10, 9, 10).status, CellStatus::Mismatch);
    }
}
