//! The three published classification tables, as fixtures, together with
//! their recomputation by the engine and markdown/CSV rendering.

use serde::Serialize;

use crate::base::IncidenceBase;
use crate::closed_forms::{p1s, p2s, p3s, ClosedFormRecord, DirectrixCount};
use crate::error::{Result, ScrollError};
use crate::scroll::{directrix_degree, Engine};

/// One printed row, with the family parameters that generate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub table: u8,
    /// `(d, g, n)` from the printed label `R^d_g in P^n`.
    pub label: (i64, i64, u32),
    /// Printed multiplicities per base-space dimension.
    pub printed: Vec<(u32, u32)>,
    pub starred: bool,
    /// Printed degree of the distinguished directrix, where the table has one.
    pub printed_directrix: Option<i64>,
    /// The minimum-directrix column, verbatim in plain text.
    pub min_directrix: Option<&'static str>,
    /// Printed normalized bundle and `deg(b)` (directrix-line table only).
    pub normalized: Option<String>,
    pub printed_deg_b: Option<u32>,
    pub record: ClosedFormRecord,
    pub note: Option<&'static str>,
}

impl TableRow {
    pub fn printed_base(&self) -> IncidenceBase {
        let dims: Vec<u32> = self
            .printed
            .iter()
            .flat_map(|&(d, c)| std::iter::repeat_n(d, c as usize))
            .collect();
        IncidenceBase::new(self.label.2, dims).expect("fixture bases are valid")
    }

    pub fn label_text(&self) -> String {
        format!(
            "R^{}_{} in P^{}{}",
            self.label.0,
            self.label.1,
            self.label.2,
            if self.starred { " *" } else { "" }
        )
    }
}

const R10_3_NOTE: &str =
    "printed directrix C^5_3; the Schubert product w(2,6) w(2,6) w(3,6) w(4,6)^4 and the \
closed form C(n-i-2j, 2) + i + j - 1 both give 6";

fn row(
    table: u8,
    label: (i64, i64, u32),
    printed: &[(u32, u32)],
    starred: bool,
    printed_directrix: Option<i64>,
    min_directrix: Option<&'static str>,
    record: ClosedFormRecord,
) -> TableRow {
    TableRow {
        table,
        label,
        printed: printed.to_vec(),
        starred,
        printed_directrix,
        min_directrix,
        normalized: None,
        printed_deg_b: None,
        record,
        note: None,
    }
}

fn line_table() -> Result<Vec<TableRow>> {
    (3..=9)
        .map(|n| {
            let mut r = row(
                1,
                (n as i64 - 1, 0, n),
                &if n == 3 {
                    vec![(1, 3)]
                } else {
                    vec![(1, 1), (n - 2, n - 1)]
                },
                false,
                Some(1),
                Some(if n == 3 { "P^1 (inf^1)" } else { "P^1 (1)" }),
                p1s(n)?,
            );
            r.normalized = Some(if n == 3 {
                "O + O".to_string()
            } else {
                format!("O + O(-{})", n - 3)
            });
            r.printed_deg_b = Some(n - 2);
            Ok(r)
        })
        .collect()
}

fn plane_table() -> Result<Vec<TableRow>> {
    type Spec = (
        (i64, i64, u32),
        &'static [(u32, u32)],
        bool,
        Option<i64>,
        &'static str,
        (u32, u32),
    );
    const ROWS: &[Spec] = &[
        // genus 0
        ((2, 0, 3), &[(1, 3)], false, None, "P^1 (inf^1)", (4, 2)),
        ((3, 0, 4), &[(1, 1), (2, 3)], false, None, "P^1 (1)", (4, 1)),
        (
            (4, 0, 5),
            &[(2, 3), (3, 1)],
            false,
            Some(2),
            "C^2_0 in P^2 (inf^1)",
            (5, 2),
        ),
        (
            (5, 0, 6),
            &[(2, 1), (3, 3)],
            false,
            Some(2),
            "C^2_0 in P^2 (1)",
            (6, 3),
        ),
        // genus 1
        (
            (5, 1, 4),
            &[(2, 5)],
            false,
            Some(3),
            "C^3_1 in P^2 (inf^1)",
            (4, 0),
        ),
        (
            (6, 1, 5),
            &[(2, 2), (3, 3)],
            false,
            Some(3),
            "C^3_1 in P^2 (2)",
            (5, 1),
        ),
        (
            (7, 1, 6),
            &[(2, 1), (3, 2), (4, 2)],
            false,
            Some(3),
            "C^3_1 in P^2 (1)",
            (6, 2),
        ),
        (
            (8, 1, 7),
            &[(2, 1), (4, 3), (5, 1)],
            false,
            Some(3),
            "C^3_1 in P^2 (1)",
            (7, 3),
        ),
        (
            (9, 1, 8),
            &[(2, 1), (5, 4)],
            false,
            Some(3),
            "C^3_1 in P^2 (1)",
            (8, 4),
        ),
        // genus 3
        (
            (9, 3, 5),
            &[(2, 1), (3, 5)],
            true,
            Some(4),
            "C^4_3 in P^2 (1)",
            (5, 0),
        ),
        (
            (10, 3, 6),
            &[(2, 1), (3, 1), (4, 4)],
            true,
            Some(4),
            "C^4_3 in P^2 (1)",
            (6, 1),
        ),
        (
            (11, 3, 7),
            &[(2, 1), (4, 2), (5, 3)],
            true,
            Some(4),
            "C^4_3 in P^2 (1)",
            (7, 2),
        ),
        (
            (12, 3, 8),
            &[(2, 1), (5, 3), (6, 2)],
            true,
            Some(4),
            "C^4_3 in P^2 (1)",
            (8, 3),
        ),
        (
            (13, 3, 9),
            &[(2, 1), (6, 4), (7, 1)],
            true,
            Some(4),
            "C^4_3 in P^2 (1)",
            (9, 4),
        ),
        (
            (14, 3, 10),
            &[(2, 1), (7, 5)],
            true,
            Some(4),
            "C^4_3 in P^2 (1)",
            (10, 5),
        ),
    ];
    ROWS.iter()
        .map(|&(label, printed, starred, dir, min_dir, (n, i))| {
            Ok(row(
                2,
                label,
                printed,
                starred,
                dir,
                Some(min_dir),
                p2s(n, i)?,
            ))
        })
        .collect()
}

fn solid_table() -> Result<Vec<TableRow>> {
    type Spec = (
        (i64, i64, u32),
        &'static [(u32, u32)],
        bool,
        i64,
        (u32, u32, u32),
    );
    const ROWS: &[Spec] = &[
        ((14, 8, 5), &[(3, 7)], true, 9, (5, 0, 0)),
        ((5, 0, 6), &[(2, 1), (3, 3)], false, 3, (6, 1, 2)),
        ((7, 1, 6), &[(2, 1), (3, 2), (4, 2)], false, 4, (6, 1, 1)),
        ((10, 3, 6), &[(2, 1), (3, 1), (4, 4)], true, 5, (6, 1, 0)),
        ((9, 2, 6), &[(3, 4), (4, 1)], false, 5, (6, 0, 3)),
        ((13, 5, 6), &[(3, 3), (4, 3)], true, 7, (6, 0, 2)),
        ((19, 11, 6), &[(3, 2), (4, 5)], true, 10, (6, 0, 1)),
        ((28, 22, 6), &[(3, 1), (4, 7)], true, 14, (6, 0, 0)),
        ((6, 0, 7), &[(3, 3), (4, 1)], false, 3, (7, 2, 1)),
        ((8, 1, 7), &[(3, 3), (5, 2)], false, 4, (7, 2, 0)),
        ((10, 2, 7), &[(3, 2), (4, 2), (5, 1)], false, 5, (7, 1, 2)),
        ((14, 5, 7), &[(3, 2), (4, 1), (5, 3)], true, 7, (7, 1, 1)),
        ((20, 11, 7), &[(3, 2), (5, 5)], true, 10, (7, 1, 0)),
        ((12, 3, 7), &[(3, 1), (4, 4)], false, 6, (7, 0, 4)),
    ];
    ROWS.iter()
        .map(|&(label, printed, starred, dir, (n, j, i))| {
            let mut r = row(3, label, printed, starred, Some(dir), None, p3s(n, j, i)?);
            if label == (10, 3, 6) {
                r.note = Some(R10_3_NOTE);
            }
            Ok(r)
        })
        .collect()
}

/// Rows of table `id` (1: directrix line, 2: base plane, 3: base three-space).
pub fn table(id: u8) -> Result<Vec<TableRow>> {
    match id {
        1 => line_table(),
        2 => plane_table(),
        3 => solid_table(),
        _ => Err(ScrollError::Domain(format!(
            "no table {id}; expected 1, 2 or 3"
        ))),
    }
}

/// A printed or closed-form value that disagrees with the engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deviation {
    pub field: &'static str,
    pub source: &'static str,
    pub expected: String,
    pub computed: String,
}

/// Engine recomputation of one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub degree: i64,
    pub genus: i64,
    pub span: u32,
    pub directrix: i64,
    pub h1: i64,
    pub special: bool,
    pub deviations: Vec<Deviation>,
}

impl RowCheck {
    pub fn confirmed(&self) -> bool {
        self.deviations.is_empty()
    }
}

/// Recompute a row from its printed base and compare against every printed
/// and closed-form value.
pub fn check_row(engine: &Engine, row: &TableRow) -> Result<RowCheck> {
    let printed = row.printed_base();
    let report = engine.classify(&printed, false)?;
    let record = &row.record;
    // the distinguished space may vanish from a restricted base, so the
    // directrix is read off the family base
    let directrix = directrix_degree(&record.base, record.directrix_position())?;

    let mut deviations = Vec::new();
    let mut compare = |field, source, expected: String, computed: String| {
        if expected != computed {
            deviations.push(Deviation {
                field,
                source,
                expected,
                computed,
            });
        }
    };
    compare(
        "base",
        "closed form",
        record.effective_base().to_string(),
        printed.to_string(),
    );
    compare(
        "ambient",
        "printed",
        row.label.2.to_string(),
        report.span.to_string(),
    );
    compare(
        "degree",
        "printed",
        row.label.0.to_string(),
        report.degree.to_string(),
    );
    compare(
        "degree",
        "closed form",
        record.degree.to_string(),
        report.degree.to_string(),
    );
    compare(
        "genus",
        "printed",
        row.label.1.to_string(),
        report.genus.to_string(),
    );
    compare(
        "genus",
        "closed form",
        record.genus.to_string(),
        report.genus.to_string(),
    );
    compare(
        "star",
        "printed",
        row.starred.to_string(),
        report.special.to_string(),
    );
    compare(
        "directrix",
        "closed form",
        record.directrix_degree.to_string(),
        directrix.to_string(),
    );
    if let Some(d) = row.printed_directrix {
        compare("directrix", "printed", d.to_string(), directrix.to_string());
    }
    if let (Some(x), Some(deg_b)) = (record.extras, row.printed_deg_b) {
        compare("deg_b", "printed", deg_b.to_string(), x.deg_b.to_string());
        let printed_e = if x.e == 0 {
            "O + O".to_string()
        } else {
            format!("O + O(-{})", x.e)
        };
        compare(
            "normalized",
            "printed",
            row.normalized.clone().unwrap_or_default(),
            printed_e,
        );
        let count = match x.min_directrix_count {
            DirectrixCount::Infinite => "inf^1".to_string(),
            DirectrixCount::Finite(c) => c.to_string(),
        };
        compare(
            "min_directrix",
            "printed",
            row.min_directrix.unwrap_or_default().to_string(),
            format!("P^1 ({count})"),
        );
    }

    Ok(RowCheck {
        degree: report.degree,
        genus: report.genus,
        span: report.span,
        directrix,
        h1: report.h1,
        special: report.special,
        deviations,
    })
}

/// Output layout for [`render_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
}

fn dim_columns(id: u8) -> Vec<u32> {
    match id {
        3 => (2..=5).collect(),
        _ => (1..=7).collect(),
    }
}

fn directrix_text(row: &TableRow) -> String {
    match row.table {
        1 => "P^1".to_string(),
        2 => row.min_directrix.unwrap_or_default().to_string(),
        _ => format!(
            "C^{}_{} in P^3",
            row.printed_directrix.unwrap_or_default(),
            row.label.1
        ),
    }
}

/// Printed columns next to the engine's recomputation, one line per row.
pub fn render_table(id: u8, rows: &[(TableRow, RowCheck)], format: TableFormat) -> String {
    let dims = dim_columns(id);
    let mut header: Vec<String> = vec!["scroll".into()];
    header.extend(dims.iter().map(|d| format!("P^{d}")));
    header.push("directrix".into());
    if id == 1 {
        header.extend(["normalized".into(), "deg(b)".into()]);
    }
    header.extend([
        "star".into(),
        "engine".into(),
        "engine directrix".into(),
        "h1".into(),
        "status".into(),
    ]);

    let mut lines: Vec<Vec<String>> = Vec::new();
    for (row, check) in rows {
        let mut cells = vec![row.label_text()];
        for d in &dims {
            let count = row
                .printed
                .iter()
                .find(|&&(dim, _)| dim == *d)
                .map_or("-".to_string(), |&(_, c)| c.to_string());
            cells.push(count);
        }
        cells.push(directrix_text(row));
        if id == 1 {
            cells.push(row.normalized.clone().unwrap_or_default());
            cells.push(row.printed_deg_b.map_or(String::new(), |d| d.to_string()));
        }
        cells.push(if row.starred {
            "*".into()
        } else {
            String::new()
        });
        cells.push(format!(
            "R^{}_{} in P^{}{}",
            check.degree,
            check.genus,
            check.span,
            if check.special { " *" } else { "" }
        ));
        cells.push(check.directrix.to_string());
        cells.push(check.h1.to_string());
        cells.push(if check.confirmed() {
            "ok".to_string()
        } else {
            let parts: Vec<String> = check
                .deviations
                .iter()
                .map(|d| {
                    format!(
                        "DEVIATION {} ({}): {} vs engine {}",
                        d.field, d.source, d.expected, d.computed
                    )
                })
                .collect();
            parts.join("; ")
        });
        lines.push(cells);
    }

    let mut out = String::new();
    match format {
        TableFormat::Markdown => {
            out.push_str(&format!("| {} |\n", header.join(" | ")));
            out.push_str(&format!(
                "|{}\n",
                header.iter().map(|_| "---|").collect::<String>()
            ));
            for cells in &lines {
                out.push_str(&format!("| {} |\n", cells.join(" | ")));
            }
        }
        TableFormat::Csv => {
            out.push_str(&csv_line(&header));
            for cells in &lines {
                out.push_str(&csv_line(cells));
            }
        }
    }
    out
}

fn csv_line(cells: &[String]) -> String {
    let quoted: Vec<String> = cells
        .iter()
        .map(|c| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect();
    format!("{}\n", quoted.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts_and_stars() {
        let t1 = table(1).unwrap();
        assert_eq!(t1.len(), 7);
        assert_eq!(
            t1.iter().map(|r| r.label.0).collect::<Vec<_>>(),
            (2..=8).collect::<Vec<_>>()
        );
        let t2 = table(2).unwrap();
        assert_eq!(t2.len(), 15);
        assert_eq!(t2.iter().filter(|r| r.starred).count(), 6);
        let t3 = table(3).unwrap();
        assert_eq!(t3.len(), 14);
        assert_eq!(t3.iter().filter(|r| r.starred).count(), 7);
        assert!(table(4).is_err());
    }

    #[test]
    fn printed_bases_satisfy_the_incidence_condition() {
        for id in 1..=3 {
            for row in table(id).unwrap() {
                assert!(
                    crate::base::satisfies_is(&row.printed_base()),
                    "{}",
                    row.label_text()
                );
            }
        }
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(csv_line(&["a,b".into(), "c".into()]), "\"a,b\",c\n");
    }
}
