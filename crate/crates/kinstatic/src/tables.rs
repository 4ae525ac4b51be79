//! The massive and massless summary tables.
//!
//! Cells reproduce the source derivation's concluding tables in a
//! canonical ASCII rendering. Where the emitted text differs from the
//! printed text the cell carries the erratum id and keeps the printed
//! form alongside; the fixed-point class, which the original summary
//! omits, is appended with a note.

use serde::Serialize;

use crate::coadjoint::{ChartPoint, Orbit, OrbitClass};
use crate::error::{Error, Result};

/// One table cell: emitted text, and the printed text where it differs.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TableCell {
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<&'static str>,
}

impl TableCell {
    fn verbatim(text: &str) -> Self {
        Self {
            text: text.to_string(),
            printed: None,
            errata: Vec::new(),
        }
    }

    fn corrected(text: &str, printed: &str, erratum: &'static str) -> Self {
        Self {
            text: text.to_string(),
            printed: Some(printed.to_string()),
            errata: vec![erratum],
        }
    }

    pub fn is_corrected(&self) -> bool {
        !self.errata.is_empty()
    }
}

/// One row of a summary table.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub class: &'static str,
    pub realization: TableCell,
    pub motion: TableCell,
    pub hamiltonian: TableCell,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The two summary tables.
#[derive(Debug, Clone, Serialize)]
pub struct SummaryTables {
    pub massive: Vec<TableRow>,
    pub massless: Vec<TableRow>,
}

/// Build both tables with the documented corrections applied.
pub fn summary_tables() -> SummaryTables {
    let row = |class: &'static str,
               realization: TableCell,
               motion: TableCell,
               hamiltonian: TableCell,
               note: Option<String>| TableRow {
        class,
        realization,
        motion,
        hamiltonian,
        note,
    };

    let massive = vec![
        row(
            "ABS",
            TableCell::verbatim("psi(p+mv-ft, q-ut-x)"),
            TableCell::corrected("f = dp/dt, I = m dq/dt", "f = dp/dq, I = m dq/dt", "E3-b"),
            TableCell::verbatim("H = pu - fq"),
            None,
        ),
        row(
            "ASS",
            TableCell::verbatim("psi(p+mv-ft, q-x)"),
            TableCell::corrected("f = dp/dt, dq/dt = 0", "f = dp/dq, dq/dt = 0", "E3-b"),
            TableCell::verbatim("H = -fq"),
            None,
        ),
        row(
            "BFS_M",
            TableCell::verbatim("psi(p+mv, q-ut-x)"),
            TableCell::corrected("dp/dt = 0, I = m dq/dt", "dp/dq = 0, I = m dq/dt", "E3-b"),
            TableCell::verbatim("H = pu"),
            None,
        ),
        row(
            "FSS_M",
            TableCell::verbatim("psi(p+mv, q-x)"),
            TableCell::corrected("dp/dt = 0, dq/dt = 0", "dp/dq = 0, dq/dt = 0", "E3-b"),
            TableCell::verbatim("H = e"),
            None,
        ),
    ];

    let massless = vec![
        row(
            "BSF",
            TableCell::verbatim("psi(p-ft, q-v/omega-x)"),
            TableCell::corrected("f = dp/dt, dq/dt = 0", "f = dp/dq, dq/dt = 0", "E3-b"),
            TableCell::verbatim("H = -fq"),
            None,
        ),
        row(
            "SSF",
            TableCell::verbatim("psi(p-ft, q-x)"),
            TableCell::corrected("f = dp/dt, dq/dt = 0", "f = dp/dq, dq/dt = 0", "E3-b"),
            TableCell::verbatim("H = -fq"),
            None,
        ),
        row(
            "BFS_0",
            TableCell::verbatim("psi(e+Iv, tau-t)"),
            TableCell::corrected("de/dt = 0, dtau/dt = 1", "de/dt = 0, dtau/dt = 0", "E3-b"),
            TableCell::verbatim("H = e"),
            None,
        ),
        row(
            "FSS_0",
            TableCell::verbatim("trivial action"),
            TableCell::verbatim("fixed point"),
            TableCell::verbatim("-"),
            Some("appended: 0-dimensional orbit, omitted by the original summary".to_string()),
        ),
    ];

    SummaryTables { massive, massless }
}

/// A Hamiltonian string parsed into signed products of single-letter
/// symbols, e.g. `pu - fq` into +[p, u] and −[f, q].
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedHamiltonian {
    terms: Vec<(f64, Vec<char>)>,
}

/// Parse the right-hand side of an emitted Hamiltonian cell
/// (`H = <rhs>`); accepted symbols are p, q, u, f, e.
pub fn parse_hamiltonian(text: &str) -> Result<ParsedHamiltonian> {
    let rhs = text
        .strip_prefix("H =")
        .or_else(|| text.strip_prefix("H="))
        .unwrap_or(text)
        .trim();
    let mut terms = Vec::new();
    let mut sign = 1.0;
    let mut factors: Vec<char> = Vec::new();
    let mut flush = |sign: f64, factors: &mut Vec<char>| -> Result<()> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(format!(
                "empty term in hamiltonian `{text}`"
            )));
        }
        terms.push((sign, std::mem::take(factors)));
        Ok(())
    };
    for ch in rhs.chars() {
        match ch {
            ' ' => {}
            '+' | '-' => {
                if !factors.is_empty() {
                    flush(sign, &mut factors)?;
                }
                sign = if ch == '-' { -1.0 } else { 1.0 };
            }
            'p' | 'q' | 'u' | 'f' | 'e' => factors.push(ch),
            other => {
                return Err(Error::InvalidInput(format!(
                    "unexpected symbol `{other}` in hamiltonian `{text}`"
                )))
            }
        }
    }
    flush(sign, &mut factors)?;
    Ok(ParsedHamiltonian { terms })
}

impl ParsedHamiltonian {
    /// Evaluate at a chart point using the orbit's invariants for the
    /// symbolic coefficients.
    pub fn eval(&self, orbit: &Orbit, z: &ChartPoint) -> Result<f64> {
        let symbol = |ch: char| -> Result<f64> {
            match (ch, *z) {
                ('p', ChartPoint::Pq { p, .. }) => Ok(p),
                ('q', ChartPoint::Pq { q, .. }) => Ok(q),
                ('e', ChartPoint::ETau { e, .. }) => Ok(e),
                ('e', ChartPoint::Pq { .. }) => match *orbit {
                    // on (p, q) charts the energy symbol is the orbit's
                    // invariant energy
                    Orbit::FssM { e, .. } => Ok(e),
                    _ => Err(Error::InvalidInput(
                        "symbol `e` needs an invariant energy".into(),
                    )),
                },
                ('u', _) => orbit
                    .boost()
                    .ok_or_else(|| Error::InvalidInput("symbol `u` undefined here".into())),
                ('f', _) => {
                    let (_, f, _) = orbit.mfi();
                    Ok(f)
                }
                (other, _) => Err(Error::InvalidInput(format!(
                    "symbol `{other}` undefined on this chart"
                ))),
            }
        };
        let mut total = 0.0;
        for (sign, factors) in &self.terms {
            let mut product = *sign;
            for &ch in factors {
                product *= symbol(ch)?;
            }
            total += product;
        }
        Ok(total)
    }
}

/// Row lookup by orbit class across both tables.
pub fn row_for_class(tables: &SummaryTables, class: OrbitClass) -> Option<&TableRow> {
    tables
        .massive
        .iter()
        .chain(tables.massless.iter())
        .find(|row| row.class == class.as_str())
}

/// Render both tables as aligned plain text with erratum markers.
pub fn render_text(tables: &SummaryTables) -> String {
    let mut out = String::new();
    let render_one = |out: &mut String, title: &str, rows: &[TableRow]| {
        let headers = ["system", "realization", "motion equations", "hamiltonian"];
        let mut grid: Vec<[String; 4]> = Vec::new();
        for row in rows {
            let fmt_cell = |cell: &TableCell| {
                if cell.is_corrected() {
                    format!("{} [{}]", cell.text, cell.errata.join(","))
                } else {
                    cell.text.clone()
                }
            };
            grid.push([
                row.class.to_string(),
                fmt_cell(&row.realization),
                fmt_cell(&row.motion),
                fmt_cell(&row.hamiltonian),
            ]);
        }
        let mut widths = [0usize; 4];
        for col in 0..4 {
            widths[col] = headers[col]
                .len()
                .max(grid.iter().map(|r| r[col].len()).max().unwrap_or(0));
        }
        out.push_str(title);
        out.push('\n');
        let mut line = String::new();
        for col in 0..4 {
            line.push_str(&format!("{:width$}  ", headers[col], width = widths[col]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for (row, cells) in rows.iter().zip(&grid) {
            let mut line = String::new();
            for col in 0..4 {
                line.push_str(&format!("{:width$}  ", cells[col], width = widths[col]));
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if let Some(note) = &row.note {
                out.push_str(&format!("  note: {note}\n"));
            }
        }
    };
    render_one(&mut out, "massive systems", &tables.massive);
    out.push('\n');
    render_one(&mut out, "massless systems", &tables.massless);
    out.push('\n');
    out.push_str("errata applied:\n");
    let mut seen = Vec::new();
    for row in tables.massive.iter().chain(tables.massless.iter()) {
        for cell in [&row.realization, &row.motion, &row.hamiltonian] {
            for id in &cell.errata {
                if !seen.contains(id) {
                    seen.push(id);
                }
            }
        }
    }
    for id in seen {
        if let Some(e) = crate::errata::get(id) {
            out.push_str(&format!("  {}: {} -> {}\n", e.id, e.printed, e.corrected));
        }
    }
    out
}

/// Render both tables as CSV (one block per table, blank-line
/// separated); corrected cells carry a trailing erratum marker column.
pub fn render_csv(tables: &SummaryTables) -> String {
    let mut out = String::new();
    let render_one = |out: &mut String, title: &str, rows: &[TableRow]| {
        out.push_str(&format!("table,{title}\n"));
        out.push_str("system,realization,motion,hamiltonian,errata,note\n");
        for row in rows {
            let errata: Vec<&str> = [&row.realization, &row.motion, &row.hamiltonian]
                .iter()
                .flat_map(|c| c.errata.iter().copied())
                .collect();
            out.push_str(&format!(
                "{},\"{}\",\"{}\",\"{}\",{},{}\n",
                row.class,
                row.realization.text,
                row.motion.text,
                row.hamiltonian.text,
                errata.join(";"),
                row.note.as_deref().unwrap_or(""),
            ));
        }
    };
    render_one(&mut out, "massive", &tables.massive);
    out.push('\n');
    render_one(&mut out, "massless", &tables.massless);
    out
}
