//! Side-by-side comparison of exact and estimated energies, rendered as a
//! two-row table, CSV, or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::empirical::{e_star, EmpiricalModel};
use crate::error::{Error, Result};
use crate::exact::solve_spectrum;
use crate::well::DimensionlessWell;

/// Column order of the CSV output.
pub const CSV_HEADER: &str = "n,e_exact,e_star,delta,rel_err,marginal,star_exceeds_depth";

/// Depths of the three published comparison tables.
pub const PUBLISHED_DEPTHS: [f64; 3] = [15.0, 25.0, 64.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub e_exact: f64,
    pub e_star: f64,
    /// `e_star − e_exact`
    pub delta: f64,
    /// `delta / e_exact`
    pub rel_err: f64,
    /// The exact state sits at threshold (`η = 0`).
    pub marginal: bool,
    pub star_exceeds_depth: bool,
}

impl ComparisonRow {
    fn new(n: usize, e_exact: f64, e_star: f64, marginal: bool, v0: f64) -> Self {
        let delta = e_star - e_exact;
        Self {
            n,
            e_exact,
            e_star,
            delta,
            rel_err: delta / e_exact,
            marginal,
            star_exceeds_depth: e_star > v0,
        }
    }

    /// Whether `delta` and `rel_err` agree with the energies to `rel_tol`.
    pub fn is_consistent(&self, rel_tol: f64) -> bool {
        let delta = self.e_star - self.e_exact;
        let rel_err = delta / self.e_exact;
        let close = |a: f64, b: f64| (a - b).abs() <= rel_tol * a.abs().max(b.abs());
        close(self.delta, delta) && close(self.rel_err, rel_err)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub v0: f64,
    pub model: EmpiricalModel,
    pub rows: Vec<ComparisonRow>,
}

pub fn compare(well: &DimensionlessWell, model: &EmpiricalModel) -> Result<Comparison> {
    let spectrum = solve_spectrum(well)?;
    let rows = spectrum
        .states
        .iter()
        .map(|s| {
            Ok(ComparisonRow::new(
                s.n,
                s.energy,
                e_star(s.n, well, model)?,
                s.is_threshold(),
                well.v0(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Comparison {
        v0: well.v0(),
        model: *model,
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected table, csv or json)")),
        }
    }
}

pub fn render(comparison: &Comparison, format: Format) -> Result<String> {
    if comparison.rows.is_empty() {
        return Err(Error::EmptyRows);
    }
    match format {
        Format::Table => Ok(render_table(&comparison.rows)),
        Format::Csv => render_csv(&comparison.rows),
        Format::Json => {
            let mut text = serde_json::to_string_pretty(comparison).map_err(|e| Error::Serialize(e.to_string()))?;
            text.push('\n');
            Ok(text)
        }
    }
}

/// Fixed-point with ties to even on the exact binary value.
pub fn round_half_even(value: f64, decimals: usize) -> String {
    format!("{value:.decimals$}")
}

/// Layout of the published tables: a row of `n`, then `E'_n`, then `E*_n`.
fn render_table(rows: &[ComparisonRow]) -> String {
    let labels = ["n", "E'_n", "E*_n"];
    let cells: Vec<[String; 3]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                round_half_even(r.e_exact, 4),
                round_half_even(r.e_star, 4),
            ]
        })
        .collect();
    let label_width = labels.iter().map(|l| l.len()).max().unwrap_or(0);

    let mut out = String::new();
    for (line, label) in labels.iter().enumerate() {
        let _ = write!(out, "{label:<label_width$}");
        for column in &cells {
            let width = column.iter().map(String::len).max().unwrap_or(0);
            let _ = write!(out, "  {:>width$}", column[line]);
        }
        out.push('\n');
    }
    out
}

fn render_csv(rows: &[ComparisonRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).map_err(|e| Error::Serialize(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
}

/// Read rows back from [`Format::Csv`] output.
pub fn parse_csv(text: &str) -> Result<Vec<ComparisonRow>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<ComparisonRow>, _>>()
        .map_err(|e| Error::Serialize(e.to_string()))
}
