//! Dimension tables as plain text, CSV, JSON or LaTeX.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::contributions::{fraction_string, ContributionBreakdown, Formula, Weight};
use crate::dimension::{DimensionResult, Validity};
use crate::error::Result;
use crate::level::Level;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "plain" | "text" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" | "tex" => Ok(Format::Latex),
            other => Err(format!(
                "unknown format {other:?} (expected plain, csv, json or latex)"
            )),
        }
    }
}

/// Parses `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let bad = |_| format!("invalid range {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b): (u32, u32) = (
                a.trim().parse().map_err(bad)?,
                b.trim().parse().map_err(bad)?,
            );
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => {
            let v: u32 = s.trim().parse().map_err(bad)?;
            Ok(v..=v)
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableRequest {
    pub level: Level,
    pub k: RangeInclusive<u32>,
    pub j: RangeInclusive<u32>,
    pub format: Format,
    pub breakdown: bool,
}

#[derive(Serialize)]
struct JsonCell<'a> {
    d1: u64,
    d2: u64,
    k: u32,
    j: u32,
    dim: serde_json::Value,
    validity: Validity,
    #[serde(skip_serializing_if = "Option::is_none")]
    breakdown: Option<&'a ContributionBreakdown>,
}

/// The `j` rows of a table: a single value as given, otherwise only the even
/// values of the range, since odd `j` rows are identically zero.
pub fn j_rows(j: RangeInclusive<u32>) -> Vec<u32> {
    if j.start() == j.end() {
        return vec![*j.start()];
    }
    j.filter(|j| j % 2 == 0).collect()
}

/// Evaluates every cell, rows by `j` and columns by `k`.
pub fn compute_grid(
    formula: &Formula,
    level: &Level,
    k: RangeInclusive<u32>,
    j: RangeInclusive<u32>,
) -> Result<Vec<Vec<DimensionResult>>> {
    let js = j_rows(j);
    let ks: Vec<u32> = k.collect();
    js.par_iter()
        .map(|&j| {
            ks.iter()
                .map(|&k| formula.dimension(Weight::new(k, j), level))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

pub fn render(formula: &Formula, req: &TableRequest) -> Result<String> {
    let grid = compute_grid(formula, &req.level, req.k.clone(), req.j.clone())?;
    Ok(match req.format {
        Format::Plain => plain(req, &grid),
        Format::Csv => csv(req, &grid),
        Format::Json => json(req, &grid),
        Format::Latex => latex(req, &grid),
    })
}

fn plain(req: &TableRequest, grid: &[Vec<DimensionResult>]) -> String {
    let cells: Vec<Vec<String>> = grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| match c.validity {
                    Validity::Proven => c.dimension.to_string(),
                    Validity::Formal => format!("{}*", c.dimension),
                })
                .collect()
        })
        .collect();
    let ks: Vec<u32> = req.k.clone().collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain(ks.iter().map(|k| k.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut out = format!("{}\n{:>4}", req.level, "j\\k");
    for k in &ks {
        let _ = write!(out, " {k:>width$}");
    }
    out.push('\n');
    for (row, j) in cells.iter().zip(j_rows(req.j.clone())) {
        let _ = write!(out, "{j:>4}");
        for c in row {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    }
    if grid
        .iter()
        .flatten()
        .any(|c| c.validity == Validity::Formal)
    {
        out.push_str("* formal (k <= 4)\n");
    }
    if req.breakdown {
        for c in grid.iter().flatten() {
            let _ = writeln!(out, "{} {}", c.weight, c.breakdown);
        }
    }
    out
}

fn csv(req: &TableRequest, grid: &[Vec<DimensionResult>]) -> String {
    let mut out = String::from("d1,d2,k,j,dim,validity");
    if req.breakdown {
        for name in crate::contributions::TERM_NAMES {
            out.push(',');
            out.push_str(name);
        }
        out.push_str(",total");
    }
    out.push('\n');
    for c in grid.iter().flatten() {
        let _ = write!(
            out,
            "{},{},{},{},{},{}",
            req.level.d1_value(),
            req.level.d2_value(),
            c.weight.k,
            c.weight.j,
            c.dimension,
            c.validity
        );
        if req.breakdown {
            for (_, v) in c.breakdown.terms() {
                let _ = write!(out, ",{}", fraction_string(v));
            }
            let _ = write!(out, ",{}", fraction_string(&c.breakdown.total));
        }
        out.push('\n');
    }
    out
}

fn json(req: &TableRequest, grid: &[Vec<DimensionResult>]) -> String {
    let cells: Vec<JsonCell> = grid
        .iter()
        .flatten()
        .map(|c| JsonCell {
            d1: req.level.d1_value(),
            d2: req.level.d2_value(),
            k: c.weight.k,
            j: c.weight.j,
            dim: c
                .dimension
                .to_string()
                .parse()
                .expect("an integer is valid JSON"),
            validity: c.validity,
            breakdown: req.breakdown.then_some(&c.breakdown),
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&cells).expect("serializable");
    out.push('\n');
    out
}

fn latex(req: &TableRequest, grid: &[Vec<DimensionResult>]) -> String {
    let ks: Vec<u32> = req.k.clone().collect();
    let mut columns = String::from("|c|");
    for &k in &ks {
        columns.push('c');
        if k == 4 && ks.last() != Some(&4) {
            columns.push('|');
        }
    }
    columns.push('|');
    let mut out = format!("\\begin{{tabular}}{{{columns}}} \\hline\n$j\\backslash k$");
    for k in &ks {
        let _ = write!(out, " &{k}");
    }
    out.push_str("\\\\ \\hline\n");
    for row in grid {
        let j = row.first().map(|c| c.weight.j).unwrap_or_default();
        let _ = write!(out, "{j}");
        for c in row {
            let _ = write!(out, "&{}", c.dimension);
        }
        out.push_str("\\\\ \\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}
