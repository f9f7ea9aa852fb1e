//! The twelve published tables of `dim S_{k,j}` for `0 <= k <= 15`,
//! `j ∈ {0,2,4,6,8}`, embedded as CSV and checked against [`Formula`].

use num_bigint::BigInt;

use crate::contributions::{ContributionBreakdown, Formula, Weight};
use crate::error::Error;
use crate::level::Level;

const GOLDEN_CSV: &str = include_str!("../data/golden.csv");

pub const K_VALUES: std::ops::RangeInclusive<u32> = 0..=15;
pub const J_VALUES: [u32; 5] = [0, 2, 4, 6, 8];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenCell {
    pub d1: u64,
    pub d2: u64,
    pub k: u32,
    pub j: u32,
    pub value: i64,
}

/// One published table, `values[j_index][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTable {
    pub d1: u64,
    pub d2: u64,
    pub values: [[i64; 16]; 5],
}

impl GoldenTable {
    pub fn level(&self) -> Level {
        Level::new(self.d1, self.d2).expect("golden levels are valid")
    }

    pub fn get(&self, k: u32, j: u32) -> Option<i64> {
        let row = J_VALUES.iter().position(|&x| x == j)?;
        self.values[row].get(k as usize).copied()
    }
}

/// Every cell, in file order.
pub fn cells() -> Vec<GoldenCell> {
    GOLDEN_CSV
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.trim().split(',').collect();
            assert_eq!(f.len(), 5, "bad golden row {line:?}");
            GoldenCell {
                d1: f[0].parse().expect("d1"),
                d2: f[1].parse().expect("d2"),
                j: f[2].parse().expect("j"),
                k: f[3].parse().expect("k"),
                value: f[4].parse().expect("value"),
            }
        })
        .collect()
}

/// The tables in publication order.
pub fn tables() -> Vec<GoldenTable> {
    let mut out: Vec<GoldenTable> = Vec::new();
    for c in cells() {
        let pos = match out.iter().position(|t| (t.d1, t.d2) == (c.d1, c.d2)) {
            Some(i) => i,
            None => {
                out.push(GoldenTable {
                    d1: c.d1,
                    d2: c.d2,
                    values: [[i64::MIN; 16]; 5],
                });
                out.len() - 1
            }
        };
        let row = J_VALUES.iter().position(|&x| x == c.j).expect("j in table");
        out[pos].values[row][c.k as usize] = c.value;
    }
    out
}

#[derive(Clone, Debug)]
pub struct GoldenMismatch {
    pub cell: GoldenCell,
    pub got: Result<BigInt, Error>,
    pub breakdown: Option<ContributionBreakdown>,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checked: usize,
    pub mismatches: Vec<GoldenMismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.mismatches.is_empty()
    }
}

/// Recomputes every golden cell with `formula`.
pub fn verify(formula: &Formula) -> VerifyReport {
    let mut report = VerifyReport::default();
    for cell in cells() {
        let level = Level::new(cell.d1, cell.d2).expect("golden levels are valid");
        let w = Weight::new(cell.k, cell.j);
        report.checked += 1;
        match formula.dimension(w, &level) {
            Ok(res) if res.dimension == BigInt::from(cell.value) => {}
            Ok(res) => report.mismatches.push(GoldenMismatch {
                cell,
                got: Ok(res.dimension),
                breakdown: Some(res.breakdown),
            }),
            Err(e) => report.mismatches.push(GoldenMismatch {
                cell,
                got: Err(e),
                breakdown: formula.breakdown(w, &level).ok(),
            }),
        }
    }
    report
}
