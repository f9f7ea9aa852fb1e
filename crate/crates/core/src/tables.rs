//! Literal case tables of the dimension formula, kept in one place.
//!
//! Every periodic row is stored as `[a_0, ..., a_{m-1}]` and read at
//! `n mod m`. Fractional table entries are stored as numerators over a
//! common denominator (noted per table). [`TRANSCRIPTION_SHA256`] is the
//! SHA-256 of [`canonical_dump`]; the unit test below recomputes it, so any
//! edit to a table has to update the checksum deliberately.

/// SHA-256 of [`canonical_dump`].
pub const TRANSCRIPTION_SHA256: &str =
    "e61da13c0e5fbb444b9e9ab852d92d1a2d047da46c6fefb7d86c0052a1541683";

/// `C₁` rows for `j ≡ 0, 2, 4, 6, 8, 10 (mod 12)`, indexed by `k mod 12`.
pub const C1: [[i64; 12]; 6] = [
    [1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1, 1],
    [-1, 1, 0, 1, 1, 0, 1, -1, 0, -1, -1, 0],
    [1, -1, 0, 0, -1, 1, -1, 1, 0, 0, 1, -1],
    [-1, 0, 0, -1, 1, -1, 1, 0, 0, 1, -1, 1],
    [1, 1, 0, 1, -1, 0, -1, -1, 0, -1, 1, 0],
    [-1, -1, 0, 0, 1, 1, 1, 1, 0, 0, -1, -1],
];

/// `C₂` rows for `j ≡ 0, 2, 4 (mod 6)`, indexed by `k mod 6`.
pub const C2: [[i64; 6]; 3] = [
    [1, 0, 0, -1, 0, 0],
    [-1, 1, 0, 1, -1, 0],
    [0, -1, 0, 0, 1, 0],
];

/// `C₃` rows for `j ≡ 0, 2, 4, 6, 8 (mod 10)`, indexed by `k mod 5`.
pub const C3: [[i64; 5]; 5] = [
    [1, 0, 0, -1, 0],
    [-1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 1, -1],
    [0, -1, 0, 0, 1],
];

/// `C₄` rows for `j ≡ 0, 2, 4, 6 (mod 8)`, indexed by `k mod 4`.
pub const C4: [[i64; 4]; 4] = [[1, 0, 0, -1], [-1, 1, 0, 0], [-1, 0, 0, 1], [1, -1, 0, 0]];

/// `H₂` factor for (2∤D₁, D₂=1), (2|D₁, D₂=1), (D₂=2).
pub const H2_CASE: [i64; 3] = [7, 13, 3];

/// `H₃` factor for D₂ = 1, 2.
pub const H3_CASE: [i64; 2] = [1, 3];

/// `H₄` factor for D₂ = 1, 3.
pub const H4_CASE: [i64; 2] = [1, 8];

/// `H₉` factor for (2∤D₁, D₂=1), (2|D₁, D₂=1), (2∤D₁, D₂=2).
pub const H9_CASE: [i64; 3] = [2, 5, 3];

/// `H₆` weight `B`: rows 2|D₁, 2|D₂, 2∤D; columns 2|n, 2∤n.
pub const H6_B: [[i64; 2]; 3] = [[5, 11], [7, 9], [3, 5]];

/// `H₇` weight `B`: rows 3|D₁, 3|D₂, 3∤D; columns 3|n, 3∤n.
pub const H7_B: [[i64; 2]; 3] = [[1, 16], [4, 10], [1, 4]];

/// `H₁₂` weights in eighths. Rows are (place of 2) × (place of 3) with
/// places ordered (∤D, |D₁, |D₂); columns are cases (I), (II), (III).
pub const H12_TABLE_EIGHTHS: [[[i64; 3]; 3]; 3] = [
    // 2 ∤ D
    [[0, 4, 8], [4, 6, 8], [0, 2, 4]],
    // 2 | D₁
    [[8, 6, 4], [10, 9, 8], [4, 3, 2]],
    // 2 | D₂
    [[4, 2, 0], [4, 3, 2], [2, 1, 0]],
];

/// One line per table, `name:v,v,...`, in declaration order.
pub fn canonical_dump() -> String {
    fn line(out: &mut String, name: &str, values: impl IntoIterator<Item = i64>) {
        let vals: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
        out.push_str(name);
        out.push(':');
        out.push_str(&vals.join(","));
        out.push('\n');
    }
    let mut out = String::new();
    line(&mut out, "C1", C1.iter().flatten().copied());
    line(&mut out, "C2", C2.iter().flatten().copied());
    line(&mut out, "C3", C3.iter().flatten().copied());
    line(&mut out, "C4", C4.iter().flatten().copied());
    line(&mut out, "H2", H2_CASE);
    line(&mut out, "H3", H3_CASE);
    line(&mut out, "H4", H4_CASE);
    line(&mut out, "H9", H9_CASE);
    line(&mut out, "H6B", H6_B.iter().flatten().copied());
    line(&mut out, "H7B", H7_B.iter().flatten().copied());
    line(
        &mut out,
        "H12",
        H12_TABLE_EIGHTHS.iter().flatten().flatten().copied(),
    );
    out
}
