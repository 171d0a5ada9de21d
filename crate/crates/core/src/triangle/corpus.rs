use alloc::vec::Vec;

use super::{GeodesicClass, Word};
use crate::error::Result;

/// One row of the reference table of short `(2,3,7)` geodesics, as printed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub word: &'static str,
    pub s: u8,
    /// Printed length, five decimals.
    pub length: f64,
    /// Printed contribution `A(γ)`.
    pub contribution: f64,
}

const fn row(word: &'static str, s: u8, length: f64, contribution: f64) -> TableRow {
    TableRow {
        word,
        s,
        length,
        contribution,
    }
}

/// The 27 rows of the reference table, in printed order.
pub const TABLE_ROWS: [TableRow; 27] = [
    row("RL", 1, 0.98399, -0.288955),
    row("RRLL", 1, 1.73601, -0.064746),
    row("RLRLL", 2, 2.13111, -0.069526),
    row("RLRRLL", 2, 2.66193, -0.032848),
    row("RLLRRLL", 2, 2.89815, -0.024028),
    row("RLRLRLL", 2, 3.15482, -0.017289),
    row("RLRRLRLL", 1, 3.54271, -0.0053429),
    row("RLRLRRLL", 2, 3.62732, -0.0096416),
    row("RLRRLRRLL", 2, 3.80470, -0.0077879),
    row("RLRLLRRLL", 2, 3.93595, -0.0066608),
    row("RLRLRLRLL", 2, 4.15197, -0.0051635),
    row("RLLRRLRRLL", 1, 4.20181, -0.0024355),
    row("RLRRLLRRLL", 2, 4.39146, -0.0039068),
    row("RLRLRRLRLL", 2, 4.48926, -0.0034894),
    row("RLRLRLRRLL", 2, 4.60473, -0.0030555),
    row("RLLRRLLRRLL", 2, 4.65401, -0.0028877),
    row("RLRLRRLRRLL", 2, 4.76043, -0.0025571),
    row("RLRLLRLRRLL", 4, 4.84180, -0.0046617),
    row("RLRLRLLRRLL", 2, 4.93876, -0.0020879),
    row("RLRLLRLLRRLL", 2, 5.01322, -0.0019192),
    row("RLRLRLRLRLL", 2, 5.14068, -0.0016622),
    row("RLRLLRRLRRLL", 2, 5.20802, -0.0015409),
    row("RLRLRLLRLRLL", 2, 5.28890, -0.0014072),
    row("RLRRLRLLRRLL", 2, 5.28890, -0.0014072),
    row("RLRLRRLLRRLL", 2, 5.35146, -0.0013120),
    row("RLRLRRLRLRLL", 1, 5.42680, -0.00060298),
    row("RLRLRLRRLRLL", 2, 5.45943, -0.0011628),
];

impl TableRow {
    pub fn parsed_word(&self) -> Word {
        // The table words are fixed and valid.
        Word::parse(self.word).expect("table word")
    }
}

/// Geodesic classes of the reference table with their printed `s`; lengths
/// and contributions are recomputed from the words.
pub fn table_corpus() -> Result<Vec<GeodesicClass>> {
    TABLE_ROWS
        .iter()
        .map(|r| GeodesicClass::with_s(&r.parsed_word(), r.s))
        .collect()
}
