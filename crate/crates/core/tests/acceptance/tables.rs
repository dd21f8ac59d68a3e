//! Reference catalog of unimodular ζ generators per field and
//! blocklength, stated compactly via sign orbits. `expand` turns a row
//! into the explicit element set that `find_unimodular_zeta` must match.

use std::collections::BTreeSet;

/// One catalog cell: a set of GI(p) elements described by an orbit.
#[derive(Clone, Copy)]
pub enum Cell {
    /// A single real element a.
    Real(u32),
    /// ±bj (purely imaginary pair).
    PmIm(u32),
    /// a ± bj (fixed real part).
    Fixed(u32, u32),
    /// ±a ± bj (all four sign combinations).
    PmPm(u32, u32),
}

pub struct Row {
    pub p: u32,
    pub n: usize,
    pub cells: &'static [Cell],
}

use Cell::*;

/// Generators for the cosine kernel: every listed ζ has order 4N.
/// Rows with p ≤ 47 are complete; the p = 127 rows are a selection.
pub const FFCT_ROWS: &[Row] = &[
    Row { p: 7, n: 2, cells: &[PmPm(2, 2)] },
    Row { p: 11, n: 3, cells: &[PmPm(3, 5)] },
    Row { p: 19, n: 5, cells: &[PmPm(4, 2), PmPm(3, 7)] },
    Row { p: 23, n: 2, cells: &[PmPm(9, 9)] },
    Row { p: 23, n: 3, cells: &[PmPm(8, 11)] },
    Row { p: 23, n: 6, cells: &[PmPm(10, 4), PmPm(4, 10)] },
    Row { p: 31, n: 2, cells: &[PmPm(4, 4)] },
    Row { p: 31, n: 4, cells: &[PmPm(13, 7), PmPm(7, 13)] },
    Row { p: 31, n: 8, cells: &[PmPm(11, 2), PmPm(10, 5), PmPm(5, 10), PmPm(2, 11)] },
    Row { p: 43, n: 11, cells: &[PmPm(9, 7), PmPm(3, 11), PmPm(13, 2), PmPm(8, 18), PmPm(20, 17)] },
    Row { p: 47, n: 2, cells: &[PmPm(20, 20)] },
    Row { p: 47, n: 3, cells: &[PmPm(6, 23)] },
    Row { p: 47, n: 4, cells: &[PmPm(22, 9), PmPm(9, 22)] },
    Row { p: 47, n: 6, cells: &[PmPm(16, 11), PmPm(11, 16)] },
    Row { p: 47, n: 12, cells: &[PmPm(19, 4), PmPm(4, 19), PmPm(18, 10), PmPm(10, 18)] },
    Row { p: 127, n: 2, cells: &[PmPm(8, 8)] },
    Row { p: 127, n: 4, cells: &[PmPm(24, 21), PmPm(21, 24)] },
    Row { p: 127, n: 8, cells: &[PmPm(30, 25), PmPm(59, 40)] },
    Row {
        p: 127,
        n: 16,
        cells: &[PmPm(29, 7), PmPm(41, 15), PmPm(49, 34), PmPm(60, 46), PmPm(67, 46)],
    },
    Row {
        p: 127,
        n: 32,
        cells: &[PmPm(22, 5), PmPm(23, 19), PmPm(39, 2), PmPm(2, 39), PmPm(38, 9), PmPm(45, 32)],
    },
];

/// Generators for the Hartley kernel: every listed ζ has order N.
/// Rows with p ≤ 47 are complete; the p = 127 rows are a selection.
pub const FFHT_ROWS: &[Row] = &[
    Row { p: 3, n: 2, cells: &[Real(2)] },
    Row { p: 3, n: 4, cells: &[PmIm(1)] },
    Row { p: 7, n: 2, cells: &[Real(6)] },
    Row { p: 7, n: 4, cells: &[PmIm(1)] },
    Row { p: 7, n: 8, cells: &[PmPm(2, 2)] },
    Row { p: 11, n: 2, cells: &[Real(10)] },
    Row { p: 11, n: 3, cells: &[Fixed(5, 3)] },
    Row { p: 11, n: 4, cells: &[PmIm(1)] },
    Row { p: 11, n: 6, cells: &[Fixed(6, 3)] },
    Row { p: 11, n: 12, cells: &[PmPm(3, 5)] },
    Row { p: 19, n: 2, cells: &[Real(18)] },
    Row { p: 19, n: 4, cells: &[PmIm(1)] },
    Row { p: 19, n: 5, cells: &[Fixed(2, 4), Fixed(7, 3)] },
    Row { p: 19, n: 10, cells: &[Fixed(12, 3), Fixed(17, 4)] },
    Row { p: 19, n: 20, cells: &[PmPm(3, 7), PmPm(4, 2)] },
    Row { p: 23, n: 2, cells: &[Real(22)] },
    Row { p: 23, n: 3, cells: &[Fixed(11, 8)] },
    Row { p: 23, n: 4, cells: &[PmIm(1)] },
    Row { p: 23, n: 6, cells: &[Fixed(12, 8)] },
    Row { p: 23, n: 8, cells: &[PmPm(9, 9)] },
    Row { p: 23, n: 12, cells: &[PmPm(8, 11)] },
    Row { p: 23, n: 24, cells: &[PmPm(4, 10), PmPm(10, 4)] },
    Row { p: 31, n: 2, cells: &[Real(30)] },
    Row { p: 31, n: 4, cells: &[PmIm(1)] },
    Row { p: 31, n: 8, cells: &[PmPm(4, 4)] },
    Row { p: 31, n: 16, cells: &[PmPm(7, 13), PmPm(13, 7)] },
    Row { p: 31, n: 32, cells: &[PmPm(2, 11), PmPm(5, 10), PmPm(10, 5), PmPm(11, 2)] },
    Row { p: 43, n: 2, cells: &[Real(42)] },
    Row { p: 43, n: 4, cells: &[PmIm(1)] },
    Row {
        p: 43,
        n: 11,
        cells: &[Fixed(2, 13), Fixed(7, 9), Fixed(11, 3), Fixed(18, 8), Fixed(26, 20)],
    },
    Row {
        p: 43,
        n: 22,
        cells: &[Fixed(17, 20), Fixed(25, 8), Fixed(32, 3), Fixed(36, 9), Fixed(41, 13)],
    },
    Row {
        p: 43,
        n: 44,
        cells: &[Fixed(3, 11), PmPm(8, 18), PmPm(9, 7), PmPm(13, 2), PmPm(20, 17), Fixed(40, 11)],
    },
    Row { p: 47, n: 2, cells: &[Real(46)] },
    Row { p: 47, n: 3, cells: &[Fixed(23, 6)] },
    Row { p: 47, n: 4, cells: &[PmIm(1)] },
    Row { p: 47, n: 6, cells: &[Fixed(24, 6)] },
    Row { p: 47, n: 8, cells: &[PmPm(20, 20)] },
    Row { p: 47, n: 12, cells: &[PmPm(6, 23)] },
    Row { p: 47, n: 16, cells: &[PmPm(22, 9), PmPm(9, 22)] },
    Row { p: 47, n: 24, cells: &[PmPm(16, 11), PmPm(11, 16)] },
    Row { p: 47, n: 48, cells: &[PmPm(19, 4), PmPm(4, 19), PmPm(18, 10), PmPm(10, 18)] },
    Row { p: 127, n: 2, cells: &[Real(126)] },
    Row { p: 127, n: 4, cells: &[PmIm(1)] },
    Row { p: 127, n: 8, cells: &[PmPm(8, 8)] },
    Row { p: 127, n: 16, cells: &[PmPm(24, 21), PmPm(21, 24)] },
    Row { p: 127, n: 32, cells: &[PmPm(30, 25), PmPm(59, 40)] },
    Row {
        p: 127,
        n: 64,
        cells: &[PmPm(29, 7), PmPm(41, 15), PmPm(49, 34), PmPm(60, 46), PmPm(67, 46)],
    },
    Row {
        p: 127,
        n: 128,
        cells: &[PmPm(22, 5), PmPm(23, 19), PmPm(39, 2), PmPm(38, 9), PmPm(45, 32)],
    },
];

/// Explicit (re, im) element set described by a row's cells.
pub fn expand(p: u32, cells: &[Cell]) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for &cell in cells {
        match cell {
            Real(a) => {
                out.insert((a, 0));
            }
            PmIm(b) => {
                out.insert((0, b));
                out.insert((0, p - b));
            }
            Fixed(a, b) => {
                out.insert((a, b));
                out.insert((a, p - b));
            }
            PmPm(a, b) => {
                for re in [a, p - a] {
                    for im in [b, p - b] {
                        out.insert((re, im));
                    }
                }
            }
        }
    }
    out
}
