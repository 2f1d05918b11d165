//! Fixtures shared by the benchmarks.

use detcurve::{parse_matrix, MonomialMatrix, ProjectiveCurveParams, VariableSet};

/// `(delta, eps1, eps2)` triples covering each matrix case and a large degree.
pub const CURVES: [(u64, u64, u64); 5] = [(4, 3, 1), (70, 66, 15), (12, 10, 3), (9, 5, 4), (9973, 7919, 104)];

pub fn curve(delta: u64, eps1: u64, eps2: u64) -> ProjectiveCurveParams {
    ProjectiveCurveParams::derive(delta, eps1, eps2).expect("valid fixture")
}

/// Simple matrices over `a, b, c, d` for the form search.
pub const MATRICES: [&str; 3] = ["a*d,b,c;b,a,d", "a^2,b,c;b*c,d,a", "a,b,c;b,c,a"];

pub fn matrix(text: &str) -> MonomialMatrix {
    parse_matrix(text, &VariableSet::letters(4)).expect("valid fixture")
}
