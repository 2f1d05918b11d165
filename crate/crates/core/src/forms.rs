//! Normal forms of simple `2 x 3` monomial matrices over four variables.
//!
//! A simple matrix without a unit entry has, after permuting columns,
//! possibly swapping rows and renaming the variables, one of nine shapes.
//! Each shape determines which radical-reduction result applies. The search
//! here is exhaustive: 6 column orders x 2 row orders x 24 renamings x 9 shapes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::MonomialMatrix;
use crate::monomial::Monomial;
use crate::radical::simplicity_violation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl Form {
    pub const ALL: [Form; 9] = [
        Form::I,
        Form::II,
        Form::III,
        Form::IV,
        Form::V,
        Form::VI,
        Form::VII,
        Form::VIII,
        Form::IX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Form::I => "i",
            Form::II => "ii",
            Form::III => "iii",
            Form::IV => "iv",
            Form::V => "v",
            Form::VI => "vi",
            Form::VII => "vii",
            Form::VIII => "viii",
            Form::IX => "ix",
        }
    }

    /// Template entries as `(variable, exponent symbol)` lists, variables `a..d` as `0..3`.
    pub fn template(self) -> Template {
        const A: usize = 0;
        const B: usize = 1;
        const C: usize = 2;
        const D: usize = 3;
        let top_cd: Cell = &[(C, 'p'), (D, 'q')];
        let top_c: Cell = &[(C, 'p')];
        let top = |third: Cell| -> [Cell; 3] { [&[(A, 'm')], &[(B, 'n')], third] };
        match self {
            Form::I => [top(top_cd), [&[(B, 'r')], &[(C, 's'), (D, 't')], &[(A, 'u')]]],
            Form::II => [top(top_c), [&[(B, 'r')], &[(A, 's'), (C, 't')], &[(D, 'u')]]],
            Form::III => [top(top_c), [&[(B, 'r')], &[(C, 's')], &[(A, 't'), (D, 'u')]]],
            Form::IV => [top(top_cd), [&[(B, 'r'), (C, 's')], &[(D, 't')], &[(A, 'u')]]],
            Form::V => [top(top_c), [&[(B, 'r'), (C, 's')], &[(A, 't')], &[(D, 'u')]]],
            Form::VI => [top(top_cd), [&[(C, 'r')], &[(A, 's'), (D, 't')], &[(B, 'u')]]],
            Form::VII => [top(top_cd), [&[(C, 'r')], &[(D, 's')], &[(A, 't'), (B, 'u')]]],
            Form::VIII => [top(top_c), [&[(C, 'r')], &[(A, 's')], &[(B, 't'), (D, 'u')]]],
            Form::IX => [top(top_cd), [&[(C, 'r'), (D, 's')], &[(A, 'u')], &[(B, 't')]]],
        }
    }

    /// Template rendered with symbolic exponents, e.g. `a^m,b^n,c^p*d^q;b^r,c^s*d^t,a^u`.
    pub fn template_text(self) -> String {
        let names = ['a', 'b', 'c', 'd'];
        self.template()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.iter()
                            .map(|&(v, s)| format!("{}^{}", names[v], s))
                            .collect::<Vec<_>>()
                            .join("*")
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

type Cell = &'static [(usize, char)];
pub type Template = [[Cell; 3]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Proposition {
    /// All minors lie in the radical of one column's entries; the two minors
    /// through that column define the variety.
    ColumnReduction,
    /// The Robbiano-Valla construction of two equations for this shape.
    RobbianoValla,
}

impl Proposition {
    pub fn name(self) -> &'static str {
        match self {
            Proposition::ColumnReduction => "column-reduction",
            Proposition::RobbianoValla => "robbiano-valla",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Applicability {
    pub proposition: Proposition,
    /// When the condition is met, e.g. `s>0, J ⊂ (a,b)`.
    pub condition: String,
}

/// One way the input matrix instantiates a template.
///
/// Template column `j` is input column `columns[j]`; template row 0 is input
/// row `1` when `rows_swapped`; template variable `v` (a..d) is input
/// variable `variables[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatch {
    pub form: Form,
    pub columns: [usize; 3],
    pub rows_swapped: bool,
    pub variables: [usize; 4],
    /// The renaming sends template `c` to a later input variable than template `d`.
    pub cd_interchanged: bool,
    /// Exponent symbols with their values, in alphabetical order.
    pub exponents: Vec<(char, BigUint)>,
    pub applicable: Vec<Applicability>,
}

impl FormMatch {
    pub fn exponent(&self, symbol: char) -> Option<&BigUint> {
        self.exponents.iter().find(|(s, _)| *s == symbol).map(|(_, v)| v)
    }

    /// The input matrix rewritten into the template's column order, row order and variables.
    pub fn transformed(&self, a: &MonomialMatrix) -> MonomialMatrix {
        let mut inverse = [0usize; 4];
        for (t, &input) in self.variables.iter().enumerate() {
            inverse[input] = t;
        }
        let m = a.permute_columns(&self.columns).relabel(&inverse);
        if self.rows_swapped {
            m.swap_rows()
        } else {
            m
        }
    }
}

/// Outcome of the classification search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Some entry equals 1, so the column-reduction criterion holds for its column.
    UnitEntry { cells: Vec<(usize, usize)> },
    /// All template instances found, lowest form first; empty when none fits.
    Forms(Vec<FormMatch>),
}

const COLUMN_ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn renamings() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if BTreeSet::from([a, b, c, d]).len() == 4 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Reads the exponent symbols of `cell` off `entry`, or `None` if it does not fit.
fn match_cell(entry: &Monomial, cell: Cell, out: &mut Vec<(char, BigUint)>) -> bool {
    let allowed: BTreeSet<usize> = cell.iter().map(|&(v, _)| v).collect();
    if !entry.support().is_subset(&allowed) {
        return false;
    }
    if cell.len() == 1 && entry.exponent(cell[0].0).is_zero() {
        return false;
    }
    if entry.is_one() {
        return false;
    }
    out.extend(cell.iter().map(|&(v, s)| (s, entry.exponent(v).clone())));
    true
}

fn match_template(m: &MonomialMatrix, form: Form) -> Option<Vec<(char, BigUint)>> {
    let template = form.template();
    let mut exps = Vec::new();
    for (r, row) in template.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if !match_cell(m.entry(r, c), cell, &mut exps) {
                return None;
            }
        }
    }
    exps.sort();
    Some(exps)
}

fn applicability(form: Form, exps: &[(char, BigUint)]) -> Vec<Applicability> {
    let pos = |s: char| exps.iter().any(|(k, v)| *k == s && !v.is_zero());
    let zero = |s: char| !pos(s);
    let mut out = Vec::new();
    let mut push = |proposition, condition: &str| {
        out.push(Applicability {
            proposition,
            condition: condition.to_string(),
        })
    };
    let reduction = Proposition::ColumnReduction;
    match form {
        Form::VII => {
            if zero('p') || zero('q') || zero('t') || zero('u') {
                push(Proposition::RobbianoValla, "one of p,q,t,u is zero");
            }
            if pos('t') && pos('p') {
                push(reduction, "t,p>0, J ⊂ (a,c)");
            }
            if pos('q') && pos('u') {
                push(reduction, "q,u>0, J ⊂ (b,d)");
            }
        }
        _ => push(Proposition::RobbianoValla, "always"),
    }
    match form {
        Form::II if pos('s') => push(reduction, "s>0, J ⊂ (a,b)"),
        Form::IV => {
            if zero('r') && pos('p') {
                push(reduction, "r=0 and p>0, J ⊂ (a,c)");
            }
            if zero('q') && pos('s') {
                push(reduction, "q=0 and s>0, J ⊂ (a,c)");
            }
        }
        Form::V if pos('r') => push(reduction, "r>0, J ⊂ (a,b)"),
        Form::VI => {
            if zero('s') && pos('q') {
                push(reduction, "s=0 and q>0, J ⊂ (b,d)");
            }
            if zero('p') && pos('t') {
                push(reduction, "p=0 and t>0, J ⊂ (b,d)");
            }
        }
        _ => {}
    }
    out
}

/// Finds every template instance of a simple `2 x 3` matrix over four variables.
pub fn classify_form(a: &MonomialMatrix) -> Result<Classification> {
    if a.cols() != 3 || a.arity() != 4 {
        return Err(Error::InvalidMatrix(format!(
            "classification needs a 2 x 3 matrix over 4 variables, got 2 x {} over {}",
            a.cols(),
            a.arity()
        )));
    }
    if let Some((i, j, _)) = simplicity_violation(a) {
        return Err(Error::NotSimple(format!(
            "minor of columns {} and {} is zero or has a monomial factor",
            i + 1,
            j + 1
        )));
    }
    let units: Vec<(usize, usize)> = (0..2)
        .flat_map(|r| (0..3).map(move |c| (r, c)))
        .filter(|&(r, c)| a.entry(r, c).is_one())
        .collect();
    if !units.is_empty() {
        return Ok(Classification::UnitEntry { cells: units });
    }

    let mut matches = Vec::new();
    for form in Form::ALL {
        for columns in COLUMN_ORDERS {
            for rows_swapped in [false, true] {
                for variables in renamings() {
                    let candidate = FormMatch {
                        form,
                        columns,
                        rows_swapped,
                        variables,
                        cd_interchanged: variables[2] > variables[3],
                        exponents: Vec::new(),
                        applicable: Vec::new(),
                    };
                    let m = candidate.transformed(a);
                    if let Some(exponents) = match_template(&m, form) {
                        let applicable = applicability(form, &exponents);
                        matches.push(FormMatch {
                            exponents,
                            applicable,
                            ..candidate
                        });
                    }
                }
            }
        }
    }
    Ok(Classification::Forms(matches))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableSet;
    use crate::parse::parse_matrix;

    fn abcd(s: &str) -> MonomialMatrix {
        parse_matrix(s, &VariableSet::letters(4)).unwrap()
    }

    fn forms(s: &str) -> Vec<FormMatch> {
        match classify_form(&abcd(s)).unwrap() {
            Classification::Forms(f) => f,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn template_text_matches_printed_shapes() {
        assert_eq!(Form::I.template_text(), "a^m,b^n,c^p*d^q;b^r,c^s*d^t,a^u");
        assert_eq!(Form::VIII.template_text(), "a^m,b^n,c^p;c^r,a^s,b^t*d^u");
    }

    #[test]
    fn cyclic_matrix_is_form_i() {
        let found = forms("a,b,c;b,c,a");
        let first = &found[0];
        assert_eq!(first.form, Form::I);
        assert_eq!(first.exponent('q'), Some(&BigUint::zero()));
        assert_eq!(first.exponent('t'), Some(&BigUint::zero()));
    }

    #[test]
    fn identity_instance_of_form_iv() {
        let found = forms("a^2,b,c;b*c,d,a");
        let direct = found
            .iter()
            .find(|m| m.form == Form::IV && m.columns == [0, 1, 2] && !m.rows_swapped && m.variables == [0, 1, 2, 3])
            .expect("identity instance");
        assert_eq!(direct.exponent('m'), Some(&BigUint::from(2u32)));
        for s in ['n', 'p', 'r', 's', 't', 'u'] {
            assert_eq!(direct.exponent(s), Some(&BigUint::from(1u32)), "{s}");
        }
        assert_eq!(direct.exponent('q'), Some(&BigUint::zero()));
        // q = 0 and s > 0
        assert!(direct
            .applicable
            .iter()
            .any(|a| a.proposition == Proposition::ColumnReduction));
    }

    #[test]
    fn unit_entries_short_circuit() {
        let x = VariableSet::projective();
        let a = parse_matrix("x1^3,x0*x3,x2;x0^2,x1,1", &x).unwrap();
        assert_eq!(
            classify_form(&a).unwrap(),
            Classification::UnitEntry { cells: vec![(1, 2)] }
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(classify_form(&abcd("a,b,c;a,b,c")), Err(Error::NotSimple(_))));
        assert!(matches!(classify_form(&abcd("a,b;c,d")), Err(Error::InvalidMatrix(_))));
        let v = VariableSet::letters(3);
        assert!(classify_form(&parse_matrix("a,b,c;b,c,a", &v).unwrap()).is_err());
    }

    #[test]
    fn forms_are_sorted() {
        let found = forms("a*d,b,c;b,a,d");
        assert!(!found.is_empty());
        assert!(found.windows(2).all(|w| w[0].form <= w[1].form));
    }
}
