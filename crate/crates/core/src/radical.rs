//! Deciding when the minors through a single column already define the
//! determinantal variety of a `2 x r` monomial matrix.
//!
//! The criterion is `J ⊂ √(a_1k, a_2k)`. For monomial entries this is
//! combinatorial: the radical of a monomial ideal is generated by the
//! squarefree parts of its generators, a monomial lies in it iff its support
//! contains the support of some generator, and a binomial lies in a monomial
//! ideal iff both of its terms do.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::matrix::MonomialMatrix;
use crate::monomial::{Monomial, MinorValue};

/// True iff every 2-minor is nonzero and its two terms are coprime.
pub fn is_simple(a: &MonomialMatrix) -> bool {
    simplicity_violation(a).is_none()
}

/// The first minor that spoils simplicity, as `(i, j, minor)`.
pub fn simplicity_violation(a: &MonomialMatrix) -> Option<(usize, usize, MinorValue)> {
    a.all_minors().into_iter().find(|(_, _, m)| match m {
        MinorValue::Zero => true,
        MinorValue::Binomial(b) => !b.monomial_content().is_one(),
    })
}

/// Which column entry's support a term contains (0 = top, 1 = bottom).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermEvidence {
    pub term: Monomial,
    pub covered_by: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorEvidence {
    pub cols: (usize, usize),
    pub minor: MinorValue,
    /// Empty for a zero minor, which lies in every ideal.
    pub terms: Vec<TermEvidence>,
}

impl MinorEvidence {
    pub fn contained(&self) -> bool {
        self.terms.iter().all(|t| t.covered_by.is_some())
    }
}

/// Verdict of the single-column criterion for column `column`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReduction {
    pub column: usize,
    pub holds: bool,
    /// Minors through `column`, generating `J_k`.
    pub reduced: Vec<(usize, usize, MinorValue)>,
    /// Containment evidence for every minor of the matrix.
    pub evidence: Vec<MinorEvidence>,
}

fn covering_entry(term: &Monomial, supports: &[BTreeSet<usize>; 2]) -> Option<usize> {
    let s = term.support();
    supports.iter().position(|g| g.is_subset(&s))
}

pub fn radical_hypothesis(a: &MonomialMatrix, column: usize) -> Result<RadicalReduction> {
    let reduced = a.minors_through(column)?;
    let [top, bottom] = a.column(column);
    let supports = [top.support(), bottom.support()];
    let evidence: Vec<MinorEvidence> = a
        .all_minors()
        .into_iter()
        .map(|(i, j, minor)| {
            let terms = match &minor {
                MinorValue::Zero => Vec::new(),
                MinorValue::Binomial(b) => [b.plus(), b.minus()]
                    .into_iter()
                    .map(|t| TermEvidence {
                        term: t.clone(),
                        covered_by: covering_entry(t, &supports),
                    })
                    .collect(),
            };
            MinorEvidence {
                cols: (i, j),
                minor,
                terms,
            }
        })
        .collect();
    Ok(RadicalReduction {
        column,
        holds: evidence.iter().all(MinorEvidence::contained),
        reduced,
        evidence,
    })
}

/// [`radical_hypothesis`] for every column, in column order.
pub fn find_reducing_columns(a: &MonomialMatrix) -> Vec<RadicalReduction> {
    (0..a.cols())
        .map(|k| radical_hypothesis(a, k).expect("column in range"))
        .collect()
}

/// Columns for which the criterion holds.
pub fn reducing_columns(a: &MonomialMatrix) -> Vec<usize> {
    find_reducing_columns(a)
        .into_iter()
        .filter(|r| r.holds)
        .map(|r| r.column)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableSet;
    use crate::parse::parse_matrix;
    use proptest::prelude::*;

    fn abcd(s: &str) -> MonomialMatrix {
        parse_matrix(s, &VariableSet::letters(4)).unwrap()
    }

    #[test]
    fn simplicity() {
        let x = VariableSet::projective();
        assert!(is_simple(&parse_matrix("x1^3,x0*x3,x2;x0^2,x1,1", &x).unwrap()));
        assert!(!is_simple(&abcd("a,b,c;a,b,c")));
        // a*b*a - b*b has the factor b
        let (i, j, m) = simplicity_violation(&abcd("a*b,b,c;b,a,d")).unwrap();
        assert_eq!((i, j), (0, 1));
        assert_eq!(m.render(&VariableSet::letters(4)), "a^2*b - b^2");
    }

    #[test]
    fn shared_indeterminate_column() {
        // a d, b, c / b, a, d: J ⊂ (a, b) = √(b, a)
        let a = abcd("a*d,b,c;b,a,d");
        let r = radical_hypothesis(&a, 1).unwrap();
        assert!(r.holds);
        let v = VariableSet::letters(4);
        let reduced: Vec<String> = r.reduced.iter().map(|(_, _, m)| m.render(&v)).collect();
        assert_eq!(reduced, ["a^2*d - b^2", "b*d - a*c"]);
        assert_eq!(reducing_columns(&a), [1]);
    }

    #[test]
    fn two_minors_through_third_column() {
        // a^{2u-1}, b^n, c^p / b^r c^s, d^t, a^u with u = 2 and the rest 1
        let a = abcd("a^3,b,c;b*c,d,a^2");
        let r = radical_hypothesis(&a, 2).unwrap();
        assert!(r.holds);
        let v = VariableSet::letters(4);
        let reduced: Vec<String> = r.reduced.iter().map(|(_, _, m)| m.render(&v)).collect();
        assert_eq!(reduced, ["a^5 - b*c^2", "a^2*b - c*d"]);
    }

    #[test]
    fn distinct_indeterminates_never_reduce() {
        let v = VariableSet::indexed("y", 6);
        let a = parse_matrix("y0,y1,y2;y3,y4,y5", &v).unwrap();
        let rs = find_reducing_columns(&a);
        assert!(rs.iter().all(|r| !r.holds));
        let bad = rs[0].evidence.iter().find(|e| !e.contained()).unwrap();
        assert_eq!(bad.cols, (1, 2));
        assert!(bad.terms.iter().all(|t| t.covered_by.is_none()));
    }

    #[test]
    fn quartic_matrix_reduces_on_first_and_third_columns() {
        let x = VariableSet::projective();
        let a = parse_matrix("x1^3,x0*x3,x2;x0^2,x1,1", &x).unwrap();
        assert_eq!(reducing_columns(&a), [0, 2]);
    }

    fn matrix() -> impl Strategy<Value = MonomialMatrix> {
        prop::collection::vec(prop::collection::vec(0u64..3, 4), 6).prop_map(|e| {
            let m: Vec<Monomial> = e.iter().map(|x| Monomial::from_u64s(x)).collect();
            MonomialMatrix::new(m[..3].to_vec(), m[3..].to_vec()).unwrap()
        })
    }

    proptest! {
        // J_k ⊂ (a_1k, a_2k): every term of a minor through k is divisible by a column-k entry.
        #[test]
        fn reduced_minors_lie_in_column_ideal(a in matrix(), k in 0usize..3) {
            let r = radical_hypothesis(&a, k).unwrap();
            let [top, bottom] = a.column(k);
            for (_, _, m) in &r.reduced {
                if let MinorValue::Binomial(b) = m {
                    for t in [b.plus(), b.minus()] {
                        prop_assert!(top.divides(t) || bottom.divides(t));
                    }
                }
            }
        }
    }
}
