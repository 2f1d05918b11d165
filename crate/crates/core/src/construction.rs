//! The three defining binomials of a projective monomial curve, its `2 x 3`
//! monomial matrix and the choice of two minors that cut out the curve
//! together with `f2`.

use num_bigint::BigUint;

use crate::curve::{CaseTag, ProjectiveCurveParams};
use crate::matrix::MonomialMatrix;
use crate::monomial::{Binomial, MinorValue, Monomial};
use crate::polynomial::SparsePolynomial;
use crate::substitution::{affine_specialize, specialize_binomial};

fn mono(exps: [u64; 4]) -> Monomial {
    Monomial::new(exps.iter().map(|&e| BigUint::from(e)).collect())
}

fn binomial(plus: [u64; 4], minus: [u64; 4]) -> Binomial {
    Binomial::new(mono(plus), mono(minus)).expect("curve binomials have distinct terms")
}

/// `f = x1^dstar - x0^e1star x3^f1star`
pub fn binomial_f(c: &ProjectiveCurveParams) -> Binomial {
    binomial([0, c.dstar, 0, 0], [c.e1star, 0, 0, c.f1star])
}

/// `f1 = x1^m - x0^n x2^p`
pub fn binomial_f1(c: &ProjectiveCurveParams) -> Binomial {
    binomial([0, c.m, 0, 0], [c.n, 0, c.p, 0])
}

/// `f2 = x2^u - x1^v x3^w`
pub fn binomial_f2(c: &ProjectiveCurveParams) -> Binomial {
    binomial([0, 0, c.u, 0], [0, c.v, 0, c.w])
}

/// ```text
/// x1^min(dstar,m)     x0^(e1star-n)+ x3^f1star   x0^(n-e1star)+ x2^p
/// x0^min(e1star,n)    x1^(dstar-m)+              x1^(m-dstar)+
/// ```
/// where `(k)+` is `max(k, 0)`.
pub fn build_matrix(c: &ProjectiveCurveParams) -> MonomialMatrix {
    let pos = |a: u64, b: u64| a.saturating_sub(b);
    let top = vec![
        mono([0, c.dstar.min(c.m), 0, 0]),
        mono([pos(c.e1star, c.n), 0, 0, c.f1star]),
        mono([pos(c.n, c.e1star), 0, c.p, 0]),
    ];
    let bottom = vec![
        mono([c.e1star.min(c.n), 0, 0, 0]),
        mono([0, pos(c.dstar, c.m), 0, 0]),
        mono([0, pos(c.m, c.dstar), 0, 0]),
    ];
    MonomialMatrix::new(top, bottom).expect("2 x 3 over four variables")
}

pub fn classify_case(c: &ProjectiveCurveParams) -> CaseTag {
    match (c.e1star > c.n, c.dstar > c.m) {
        (true, true) => CaseTag::I,
        (true, false) => CaseTag::II,
        (false, true) => CaseTag::III,
        (false, false) => CaseTag::IV,
    }
}

/// Columns `(i, j)` of the first selected minor: `(0, 2)` in cases I/III, `(0, 1)` in II/IV.
pub fn first_minor_columns(case: CaseTag) -> (usize, usize) {
    match case {
        CaseTag::I | CaseTag::III => (0, 2),
        CaseTag::II | CaseTag::IV => (0, 1),
    }
}

/// The column through which both selected minors pass.
pub fn reducing_column(case: CaseTag) -> usize {
    match case {
        CaseTag::I | CaseTag::III => 2,
        CaseTag::II | CaseTag::IV => 1,
    }
}

/// `(M1, M2)`: `(D13, D23)` in cases I/III and `(D12, D23)` in cases II/IV.
pub fn select_minors(c: &ProjectiveCurveParams) -> (Binomial, Binomial) {
    let a = build_matrix(c);
    let (i, j) = first_minor_columns(classify_case(c));
    let take = |i, j| {
        a.minor(i, j)
            .expect("valid columns")
            .as_binomial()
            .cloned()
            .expect("minors of a simple matrix are nonzero")
    };
    (take(i, j), take(1, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleVariant {
    /// `(M1, M2, f2)`
    Minors,
    /// `(f, f1, f2)`
    Binomials,
}

impl std::str::FromStr for TripleVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "minors" => Ok(TripleVariant::Minors),
            "binomials" => Ok(TripleVariant::Binomials),
            other => Err(format!("unknown variant `{other}` (expected minors or binomials)")),
        }
    }
}

/// Everything constructed for one curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSystem {
    pub params: ProjectiveCurveParams,
    pub f: Binomial,
    pub f1: Binomial,
    pub f2: Binomial,
    pub matrix: MonomialMatrix,
    pub case: CaseTag,
    pub m1: Binomial,
    pub m2: Binomial,
    /// Members are read on the chart `x0 = 1`.
    pub affine: bool,
}

impl DefiningSystem {
    pub fn new(params: ProjectiveCurveParams, affine: bool) -> Self {
        let (m1, m2) = select_minors(&params);
        DefiningSystem {
            f: binomial_f(&params),
            f1: binomial_f1(&params),
            f2: binomial_f2(&params),
            matrix: build_matrix(&params),
            case: classify_case(&params),
            m1,
            m2,
            params,
            affine,
        }
    }

    pub fn binomials(&self, variant: TripleVariant) -> [&Binomial; 3] {
        match variant {
            TripleVariant::Minors => [&self.m1, &self.m2, &self.f2],
            TripleVariant::Binomials => [&self.f, &self.f1, &self.f2],
        }
    }

    /// The chosen triple, specialized at `x0 = 1` in affine mode. A member
    /// whose two terms merge under the specialization becomes `Zero`.
    pub fn members(&self, variant: TripleVariant) -> Vec<MinorValue> {
        self.binomials(variant)
            .into_iter()
            .map(|b| self.project_binomial(b))
            .collect()
    }

    /// The chosen triple as polynomials, specialized at `x0 = 1` in affine mode.
    pub fn triple(&self, variant: TripleVariant) -> Vec<SparsePolynomial> {
        self.binomials(variant)
            .into_iter()
            .map(|b| self.project(&SparsePolynomial::from(b)))
            .collect()
    }

    /// The two selected minors.
    pub fn minor_pair(&self) -> Vec<SparsePolynomial> {
        [&self.m1, &self.m2]
            .into_iter()
            .map(|b| self.project(&SparsePolynomial::from(b)))
            .collect()
    }

    pub fn project_binomial(&self, b: &Binomial) -> MinorValue {
        if self.affine {
            specialize_binomial(b)
        } else {
            MinorValue::Binomial(b.clone())
        }
    }

    /// All three minors of the matrix.
    pub fn all_minors(&self) -> Vec<SparsePolynomial> {
        self.matrix
            .all_minors()
            .iter()
            .map(|(_, _, m)| self.project(&SparsePolynomial::from_minor(m, 4)))
            .collect()
    }

    fn project(&self, p: &SparsePolynomial) -> SparsePolynomial {
        if self.affine {
            affine_specialize(p)
        } else {
            p.clone()
        }
    }
}

/// `(M1, M2, f2)` or `(f, f1, f2)` for the curve.
pub fn defining_triple(params: &ProjectiveCurveParams, variant: TripleVariant, affine: bool) -> Vec<SparsePolynomial> {
    DefiningSystem::new(*params, affine).triple(variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableSet;
    use crate::substitution::symbolic_vanishes_on_curve;

    fn params(d: u64, e1: u64, e2: u64) -> ProjectiveCurveParams {
        ProjectiveCurveParams::derive(d, e1, e2).unwrap()
    }

    fn x() -> VariableSet {
        VariableSet::projective()
    }

    #[test]
    fn binomials_of_worked_curves() {
        let q = params(4, 3, 1);
        assert_eq!(binomial_f(&q).render(&x()), "x1^4 - x0^3*x3");
        assert_eq!(binomial_f1(&q).render(&x()), "x1^3 - x0^2*x2");
        assert_eq!(binomial_f2(&q).render(&x()), "x2^3 - x1*x3^2");

        let big = params(70, 66, 15);
        assert_eq!(binomial_f(&big).render(&x()), "x1^35 - x0^33*x3^2");
        assert_eq!(binomial_f1(&big).render(&x()), "x1^55 - x0^51*x2^4");
        assert_eq!(binomial_f2(&big).render(&x()), "x2^22 - x1^5*x3^17");

        let conic = params(2, 1, 1);
        assert_eq!(binomial_f(&conic).render(&x()), "x1^2 - x0*x3");
        assert_eq!(binomial_f1(&conic).render(&x()), "x1 - x2");

        assert_eq!(binomial_f2(&params(3, 2, 1)).render(&x()), "x2^2 - x1*x3");
    }

    #[test]
    fn matrices_of_worked_curves() {
        assert_eq!(build_matrix(&params(4, 3, 1)).render(&x()), "x1^3,x0*x3,x2;x0^2,x1,1");
        assert_eq!(
            build_matrix(&params(70, 66, 15)).render(&x()),
            "x1^35,x3^2,x0^18*x2^4;x0^33,1,x1^20"
        );
        assert_eq!(build_matrix(&params(3, 2, 1)).render(&x()), "x1^2,x0*x3,x2;x0,x1,1");
    }

    #[test]
    fn cases_and_minors() {
        assert_eq!(classify_case(&params(4, 3, 1)), CaseTag::I);
        assert_eq!(classify_case(&params(70, 66, 15)), CaseTag::IV);
        assert_eq!(classify_case(&params(3, 2, 1)), CaseTag::I);

        let show = |(a, b): (Binomial, Binomial)| (a.render(&x()), b.render(&x()));
        assert_eq!(
            show(select_minors(&params(4, 3, 1))),
            ("x1^3 - x0^2*x2".into(), "x0*x3 - x1*x2".into())
        );
        assert_eq!(
            show(select_minors(&params(70, 66, 15))),
            ("x1^35 - x0^33*x3^2".into(), "x1^20*x3^2 - x0^18*x2^4".into())
        );
        assert_eq!(
            show(select_minors(&params(3, 2, 1))),
            ("x1^2 - x0*x2".into(), "x0*x3 - x1*x2".into())
        );
    }

    #[test]
    fn triples() {
        let render = |v: Vec<SparsePolynomial>| v.iter().map(|p| p.render(&x())).collect::<Vec<_>>();
        let q = params(4, 3, 1);
        assert_eq!(
            render(defining_triple(&q, TripleVariant::Minors, false)),
            ["-x0^2*x2 + x1^3", "x0*x3 - x1*x2", "-x1*x3^2 + x2^3"]
        );
        let sys = DefiningSystem::new(q, false);
        let shown: Vec<String> = sys.binomials(TripleVariant::Binomials).iter().map(|b| b.render(&x())).collect();
        assert_eq!(shown, ["x1^4 - x0^3*x3", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2"]);

        let big = DefiningSystem::new(params(70, 66, 15), false);
        let shown: Vec<String> = big.binomials(TripleVariant::Binomials).iter().map(|b| b.render(&x())).collect();
        assert_eq!(shown, ["x1^35 - x0^33*x3^2", "x1^55 - x0^51*x2^4", "x2^22 - x1^5*x3^17"]);
    }

    #[test]
    fn affine_triple_drops_x0() {
        let sys = DefiningSystem::new(params(3, 2, 1), true);
        let shown: Vec<String> = sys.members(TripleVariant::Minors).iter().map(|p| p.render(&x())).collect();
        assert_eq!(shown, ["x1^2 - x2", "x3 - x1*x2", "x2^2 - x1*x3"]);
        // x0*x3 - x1*x2 -> x3 - x1*x2
        assert_eq!(sys.triple(TripleVariant::Minors)[1].render(&x()), "-x1*x2 + x3");
    }

    #[test]
    fn ccd_pairs_vanish() {
        let c = params(3, 2, 1);
        let sys = DefiningSystem::new(c, false);
        for b in [&sys.m1, &sys.m2, &sys.f] {
            assert!(symbolic_vanishes_on_curve(&b.into(), &c).unwrap().vanishes);
        }
        assert_eq!(sys.f.render(&x()), "x1^3 - x0^2*x3");
    }
}
