//! Brute-force ground truth: varieties and curve images over finite fields.
//!
//! Enumeration fans out over rayon; every returned set is a `BTreeSet`, so
//! reports are ordered canonically regardless of how the work was split.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::curve::ProjectiveCurveParams;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldHandle, MAX_DEGREE};
use crate::polynomial::SparsePolynomial;

/// Default cap on the field order enumerated for one extension degree.
pub const DEFAULT_ORDER_BUDGET: u64 = 1 << 22;

/// Hard cap on the extension degree used by escalation.
pub const HARD_EXTENSION_CAP: usize = MAX_DEGREE;

pub fn eval(poly: &SparsePolynomial, point: &[FieldElement], field: &FieldHandle) -> Result<FieldElement> {
    if point.len() != poly.arity() {
        return Err(Error::ArityMismatch {
            expected: poly.arity(),
            found: point.len(),
        });
    }
    Ok(eval_unchecked(poly, point, field))
}

fn eval_unchecked(poly: &SparsePolynomial, point: &[FieldElement], field: &FieldHandle) -> FieldElement {
    let mut acc = field.zero();
    for (m, c) in poly.terms() {
        let mut term = field.from_int(c);
        for (x, e) in point.iter().zip(m.exponents()) {
            if field.is_zero(&term) {
                break;
            }
            term = field.mul(&term, &field.pow(x, e));
        }
        acc = field.add(&acc, &term);
    }
    acc
}

fn vanishes_at(polys: &[SparsePolynomial], point: &[FieldElement], field: &FieldHandle) -> bool {
    polys.iter().all(|f| field.is_zero(&eval_unchecked(f, point, field)))
}

/// A point of `P^3`, scaled so its first nonzero coordinate is `1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([FieldElement; 4]);

impl ProjPoint {
    /// Normalizes homogeneous coordinates; `None` for the zero vector.
    pub fn new(coords: [FieldElement; 4], field: &FieldHandle) -> Option<Self> {
        let lead = coords.iter().find(|c| !field.is_zero(c))?;
        let inv = field.inv(lead).expect("nonzero");
        Some(ProjPoint(coords.map(|c| field.mul(&c, &inv))))
    }

    pub fn coords(&self) -> &[FieldElement; 4] {
        &self.0
    }

    pub fn render(&self, field: &FieldHandle) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| field.render(c)).collect();
        format!("({})", parts.join(":"))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjPoint{:?}", self.0)
    }
}

/// A point of affine `n`-space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint(pub Vec<FieldElement>);

impl AffinePoint {
    pub fn render(&self, field: &FieldHandle) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| field.render(c)).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffinePoint{:?}", self.0)
    }
}

/// Points rendered for reports.
pub trait Point: Ord + Clone + Send + Sync {
    fn render(&self, field: &FieldHandle) -> String;
}

impl Point for ProjPoint {
    fn render(&self, field: &FieldHandle) -> String {
        ProjPoint::render(self, field)
    }
}

impl Point for AffinePoint {
    fn render(&self, field: &FieldHandle) -> String {
        AffinePoint::render(self, field)
    }
}

fn enumerable_order(field: &FieldHandle, points: u32) -> Result<u64> {
    field
        .order()
        .filter(|q| q.checked_pow(points).is_some())
        .ok_or_else(|| Error::UnsupportedField(format!("{} is too large to enumerate", field.describe())))
}

/// All normalized points of `P^3` over `field` where every polynomial vanishes.
pub fn projective_variety(polys: &[SparsePolynomial], field: &FieldHandle) -> Result<BTreeSet<ProjPoint>> {
    for f in polys {
        if f.arity() != 4 {
            return Err(Error::ArityMismatch {
                expected: 4,
                found: f.arity(),
            });
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("{f:?}")));
        }
    }
    let q = enumerable_order(field, 4)?;
    // The first nonzero coordinate is at position `lead`; later ones are free.
    let mut points = BTreeSet::new();
    for lead in 0..4u32 {
        let free = 3 - lead;
        let count = q.pow(free);
        let found: Vec<ProjPoint> = (0..count)
            .into_par_iter()
            .filter_map(|mut index| {
                let mut coords = [field.zero(); 4];
                coords[lead as usize] = field.one();
                for slot in coords.iter_mut().skip(lead as usize + 1) {
                    *slot = field.element(index % q);
                    index /= q;
                }
                vanishes_at(polys, &coords, field).then_some(ProjPoint(coords))
            })
            .collect();
        points.extend(found);
    }
    Ok(points)
}

/// All points of `field^n`, `n` the common arity, where every polynomial vanishes.
pub fn affine_variety(polys: &[SparsePolynomial], arity: usize, field: &FieldHandle) -> Result<BTreeSet<AffinePoint>> {
    if let Some(f) = polys.iter().find(|f| f.arity() != arity) {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: f.arity(),
        });
    }
    let q = enumerable_order(field, arity as u32)?;
    let count = q.pow(arity as u32);
    Ok((0..count)
        .into_par_iter()
        .filter_map(|mut index| {
            let coords: Vec<FieldElement> = (0..arity)
                .map(|_| {
                    let e = field.element(index % q);
                    index /= q;
                    e
                })
                .collect();
            vanishes_at(polys, &coords, field).then_some(AffinePoint(coords))
        })
        .collect())
}

/// Affine variety on the chart `x0 = 1` of polynomials over `x0..x3` that no
/// longer involve `x0`; points are `(x1, x2, x3)`.
pub fn affine_chart_variety(polys: &[SparsePolynomial], field: &FieldHandle) -> Result<BTreeSet<AffinePoint>> {
    let dropped = polys
        .iter()
        .map(|f| f.set_var_to_one(0).drop_var(0))
        .collect::<Result<Vec<_>>>()?;
    affine_variety(&dropped, 3, field)
}

fn prime_field_image(field: &FieldHandle, prime: &FieldHandle, coords: &[FieldElement]) -> Option<Vec<FieldElement>> {
    coords
        .iter()
        .map(|c| field.in_prime_subfield(c).then(|| prime.from_u64(c.as_prime().expect("prime subfield") as u64)))
        .collect()
}

/// `F_p`-points of the image of `P^1(F_{p^k})` under the parametrization.
pub fn curve_points_at_degree(params: &ProjectiveCurveParams, p: u64, k: usize) -> Result<BTreeSet<ProjPoint>> {
    let field = FieldHandle::new(p, k)?;
    let prime = FieldHandle::prime(p)?;
    let q = enumerable_order(&field, 1)?;
    let pairs = params.parametrization().pairs;
    let exps: Vec<(BigUint, BigUint)> = pairs.iter().map(|&(a, b)| (a.into(), b.into())).collect();
    let image = |xi: FieldElement, w: FieldElement| -> Option<ProjPoint> {
        let coords: Vec<FieldElement> = exps
            .iter()
            .map(|(a, b)| field.mul(&field.pow(&xi, a), &field.pow(&w, b)))
            .collect();
        let point = ProjPoint::new(coords.try_into().expect("four coordinates"), &field)?;
        let reduced = prime_field_image(&field, &prime, point.coords())?;
        Some(ProjPoint(reduced.try_into().expect("four coordinates")))
    };
    // P^1 = {(1 : w)} ∪ {(0 : 1)}
    let mut points: BTreeSet<ProjPoint> = (0..q)
        .into_par_iter()
        .filter_map(|i| image(field.one(), field.element(i)))
        .collect();
    points.extend(image(field.zero(), field.one()));
    Ok(points)
}

/// Union of [`curve_points_at_degree`] over `k = 1..=max_ext`.
pub fn curve_points(params: &ProjectiveCurveParams, p: u64, max_ext: usize) -> Result<BTreeSet<ProjPoint>> {
    let mut points = BTreeSet::new();
    for k in 1..=max_ext.max(1) {
        points.extend(curve_points_at_degree(params, p, k)?);
    }
    Ok(points)
}

/// `F_p`-points of `w -> (w^phi1, w^phi2, w^delta)` for `w` in `F_{p^k}`.
pub fn affine_curve_points_at_degree(params: &ProjectiveCurveParams, p: u64, k: usize) -> Result<BTreeSet<AffinePoint>> {
    let field = FieldHandle::new(p, k)?;
    let prime = FieldHandle::prime(p)?;
    let q = enumerable_order(&field, 1)?;
    let exps: Vec<BigUint> = params.parametrization().pairs[1..].iter().map(|&(_, b)| b.into()).collect();
    Ok((0..q)
        .into_par_iter()
        .filter_map(|i| {
            let w = field.element(i);
            let coords: Vec<FieldElement> = exps.iter().map(|e| field.pow(&w, e)).collect();
            prime_field_image(&field, &prime, &coords).map(AffinePoint)
        })
        .collect())
}

pub fn affine_curve_points(params: &ProjectiveCurveParams, p: u64, max_ext: usize) -> Result<BTreeSet<AffinePoint>> {
    let mut points = BTreeSet::new();
    for k in 1..=max_ext.max(1) {
        points.extend(affine_curve_points_at_degree(params, p, k)?);
    }
    Ok(points)
}

/// Set comparison with explicit witnesses, rendered over `field`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub field: String,
    pub left_count: usize,
    pub right_count: usize,
    pub left_minus_right: Vec<String>,
    pub right_minus_left: Vec<String>,
}

impl EqualityReport {
    pub fn equal(&self) -> bool {
        self.left_minus_right.is_empty() && self.right_minus_left.is_empty()
    }
}

pub fn compare_sets<P: Point>(left: &BTreeSet<P>, right: &BTreeSet<P>, field: &FieldHandle) -> EqualityReport {
    EqualityReport {
        field: field.describe(),
        left_count: left.len(),
        right_count: right.len(),
        left_minus_right: left.difference(right).map(|x| x.render(field)).collect(),
        right_minus_left: right.difference(left).map(|x| x.render(field)).collect(),
    }
}

/// Outcome of matching a variety against curve images of growing extension degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EscalationVerdict {
    /// The variety equals the image at this extension degree.
    Equal { ext: usize },
    /// Variety points still unmatched after degree `ext` (cap or budget reached).
    Unmatched { ext: usize, points: Vec<String> },
    /// Curve points outside the variety: the inclusion `C ⊆ V` failed.
    NotContained { ext: usize, points: Vec<String> },
}

impl EscalationVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, EscalationVerdict::Equal { .. })
    }

    pub fn ext(&self) -> usize {
        match self {
            EscalationVerdict::Equal { ext }
            | EscalationVerdict::Unmatched { ext, .. }
            | EscalationVerdict::NotContained { ext, .. } => *ext,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscalationReport {
    pub verdict: EscalationVerdict,
    /// Comparison at the last degree reached.
    pub report: EqualityReport,
}

/// Limits for [`escalate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EscalationLimits {
    /// Requested extension degree `K`; escalation continues past it up to `cap`.
    pub max_ext: usize,
    pub cap: usize,
    /// Largest `p^k` enumerated.
    pub order_budget: u64,
}

impl EscalationLimits {
    pub fn new(max_ext: usize) -> Self {
        EscalationLimits {
            max_ext,
            cap: max_ext.max(HARD_EXTENSION_CAP),
            order_budget: DEFAULT_ORDER_BUDGET,
        }
    }
}

impl Default for EscalationLimits {
    fn default() -> Self {
        Self::new(6)
    }
}

/// Adds curve images for `k = 1, 2, ...` until they exhaust `variety`, the
/// cap is reached, or `p^k` exceeds the budget.
pub fn escalate<P, F>(
    variety: &BTreeSet<P>,
    p: u64,
    limits: EscalationLimits,
    mut images_at: F,
) -> Result<EscalationReport>
where
    P: Point,
    F: FnMut(usize) -> Result<BTreeSet<P>>,
{
    let prime = FieldHandle::prime(p)?;
    let mut image = BTreeSet::new();
    let mut ext = 0;
    loop {
        let next = ext + 1;
        let within_budget = p.checked_pow(next as u32).is_some_and(|q| q <= limits.order_budget);
        if next > limits.cap || (ext > 0 && !within_budget) {
            let report = compare_sets(variety, &image, &prime);
            let points = report.left_minus_right.clone();
            return Ok(EscalationReport {
                verdict: EscalationVerdict::Unmatched { ext, points },
                report,
            });
        }
        ext = next;
        image.extend(images_at(ext)?);
        let report = compare_sets(variety, &image, &prime);
        if !report.right_minus_left.is_empty() {
            let points = report.right_minus_left.clone();
            return Ok(EscalationReport {
                verdict: EscalationVerdict::NotContained { ext, points },
                report,
            });
        }
        if report.left_minus_right.is_empty() {
            return Ok(EscalationReport {
                verdict: EscalationVerdict::Equal { ext },
                report,
            });
        }
    }
}

/// Escalating comparison of a projective variety with the curve's `F_p`-points.
pub fn escalate_projective(
    variety: &BTreeSet<ProjPoint>,
    params: &ProjectiveCurveParams,
    p: u64,
    limits: EscalationLimits,
) -> Result<EscalationReport> {
    escalate(variety, p, limits, |k| curve_points_at_degree(params, p, k))
}

/// Escalating comparison on the chart `x0 = 1`.
pub fn escalate_affine(
    variety: &BTreeSet<AffinePoint>,
    params: &ProjectiveCurveParams,
    p: u64,
    limits: EscalationLimits,
) -> Result<EscalationReport> {
    escalate(variety, p, limits, |k| affine_curve_points_at_degree(params, p, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableSet;
    use crate::parse::parse_polynomial;

    fn poly(s: &str) -> SparsePolynomial {
        parse_polynomial(s, &VariableSet::projective()).unwrap()
    }

    fn pt(f: &FieldHandle, c: [u64; 4]) -> ProjPoint {
        ProjPoint::new(c.map(|x| f.from_u64(x)), f).unwrap()
    }

    #[test]
    fn evaluation() {
        let f5 = FieldHandle::prime(5).unwrap();
        let ones = [f5.one(); 4];
        assert_eq!(eval(&poly("x1^4 - x0^3*x3"), &ones, &f5).unwrap(), f5.zero());
        let at = [1, 2, 0, 0].map(|x| f5.from_u64(x));
        assert_eq!(eval(&poly("x1 - x0"), &at, &f5).unwrap(), f5.one());
        let g = parse_polynomial("a^4 - 2*a*b*c + c^3", &VariableSet::letters(3)).unwrap();
        let abc = [3, 2, 1].map(|x| f5.from_u64(x));
        assert_eq!(eval(&g, &abc, &f5).unwrap(), f5.zero());
        assert!(eval(&g, &ones, &f5).is_err());
        // 0^0 = 1
        assert_eq!(eval(&poly("x0^0 + 0*x1"), &[f5.zero(); 4], &f5).unwrap(), f5.one());
    }

    #[test]
    fn normalization_is_canonical() {
        let f7 = FieldHandle::prime(7).unwrap();
        assert_eq!(pt(&f7, [0, 2, 4, 6]), pt(&f7, [0, 1, 2, 3]));
        assert!(ProjPoint::new([f7.zero(); 4], &f7).is_none());
    }

    #[test]
    fn small_projective_varieties() {
        let f5 = FieldHandle::prime(5).unwrap();
        let v = projective_variety(&[poly("x0"), poly("x1"), poly("x2")], &f5).unwrap();
        assert_eq!(v.into_iter().collect::<Vec<_>>(), [pt(&f5, [0, 0, 0, 1])]);
        let f2 = FieldHandle::prime(2).unwrap();
        assert_eq!(projective_variety(&[], &f2).unwrap().len(), 15);
        assert!(matches!(
            projective_variety(&[poly("x1 - x0^2")], &f5),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn small_affine_varieties() {
        let v3 = VariableSet::new(["x1", "x2", "x3"]).unwrap();
        let f3 = FieldHandle::prime(3).unwrap();
        let p = |s: &str| parse_polynomial(s, &v3).unwrap();
        assert_eq!(affine_variety(&[p("x1 - x2")], 3, &f3).unwrap().len(), 9);
        let origin = affine_variety(&[p("x1"), p("x2"), p("x3")], 3, &f3).unwrap();
        assert_eq!(origin.into_iter().collect::<Vec<_>>(), [AffinePoint(vec![f3.zero(); 3])]);
    }

    #[test]
    fn quartic_image_over_f5() {
        let c = ProjectiveCurveParams::derive(4, 3, 1).unwrap();
        let f5 = FieldHandle::prime(5).unwrap();
        let pts = curve_points(&c, 5, 1).unwrap();
        assert!(pts.contains(&pt(&f5, [1, 0, 0, 0])));
        assert!(pts.contains(&pt(&f5, [0, 0, 0, 1])));
        for w in 0..5u64 {
            assert!(pts.contains(&pt(&f5, [1, w, w.pow(3), w.pow(4)])));
        }
        assert_eq!(pts.len(), 6);
        let v = projective_variety(&[poly("x1^4 - x0^3*x3"), poly("x1^3 - x0^2*x2"), poly("x2^3 - x1*x3^2")], &f5).unwrap();
        assert!(pts.is_subset(&v));
        assert!(compare_sets(&v, &pts, &f5).equal());
    }

    #[test]
    fn all_ones_point_and_monotonicity() {
        for (d, e1, e2) in [(4, 3, 1), (6, 4, 2), (9, 5, 5)] {
            let c = ProjectiveCurveParams::derive(d, e1, e2).unwrap();
            for p in [2, 3, 5] {
                let f = FieldHandle::prime(p).unwrap();
                let k1 = curve_points(&c, p, 1).unwrap();
                assert!(k1.contains(&pt(&f, [1, 1, 1, 1])));
                assert!(k1.is_subset(&curve_points(&c, p, 2).unwrap()));
            }
        }
    }

    #[test]
    fn witnesses_on_both_sides() {
        let f5 = FieldHandle::prime(5).unwrap();
        let a: BTreeSet<_> = [pt(&f5, [1, 0, 0, 0])].into();
        let r = compare_sets(&a, &BTreeSet::new(), &f5);
        assert!(!r.equal());
        assert_eq!(r.left_minus_right, ["(1:0:0:0)"]);
        assert!(compare_sets(&a, &a, &f5).equal());
    }

    #[test]
    fn escalation_reaches_a_quadratic_extension() {
        // gcd(4, 2, 2) = 2: over F_3 the point (1:2:2:1) needs w^2 = 2, i.e. w in F_9
        let c = ProjectiveCurveParams::derive(4, 2, 2).unwrap();
        let f3 = FieldHandle::prime(3).unwrap();
        let target = pt(&f3, [1, 2, 2, 1]);
        assert!(!curve_points(&c, 3, 1).unwrap().contains(&target));
        assert!(curve_points(&c, 3, 2).unwrap().contains(&target));
        let mut variety = curve_points(&c, 3, 2).unwrap();
        let r = escalate_projective(&variety, &c, 3, EscalationLimits::new(1)).unwrap();
        assert_eq!(r.verdict, EscalationVerdict::Equal { ext: 2 });
        // an extra point can never be matched
        variety.insert(pt(&f3, [1, 0, 1, 0]));
        let limits = EscalationLimits {
            max_ext: 1,
            cap: 4,
            order_budget: DEFAULT_ORDER_BUDGET,
        };
        let r = escalate_projective(&variety, &c, 3, limits).unwrap();
        assert_eq!(
            r.verdict,
            EscalationVerdict::Unmatched {
                ext: 4,
                points: vec!["(1:0:1:0)".to_string()]
            }
        );
        // missing variety points are reported as a failed inclusion
        let r = escalate_projective(&BTreeSet::new(), &c, 3, EscalationLimits::new(1)).unwrap();
        assert!(matches!(r.verdict, EscalationVerdict::NotContained { ext: 1, .. }));
    }

    #[test]
    fn affine_quartic_chart() {
        let c = ProjectiveCurveParams::derive(4, 3, 1).unwrap();
        let f5 = FieldHandle::prime(5).unwrap();
        let chart = [poly("x1^3 - x2"), poly("x0*x3 - x1*x2"), poly("x2^3 - x1*x3^2")];
        let v = affine_chart_variety(&chart, &f5).unwrap();
        for w in 0..5u64 {
            let p = AffinePoint([w, w.pow(3), w.pow(4)].map(|x| f5.from_u64(x)).to_vec());
            assert!(v.contains(&p));
        }
        let r = escalate_affine(&v, &c, 5, EscalationLimits::new(1)).unwrap();
        assert_eq!(r.verdict, EscalationVerdict::Equal { ext: 1 });
    }
}
