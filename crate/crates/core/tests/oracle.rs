use proptest::prelude::*;

use detcurve::oracle::{
    affine_chart_variety, compare_sets, curve_points, escalate_affine, escalate_projective, eval, projective_variety,
    EscalationLimits,
};
use detcurve::{DefiningSystem, FieldHandle, ProjectiveCurveParams, SparsePolynomial, TripleVariant};

fn curve() -> impl Strategy<Value = ProjectiveCurveParams> {
    (2u64..9)
        .prop_flat_map(|d| (Just(d), 1..d))
        .prop_flat_map(|(d, e1)| (Just(d), Just(e1), 1..=e1))
        .prop_map(|(d, e1, e2)| ProjectiveCurveParams::derive(d, e1, e2).unwrap())
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn curve_lies_in_both_varieties(c in curve(), p in prime(), k in 1usize..3) {
        let field = FieldHandle::prime(p).unwrap();
        let sys = DefiningSystem::new(c, false);
        let points = curve_points(&c, p, k).unwrap();
        for variant in [TripleVariant::Binomials, TripleVariant::Minors] {
            let v = projective_variety(&sys.triple(variant), &field).unwrap();
            prop_assert!(points.is_subset(&v));
        }
    }

    #[test]
    fn both_triples_cut_out_the_same_set(c in curve(), p in prime()) {
        let field = FieldHandle::prime(p).unwrap();
        let sys = DefiningSystem::new(c, false);
        let a = projective_variety(&sys.triple(TripleVariant::Binomials), &field).unwrap();
        let b = projective_variety(&sys.triple(TripleVariant::Minors), &field).unwrap();
        prop_assert!(compare_sets(&a, &b, &field).equal());
    }

    #[test]
    fn varieties_equal_the_curve(c in curve(), p in prime()) {
        let field = FieldHandle::prime(p).unwrap();
        let sys = DefiningSystem::new(c, false);
        let v = projective_variety(&sys.triple(TripleVariant::Minors), &field).unwrap();
        let r = escalate_projective(&v, &c, p, EscalationLimits::new(1)).unwrap();
        prop_assert!(r.verdict.is_equal(), "{:?}", r.verdict);
        let chart = DefiningSystem::new(c, true);
        let va = affine_chart_variety(&chart.triple(TripleVariant::Binomials), &field).unwrap();
        let r = escalate_affine(&va, &c, p, EscalationLimits::new(1)).unwrap();
        prop_assert!(r.verdict.is_equal(), "{:?}", r.verdict);
    }

    // ring operations commute with evaluation
    #[test]
    fn evaluation_is_a_ring_homomorphism(c in curve(), p in prime(), coords in prop::array::uniform4(0u64..7)) {
        let field = FieldHandle::prime(p).unwrap();
        let point = coords.map(|x| field.from_u64(x));
        let sys = DefiningSystem::new(c, false);
        let [f, g, h] = [&sys.f, &sys.f1, &sys.m2].map(SparsePolynomial::from);
        let at = |q: &SparsePolynomial| eval(q, &point, &field).unwrap();
        prop_assert_eq!(at(&(&f * &(&g + &h))), field.add(&field.mul(&at(&f), &at(&g)), &field.mul(&at(&f), &at(&h))));
        prop_assert_eq!(at(&(&(&f * &g) * &h)), field.mul(&at(&f), &field.mul(&at(&g), &at(&h))));
        prop_assert_eq!(at(&(&f - &g)), field.sub(&at(&f), &at(&g)));
    }
}

#[test]
fn non_coprime_curve_needs_a_quadratic_extension() {
    let c = ProjectiveCurveParams::derive(4, 2, 2).unwrap();
    assert_eq!(c.common_gcd(), 2);
    let field = FieldHandle::prime(3).unwrap();
    let sys = DefiningSystem::new(c, false);
    let v = projective_variety(&sys.triple(TripleVariant::Binomials), &field).unwrap();
    let r = escalate_projective(&v, &c, 3, EscalationLimits::new(1)).unwrap();
    assert_eq!(r.verdict.ext(), 2);
    assert!(r.verdict.is_equal());
}

#[test]
fn extension_fields_enumerate() {
    let c = ProjectiveCurveParams::derive(3, 2, 1).unwrap();
    let f4 = FieldHandle::new(2, 2).unwrap();
    let sys = DefiningSystem::new(c, false);
    // the twisted cubic has q + 1 points over F_q
    let v = projective_variety(&sys.triple(TripleVariant::Minors), &f4).unwrap();
    assert_eq!(v.len(), 5);
}
