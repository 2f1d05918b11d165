//! Exponent data of the monomial curve
//! `(xi^d : xi^e1 w^(d-e1) : xi^e2 w^(d-e2) : w^d)` in projective 3-space.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::VariableSet;

/// All quantities derived from the curve exponents `(delta, eps1, eps2)`.
///
/// Requires `0 < eps2 <= eps1 < delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveCurveParams {
    pub delta: u64,
    pub eps1: u64,
    pub eps2: u64,
    /// `delta - eps1`
    pub phi1: u64,
    /// `delta - eps2`
    pub phi2: u64,
    /// `gcd(delta, eps1)`
    pub dgcd: u64,
    /// `gcd(eps1, eps2)`
    pub egcd: u64,
    /// `gcd(phi1, phi2)`
    pub fgcd: u64,
    pub dstar: u64,
    pub e1star: u64,
    pub f1star: u64,
    pub m: u64,
    pub p: u64,
    pub n: u64,
    pub u: u64,
    pub v: u64,
    pub w: u64,
}

impl ProjectiveCurveParams {
    pub fn derive(delta: u64, eps1: u64, eps2: u64) -> Result<Self> {
        if delta == 0 || eps1 == 0 || eps2 == 0 {
            return Err(Error::InvalidCurve(format!(
                "exponents must be positive, got ({delta}, {eps1}, {eps2})"
            )));
        }
        if eps1 >= delta {
            return Err(Error::InvalidCurve(format!(
                "eps1 = {eps1} must be smaller than delta = {delta}"
            )));
        }
        if eps2 > eps1 {
            return Err(Error::InvalidCurve(format!(
                "eps2 = {eps2} exceeds eps1 = {eps1}; normalize the orientation first"
            )));
        }
        let phi1 = delta - eps1;
        let phi2 = delta - eps2;
        let dgcd = delta.gcd(&eps1);
        let egcd = eps1.gcd(&eps2);
        let fgcd = phi1.gcd(&phi2);
        let m = phi2 / fgcd;
        let p = phi1 / fgcd;
        let u = eps1 / egcd;
        let v = eps2 / egcd;
        Ok(ProjectiveCurveParams {
            delta,
            eps1,
            eps2,
            phi1,
            phi2,
            dgcd,
            egcd,
            fgcd,
            dstar: delta / dgcd,
            e1star: eps1 / dgcd,
            f1star: phi1 / dgcd,
            m,
            p,
            n: m - p,
            u,
            v,
            w: u - v,
        })
    }

    /// `(xi, w)` exponent pairs of `x0..x3` under the parametrization.
    pub fn parametrization(&self) -> ParametrizationExponents {
        ParametrizationExponents {
            pairs: [
                (self.delta, 0),
                (self.eps1, self.phi1),
                (self.eps2, self.phi2),
                (0, self.delta),
            ],
        }
    }

    /// `gcd(delta, eps1, eps2)`.
    pub fn common_gcd(&self) -> u64 {
        self.delta.gcd(&self.eps1).gcd(&self.eps2)
    }

    /// Named quantities in display order.
    pub fn table(&self) -> Vec<(&'static str, u64)> {
        vec![
            ("delta", self.delta),
            ("eps1", self.eps1),
            ("eps2", self.eps2),
            ("phi1", self.phi1),
            ("phi2", self.phi2),
            ("dgcd", self.dgcd),
            ("egcd", self.egcd),
            ("fgcd", self.fgcd),
            ("dstar", self.dstar),
            ("e1star", self.e1star),
            ("f1star", self.f1star),
            ("m", self.m),
            ("p", self.p),
            ("n", self.n),
            ("u", self.u),
            ("v", self.v),
            ("w", self.w),
        ]
    }

    /// Checks the integer identities that put `f`, `f1`, `f2` and the third
    /// minor into the curve ideal. All evaluated in signed big integers.
    pub fn check_identities(&self) -> IdentityReport {
        let z = |x: u64| BigInt::from(x);
        let (d, e1, e2) = (z(self.delta), z(self.eps1), z(self.eps2));
        let (f1, f2) = (z(self.phi1), z(self.phi2));
        let (ds, e1s, f1s) = (z(self.dstar), z(self.e1star), z(self.f1star));
        let (m, p, n) = (z(self.m), z(self.p), z(self.n));
        let (u, v, w) = (z(self.u), z(self.v), z(self.w));
        let checks = vec![
            IdentityCheck::new("eps1*dstar = e1star*delta", &e1 * &ds, &e1s * &d),
            IdentityCheck::new("phi1*dstar = f1star*delta", &f1 * &ds, &f1s * &d),
            IdentityCheck::new("eps1*m = delta*n + eps2*p", &e1 * &m, &d * &n + &e2 * &p),
            IdentityCheck::new("phi1*m = phi2*p", &f1 * &m, &f2 * &p),
            IdentityCheck::new("eps2*u = eps1*v", &e2 * &u, &e1 * &v),
            IdentityCheck::new("phi2*u = phi1*v + delta*w", &f2 * &u, &f1 * &v + &d * &w),
            IdentityCheck::new(
                "eps1*(dstar - m) = (e1star - n)*delta - eps2*p",
                &e1 * (&ds - &m),
                (&e1s - &n) * &d - &e2 * &p,
            ),
            IdentityCheck::new("dgcd*dstar = delta", z(self.dgcd) * &ds, d.clone()),
            IdentityCheck::new("dgcd*e1star = eps1", z(self.dgcd) * &e1s, e1.clone()),
            IdentityCheck::new("dgcd*f1star = phi1", z(self.dgcd) * &f1s, f1.clone()),
            IdentityCheck::new("fgcd*m = phi2", z(self.fgcd) * &m, f2.clone()),
            IdentityCheck::new("fgcd*p = phi1", z(self.fgcd) * &p, f1.clone()),
            IdentityCheck::new("egcd*u = eps1", z(self.egcd) * &u, e1.clone()),
            IdentityCheck::new("egcd*v = eps2", z(self.egcd) * &v, e2.clone()),
        ];
        IdentityReport { checks }
    }
}

/// One identity with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    fn new(name: &'static str, lhs: BigInt, rhs: BigInt) -> Self {
        IdentityCheck { name, lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

/// Per coordinate `x_i`, the exponents `(a_i, b_i)` with `x_i = xi^a_i w^b_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParametrizationExponents {
    pub pairs: [(u64, u64); 4],
}

impl ParametrizationExponents {
    /// Parameter exponent vectors, one `[xi, w]` row per coordinate.
    pub fn projective_rows(&self) -> Vec<Vec<BigUint>> {
        self.pairs
            .iter()
            .map(|&(a, b)| vec![BigUint::from(a), BigUint::from(b)])
            .collect()
    }

    /// Rows for the affine chart `xi = 1`: only the `w` exponent survives.
    pub fn affine_rows(&self) -> Vec<Vec<BigUint>> {
        self.pairs.iter().map(|&(_, b)| vec![BigUint::from(b)]).collect()
    }
}

/// How user coordinates map onto the internal `x0..x3`.
///
/// `perm[i]` is the user coordinate shown for internal variable `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub perm: [usize; 4],
    pub exchanged_parameters: bool,
}

impl Relabeling {
    pub fn identity() -> Self {
        Relabeling {
            perm: [0, 1, 2, 3],
            exchanged_parameters: false,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm == [0, 1, 2, 3]
    }

    /// Internal variable names spelled in the user's coordinates.
    pub fn apply_to(&self, vars: &VariableSet) -> VariableSet {
        vars.permuted(&self.perm).expect("permutation of four names")
    }

    pub fn compose(&self, other: &Relabeling) -> Relabeling {
        let mut perm = [0; 4];
        for (i, slot) in perm.iter_mut().enumerate() {
            *slot = self.perm[other.perm[i]];
        }
        Relabeling {
            perm,
            exchanged_parameters: self.exchanged_parameters ^ other.exchanged_parameters,
        }
    }
}

/// Accepts the exponents of `x1` and `x2` in either order. When `e_x1 < e_x2`
/// the roles of the two parameters are exchanged, which maps each exponent
/// `e` to `delta - e` and swaps `x0` with `x3`.
pub fn normalize_orientation(delta: u64, e_x1: u64, e_x2: u64) -> Result<(ProjectiveCurveParams, Relabeling)> {
    for e in [e_x1, e_x2] {
        if e == 0 || e >= delta {
            return Err(Error::InvalidCurve(format!(
                "exponent {e} must lie strictly between 0 and delta = {delta}"
            )));
        }
    }
    if e_x1 >= e_x2 {
        Ok((ProjectiveCurveParams::derive(delta, e_x1, e_x2)?, Relabeling::identity()))
    } else {
        let params = ProjectiveCurveParams::derive(delta, delta - e_x1, delta - e_x2)?;
        Ok((
            params,
            Relabeling {
                perm: [3, 1, 2, 0],
                exchanged_parameters: true,
            },
        ))
    }
}

/// An affine curve `(t^a, t^b, t^c)` read as the chart `x0 = 1` of a projective one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineCurve {
    pub params: ProjectiveCurveParams,
    /// Internal variable `i` is user coordinate `relabeling.perm[i]` (`x0` stays fixed).
    pub relabeling: Relabeling,
    pub exponents: (u64, u64, u64),
}

/// Sorts `(a, b, c)` ascending and sets `delta = c`, `phi1 = a`, `phi2 = b`.
pub fn from_affine(a: u64, b: u64, c: u64) -> Result<AffineCurve> {
    let mut order = [(a, 1usize), (b, 2), (c, 3)];
    order.sort();
    let [(s0, i0), (s1, i1), (s2, i2)] = order;
    if s0 == 0 {
        return Err(Error::InvalidCurve("affine exponents must be positive".into()));
    }
    if s0 == s1 || s1 == s2 {
        return Err(Error::InvalidCurve(format!(
            "affine exponents must be distinct, got ({a}, {b}, {c})"
        )));
    }
    let params = ProjectiveCurveParams::derive(s2, s2 - s0, s2 - s1)?;
    Ok(AffineCurve {
        params,
        relabeling: Relabeling {
            perm: [0, i0, i1, i2],
            exchanged_parameters: false,
        },
        exponents: (a, b, c),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
            CaseTag::IV => "IV",
        })
    }
}

impl std::str::FromStr for CaseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(CaseTag::I),
            "II" => Ok(CaseTag::II),
            "III" => Ok(CaseTag::III),
            "IV" => Ok(CaseTag::IV),
            other => Err(Error::Parse(format!("unknown case tag `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_quartic() {
        let c = ProjectiveCurveParams::derive(4, 3, 1).unwrap();
        assert_eq!(
            (c.dstar, c.e1star, c.f1star, c.m, c.p, c.n, c.u, c.v, c.w),
            (4, 3, 1, 3, 1, 2, 3, 1, 2)
        );
        let report = c.check_identities();
        assert!(report.all_hold());
        let e = &report.checks[2];
        assert_eq!((e.lhs.clone(), e.rhs.clone()), (BigInt::from(9), BigInt::from(9)));
    }

    #[test]
    fn seventy_sixty_six_fifteen() {
        let c = ProjectiveCurveParams::derive(70, 66, 15).unwrap();
        assert_eq!((c.dgcd, c.egcd, c.fgcd), (2, 3, 1));
        assert_eq!(
            (c.dstar, c.e1star, c.f1star, c.m, c.p, c.n, c.u, c.v, c.w),
            (35, 33, 2, 55, 4, 51, 22, 5, 17)
        );
        let report = c.check_identities();
        assert!(report.all_hold());
        assert_eq!(report.checks[2].lhs, BigInt::from(3630));
    }

    #[test]
    fn conic_is_degenerate_but_valid() {
        let c = ProjectiveCurveParams::derive(2, 1, 1).unwrap();
        assert_eq!((c.m, c.p, c.u, c.v, c.n, c.w, c.dstar), (1, 1, 1, 1, 0, 0, 2));
        let report = c.check_identities();
        assert!(report.all_hold());
        assert_eq!(report.checks[4].lhs, BigInt::from(1));
    }

    #[test]
    fn invalid_inputs() {
        assert!(ProjectiveCurveParams::derive(4, 5, 1).is_err());
        assert!(ProjectiveCurveParams::derive(4, 4, 1).is_err());
        assert!(ProjectiveCurveParams::derive(4, 1, 3).is_err());
        assert!(ProjectiveCurveParams::derive(4, 3, 0).is_err());
        assert!(ProjectiveCurveParams::derive(0, 0, 0).is_err());
    }

    #[test]
    fn orientation() {
        let (c, r) = normalize_orientation(4, 3, 1).unwrap();
        assert!(r.is_identity());
        assert_eq!((c.eps1, c.eps2), (3, 1));

        let (c, r) = normalize_orientation(4, 1, 3).unwrap();
        assert_eq!((c.eps1, c.eps2), (3, 1));
        assert_eq!(r.perm, [3, 1, 2, 0]);
        assert!(r.exchanged_parameters);
        assert!(r.compose(&r).is_identity());
        assert!(!r.compose(&r).exchanged_parameters);

        let (c, r) = normalize_orientation(5, 2, 2).unwrap();
        assert!(r.is_identity());
        assert_eq!(c.w, 0);

        assert!(normalize_orientation(4, 0, 2).is_err());
        assert!(normalize_orientation(4, 4, 2).is_err());
    }

    #[test]
    fn affine_inputs() {
        let c = from_affine(1, 2, 3).unwrap().params;
        assert_eq!((c.delta, c.eps1, c.eps2), (3, 2, 1));
        let c = from_affine(1, 3, 4).unwrap().params;
        assert_eq!((c.delta, c.eps1, c.eps2), (4, 3, 1));
        let c = from_affine(4, 55, 70).unwrap().params;
        assert_eq!((c.delta, c.eps1, c.eps2), (70, 66, 15));

        let shuffled = from_affine(3, 1, 2).unwrap();
        assert_eq!(shuffled.params, from_affine(1, 2, 3).unwrap().params);
        // internal x1 (exponent 1) is the user's second coordinate
        assert_eq!(shuffled.relabeling.perm, [0, 2, 3, 1]);

        assert!(from_affine(1, 1, 3).is_err());
        assert!(from_affine(0, 1, 3).is_err());
    }

    #[test]
    fn parametrization_is_homogeneous() {
        let c = ProjectiveCurveParams::derive(70, 66, 15).unwrap();
        for (a, b) in c.parametrization().pairs {
            assert_eq!(a + b, 70);
        }
    }

    fn valid_triple(max_delta: u64) -> impl Strategy<Value = (u64, u64, u64)> {
        (2..=max_delta)
            .prop_flat_map(|d| (Just(d), 1..d))
            .prop_flat_map(|(d, e1)| (Just(d), Just(e1), 1..=e1))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn identities_hold((d, e1, e2) in valid_triple(10_000)) {
            let c = ProjectiveCurveParams::derive(d, e1, e2).unwrap();
            let report = c.check_identities();
            prop_assert!(report.all_hold(), "{:?}", report.failures().collect::<Vec<_>>());
            prop_assert!(c.phi2 >= c.phi1 && c.phi1 > 0);
        }

        #[test]
        fn affine_roundtrip(a in 1u64..500, db in 1u64..500, dc in 1u64..500) {
            let (b, c) = (a + db, a + db + dc);
            let curve = from_affine(a, b, c).unwrap();
            prop_assert_eq!((curve.params.phi1, curve.params.phi2, curve.params.delta), (a, b, c));
        }
    }
}
