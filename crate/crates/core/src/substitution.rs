//! Symbolic substitution of monomial parametrizations.
//!
//! A polynomial vanishes on the curve `x_i = t^{row_i}` exactly when the
//! substituted polynomial in the parameters is zero after collecting terms.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::curve::ProjectiveCurveParams;
use crate::error::{Error, Result};
use crate::monomial::{Binomial, MinorValue, Monomial, VariableSet};
use crate::polynomial::SparsePolynomial;

/// `x_i = prod_j t_j^{rows[i][j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialParametrization {
    rows: Vec<Vec<BigUint>>,
    parameters: usize,
}

impl MonomialParametrization {
    pub fn new(rows: Vec<Vec<BigUint>>) -> Result<Self> {
        let parameters = rows.first().map_or(0, Vec::len);
        if parameters == 0 {
            return Err(Error::InvalidVariables("parametrization needs at least one parameter".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != parameters) {
            return Err(Error::ArityMismatch {
                expected: parameters,
                found: r.len(),
            });
        }
        Ok(MonomialParametrization { rows, parameters })
    }

    /// One-parameter curve `x_i = t^{e_i}`.
    pub fn univariate(exponents: &[u64]) -> Self {
        MonomialParametrization {
            rows: exponents.iter().map(|&e| vec![BigUint::from(e)]).collect(),
            parameters: 1,
        }
    }

    /// `(xi, w)` parametrization of the projective curve.
    pub fn projective_curve(params: &ProjectiveCurveParams) -> Self {
        Self::new(params.parametrization().projective_rows()).expect("two parameters")
    }

    /// The chart `xi = 1` of the projective curve.
    pub fn affine_curve(params: &ProjectiveCurveParams) -> Self {
        Self::new(params.parametrization().affine_rows()).expect("one parameter")
    }

    pub fn variables(&self) -> usize {
        self.rows.len()
    }

    pub fn parameters(&self) -> usize {
        self.parameters
    }

    pub fn parameter_names(&self) -> VariableSet {
        match self.parameters {
            1 => VariableSet::new(["t"]).expect("valid"),
            2 => VariableSet::new(["xi", "w"]).expect("valid"),
            k => VariableSet::indexed("t", k),
        }
    }

    pub fn image_of(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![BigUint::zero(); self.parameters];
        for (e, row) in m.exponents().iter().zip(&self.rows) {
            if e.is_zero() {
                continue;
            }
            for (slot, r) in exps.iter_mut().zip(row) {
                *slot += e * r;
            }
        }
        Monomial::new(exps)
    }

    pub fn substitute(&self, poly: &SparsePolynomial) -> Result<SparsePolynomial> {
        if poly.arity() != self.variables() {
            return Err(Error::ArityMismatch {
                expected: self.variables(),
                found: poly.arity(),
            });
        }
        SparsePolynomial::from_terms(
            self.parameters,
            poly.terms().map(|(m, c)| (self.image_of(m), c.clone())),
        )
    }

    pub fn vanishes(&self, poly: &SparsePolynomial) -> Result<VanishingReport> {
        let image = self.substitute(poly)?;
        let witnesses = image
            .terms()
            .rev()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(VanishingReport {
            vanishes: image.is_zero(),
            image,
            witnesses,
        })
    }
}

/// Outcome of substituting a parametrization into a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub vanishes: bool,
    /// The substituted polynomial in the parameters.
    pub image: SparsePolynomial,
    /// Surviving parameter terms, highest first; empty when `vanishes`.
    pub witnesses: Vec<(Monomial, BigInt)>,
}

/// Substitutes the curve parametrization into a polynomial over `x0..x3`.
pub fn symbolic_vanishes_on_curve(poly: &SparsePolynomial, params: &ProjectiveCurveParams) -> Result<VanishingReport> {
    MonomialParametrization::projective_curve(params).vanishes(poly)
}

/// Same as [`symbolic_vanishes_on_curve`] on the chart `x0 = xi = 1`.
pub fn symbolic_vanishes_on_affine_curve(
    poly: &SparsePolynomial,
    params: &ProjectiveCurveParams,
) -> Result<VanishingReport> {
    MonomialParametrization::affine_curve(params).vanishes(poly)
}

/// `x0 := 1` on a binomial, keeping its orientation; merged terms give `Zero`.
pub fn specialize_binomial(b: &Binomial) -> MinorValue {
    MinorValue::from_products(b.plus().without_var(0), b.minus().without_var(0))
        .expect("terms share arity")
}

/// `x0 := 1`.
pub fn affine_specialize(poly: &SparsePolynomial) -> SparsePolynomial {
    poly.set_var_to_one(0)
}
