use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Binomial, MinorValue, Monomial, VariableSet};

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// No zero coefficient is ever stored. Terms iterate in ascending
/// degree-lex order; [`SparsePolynomial::render`] prints them descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(arity: usize) -> Self {
        SparsePolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, value: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(arity), value)
    }

    pub fn term(monomial: Monomial, coefficient: impl Into<BigInt>) -> Self {
        let mut p = SparsePolynomial::zero(monomial.arity());
        p.add_term(monomial, coefficient.into());
        p
    }

    /// Builds from `(monomial, coefficient)` pairs, merging repeated monomials.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = SparsePolynomial::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: m.arity(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, monomial: Monomial, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// True when every term has the same total degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Substitutes `1` for a variable: its exponent is dropped and like terms merge.
    pub fn set_var_to_one(&self, index: usize) -> SparsePolynomial {
        let mut p = SparsePolynomial::zero(self.arity);
        for (m, c) in &self.terms {
            p.add_term(m.without_var(index), c.clone());
        }
        p
    }

    /// Removes a variable that does not occur, shrinking the arity by one.
    pub fn drop_var(&self, index: usize) -> Result<SparsePolynomial> {
        let mut p = SparsePolynomial::zero(self.arity - 1);
        for (m, c) in &self.terms {
            if !m.exponent(index).is_zero() {
                return Err(Error::InvalidVariables(format!(
                    "variable {index} still occurs in the polynomial"
                )));
            }
            let mut exps = m.exponents().to_vec();
            exps.remove(index);
            p.add_term(Monomial::new(exps), c.clone());
        }
        Ok(p)
    }

    pub fn relabel(&self, perm: &[usize]) -> SparsePolynomial {
        let mut p = SparsePolynomial::zero(self.arity);
        for (m, c) in &self.terms {
            p.add_term(m.relabel(perm), c.clone());
        }
        p
    }

    /// `2*a*b*c`-style terms joined by ` + ` / ` - `, highest term first.
    pub fn render(&self, vars: &VariableSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = c.abs();
            if m.is_one() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&m.render(vars));
            } else {
                out.push_str(&format!("{}*{}", magnitude, m.render(vars)));
            }
        }
        out
    }

    fn check_arity(&self, other: &SparsePolynomial) {
        assert_eq!(
            self.arity, other.arity,
            "polynomial arithmetic over different variable counts"
        );
    }
}

impl From<&Binomial> for SparsePolynomial {
    fn from(b: &Binomial) -> Self {
        let mut p = SparsePolynomial::zero(b.arity());
        p.add_term(b.plus().clone(), BigInt::one());
        p.add_term(b.minus().clone(), -BigInt::one());
        p
    }
}

impl From<Binomial> for SparsePolynomial {
    fn from(b: Binomial) -> Self {
        SparsePolynomial::from(&b)
    }
}

impl SparsePolynomial {
    pub fn from_minor(minor: &MinorValue, arity: usize) -> Self {
        match minor {
            MinorValue::Zero => SparsePolynomial::zero(arity),
            MinorValue::Binomial(b) => b.into(),
        }
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_arity(rhs);
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_arity(rhs);
        let mut p = SparsePolynomial::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                p.add_term(m1.mul(m2).expect("same arity"), c1 * c2);
            }
        }
        p
    }
}
