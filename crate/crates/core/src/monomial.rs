//! Monomials and binomials over a fixed list of named variables.
//!
//! Exponents are arbitrary-precision nonnegative integers. Monomials are
//! compared in degree-lexicographic order: total degree first, then the
//! exponent vectors lexicographically with variable 0 most significant.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Ordered, pairwise distinct display names for the ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidVariables("no variables given".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidVariables(format!("bad variable name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidVariables(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VariableSet { names })
    }

    /// `x0, x1, x2, x3`, the projective coordinates of 3-space.
    pub fn projective() -> Self {
        Self::indexed("x", 4)
    }

    /// `{prefix}0 .. {prefix}{count-1}`.
    pub fn indexed(prefix: &str, count: usize) -> Self {
        VariableSet {
            names: (0..count).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// `a, b, c, ...` (at most 26).
    pub fn letters(count: usize) -> Self {
        assert!((1..=26).contains(&count), "letters() supports 1..=26 variables");
        VariableSet {
            names: (b'a'..b'a' + count as u8).map(|c| (c as char).to_string()).collect(),
        }
    }

    pub fn count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Reorders names so that variable `i` is displayed as `self.name(perm[i])`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.count() {
            return Err(Error::ArityMismatch {
                expected: self.count(),
                found: perm.len(),
            });
        }
        VariableSet::new(perm.iter().map(|&j| self.names[j].clone()))
    }
}

/// A power product `x_0^{e_0} ... x_{n-1}^{e_{n-1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<BigUint>,
}

impl Monomial {
    pub fn new(exponents: Vec<BigUint>) -> Self {
        Monomial { exponents }
    }

    pub fn from_u64s(exponents: &[u64]) -> Self {
        Monomial {
            exponents: exponents.iter().map(|&e| BigUint::from(e)).collect(),
        }
    }

    /// The empty product over `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial {
            exponents: vec![BigUint::zero(); arity],
        }
    }

    /// `x_index^exponent`.
    pub fn var_power(arity: usize, index: usize, exponent: impl Into<BigUint>) -> Self {
        let mut m = Monomial::one(arity);
        m.exponents[index] = exponent.into();
        m
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[BigUint] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> &BigUint {
        &self.exponents[index]
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(Zero::is_zero)
    }

    pub fn degree(&self) -> BigUint {
        self.exponents.iter().sum()
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.arity() == other.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            })
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        })
    }

    /// True when `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> bool {
        self.arity() == other.arity()
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// Indices of the variables occurring with positive exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .map(|e| if e.is_zero() { BigUint::zero() } else { BigUint::one() })
                .collect(),
        }
    }

    /// Copy with the exponent of `index` set to zero.
    pub fn without_var(&self, index: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[index] = BigUint::zero();
        m
    }

    /// Reindexes variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Monomial {
        let mut exponents = vec![BigUint::zero(); self.arity()];
        for (i, e) in self.exponents.iter().enumerate() {
            exponents[perm[i]] = e.clone();
        }
        Monomial { exponents }
    }

    /// Text form: `*`-separated `var^exp` factors in variable order, `1` for the empty product.
    pub fn render(&self, vars: &VariableSet) -> String {
        debug_assert_eq!(vars.count(), self.arity());
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| {
                if e.is_one() {
                    vars.name(i).to_string()
                } else {
                    format!("{}^{}", vars.name(i), e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
            .then_with(|| self.arity().cmp(&other.arity()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A difference of two distinct monomials.
///
/// The pair is stored canonically (`lead > trail` in degree-lex order) and the
/// value is `lead - trail`, or its negative when `negated` is set. Building
/// from `(m, n)` and from `(n, m)` yields the same stored pair with opposite
/// signs. Rendering follows the construction orientation, so a binomial
/// built as `plus - minus` always prints as `plus - minus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
    negated: bool,
}

impl Binomial {
    /// The binomial `plus - minus`.
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Self> {
        plus.check_arity(&minus)?;
        match plus.cmp(&minus) {
            Ordering::Equal => Err(Error::DegenerateBinomial),
            Ordering::Greater => Ok(Binomial {
                lead: plus,
                trail: minus,
                negated: false,
            }),
            Ordering::Less => Ok(Binomial {
                lead: minus,
                trail: plus,
                negated: true,
            }),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    /// The term carrying coefficient `+1`.
    pub fn plus(&self) -> &Monomial {
        if self.negated {
            &self.trail
        } else {
            &self.lead
        }
    }

    /// The term carrying coefficient `-1`.
    pub fn minus(&self) -> &Monomial {
        if self.negated {
            &self.lead
        } else {
            &self.trail
        }
    }

    pub fn arity(&self) -> usize {
        self.lead.arity()
    }

    pub fn negate(&self) -> Binomial {
        Binomial {
            negated: !self.negated,
            ..self.clone()
        }
    }

    /// Equal as sets of two monomials, ignoring the sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self.lead == other.lead && self.trail == other.trail
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.trail.degree()
    }

    /// Greatest monomial dividing both terms.
    pub fn monomial_content(&self) -> Monomial {
        self.lead.gcd(&self.trail).expect("terms share arity")
    }

    pub fn relabel(&self, perm: &[usize]) -> Binomial {
        Binomial::new(self.plus().relabel(perm), self.minus().relabel(perm))
            .expect("relabeling is injective")
    }

    pub fn render(&self, vars: &VariableSet) -> String {
        format!("{} - {}", self.plus().render(vars), self.minus().render(vars))
    }
}

/// A 2-minor: either a genuine binomial or zero (both products coincide).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MinorValue {
    Zero,
    Binomial(Binomial),
}

impl MinorValue {
    pub fn from_products(plus: Monomial, minus: Monomial) -> Result<MinorValue> {
        match Binomial::new(plus, minus) {
            Ok(b) => Ok(MinorValue::Binomial(b)),
            Err(Error::DegenerateBinomial) => Ok(MinorValue::Zero),
            Err(e) => Err(e),
        }
    }

    pub fn as_binomial(&self) -> Option<&Binomial> {
        match self {
            MinorValue::Zero => None,
            MinorValue::Binomial(b) => Some(b),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, MinorValue::Zero)
    }

    pub fn negate(&self) -> MinorValue {
        match self {
            MinorValue::Zero => MinorValue::Zero,
            MinorValue::Binomial(b) => MinorValue::Binomial(b.negate()),
        }
    }

    pub fn render(&self, vars: &VariableSet) -> String {
        match self {
            MinorValue::Zero => "0".to_string(),
            MinorValue::Binomial(b) => b.render(vars),
        }
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(","))
    }
}
