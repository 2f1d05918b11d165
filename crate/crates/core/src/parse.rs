//! Text formats.
//!
//! A monomial is `*`-separated factors `var` or `var^exp`, or `1` for the
//! empty product. A matrix is rows separated by `;`, entries by `,`.
//! A polynomial is a signed sum of terms, each a monomial optionally led by
//! an integer coefficient factor (`3*a^2*b - c + 4`).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::MonomialMatrix;
use crate::monomial::{Monomial, VariableSet};
use crate::polynomial::SparsePolynomial;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses a product of factors, returning the integer coefficient and the monomial.
fn parse_product(text: &str, vars: &VariableSet) -> Result<(BigUint, Monomial)> {
    let text = text.trim();
    if text.is_empty() {
        return Err(parse_err("empty term"));
    }
    let mut exps = vec![BigUint::zero(); vars.count()];
    let mut coeff = BigUint::one();
    for factor in text.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(parse_err(format!("empty factor in `{text}`")));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            coeff *= factor.parse::<BigUint>().map_err(|e| parse_err(e.to_string()))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp = exp.trim();
                if exp.is_empty() || !exp.chars().all(|c| c.is_ascii_digit()) {
                    return Err(parse_err(format!("bad exponent in `{factor}`")));
                }
                (name.trim(), exp.parse::<BigUint>().map_err(|e| parse_err(e.to_string()))?)
            }
            None => (factor, BigUint::one()),
        };
        let index = vars
            .index_of(name)
            .ok_or_else(|| parse_err(format!("unknown variable `{name}` (expected one of {vars})")))?;
        exps[index] += exp;
    }
    Ok((coeff, Monomial::new(exps)))
}

pub fn parse_monomial(text: &str, vars: &VariableSet) -> Result<Monomial> {
    let (coeff, m) = parse_product(text, vars)?;
    if !coeff.is_one() {
        return Err(parse_err(format!("monomial `{}` carries a coefficient", text.trim())));
    }
    Ok(m)
}

pub fn parse_matrix(text: &str, vars: &VariableSet) -> Result<MonomialMatrix> {
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != 2 {
        return Err(parse_err(format!("expected 2 rows separated by `;`, found {}", rows.len())));
    }
    let parse_row = |row: &str| -> Result<Vec<Monomial>> {
        row.split(',').map(|e| parse_monomial(e, vars)).collect()
    };
    MonomialMatrix::new(parse_row(rows[0])?, parse_row(rows[1])?)
}

pub fn parse_polynomial(text: &str, vars: &VariableSet) -> Result<SparsePolynomial> {
    let mut terms = Vec::new();
    let mut sign = BigInt::one();
    let mut current = String::new();
    let mut flush = |current: &mut String, sign: &BigInt| -> Result<()> {
        let (coeff, m) = parse_product(current, vars)?;
        terms.push((m, sign * BigInt::from(coeff)));
        current.clear();
        Ok(())
    };
    let mut expect_term = true;
    for c in text.chars() {
        match c {
            '+' | '-' if expect_term && current.trim().is_empty() => {
                if c == '-' {
                    sign = -sign;
                }
            }
            '+' | '-' => {
                flush(&mut current, &sign)?;
                sign = if c == '-' { -BigInt::one() } else { BigInt::one() };
                expect_term = true;
            }
            _ => {
                if !c.is_whitespace() {
                    expect_term = false;
                }
                current.push(c);
            }
        }
    }
    if current.trim().is_empty() {
        return Err(parse_err(format!("polynomial `{}` ends without a term", text.trim())));
    }
    flush(&mut current, &sign)?;
    SparsePolynomial::from_terms(vars.count(), terms)
}
