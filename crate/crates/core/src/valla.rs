//! Valla's explicit pair `(f, g)` for the matrix
//! `(a^m, b^n, c^p / b^r, c^s, a^u)`:
//!
//! ```text
//! f = a^m c^s - b^(n+r)
//! g = sum_{k=0}^{n+r} (-1)^(n+r-k) C(n+r,k) a^(k u + tau_k m) b^(sigma_k) c^((n+r-k)(p+s) + tau_k s - n s)
//! ```
//! with `k n = tau_k (n+r) + sigma_k`. When `n = 0` the pair degenerates to
//! `f = a^m c^s - b^r`, `g = a^u - c^(p+s)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::MonomialMatrix;
use crate::monomial::{Binomial, Monomial, VariableSet};
use crate::polynomial::SparsePolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VallaExponents {
    pub m: u64,
    pub n: u64,
    pub p: u64,
    pub r: u64,
    pub s: u64,
    pub u: u64,
}

impl VallaExponents {
    pub fn new(m: u64, n: u64, p: u64, r: u64, s: u64, u: u64) -> Result<Self> {
        for (name, value) in [("m", m), ("p", p), ("r", r), ("s", s), ("u", u)] {
            if value == 0 {
                return Err(Error::InvalidMatrix(format!("exponent {name} must be positive")));
            }
        }
        Ok(VallaExponents { m, n, p, r, s, u })
    }

    /// `(a^m, b^n, c^p / b^r, c^s, a^u)` over `a, b, c`.
    pub fn matrix(&self) -> MonomialMatrix {
        let e = |a: u64, b: u64, c: u64| Monomial::from_u64s(&[a, b, c]);
        MonomialMatrix::new(
            vec![e(self.m, 0, 0), e(0, self.n, 0), e(0, 0, self.p)],
            vec![e(0, self.r, 0), e(0, 0, self.s), e(self.u, 0, 0)],
        )
        .expect("2 x 3 over three variables")
    }
}

/// Exact binomial coefficient by the multiplicative rule.
pub fn binomial_coefficient(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn nonneg(name: &str, value: BigInt) -> Result<BigUint> {
    if value.is_negative() {
        Err(Error::NegativeExponent {
            name: name.to_string(),
            value: value.to_string(),
        })
    } else {
        Ok(value.magnitude().clone())
    }
}

/// The pair `(f, g)`; `g_binomial` keeps the printed orientation of `g` when
/// it is a binomial (the `n = 0` branch).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VallaPair {
    pub f: Binomial,
    pub g: SparsePolynomial,
    pub g_binomial: Option<Binomial>,
}

impl VallaPair {
    pub fn render_g(&self, vars: &VariableSet) -> String {
        match &self.g_binomial {
            Some(b) => b.render(vars),
            None => self.g.render(vars),
        }
    }

    pub fn polynomials(&self) -> [SparsePolynomial; 2] {
        [SparsePolynomial::from(&self.f), self.g.clone()]
    }
}

pub fn valla_fg(e: &VallaExponents) -> Result<VallaPair> {
    let z = BigInt::from;
    let nr = e.n + e.r;
    let f = Binomial::new(Monomial::from_u64s(&[e.m, 0, e.s]), Monomial::from_u64s(&[0, nr, 0]))?;
    if e.n == 0 {
        let g = Binomial::new(Monomial::from_u64s(&[e.u, 0, 0]), Monomial::from_u64s(&[0, 0, e.p + e.s]))?;
        return Ok(VallaPair {
            f,
            g: (&g).into(),
            g_binomial: Some(g),
        });
    }
    let mut terms = Vec::with_capacity(nr as usize + 1);
    for k in 0..=nr {
        let kn = z(k) * z(e.n);
        let tau = &kn / z(nr);
        let sigma = &kn % z(nr);
        let a_exp = nonneg("a", z(k) * z(e.u) + &tau * z(e.m))?;
        let b_exp = nonneg("b", sigma)?;
        let c_exp = nonneg("c", z(nr - k) * z(e.p + e.s) + &tau * z(e.s) - z(e.n) * z(e.s))?;
        let mut coeff = BigInt::from(binomial_coefficient(nr, k));
        if (nr - k) % 2 == 1 {
            coeff = -coeff;
        }
        terms.push((Monomial::new(vec![a_exp, b_exp, c_exp]), coeff));
    }
    let g = SparsePolynomial::from_terms(3, terms)?;
    Ok(VallaPair {
        f,
        g,
        g_binomial: None,
    })
}

/// Checks `m alpha + s gamma = (n+r) beta` and `(m+u) alpha = r beta + p gamma`,
/// the relations under which the matrix minors vanish on `(t^alpha, t^beta, t^gamma)`.
pub fn curve_satisfies_relations(e: &VallaExponents, alpha: u64, beta: u64, gamma: u64) -> bool {
    let z = |x: u64| BigInt::from(x);
    let first = z(e.m) * z(alpha) + z(e.s) * z(gamma) == z(e.n + e.r) * z(beta);
    let second = z(e.m + e.u) * z(alpha) == z(e.r) * z(beta) + z(e.p) * z(gamma);
    first && second
}
