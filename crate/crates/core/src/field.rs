//! Finite fields `F_p` and `F_{p^k}` for brute-force verification.
//!
//! Elements of `F_{p^k}` are coefficient vectors modulo a monic irreducible
//! polynomial of degree `k`. The modulus is the first irreducible in
//! lexicographic order of `(c_{k-1}, ..., c_0)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 12;

/// Largest supported characteristic (products of two residues fit in `u64`).
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: [u32; MAX_DEGREE],
}

impl FieldElement {
    const ZERO: FieldElement = FieldElement {
        coeffs: [0; MAX_DEGREE],
    };

    /// Coefficients `c_0 .. c_{k-1}` in the polynomial basis.
    pub fn coefficients(&self, degree: usize) -> &[u32] {
        &self.coeffs[..degree]
    }

    /// The value as a residue when it lies in the prime field.
    pub fn as_prime(&self) -> Option<u32> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.coeffs.iter().rposition(|&c| c != 0).unwrap_or(0);
        write!(f, "{:?}", &self.coeffs[..=last])
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomials over `F_p`, lowest coefficient first.
mod dense {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inverse(a: u64, p: u64) -> u64 {
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (p as i128, a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        t.rem_euclid(p as i128) as u64
    }

    /// Remainder of `a` modulo nonzero `b`.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inverse(b[db], p);
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let factor = r[r.len() - 1] * lead_inv % p;
            for (i, &bi) in b.iter().enumerate() {
                let slot = &mut r[shift + i];
                *slot = (*slot + (p - factor) * bi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    /// Monic polynomial of `degree` whose lower coefficients are the base-`p` digits of `index`.
    pub fn monic_from_index(mut index: u64, degree: usize, p: u64) -> Vec<u64> {
        let mut f = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            f.push(index % p);
            index /= p;
        }
        f.push(1);
        f
    }
}

/// Whether a monic polynomial (lowest coefficient first) is irreducible over
/// `F_p`, by trial division against every monic polynomial of degree `<= deg/2`.
pub fn is_irreducible(monic: &[u64], p: u64) -> bool {
    let degree = monic.len() - 1;
    for d in 1..=degree / 2 {
        let count = p.pow(d as u32);
        for index in 0..count {
            let g = dense::monic_from_index(index, d, p);
            if dense::rem(monic, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// `F_q` with `q = p^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldHandle {
    p: u64,
    degree: usize,
    /// Lower coefficients `c_0 .. c_{k-1}` of the monic modulus; empty when `k = 1`.
    modulus: Vec<u64>,
}

impl fmt::Debug for FieldHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl FieldHandle {
    pub fn new(p: u64, degree: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::UnsupportedField(format!("characteristic {p} exceeds {MAX_CHARACTERISTIC}")));
        }
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedField(format!(
                "extension degree {degree} outside 1..={MAX_DEGREE}"
            )));
        }
        if degree == 1 {
            return Ok(FieldHandle {
                p,
                degree,
                modulus: Vec::new(),
            });
        }
        let candidates = p
            .checked_pow(degree as u32)
            .ok_or_else(|| Error::UnsupportedField(format!("F_{p}^{degree} is too large to search")))?;
        for index in 0..candidates {
            let f = dense::monic_from_index(index, degree, p);
            if is_irreducible(&f, p) {
                return Ok(FieldHandle {
                    p,
                    degree,
                    modulus: f[..degree].to_vec(),
                });
            }
        }
        Err(Error::NoIrreducible { p, degree })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The monic modulus, lowest coefficient first (`[c_0, .., c_{k-1}, 1]`).
    pub fn modulus(&self) -> Option<Vec<u64>> {
        (self.degree > 1).then(|| {
            let mut m = self.modulus.clone();
            m.push(1);
            m
        })
    }

    /// `p^k`, or `None` when it does not fit in `u64`.
    pub fn order(&self) -> Option<u64> {
        self.p.checked_pow(self.degree as u32)
    }

    pub fn order_big(&self) -> BigUint {
        BigUint::from(self.p).pow(self.degree as u32)
    }

    pub fn describe(&self) -> String {
        match self.modulus() {
            None => format!("F_{}", self.p),
            Some(m) => {
                let modulus = render_dense(&m, "t");
                format!("F_{}^{} = F_{}[t]/({})", self.p, self.degree, self.p, modulus)
            }
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(&self, value: u64) -> FieldElement {
        let mut e = FieldElement::ZERO;
        e.coeffs[0] = (value % self.p) as u32;
        e
    }

    pub fn from_int(&self, value: &BigInt) -> FieldElement {
        let r = value.mod_floor_u64(self.p);
        self.from_u64(r)
    }

    /// The generator `t` of the polynomial basis (equal to a residue when `k = 1`).
    pub fn generator(&self) -> FieldElement {
        if self.degree == 1 {
            return self.one();
        }
        let mut e = FieldElement::ZERO;
        e.coeffs[1] = 1;
        e
    }

    /// The element whose coefficients are the base-`p` digits of `index`.
    pub fn element(&self, mut index: u64) -> FieldElement {
        let mut e = FieldElement::ZERO;
        for slot in e.coeffs.iter_mut().take(self.degree) {
            *slot = (index % self.p) as u32;
            index /= self.p;
        }
        e
    }

    /// Builds an element from coefficients `c_0 .. c_{k-1}`.
    pub fn from_coefficients(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.degree {
            return Err(Error::ArityMismatch {
                expected: self.degree,
                found: coeffs.len(),
            });
        }
        let mut e = FieldElement::ZERO;
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *slot = (c % self.p) as u32;
        }
        Ok(e)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.order().expect("field order fits in u64");
        (0..q).map(move |i| self.element(i))
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        *a == FieldElement::ZERO
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        let mut out = FieldElement::ZERO;
        for i in 0..self.degree {
            out.coeffs[i] = ((a.coeffs[i] as u64 + b.coeffs[i] as u64) % p) as u32;
        }
        out
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.p;
        let mut out = FieldElement::ZERO;
        for i in 0..self.degree {
            out.coeffs[i] = ((p - a.coeffs[i] as u64) % p) as u32;
        }
        out
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        let k = self.degree;
        if k == 1 {
            return self.from_u64(a.coeffs[0] as u64 * b.coeffs[0] as u64);
        }
        let mut wide = [0u64; 2 * MAX_DEGREE - 1];
        for i in 0..k {
            let ai = a.coeffs[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..k {
                let slot = &mut wide[i + j];
                *slot = (*slot + ai * b.coeffs[j] as u64) % p;
            }
        }
        // t^k = -(c_0 + ... + c_{k-1} t^{k-1})
        for i in (k..2 * k - 1).rev() {
            let c = wide[i];
            if c == 0 {
                continue;
            }
            wide[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let slot = &mut wide[i - k + j];
                *slot = (*slot + (p - c) * m % p) % p;
            }
        }
        let mut out = FieldElement::ZERO;
        for (slot, &w) in out.coeffs.iter_mut().zip(&wide[..k]) {
            *slot = w as u32;
        }
        out
    }

    /// Square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, base: &FieldElement, exponent: &BigUint) -> FieldElement {
        if let Some(e) = exponent.to_u64() {
            return self.pow_u64(base, e);
        }
        let mut acc = self.one();
        for i in (0..exponent.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if exponent.bit(i) {
                acc = self.mul(&acc, base);
            }
        }
        acc
    }

    pub fn pow_u64(&self, base: &FieldElement, mut exponent: u64) -> FieldElement {
        let mut acc = self.one();
        let mut sq = *base;
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            exponent >>= 1;
            if exponent > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if self.is_zero(a) {
            return None;
        }
        let exponent = self.order_big() - BigUint::from(2u32);
        Some(self.pow(a, &exponent))
    }

    /// `e^p = e`, i.e. `e` lies in the prime subfield.
    pub fn in_prime_subfield(&self, e: &FieldElement) -> bool {
        self.pow_u64(e, self.p) == *e
    }

    pub fn render(&self, e: &FieldElement) -> String {
        match e.as_prime() {
            Some(c) => c.to_string(),
            None => {
                let coeffs: Vec<u64> = e.coeffs[..self.degree].iter().map(|&c| c as u64).collect();
                render_dense(&coeffs, "t")
            }
        }
    }
}

fn render_dense(coeffs: &[u64], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let power = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => power,
            _ => format!("{c}*{power}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u64().expect("residue below p")
    }
}

impl FieldHandle {
    pub fn is_zero_int(&self, value: &BigInt) -> bool {
        value.mod_floor_u64(self.p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gf4_modulus() {
        let f = FieldHandle::new(2, 2).unwrap();
        assert_eq!(f.modulus().unwrap(), vec![1, 1, 1]);
        assert_eq!(f.describe(), "F_2^2 = F_2[t]/(t^2 + t + 1)");
    }

    #[test]
    fn prime_field_has_no_modulus() {
        let f = FieldHandle::new(5, 1).unwrap();
        assert!(f.modulus().is_none());
        assert_eq!(f.order(), Some(5));
    }

    #[test]
    fn f169_modulus_is_first_rootless_quadratic() {
        // independent search: a monic quadratic is irreducible iff it has no root
        let p = 13u64;
        let first = (0..p * p)
            .map(|i| (i % p, i / p))
            .find(|&(c0, c1)| (0..p).all(|x| (x * x + c1 * x + c0) % p != 0))
            .unwrap();
        assert_eq!(first, (2, 0));
        let f = FieldHandle::new(13, 2).unwrap();
        assert_eq!(f.modulus().unwrap(), vec![first.0, first.1, 1]);
    }

    #[test]
    fn rejects_non_primes_and_bad_degrees() {
        assert_eq!(FieldHandle::new(9, 1), Err(Error::NotPrime(9)));
        assert_eq!(FieldHandle::new(1, 1), Err(Error::NotPrime(1)));
        assert!(FieldHandle::new(5, 0).is_err());
        assert!(FieldHandle::new(5, MAX_DEGREE + 1).is_err());
    }

    #[test]
    fn zero_powers() {
        let f = FieldHandle::new(7, 3).unwrap();
        assert_eq!(f.pow_u64(&f.zero(), 0), f.one());
        assert_eq!(f.pow_u64(&f.zero(), 5), f.zero());
        let big = BigUint::from(u64::MAX) * BigUint::from(3u32);
        assert_eq!(f.pow(&f.zero(), &big), f.zero());
        assert_eq!(f.pow(&f.one(), &big), f.one());
    }

    #[test]
    fn big_exponent_matches_repeated_small_ones() {
        let f = FieldHandle::new(5, 3).unwrap();
        let t = f.generator();
        // t^(2^64 + 3) = (t^(2^32))^(2^32) * t^3
        let e = (BigUint::from(1u32) << 64) + BigUint::from(3u32);
        let half = f.pow_u64(&t, 1 << 32);
        let expected = f.mul(&f.pow_u64(&half, 1 << 32), &f.pow_u64(&t, 3));
        assert_eq!(f.pow(&t, &e), expected);
    }

    #[test]
    fn multiplicative_group_order() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (7, 2), (2, 5)] {
            let f = FieldHandle::new(p, k).unwrap();
            let q = f.order().unwrap();
            for e in f.elements().skip(1) {
                assert_eq!(f.pow_u64(&e, q - 1), f.one());
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_field() {
        let f = FieldHandle::new(3, 4).unwrap();
        let fixed: Vec<_> = f.elements().filter(|e| f.in_prime_subfield(e)).collect();
        assert_eq!(fixed, vec![f.from_u64(0), f.from_u64(1), f.from_u64(2)]);
    }

    #[test]
    fn reduces_integers() {
        let f = FieldHandle::new(5, 1).unwrap();
        assert_eq!(f.from_int(&BigInt::from(-2)), f.from_u64(3));
        assert!(f.is_zero_int(&BigInt::from(70)));
    }

    fn field_and_triple() -> impl Strategy<Value = (FieldHandle, u64, u64, u64)> {
        prop::sample::select(vec![(2u64, 1usize), (2, 4), (3, 3), (5, 2), (7, 1), (13, 2), (11, 3)]).prop_flat_map(
            |(p, k)| {
                let q = p.pow(k as u32);
                (Just(FieldHandle::new(p, k).unwrap()), 0..q, 0..q, 0..q)
            },
        )
    }

    proptest! {
        #[test]
        fn field_axioms((f, i, j, l) in field_and_triple()) {
            let (a, b, c) = (f.element(i), f.element(j), f.element(l));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            if let Some(inv) = f.inv(&a) {
                prop_assert_eq!(f.mul(&a, &inv), f.one());
            } else {
                prop_assert!(f.is_zero(&a));
            }
        }

        #[test]
        fn frobenius_test_agrees_with_representation((f, i, _j, _l) in field_and_triple()) {
            let e = f.element(i);
            prop_assert_eq!(f.in_prime_subfield(&e), e.as_prime().is_some());
        }
    }
}
