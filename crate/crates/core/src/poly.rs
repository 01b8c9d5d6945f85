//! Exact integer Laurent polynomials in one variable.
//!
//! Coefficients are `i64` and every ring operation is checked; an overflow
//! panics instead of wrapping, because a wrapped coefficient would silently
//! corrupt an exclusion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_degree: i32,
    coeffs: Vec<i64>,
}

#[inline]
fn overflow() -> ! {
    panic!("Laurent polynomial coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_degree: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, degree: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly { min_degree: degree, coeffs: vec![c] }
        }
    }

    pub fn from_coeffs(min_degree: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { min_degree, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let Some(last) = self.coeffs.iter().rposition(|&c| c != 0) else {
            self.coeffs.clear();
            self.min_degree = 0;
            return;
        };
        self.coeffs.truncate(last + 1);
        let first = self.coeffs.iter().position(|&c| c != 0).unwrap();
        if first > 0 {
            self.coeffs.drain(..first);
            self.min_degree += first as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i32 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i32 {
        self.min_degree + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: i32) -> i64 {
        let k = degree - self.min_degree;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// max_degree − min_degree, or 0 for the zero polynomial.
    pub fn span(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.coeffs.len() as i32 - 1
        }
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_degree: self.min_degree + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| a.checked_mul(c).unwrap_or_else(|| overflow()))
                .collect(),
        }
    }

    /// Substitutes x ↦ x^k for a nonzero integer k.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0);
        if self.is_zero() {
            return Self::zero();
        }
        let degrees = (0..self.coeffs.len()).map(|i| (self.min_degree + i as i32) * k);
        let lo = degrees.clone().min().unwrap();
        let hi = degrees.clone().max().unwrap();
        let mut coeffs = vec![0; (hi - lo + 1) as usize];
        for (d, &c) in degrees.zip(&self.coeffs) {
            coeffs[(d - lo) as usize] = c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }

    /// x ↦ x⁻¹.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Divides every exponent by `k`; `None` if some exponent is not a multiple.
    pub fn compress_exponents(&self, k: i32) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut out = Self::zero();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let d = self.min_degree + i as i32;
            if d % k != 0 {
                return None;
            }
            out = &out + &Self::monomial(c, d / k);
        }
        Some(out)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs
            .iter()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .unwrap_or_else(|| overflow())
    }

    pub fn is_palindromic(&self) -> bool {
        self.min_degree + self.max_degree() == 0 && self.coeffs.iter().eq(self.coeffs.iter().rev())
            || self.is_zero()
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_degree - lo) as usize + i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.min_degree - lo) as usize + i];
            *slot = slot.checked_add(c)?;
        }
        Some(LaurentPoly::from_coeffs(lo, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if self.is_zero() || other.is_zero() {
            return Some(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b)?;
                coeffs[i + j] = coeffs[i + j].checked_add(prod)?;
            }
        }
        Some(LaurentPoly::from_coeffs(self.min_degree + other.min_degree, coeffs))
    }

    /// Adds `a * b` into `self` in place.
    pub fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.checked_mul(b).unwrap_or_else(|| overflow());
        *self = self.checked_add(&prod).unwrap_or_else(|| overflow());
    }

    /// Exact division; `None` when `divisor` does not divide `self` in Z[x, x⁻¹].
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = &divisor.coeffs;
        if rem.len() < d.len() {
            return None;
        }
        let lead = *d.last().unwrap();
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![0i64; qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + d.len() - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return None;
            }
            let q = top / lead;
            quot[k] = q;
            for (j, &dj) in d.iter().enumerate() {
                rem[k + j] = rem[k + j].checked_sub(q.checked_mul(dj)?)?;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(self.min_degree - divisor.min_degree, quot))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiplies by ±x^k so the result is symmetric about degree 0 with
    /// value +1 at x = 1. `None` when no such unit multiple exists.
    pub fn normalize_symmetric(&self) -> Option<Self> {
        if self.is_zero() || self.span() % 2 != 0 {
            return None;
        }
        let centred = self.shift(-(self.min_degree + self.span() / 2));
        let value = centred.eval_at_one();
        let out = match value {
            1 => centred,
            -1 => -&centred,
            _ => return None,
        };
        out.is_palindromic().then_some(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).unwrap_or_else(|| overflow())
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(&-rhs).unwrap_or_else(|| overflow())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).unwrap_or_else(|| overflow())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| c.checked_neg().unwrap_or_else(|| overflow()))
                .collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Text form `min_degree;c0,c1,...,ck`; the zero polynomial is `0;`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.min_degree)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let d = self.min_degree + i as i32;
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (a, d) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "x^{d}")?,
                (_, 1) => write!(f, "{a}x")?,
                _ => write!(f, "{a}x^{d}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPolynomial(s.to_string());
        let (deg, body) = s.trim().split_once(';').ok_or_else(bad)?;
        let min_degree = deg.trim().parse::<i32>().map_err(|_| bad())?;
        let body = body.trim();
        if body.is_empty() {
            return Ok(Self::zero());
        }
        let coeffs = body
            .split(',')
            .map(|c| c.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.first() == Some(&0) || coeffs.last() == Some(&0) {
            return Err(bad());
        }
        Ok(LaurentPoly { min_degree, coeffs })
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn text_format() {
        assert_eq!(p("-1;1,-1,1").to_string(), "-1;1,-1,1");
        assert_eq!(LaurentPoly::zero().to_string(), "0;");
        assert_eq!(p("0;"), LaurentPoly::zero());
        assert!("0;0,1".parse::<LaurentPoly>().is_err());
        assert!("x;1".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = p("-1;1,-1,1");
        let b = p("0;1,1");
        assert_eq!(&a * &b, p("-1;1,0,0,1"));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert_eq!(p("0;1,0,1").div_exact(&b), None);
        assert_eq!(p("1;1,2").substitute_power(-4), p("-8;2,0,0,0,1"));
        assert_eq!(p("-8;2,0,0,0,1").compress_exponents(4).unwrap(), p("-2;2,1"));
        assert_eq!(p("-1;2,1").compress_exponents(2), None);
    }

    #[test]
    fn symmetric_normalization() {
        // -(1 - t + t^2) t^3
        let raw = p("3;-1,1,-1");
        assert_eq!(raw.normalize_symmetric().unwrap(), p("-1;1,-1,1"));
        assert_eq!(p("0;1,1").normalize_symmetric(), None);
        assert_eq!(p("0;2").normalize_symmetric(), None);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_detected() {
        let big = LaurentPoly::constant(i64::MAX / 2 + 1);
        let _ = &big + &big;
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-5i32..5, proptest::collection::vec(-20i64..20, 0..6))
            .prop_map(|(d, c)| LaurentPoly::from_coeffs(d, c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
        }

        #[test]
        fn text_roundtrip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
