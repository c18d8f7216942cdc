//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::ExactRing;

/// Sparse map from exponent to coefficient; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable t.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `coeffs[i]` is the coefficient of t^(lowest + i).
    pub fn from_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(lowest + i as i64, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by t^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// t ↦ t⁻¹.
    pub fn mirror(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.mirror()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at t = v. Fails when negative powers leave a non-integer.
    pub fn evaluate(&self, v: &BigInt) -> Result<BigInt> {
        let Some(lo) = self.min_exp() else {
            return Ok(BigInt::zero());
        };
        let lo = lo.min(0);
        if v.is_zero() && lo < 0 {
            return Err(Error::OutOfDomain("negative powers of t at t = 0".into()));
        }
        // t^(-lo) · p(t) is a polynomial; evaluate it, then divide back out
        let mut acc = BigInt::zero();
        let mut power = BigInt::one();
        let mut exp = lo;
        for (&e, c) in &self.terms {
            while exp < e {
                power *= v;
                exp += 1;
            }
            acc += c * &power;
        }
        let denom = num_traits::pow(v.clone(), (-lo) as usize);
        let (q, r) = acc.div_rem(&denom);
        if !r.is_zero() {
            return Err(Error::OutOfDomain(format!("{self} is not integral at t = {v}")));
        }
        Ok(q)
    }

    pub fn evaluate_i64(&self, v: i64) -> Result<BigInt> {
        self.evaluate(&BigInt::from(v))
    }

    /// Exact quotient `self / divisor`, or `None` when the divisor does not
    /// divide in ℤ[t, t⁻¹].
    pub fn div_exact(&self, divisor: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        let (dlo, dhi) = (divisor.min_exp()?, divisor.max_exp()?);
        let Some(alo) = self.min_exp() else {
            return Some(Self::zero());
        };
        // Both shifted to have nonzero constant term; t is prime to the divisor.
        let mut rem = self.shift(-alo);
        let d = divisor.shift(-dlo);
        let dlead = d.coeff(dhi - dlo);
        let ddeg = dhi - dlo;
        let mut quotient = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < ddeg {
                return None;
            }
            let (q, r) = rem.coeff(top).div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let term = Self::monomial(q, top - ddeg);
            rem = &rem - &(&term * &d);
            quotient = &quotient + &term;
        }
        Some(quotient.shift(alo - dlo))
    }

    pub(crate) fn fmt_with_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str(var)?;
                    if e != 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with_var(f, "t")
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl ExactRing for LaurentPolynomial {
    fn ring_zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn ring_one() -> Self {
        LaurentPolynomial::one()
    }
    fn is_ring_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        LaurentPolynomial::div_exact(self, divisor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(lowest: i64, c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(lowest, c)
    }

    #[test]
    fn arithmetic_examples() {
        let a = lp(0, &[-1, 1]); // t - 1
        let b = lp(-1, &[1, -1]); // t^-1 - 1
        assert_eq!(&a * &b, lp(-1, &[-1, 2, -1]));
        assert_eq!(lp(0, &[3, 0, 1]).mirror(), lp(-2, &[1, 0, 3]));
        assert_eq!(lp(-1, &[1, -1, 1]).evaluate_i64(-1).unwrap(), BigInt::from(-3));
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &b, lp(-1, &[1, -2, 1]));
    }

    #[test]
    fn display_lowest_first() {
        assert_eq!(lp(-1, &[1, -1, 1]).to_string(), "t^-1 - 1 + t");
        assert_eq!(lp(-1, &[-1, 3, -1]).to_string(), "-t^-1 + 3 - t");
        assert_eq!(lp(0, &[0, 0, 2]).to_string(), "2*t^2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let num = lp(0, &[-1, 0, 0, -1]); // -(1 + t^3)
        let q = num.div_exact(&lp(0, &[1, 1])).unwrap();
        assert_eq!(q, lp(0, &[-1, 1, -1]));
        assert!(lp(0, &[1, 0, 1]).div_exact(&lp(0, &[1, 1])).is_none());
        assert!(lp(0, &[1]).div_exact(&lp(0, &[2])).is_none());
        let shifted = lp(-3, &[2, 2]).div_exact(&lp(5, &[1, 1])).unwrap();
        assert_eq!(shifted, LaurentPolynomial::monomial(2, -8));
    }

    #[test]
    fn evaluation_rejects_non_integral() {
        assert!(lp(-1, &[1]).evaluate_i64(2).is_err());
        assert!(lp(-1, &[1]).evaluate_i64(0).is_err());
        assert_eq!(lp(-1, &[2]).evaluate_i64(2).unwrap(), BigInt::from(1));
        assert_eq!(lp(0, &[1, 2, 3]).evaluate_i64(10).unwrap(), BigInt::from(321));
    }
}
