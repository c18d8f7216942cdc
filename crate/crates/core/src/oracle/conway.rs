use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};

/// ∇(z) as a dense coefficient list; index k holds the coefficient of z^k.
/// Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConwayPolynomial {
    coeffs: Vec<BigInt>,
}

impl ConwayPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ConwayPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// c₂, the coefficient of z².
    pub fn z2(&self) -> BigInt {
        self.coefficient(2)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Constant term 1 and no odd powers.
    pub fn is_knot_like(&self) -> bool {
        self.coefficient(0).is_one()
            && self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    /// Multiplication by z.
    pub fn times_z(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    fn combine(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        other.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }

    /// Substitutes z² = t − 2 + t⁻¹. Only meaningful for even polynomials.
    pub fn to_alexander(&self) -> LaurentPolynomial {
        let u = z_squared();
        let mut out = LaurentPolynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate().step_by(2) {
            out = &out + &u.pow((k / 2) as u32).scale(c);
        }
        out
    }
}

impl fmt::Display for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut p = LaurentPolynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            p = &p + &LaurentPolynomial::monomial(c.clone(), k as i64);
        }
        p.fmt_with_var(f, "z")
    }
}

/// t − 2 + t⁻¹, the image of z².
fn z_squared() -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs(-1, &[1, -2, 1])
}

/// The ∇ with ∇(z)|_{z² = t − 2 + t⁻¹} = `a`, peeling off powers of
/// t − 2 + t⁻¹ from the top degree down.
pub fn conway_from_alexander(a: &LaurentPolynomial) -> Result<ConwayPolynomial> {
    if !a.is_palindromic() {
        return Err(Error::NotPalindromic(a.to_string()));
    }
    let top = a.max_exp().unwrap_or(0).max(0);
    let u = z_squared();
    let mut rest = a.clone();
    let mut coeffs = vec![BigInt::zero(); 2 * top as usize + 1];
    for k in (0..=top).rev() {
        let c = rest.coeff(k);
        if !c.is_zero() {
            rest = &rest - &u.pow(k as u32).scale(&c);
            coeffs[2 * k as usize] = c;
        }
    }
    if !rest.is_zero() {
        return Err(Error::Internal(format!("residue {rest} after Conway reduction")));
    }
    Ok(ConwayPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conway_examples() {
        assert_eq!(
            conway_from_alexander(&LaurentPolynomial::one()).unwrap(),
            ConwayPolynomial::one()
        );
        let trefoil = LaurentPolynomial::from_coeffs(-1, &[1, -1, 1]);
        assert_eq!(
            conway_from_alexander(&trefoil).unwrap(),
            ConwayPolynomial::from_i64(&[1, 0, 1])
        );
        let fig8 = LaurentPolynomial::from_coeffs(-1, &[-1, 3, -1]);
        let c = conway_from_alexander(&fig8).unwrap();
        assert_eq!(c, ConwayPolynomial::from_i64(&[1, 0, -1]));
        assert_eq!(c.z2(), BigInt::from(-1));
    }

    #[test]
    fn rejects_non_palindromic() {
        let p = LaurentPolynomial::from_coeffs(0, &[1, 1]);
        assert!(matches!(conway_from_alexander(&p), Err(Error::NotPalindromic(_))));
    }

    #[test]
    fn substitution_inverts_reduction() {
        let c = ConwayPolynomial::from_i64(&[1, 0, 3, 0, -2, 0, 1]);
        assert_eq!(conway_from_alexander(&c.to_alexander()).unwrap(), c);
    }

    #[test]
    fn text_form() {
        assert_eq!(ConwayPolynomial::from_i64(&[1, 0, 1]).to_string(), "1 + z^2");
        assert_eq!(ConwayPolynomial::from_i64(&[1, 0, -1]).to_string(), "1 - z^2");
        assert_eq!(ConwayPolynomial::from_i64(&[0, 1]).to_string(), "z");
        assert_eq!(ConwayPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn z_shift_and_sums() {
        let one = ConwayPolynomial::one();
        assert_eq!(one.times_z(), ConwayPolynomial::from_i64(&[0, 1]));
        assert!(one.sub(&one).is_zero());
        assert!(one.is_knot_like());
        assert!(!one.times_z().is_knot_like());
    }
}
