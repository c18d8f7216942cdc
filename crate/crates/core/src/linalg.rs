//! Fraction-free (Bareiss) determinants over exact integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Just enough ring structure for Bareiss elimination.
pub trait ExactRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// `self / divisor` when the division is exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl ExactRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
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
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

/// Determinant of a square matrix. Returns `None` only if some Bareiss
/// division is inexact, which cannot happen over an integral domain whose
/// `div_exact` is correct.
pub fn bareiss_determinant<R: ExactRing>(mut m: Vec<Vec<R>>) -> Option<R> {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 0 {
        return Some(R::ring_one());
    }
    let mut negate = false;
    let mut prev = R::ring_one();
    for k in 0..n - 1 {
        if m[k][k].is_ring_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_ring_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Some(R::ring_zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].ring_mul(&m[k][k]).ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Some(if negate { det.ring_neg() } else { det })
}
