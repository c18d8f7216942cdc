//! Reduced Burau representation and the Alexander polynomial of a closure.

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentPolynomial;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::linalg::bareiss_determinant;

/// Square matrix over ℤ[t, t⁻¹], row-major.
pub type LaurentMatrix = Vec<Vec<LaurentPolynomial>>;

/// Convention of the generator matrices, printed by `--print-convention`.
/// σᵢ acts on rows/columns i−1, i, i+1 by [[1, t, 0], [0, −t, 0], [0, 1, 1]],
/// truncated at the borders; σ₁ in B₂ is (−t).
pub const BURAU_CONVENTION: &str =
    "reduced-burau: sigma_i -> [[1,t,0],[0,-t,0],[0,1,1]] at (i-1,i,i+1); delta = det(I - B)/(1+t+..+t^(k-1))";

pub fn identity(n: usize) -> LaurentMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LaurentPolynomial::one() } else { LaurentPolynomial::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(LaurentPolynomial::zero(), |acc, k| {
                        if a[i][k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[i][k] * &b[k][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Matrix of one letter in B_k. Inverse letters use the exact inverse block
/// [[1, 1, 0], [0, −t⁻¹, 0], [0, t⁻¹, 1]].
fn generator_matrix(letter: i32, strands: usize) -> LaurentMatrix {
    let n = strands - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let mut m = identity(n);
    let (t, diag, below) = if letter > 0 {
        (
            LaurentPolynomial::t(),
            LaurentPolynomial::monomial(-1, 1),
            LaurentPolynomial::one(),
        )
    } else {
        (
            LaurentPolynomial::one(),
            LaurentPolynomial::monomial(-1, -1),
            LaurentPolynomial::monomial(1, -1),
        )
    };
    m[i][i] = diag;
    if i > 0 {
        m[i - 1][i] = t;
    }
    if i + 1 < n {
        m[i + 1][i] = below;
    }
    m
}

pub fn reduced_burau(w: &BraidWord) -> Result<LaurentMatrix> {
    let k = w.strands();
    if k < 2 {
        return Err(Error::Unsupported("reduced Burau needs at least 2 strands".into()));
    }
    Ok(w.letters()
        .iter()
        .fold(identity(k - 1), |acc, &l| mat_mul(&acc, &generator_matrix(l, k))))
}

/// Normalized Alexander polynomial of a knot closure: symmetric exponent
/// range and value +1 at t = 1.
pub fn alexander_of_closure(w: &BraidWord) -> Result<LaurentPolynomial> {
    w.require_knot()?;
    let k = w.strands();
    if k == 1 {
        // the empty word on one strand closes to the unknot
        return Ok(LaurentPolynomial::one());
    }
    let b = reduced_burau(w)?;
    let n = k - 1;
    let id = identity(n);
    let diff: LaurentMatrix = (0..n)
        .map(|i| (0..n).map(|j| &id[i][j] - &b[i][j]).collect())
        .collect();
    let det = bareiss_determinant(diff)
        .ok_or_else(|| Error::Internal("inexact Bareiss step over Z[t, 1/t]".into()))?;
    let ones = LaurentPolynomial::from_coeffs(0, &vec![1; k]);
    let raw = det.div_exact(&ones).ok_or_else(|| {
        Error::Internal(format!("det(I - B) = {det} is not divisible by {ones}"))
    })?;
    normalize(raw)
}

/// Picks the unit ±t^j that centres the exponents and makes Δ(1) = 1.
pub fn normalize(p: LaurentPolynomial) -> Result<LaurentPolynomial> {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return Err(Error::Internal("Alexander polynomial of a knot is zero".into()));
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::Internal(format!("{p} has no centred form")));
    }
    let mut q = p.shift(-(lo + hi) / 2);
    let at_one = q.evaluate_i64(1)?;
    if at_one == -BigInt::one() {
        q = -q;
    } else if !at_one.is_one() {
        return Err(Error::Internal(format!("{q} has value {at_one} at t = 1")));
    }
    if !q.is_palindromic() {
        return Err(Error::Internal(format!("{q} is not palindromic")));
    }
    Ok(q)
}
