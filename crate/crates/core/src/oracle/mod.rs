//! Polynomial invariants computed independently of the arrow-pattern count:
//! reduced Burau → Alexander → Conway, with skein recursion as a second route.

pub mod burau;
pub mod conway;
pub mod laurent;
pub mod skein;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

pub use burau::{alexander_of_closure, reduced_burau, BURAU_CONVENTION};
pub use conway::{conway_from_alexander, ConwayPolynomial};
pub use laurent::LaurentPolynomial;
pub use skein::{conway_skein, conway_skein_bounded};

use crate::braid::BraidWord;
use crate::error::Result;

pub fn conway_of_closure(w: &BraidWord) -> Result<ConwayPolynomial> {
    conway_from_alexander(&alexander_of_closure(w)?)
}

pub fn c2_oracle(w: &BraidWord) -> Result<BigInt> {
    Ok(conway_of_closure(w)?.z2())
}

pub fn arf_oracle(w: &BraidWord) -> Result<u8> {
    let c2 = c2_oracle(w)?;
    Ok(if c2.is_odd() { 1 } else { 0 })
}

/// |Δ(−1)|.
pub fn determinant(w: &BraidWord) -> Result<BigInt> {
    Ok(alexander_of_closure(w)?.evaluate_i64(-1)?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let trefoil = BraidWord::from_letters(vec![1, 1, 1]).unwrap();
        assert_eq!(c2_oracle(&trefoil).unwrap(), BigInt::from(1));
        assert_eq!(arf_oracle(&trefoil).unwrap(), 1);
        let fig8 = BraidWord::beta_power(2);
        assert_eq!(c2_oracle(&fig8).unwrap(), BigInt::from(-1));
        assert_eq!(arf_oracle(&fig8).unwrap(), 1);
        assert_eq!(arf_oracle(&BraidWord::beta_power(4)).unwrap(), 1);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&BraidWord::empty(1).unwrap()).unwrap(), BigInt::from(1));
        assert_eq!(determinant(&BraidWord::beta_power(1)).unwrap(), BigInt::from(1));
        let trefoil = BraidWord::from_letters(vec![1, 1, 1]).unwrap();
        assert_eq!(determinant(&trefoil).unwrap(), BigInt::from(3));
        assert_eq!(determinant(&BraidWord::beta_power(2)).unwrap(), BigInt::from(5));
    }
}
