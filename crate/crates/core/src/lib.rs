//! Knot invariants of braid closures.
//!
//! The Arf invariant and c₂ come from counting a two-arrow pattern in based
//! Gauss diagrams ([`pv`]); an independent polynomial route ([`oracle`])
//! computes Alexander and Conway polynomials and the determinant. The
//! [`verify`] module cross-checks both routes on the βⁿ family with
//! β = σ₁σ₂⁻¹ and checks the Lucas-number identities that follow.

pub mod braid;
pub mod error;
pub mod gauss;
pub mod linalg;
pub mod oracle;
pub mod pv;
pub mod sequences;
pub mod verify;

pub use braid::{parse_braid_file, parse_braid_word, BraidWord, Permutation};
pub use error::{Error, Result};
pub use gauss::GaussDiagram;
pub use pv::{arf_of_braid_closure, c2_of_braid_closure, ArrowPattern, CALIBRATED_PATTERN};
