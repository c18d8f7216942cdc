//! Conway polynomial by skein recursion on based Gauss diagrams.
//!
//! ∇(L₊) − ∇(L₋) = z·∇(L₀). The recursion resolves the first arrow met at its
//! head; once every arrow is first met at its tail the diagram is descending
//! and therefore an unlink. Switching extends the descending prefix and
//! smoothing drops an arrow, so the recursion terminates.

use std::collections::HashMap;

use super::conway::ConwayPolynomial;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::gauss::GaussDiagram;

pub const DEFAULT_LETTER_BOUND: usize = 12;

pub fn conway_skein(w: &BraidWord) -> Result<ConwayPolynomial> {
    conway_skein_bounded(w, DEFAULT_LETTER_BOUND)
}

pub fn conway_skein_bounded(w: &BraidWord, bound: usize) -> Result<ConwayPolynomial> {
    if w.len() > bound {
        return Err(Error::ResourceBound(format!(
            "skein recursion limited to {bound} letters, word has {}",
            w.len()
        )));
    }
    conway_of_diagram(&GaussDiagram::from_braid_closure(w))
}

/// Works for links as well as knots.
pub fn conway_of_diagram(g: &GaussDiagram) -> Result<ConwayPolynomial> {
    let mut memo = HashMap::new();
    resolve(g, &mut memo)
}

fn resolve(
    g: &GaussDiagram,
    memo: &mut HashMap<String, ConwayPolynomial>,
) -> Result<ConwayPolynomial> {
    let Some(arrow) = g.first_ascending_arrow() else {
        return Ok(if g.circle_count() == 1 {
            ConwayPolynomial::one()
        } else {
            ConwayPolynomial::zero()
        });
    };
    let key = g.based_key();
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let switched = resolve(&g.switch_arrow(arrow)?, memo)?;
    let smoothed = resolve(&g.smooth_arrow(arrow)?, memo)?.times_z();
    let value = if g.arrows()[arrow].sign > 0 {
        switched.add(&smoothed)
    } else {
        switched.sub(&smoothed)
    };
    memo.insert(key, value.clone());
    Ok(value)
}
