//! Lucas numbers, wheel-graph spanning trees and the residue/square
//! predicates used for the Lucas congruences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::bareiss_determinant;

/// L₁ = 1, L₂ = 3, Lₙ = Lₙ₋₁ + Lₙ₋₂.
pub fn lucas(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfDomain("Lucas numbers are indexed from 1".into()));
    }
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(3));
    for _ in 1..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// Rim cycle on `rim` vertices plus a hub joined to each; the rim of the
/// two-vertex wheel is a doubled edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WheelGraph {
    rim: usize,
}

impl WheelGraph {
    pub fn new(rim: usize) -> Result<Self> {
        if rim < 2 {
            return Err(Error::OutOfDomain(format!("wheel needs a rim of at least 2, got {rim}")));
        }
        Ok(WheelGraph { rim })
    }

    pub fn rim(&self) -> usize {
        self.rim
    }

    /// Rim vertices are 0..rim, the hub is `rim`.
    pub fn vertex_count(&self) -> usize {
        self.rim + 1
    }

    pub fn hub(&self) -> usize {
        self.rim
    }

    /// Edge multiset: rim edges first, then spokes.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rim;
        let rim = (0..n).map(|i| (i, (i + 1) % n));
        let spokes = (0..n).map(|i| (i, n));
        rim.chain(spokes).collect()
    }

    pub fn laplacian(&self) -> Vec<Vec<BigInt>> {
        let v = self.vertex_count();
        let mut l = vec![vec![BigInt::zero(); v]; v];
        for (a, b) in self.edges() {
            l[a][a] += 1;
            l[b][b] += 1;
            l[a][b] -= 1;
            l[b][a] -= 1;
        }
        l
    }
}

/// Matrix-tree count: the hub's cofactor of the Laplacian.
pub fn wheel_spanning_trees(n: usize) -> Result<BigInt> {
    let g = WheelGraph::new(n)?;
    let hub = g.hub();
    let minor: Vec<Vec<BigInt>> = g
        .laplacian()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i != hub)
        .map(|(_, row)| {
            row.into_iter()
                .enumerate()
                .filter(|(j, _)| *j != hub)
                .map(|(_, v)| v)
                .collect()
        })
        .collect();
    bareiss_determinant(minor).ok_or_else(|| Error::Internal("inexact integer Bareiss step".into()))
}

pub const BRUTEFORCE_EDGE_LIMIT: usize = 20;

/// Counts edge subsets of size |V| − 1 that form a forest (hence a tree).
pub fn spanning_trees_bruteforce(g: &WheelGraph) -> Result<BigInt> {
    let edges = g.edges();
    if edges.len() > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::ResourceBound(format!(
            "brute force limited to {BRUTEFORCE_EDGE_LIMIT} edges, wheel has {}",
            edges.len()
        )));
    }
    let need = g.vertex_count() - 1;
    let mut count = 0u64;
    for mask in 0u32..(1 << edges.len()) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
        let acyclic = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .all(|(_, &(a, b))| {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
                ra != rb
            });
        if acyclic {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Integer square root when `v` is a perfect square.
pub fn perfect_square_root(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let root = v.sqrt();
    (&root * &root == *v).then_some(root)
}

pub fn is_perfect_square(v: &BigInt) -> bool {
    perfect_square_root(v).is_some()
}

pub fn residue_mod8(v: &BigInt) -> u8 {
    v.mod_floor(&BigInt::from(8)).to_u8().expect("residue lies in 0..8")
}
