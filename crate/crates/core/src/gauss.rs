//! Based Gauss diagrams of braid closures.
//!
//! Each circle is stored as the sequence of arrow endpoints met while walking
//! it; position 0 on circle 0 is the first endpoint after the base point.
//! Arrows point from the overpass to the underpass and carry the crossing sign.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Code of a knot diagram without arrows.
pub const EMPTY_CODE: &str = "empty";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

impl End {
    fn flip(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }

    fn letter(self) -> char {
        match self {
            End::Tail => 'T',
            End::Head => 'H',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub arrow: usize,
    pub end: End,
}

/// Circle index and position along that circle.
pub type Location = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub tail: Location,
    pub head: Location,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    circles: Vec<Vec<Endpoint>>,
    arrows: Vec<Arrow>,
}

impl GaussDiagram {
    /// Builds a diagram from endpoint sequences and per-arrow signs, checking
    /// that each arrow has exactly one tail and one head.
    pub fn from_parts(circles: Vec<Vec<Endpoint>>, signs: &[i8]) -> Result<Self> {
        if circles.is_empty() {
            return Err(Error::Unsupported("a Gauss diagram needs at least one circle".into()));
        }
        let mut tails = vec![None; signs.len()];
        let mut heads = vec![None; signs.len()];
        for (c, circle) in circles.iter().enumerate() {
            for (p, e) in circle.iter().enumerate() {
                let slot = match e.end {
                    End::Tail => tails.get_mut(e.arrow),
                    End::Head => heads.get_mut(e.arrow),
                }
                .ok_or(Error::InvalidArrow {
                    index: e.arrow,
                    arrows: signs.len(),
                })?;
                if slot.replace((c, p)).is_some() {
                    return Err(Error::Internal(format!(
                        "arrow {} has two {:?} endpoints",
                        e.arrow, e.end
                    )));
                }
            }
        }
        let arrows = signs
            .iter()
            .enumerate()
            .map(|(i, &sign)| {
                if sign != 1 && sign != -1 {
                    return Err(Error::Internal(format!("arrow {i} has sign {sign}")));
                }
                match (tails[i], heads[i]) {
                    (Some(tail), Some(head)) => Ok(Arrow { tail, head, sign }),
                    _ => Err(Error::Internal(format!("arrow {i} is missing an endpoint"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GaussDiagram { circles, arrows })
    }

    /// Gauss diagram of the standard closure of `w`. Arrow `j` comes from
    /// letter `j`. Strands are walked from the top of strand 1; unvisited
    /// strands start new circles in increasing position order.
    pub fn from_braid_closure(w: &BraidWord) -> Self {
        let k = w.strands();
        let letters = w.letters();
        let mut visited = vec![false; k];
        let mut circles = Vec::new();
        for start in 0..k {
            if visited[start] {
                continue;
            }
            let mut circle = Vec::new();
            let mut pos = start;
            loop {
                visited[pos] = true;
                for (j, &l) in letters.iter().enumerate() {
                    let lo = l.unsigned_abs() as usize - 1;
                    if pos != lo && pos != lo + 1 {
                        continue;
                    }
                    let over = if l > 0 { lo + 1 } else { lo };
                    let end = if pos == over { End::Tail } else { End::Head };
                    circle.push(Endpoint { arrow: j, end });
                    pos = if pos == lo { lo + 1 } else { lo };
                }
                if pos == start {
                    break;
                }
            }
            circles.push(circle);
        }
        let signs: Vec<i8> = letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).collect();
        Self::from_parts(circles, &signs).expect("closure walk yields a consistent diagram")
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn circles(&self) -> &[Vec<Endpoint>] {
        &self.circles
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn is_knot_diagram(&self) -> bool {
        self.circles.len() == 1
    }

    pub fn writhe(&self) -> i64 {
        self.arrows.iter().map(|a| a.sign as i64).sum()
    }

    /// Number of gaps on the based circle; an empty circle has one.
    pub fn gap_count(&self) -> usize {
        self.circles[0].len().max(1)
    }

    /// Removes the named arrows. Surviving arrows are renumbered in their
    /// original order; the base point and the cyclic order stay put.
    pub fn delete_arrows(&self, which: &BTreeSet<usize>) -> Result<Self> {
        if let Some(&bad) = which.iter().find(|&&i| i >= self.arrows.len()) {
            return Err(Error::InvalidArrow {
                index: bad,
                arrows: self.arrows.len(),
            });
        }
        let mut renumber = vec![usize::MAX; self.arrows.len()];
        let mut signs = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if !which.contains(&i) {
                renumber[i] = signs.len();
                signs.push(a.sign);
            }
        }
        let circles = self
            .circles
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|e| !which.contains(&e.arrow))
                    .map(|e| Endpoint {
                        arrow: renumber[e.arrow],
                        end: e.end,
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(circles, &signs)
    }

    /// Moves the base point to the gap just before endpoint `gap` of circle 0.
    pub fn rebase(&self, gap: usize) -> Result<Self> {
        if gap >= self.gap_count() {
            return Err(Error::InvalidGap {
                gap,
                gaps: self.gap_count(),
            });
        }
        let mut circles = self.circles.clone();
        circles[0].rotate_left(gap);
        Self::from_parts(circles, &self.signs())
    }

    /// Every rebasing of this diagram, in gap order.
    pub fn all_rebasings(&self) -> impl Iterator<Item = GaussDiagram> + '_ {
        (0..self.gap_count()).map(move |g| self.rebase(g).expect("gap in range"))
    }

    /// Based code of a knot diagram: arrows are labelled by first visit from
    /// the base point, and each endpoint is written as `label±T` or `label±H`.
    pub fn canonical_code(&self) -> Result<String> {
        if !self.is_knot_diagram() {
            return Err(Error::Unsupported(
                "canonical codes are defined for one-circle diagrams only".into(),
            ));
        }
        if self.arrows.is_empty() {
            return Ok(EMPTY_CODE.to_string());
        }
        Ok(self.based_key())
    }

    /// Unbased isomorphism of knot diagrams, by trying every base gap of `self`.
    pub fn isomorphic_unbased(&self, other: &GaussDiagram) -> Result<bool> {
        let target = other.canonical_code()?;
        if self.arrow_count() != other.arrow_count() {
            self.canonical_code()?;
            return Ok(false);
        }
        for g in self.all_rebasings() {
            if g.canonical_code()? == target {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Injective key for based diagrams with ordered circles, used for
    /// memoization. Circles are separated by `|`.
    pub(crate) fn based_key(&self) -> String {
        let mut label = vec![usize::MAX; self.arrows.len()];
        let mut next = 0;
        let mut out = String::new();
        for (c, circle) in self.circles.iter().enumerate() {
            if c > 0 {
                out.push('|');
            }
            for (p, e) in circle.iter().enumerate() {
                if label[e.arrow] == usize::MAX {
                    label[e.arrow] = next;
                    next += 1;
                }
                if p > 0 {
                    out.push(',');
                }
                let sign = if self.arrows[e.arrow].sign > 0 { '+' } else { '-' };
                let _ = write!(out, "{}{}{}", label[e.arrow], sign, e.end.letter());
            }
        }
        out
    }

    fn signs(&self) -> Vec<i8> {
        self.arrows.iter().map(|a| a.sign).collect()
    }

    /// Endpoint of `arrow` that is met first when walking the circles in
    /// order from their starting points.
    pub fn first_met(&self, arrow: usize) -> End {
        let a = self.arrows[arrow];
        if a.tail < a.head {
            End::Tail
        } else {
            End::Head
        }
    }

    /// First arrow, in traversal order, whose first-met endpoint is its head.
    /// `None` means the diagram is descending.
    pub fn first_ascending_arrow(&self) -> Option<usize> {
        let mut seen = vec![false; self.arrows.len()];
        for circle in &self.circles {
            for e in circle {
                if !std::mem::replace(&mut seen[e.arrow], true) && e.end == End::Head {
                    return Some(e.arrow);
                }
            }
        }
        None
    }

    /// Crossing change: the arrow reverses and its sign flips.
    pub fn switch_arrow(&self, arrow: usize) -> Result<Self> {
        self.check_arrow(arrow)?;
        let circles = self
            .circles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&e| {
                        if e.arrow == arrow {
                            Endpoint {
                                arrow,
                                end: e.end.flip(),
                            }
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        let mut signs = self.signs();
        signs[arrow] = -signs[arrow];
        Self::from_parts(circles, &signs)
    }

    /// Oriented smoothing at the crossing of `arrow`. A self-crossing splits
    /// its circle in two (the piece away from the start is appended as a new
    /// last circle); a crossing between two circles merges them into the
    /// earlier one.
    pub fn smooth_arrow(&self, arrow: usize) -> Result<Self> {
        self.check_arrow(arrow)?;
        let a = self.arrows[arrow];
        let (first, second) = if a.tail < a.head {
            (a.tail, a.head)
        } else {
            (a.head, a.tail)
        };
        let mut circles = self.circles.clone();
        if first.0 == second.0 {
            let s = &self.circles[first.0];
            let (p, q) = (first.1, second.1);
            let inner: Vec<Endpoint> = s[p + 1..q].to_vec();
            let outer: Vec<Endpoint> = s[..p].iter().chain(&s[q + 1..]).copied().collect();
            circles[first.0] = outer;
            circles.push(inner);
        } else {
            let s1 = &self.circles[first.0];
            let s2 = &self.circles[second.0];
            let (p, q) = (first.1, second.1);
            let merged: Vec<Endpoint> = s1[..p]
                .iter()
                .chain(&s2[q + 1..])
                .chain(&s2[..q])
                .chain(&s1[p + 1..])
                .copied()
                .collect();
            circles[first.0] = merged;
            circles.remove(second.0);
        }
        let mut signs = self.signs();
        signs.remove(arrow);
        for c in circles.iter_mut() {
            for e in c.iter_mut() {
                if e.arrow > arrow {
                    e.arrow -= 1;
                }
            }
        }
        Self::from_parts(circles, &signs)
    }

    fn check_arrow(&self, arrow: usize) -> Result<()> {
        if arrow >= self.arrows.len() {
            return Err(Error::InvalidArrow {
                index: arrow,
                arrows: self.arrows.len(),
            });
        }
        Ok(())
    }
}

/// Arrow indices contributed by letters `start..start + count`.
pub fn arrow_range(start: usize, count: usize) -> BTreeSet<usize> {
    (start..start + count).collect()
}

/// Arrows of the final β³ block of βⁿ (six letters, hence six arrows).
pub fn last_beta_cube_block(n: usize) -> BTreeSet<usize> {
    assert!(n >= 3, "β^{n} has no full β³ block");
    arrow_range(2 * n - 6, 6)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gd(letters: Vec<i32>) -> GaussDiagram {
        GaussDiagram::from_braid_closure(&BraidWord::from_letters(letters).unwrap())
    }

    fn interleaved(g: &GaussDiagram, a: usize, b: usize) -> bool {
        let pos = |i: usize| {
            let x = g.arrows()[i];
            let (p, q) = (x.tail.1, x.head.1);
            (p.min(q), p.max(q))
        };
        let (a1, a2) = pos(a);
        let (b1, b2) = pos(b);
        (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
    }

    #[test]
    fn trefoil_diagram() {
        let g = gd(vec![1, 1, 1]);
        assert_eq!(g.circle_count(), 1);
        assert_eq!(g.arrow_count(), 3);
        assert!(g.arrows().iter().all(|a| a.sign == 1));
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert!(interleaved(&g, a, b));
        }
        assert_eq!(g.writhe(), 3);
    }

    #[test]
    fn figure_eight_diagram() {
        let g = GaussDiagram::from_braid_closure(&BraidWord::beta_power(2));
        assert_eq!(g.circle_count(), 1);
        assert_eq!(g.arrow_count(), 4);
        assert_eq!(g.arrows().iter().filter(|a| a.sign == 1).count(), 2);
        assert_eq!(g.writhe(), 0);
    }

    #[test]
    fn empty_diagrams() {
        let g = GaussDiagram::from_braid_closure(&BraidWord::empty(1).unwrap());
        assert_eq!((g.circle_count(), g.arrow_count()), (1, 0));
        assert_eq!(g.writhe(), 0);
        assert_eq!(g.canonical_code().unwrap(), EMPTY_CODE);
        assert_eq!(g.rebase(0).unwrap(), g);
        assert!(g.rebase(1).is_err());

        let u = GaussDiagram::from_braid_closure(&BraidWord::empty(3).unwrap());
        assert_eq!(u.circle_count(), 3);
        assert!(matches!(u.canonical_code(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn trefoil_code_golden() {
        // walk: strand 1 meets letters 0, 2 then strand 2 meets 1, then ...
        let g = gd(vec![1, 1, 1]);
        assert_eq!(g.canonical_code().unwrap(), "0+H,1+T,2+H,0+T,1+H,2+T");
    }

    #[test]
    fn delete_arrows_examples() {
        let g = GaussDiagram::from_braid_closure(&BraidWord::beta_power(2));
        let all: BTreeSet<usize> = (0..4).collect();
        let e = g.delete_arrows(&all).unwrap();
        assert_eq!((e.circle_count(), e.arrow_count()), (1, 0));
        assert_eq!(g.delete_arrows(&BTreeSet::new()).unwrap(), g);
        assert!(matches!(
            g.delete_arrows(&[7].into_iter().collect()),
            Err(Error::InvalidArrow { index: 7, .. })
        ));
    }

    #[test]
    fn beta7_minus_last_block_is_beta4() {
        let g7 = GaussDiagram::from_braid_closure(&BraidWord::beta_power(7));
        let g4 = GaussDiagram::from_braid_closure(&BraidWord::beta_power(4));
        let cut = g7.delete_arrows(&last_beta_cube_block(7)).unwrap();
        assert!(cut.isomorphic_unbased(&g4).unwrap());
        assert!(g4.isomorphic_unbased(&cut).unwrap());
    }

    #[test]
    fn rebase_and_codes() {
        let g = gd(vec![1, 1, 1]);
        assert_eq!(g.rebase(0).unwrap(), g);
        let codes: BTreeSet<String> = g
            .all_rebasings()
            .map(|r| r.canonical_code().unwrap())
            .collect();
        assert!(codes.len() > 1);
        // walking once around the circle returns the original code
        let mut r = g.clone();
        for _ in 0..g.gap_count() {
            r = r.rebase(1).unwrap();
        }
        assert_eq!(r.canonical_code().unwrap(), g.canonical_code().unwrap());
        assert!(matches!(g.rebase(6), Err(Error::InvalidGap { gap: 6, gaps: 6 })));
    }

    #[test]
    fn isomorphism_examples() {
        let g = gd(vec![1, 1, 1]);
        assert!(g.isomorphic_unbased(&g).unwrap());
        let e = GaussDiagram::from_braid_closure(&BraidWord::empty(1).unwrap());
        assert!(!g.isomorphic_unbased(&e).unwrap());
        assert!(g.isomorphic_unbased(&g.rebase(3).unwrap()).unwrap());
        // mirror trefoil differs in signs
        assert!(!g.isomorphic_unbased(&gd(vec![-1, -1, -1])).unwrap());
    }

    #[test]
    fn hopf_link_smoothing_merges() {
        let g = gd(vec![1, 1]);
        assert_eq!(g.circle_count(), 2);
        let s = g.smooth_arrow(0).unwrap();
        assert_eq!((s.circle_count(), s.arrow_count()), (1, 1));
        let sw = g.switch_arrow(0).unwrap();
        assert_eq!(sw.arrows()[0].sign, -1);
        assert_eq!(sw.writhe(), 0);
    }

    #[test]
    fn trefoil_smoothing_splits() {
        let g = gd(vec![1, 1, 1]);
        let s = g.smooth_arrow(0).unwrap();
        assert_eq!((s.circle_count(), s.arrow_count()), (2, 2));
    }

    #[test]
    fn descending_detection() {
        let g = gd(vec![1, 1, 1]);
        // the walk meets letter 0 at its head first
        assert_eq!(g.first_met(0), End::Head);
        assert_eq!(g.first_ascending_arrow(), Some(0));
        let d = g.switch_arrow(0).unwrap();
        assert_ne!(d.first_ascending_arrow(), Some(0));
    }
}
