//! Braid words in the Artin generators and the permutations of their closures.
//!
//! A letter `+i` stands for σᵢ and `-i` for σᵢ⁻¹. In σᵢ the strand arriving in
//! position i+1 passes over the strand in position i and the two swap places;
//! in σᵢ⁻¹ the strand in position i is the overpass.

use std::fmt;

use crate::error::{Error, Result};

/// A braid word together with its strand count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<i32>,
    strands: usize,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("strand count must be positive".into()));
        }
        for (i, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!(
                    "letter {l} at index {i} is not a generator of B_{strands}"
                )));
            }
        }
        Ok(BraidWord { letters, strands })
    }

    /// Uses the smallest strand count that fits every letter.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        let strands = min_strands(&letters);
        Self::new(letters, strands)
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(Vec::new(), strands)
    }

    /// β = σ₁σ₂⁻¹ in B₃.
    pub fn beta() -> Self {
        BraidWord {
            letters: vec![1, -2],
            strands: 3,
        }
    }

    /// βⁿ.
    pub fn beta_power(n: usize) -> Self {
        Self::beta().power(n)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn power(&self, n: usize) -> Self {
        BraidWord {
            letters: self.letters.repeat(n),
            strands: self.strands,
        }
    }

    /// Concatenation; the strand count is the larger of the two.
    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            letters,
            strands: self.strands.max(other.strands),
        }
    }

    /// Same word in a larger braid group.
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        Self::new(self.letters.clone(), strands)
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
            strands: self.strands,
        }
    }

    /// Negates every letter, which mirrors the closure.
    pub fn mirror(&self) -> Self {
        BraidWord {
            letters: self.letters.iter().map(|l| -l).collect(),
            strands: self.strands,
        }
    }

    /// Deletes adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            letters: out,
            strands: self.strands,
        }
    }

    pub fn positive_letters(&self) -> usize {
        self.letters.iter().filter(|&&l| l > 0).count()
    }

    pub fn negative_letters(&self) -> usize {
        self.letters.iter().filter(|&&l| l < 0).count()
    }

    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            images.swap(i, i + 1);
        }
        Permutation { images }
    }

    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    pub(crate) fn require_knot(&self) -> Result<()> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

fn min_strands(letters: &[i32]) -> usize {
    letters
        .iter()
        .map(|l| l.unsigned_abs() as usize + 1)
        .max()
        .unwrap_or(1)
}

/// Strand permutation of a braid. `images[p]` is the starting position of the
/// strand that ends in position `p` (0-based), so the permutation of `uv` is
/// `u.images[v.images[p]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidBraid(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&p| self.images[p]).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Permutation {
        (0..n).fold(Permutation::identity(self.len()), |acc, _| acc.then(self))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Permutation { images }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
            }
        }
        cycles
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }
}

/// Parses whitespace-separated nonzero integers; `#` starts a comment that
/// runs to the end of the line.
pub fn parse_braid_word(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut letters = Vec::new();
    let mut tokens = Vec::new();
    for line in text.lines() {
        let code = line.split('#').next().unwrap_or("");
        tokens.extend(code.split_whitespace());
    }
    for (i, tok) in tokens.iter().enumerate() {
        let position = i + 1;
        let err = |reason: &str| Error::Parse {
            token: tok.to_string(),
            position,
            reason: reason.to_string(),
        };
        let l: i32 = tok.parse().map_err(|_| err("not an integer"))?;
        if l == 0 {
            return Err(err("0 is not a generator"));
        }
        if let Some(k) = strands {
            if l.unsigned_abs() as usize >= k {
                return Err(err(&format!("generator out of range for {k} strands")));
            }
        }
        letters.push(l);
    }
    let strands = match strands {
        Some(0) => return Err(Error::InvalidBraid("strand count must be positive".into())),
        Some(k) => k,
        None => min_strands(&letters),
    };
    BraidWord::new(letters, strands)
}

/// One word per non-blank line. Lines holding only a comment are skipped.
pub fn parse_braid_file(text: &str, strands: Option<usize>) -> Result<Vec<BraidWord>> {
    text.lines()
        .filter(|line| !line.split('#').next().unwrap_or("").trim().is_empty())
        .map(|line| parse_braid_word(line, strands))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let w = parse_braid_word("1 -2", None).unwrap();
        assert_eq!(w.letters(), &[1, -2]);
        assert_eq!(w.strands(), 3);

        let e = parse_braid_word("", None).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.strands(), 1);

        match parse_braid_word("1 0 -2", None) {
            Err(Error::Parse { position, token, .. }) => {
                assert_eq!(position, 2);
                assert_eq!(token, "0");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_name_token() {
        assert!(matches!(
            parse_braid_word("1 x", None),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_braid_word("1 -3", Some(3)),
            Err(Error::Parse { position: 2, .. })
        ));
        assert_eq!(parse_braid_word("1 # -5 junk\n -2", None).unwrap().letters(), &[1, -2]);
    }

    #[test]
    fn file_format() {
        let words = parse_braid_file("# header\n1 -2\n\n1 1 1 # trefoil\n", None).unwrap();
        assert_eq!(words.len(), 2);
        assert_eq!(words[1].letters(), &[1, 1, 1]);
        assert_eq!(words[1].strands(), 2);
    }

    #[test]
    fn explicit_strands_keep_empty_word() {
        let w = parse_braid_word("", Some(3)).unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.closure_components(), 3);
    }

    #[test]
    fn powers() {
        let b = BraidWord::beta();
        assert_eq!(b.power(2).letters(), &[1, -2, 1, -2]);
        assert!(b.power(0).is_empty());
        assert_eq!(b.power(4).len(), 8);
        assert_eq!(b.power(4).strands(), 3);
    }

    #[test]
    fn free_reduction() {
        let r = |v: Vec<i32>| BraidWord::from_letters(v).unwrap().free_reduce();
        assert!(r(vec![1, -1]).is_empty());
        assert!(r(vec![1, -2, 2, -1]).is_empty());
        assert_eq!(r(vec![1, -2]).letters(), &[1, -2]);
    }

    #[test]
    fn beta_permutation_is_three_cycle() {
        let p = BraidWord::beta().permutation();
        // 1→2→3→1 in 1-based labels
        assert_eq!(p.images(), &[1, 2, 0]);
        assert!(BraidWord::empty(3).unwrap().permutation().is_identity());
        assert!(BraidWord::beta_power(3).permutation().is_identity());
    }

    #[test]
    fn closure_components_examples() {
        assert_eq!(BraidWord::beta_power(3).closure_components(), 3);
        assert_eq!(BraidWord::empty(3).unwrap().closure_components(), 3);
        for n in 0..=60 {
            let c = BraidWord::beta_power(n).closure_components();
            assert_eq!(c == 1, n % 3 != 0, "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(vec![2], 2).is_err());
        assert!(BraidWord::new(vec![0], 3).is_err());
        assert!(BraidWord::new(vec![], 0).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
