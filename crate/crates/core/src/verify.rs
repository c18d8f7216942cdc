//! Cross-checks on the βⁿ family and the Lucas-number consequences, as rows
//! that render to a text table, CSV or JSON with the same content.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::gauss::{last_beta_cube_block, GaussDiagram};
use crate::oracle::{
    alexander_of_closure, arf_oracle, c2_oracle, conway_from_alexander, conway_skein, determinant,
    BURAU_CONVENTION,
};
use crate::pv::{count_pattern, CALIBRATED_PATTERN};
use crate::sequences::{lucas, perfect_square_root, residue_mod8};

pub const DEFAULT_THEOREM_MAX: usize = 31;
pub const DEFAULT_RECURRENCE_MAX: usize = 10;
pub const DEFAULT_COROLLARY_MAX: usize = 40;
pub const DEFAULT_MURASUGI_MAX: usize = 31;
pub const DEFAULT_RANDOM_KNOTS: usize = 200;
pub const DEFAULT_SEED: u64 = 1;
/// Longest random word drawn for the Murasugi corpus.
pub const RANDOM_WORD_MAX_LEN: usize = 10;

/// Conventions that pin down every computed value.
pub fn convention_summary() -> String {
    format!(
        "arrow-pattern: {CALIBRATED_PATTERN}\n{BURAU_CONVENTION}\n\
         generator: +i = strand in position i+1 passes over position i, sign +1\n\
         arrows: overpass (tail) -> underpass (head); base point before the first endpoint of strand 1\n"
    )
}

/// Something that renders as one table/CSV row.
pub trait Tabular {
    fn headers() -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
    fn passes(&self) -> bool;
}

pub fn render_table<T: Tabular>(rows: &[T]) -> String {
    let headers = T::headers();
    let cells: Vec<Vec<String>> = rows.iter().map(Tabular::cells).collect();
    let widths: Vec<usize> = (0..headers.len())
        .map(|i| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain(std::iter::once(headers[i].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let line = |out: &mut String, items: &[&str]| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&mut out, &headers);
    for r in &cells {
        let refs: Vec<&str> = r.iter().map(String::as_str).collect();
        line(&mut out, &refs);
    }
    out
}

pub fn render_csv<T: Tabular>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(T::headers()).expect("in-memory write");
    for r in rows {
        w.write_record(r.cells()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 CSV")
}

pub fn render_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("rows serialize") + "\n"
}

/// Big integers go out as bare JSON numbers, never strings.
mod json_number {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&v.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => super::serialize(v, s),
                None => s.serialize_none(),
            }
        }
    }
}

fn bit(b: bool) -> String {
    b.to_string()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub n: usize,
    pub word_length: usize,
    pub components: usize,
    pub arf_gauss: u8,
    pub arf_oracle: u8,
    pub c2: i64,
    #[serde(serialize_with = "json_number::serialize")]
    pub det: BigInt,
    #[serde(serialize_with = "json_number::serialize")]
    pub lucas_pred: BigInt,
    pub match_arf: bool,
    pub match_det: bool,
    /// Arf is 1 exactly for even n.
    pub match_parity: bool,
}

impl Tabular for TheoremRow {
    fn headers() -> Vec<&'static str> {
        vec![
            "n", "word_length", "components", "arf_gauss", "arf_oracle", "c2", "det",
            "lucas_pred", "match_arf", "match_det", "match_parity",
        ]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.word_length.to_string(),
            self.components.to_string(),
            self.arf_gauss.to_string(),
            self.arf_oracle.to_string(),
            self.c2.to_string(),
            self.det.to_string(),
            self.lucas_pred.to_string(),
            bit(self.match_arf),
            bit(self.match_det),
            bit(self.match_parity),
        ]
    }
    fn passes(&self) -> bool {
        self.match_arf && self.match_det && self.match_parity
    }
}

pub fn theorem_row(n: usize) -> Result<TheoremRow> {
    let w = BraidWord::beta_power(n);
    let g = GaussDiagram::from_braid_closure(&w);
    let c2 = count_pattern(&g, CALIBRATED_PATTERN)?.signed;
    let arf_gauss = c2.rem_euclid(2) as u8;
    let arf_oracle = arf_oracle(&w)?;
    let det = determinant(&w)?;
    let lucas_pred = lucas(2 * n)? - 2;
    let expected_arf = u8::from(n.is_multiple_of(2));
    Ok(TheoremRow {
        n,
        word_length: w.len(),
        components: w.closure_components(),
        arf_gauss,
        arf_oracle,
        c2,
        match_arf: arf_gauss == arf_oracle,
        match_det: det == lucas_pred,
        match_parity: arf_gauss == expected_arf && arf_oracle == expected_arf,
        det,
        lucas_pred,
    })
}

/// One row per 1 ≤ n ≤ `n_max` with n not divisible by 3, ordered by n.
pub fn theorem_table(n_max: usize) -> Result<Vec<TheoremRow>> {
    (1..=n_max)
        .filter(|n| n % 3 != 0)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(theorem_row)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceRow {
    pub step: usize,
    pub exponent: usize,
    pub previous_exponent: usize,
    pub a2: u8,
    pub a2_previous: u8,
    pub recurrence_holds: bool,
    /// βᵉ with its last β³ block deleted is unbased-isomorphic to βᵉ⁻³.
    pub block_deletion_isomorphic: bool,
}

impl Tabular for RecurrenceRow {
    fn headers() -> Vec<&'static str> {
        vec![
            "step", "exponent", "previous_exponent", "a2", "a2_previous", "recurrence_holds",
            "block_deletion_isomorphic",
        ]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.step.to_string(),
            self.exponent.to_string(),
            self.previous_exponent.to_string(),
            self.a2.to_string(),
            self.a2_previous.to_string(),
            bit(self.recurrence_holds),
            bit(self.block_deletion_isomorphic),
        ]
    }
    fn passes(&self) -> bool {
        self.recurrence_holds && self.block_deletion_isomorphic
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub case: u8,
    pub base_exponent: usize,
    pub base_arf: u8,
    pub rows: Vec<RecurrenceRow>,
}

impl RecurrenceReport {
    pub fn passes(&self) -> bool {
        self.base_arf == 1 && self.rows.iter().all(Tabular::passes)
    }
}

fn a2_of_beta_power(n: usize) -> Result<u8> {
    let g = GaussDiagram::from_braid_closure(&BraidWord::beta_power(n));
    Ok(count_pattern(&g, CALIBRATED_PATTERN)?.unsigned_mod2)
}

/// Deletes the arrows of the final β³ block of βⁿ and compares with βⁿ⁻³.
pub fn block_deletion_holds(n: usize) -> Result<bool> {
    let full = GaussDiagram::from_braid_closure(&BraidWord::beta_power(n));
    let previous = GaussDiagram::from_braid_closure(&BraidWord::beta_power(n - 3));
    let cut = full.delete_arrows(&last_beta_cube_block(n))?;
    if cut.circle_count() != 1 || previous.circle_count() != 1 {
        return Ok(false);
    }
    cut.isomorphic_unbased(&previous)
}

/// Parity recurrence A₂(β^(3n+c)) = A₂(β^(3(n−1)+c)) + 1 mod 2 for
/// 1 ≤ n ≤ `n_max`, `case` ∈ {1, 2}.
pub fn recurrence_check(case: u8, n_max: usize) -> Result<RecurrenceReport> {
    assert!(case == 1 || case == 2, "case must be 1 or 2");
    let c = case as usize;
    let base_exponent = if case == 1 { 4 } else { 2 };
    let rows = (1..=n_max)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|step| {
            let exponent = 3 * step + c;
            let previous_exponent = exponent - 3;
            let a2 = a2_of_beta_power(exponent)?;
            let a2_previous = a2_of_beta_power(previous_exponent)?;
            Ok(RecurrenceRow {
                step,
                exponent,
                previous_exponent,
                a2,
                a2_previous,
                recurrence_holds: a2 == (a2_previous + 1) % 2,
                block_deletion_isomorphic: block_deletion_holds(exponent)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RecurrenceReport {
        case,
        base_exponent,
        base_arf: a2_of_beta_power(base_exponent)?,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MurasugiRow {
    pub label: String,
    pub word: String,
    pub arf: u8,
    #[serde(serialize_with = "json_number::serialize")]
    pub det: BigInt,
    pub residue8: u8,
    pub consistent: bool,
}

impl Tabular for MurasugiRow {
    fn headers() -> Vec<&'static str> {
        vec!["label", "word", "arf", "det", "residue8", "consistent"]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.label.clone(),
            self.word.clone(),
            self.arf.to_string(),
            self.det.to_string(),
            self.residue8.to_string(),
            bit(self.consistent),
        ]
    }
    fn passes(&self) -> bool {
        self.consistent
    }
}

pub fn murasugi_row(label: String, w: &BraidWord) -> Result<MurasugiRow> {
    let arf = arf_oracle(w)?;
    let det = determinant(w)?;
    let residue8 = residue_mod8(&det);
    Ok(MurasugiRow {
        label,
        word: w.to_string(),
        arf,
        consistent: (arf == 0) == matches!(residue8, 1 | 7),
        det,
        residue8,
    })
}

/// `count` random B₃ words of length 1..=10 whose closures are knots.
pub fn random_b3_knots(seed: u64, count: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let len = rng.gen_range(1..=RANDOM_WORD_MAX_LEN);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..=2);
                if rng.gen_bool(0.5) { g } else { -g }
            })
            .collect();
        let w = BraidWord::new(letters, 3).expect("letters lie in B_3");
        if w.is_knot() {
            out.push(w);
        }
    }
    out
}

/// βⁿ for n ≤ `n_max` (n not divisible by 3), then `random` seeded B₃ knots.
pub fn murasugi_check(n_max: usize, seed: u64, random: usize) -> Result<Vec<MurasugiRow>> {
    let mut corpus: Vec<(String, BraidWord)> = (1..=n_max)
        .filter(|n| n % 3 != 0)
        .map(|n| (format!("beta^{n}"), BraidWord::beta_power(n)))
        .collect();
    corpus.extend(
        random_b3_knots(seed, random)
            .into_iter()
            .enumerate()
            .map(|(i, w)| (format!("random-{i}"), w)),
    );
    corpus
        .into_par_iter()
        .map(|(label, w)| murasugi_row(label, &w))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "12n-4")]
    MinusFour,
    #[serde(rename = "12n-2")]
    MinusTwo,
    #[serde(rename = "12n+2")]
    PlusTwo,
    #[serde(rename = "12n+4")]
    PlusFour,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::MinusFour, Family::MinusTwo, Family::PlusTwo, Family::PlusFour];

    pub fn offset(self) -> i64 {
        match self {
            Family::MinusFour => -4,
            Family::MinusTwo => -2,
            Family::PlusTwo => 2,
            Family::PlusFour => 4,
        }
    }

    pub fn index(self, n: usize) -> usize {
        (12 * n as i64 + self.offset()) as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::MinusFour => "12n-4",
            Family::MinusTwo => "12n-2",
            Family::PlusTwo => "12n+2",
            Family::PlusFour => "12n+4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareCheck {
    pub is_square: bool,
    #[serde(serialize_with = "json_number::option::serialize")]
    pub root: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryRow {
    pub n: usize,
    pub family: Family,
    pub lucas_index: usize,
    #[serde(serialize_with = "json_number::serialize")]
    pub lucas_value: BigInt,
    pub residue8: u8,
    /// For the ±2 families: is L − 2 a square.
    pub square_check: Option<SquareCheck>,
    /// For the ±2 families: residue of L − 2 mod 8.
    pub minus_two_residue8: Option<u8>,
    pub pass: bool,
}

impl Tabular for CorollaryRow {
    fn headers() -> Vec<&'static str> {
        vec![
            "n", "family", "lucas_index", "lucas_value", "residue8", "is_square", "root",
            "minus_two_residue8", "pass",
        ]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.family.label().to_string(),
            self.lucas_index.to_string(),
            self.lucas_value.to_string(),
            self.residue8.to_string(),
            opt(&self.square_check.as_ref().map(|s| s.is_square)),
            opt(&self.square_check.as_ref().and_then(|s| s.root.clone())),
            opt(&self.minus_two_residue8),
            bit(self.pass),
        ]
    }
    fn passes(&self) -> bool {
        self.pass
    }
}

pub fn corollary_row(n: usize, family: Family) -> Result<CorollaryRow> {
    let lucas_index = family.index(n);
    let lucas_value = lucas(lucas_index)?;
    let residue8 = residue_mod8(&lucas_value);
    let (square_check, minus_two_residue8, pass) = match family {
        Family::MinusFour | Family::PlusFour => (None, None, matches!(residue8, 5 | 7)),
        Family::MinusTwo | Family::PlusTwo => {
            let shifted = &lucas_value - 2;
            let root = perfect_square_root(&shifted);
            let check = SquareCheck {
                is_square: root.is_some(),
                root,
            };
            let pass = residue8 == 3 && check.is_square;
            (Some(check), Some(residue_mod8(&shifted)), pass)
        }
    };
    Ok(CorollaryRow {
        n,
        family,
        lucas_index,
        lucas_value,
        residue8,
        square_check,
        minus_two_residue8,
        pass,
    })
}

/// All four families for 1 ≤ n ≤ `n_max`, ordered by n then family.
pub fn corollary_table(n_max: usize) -> Result<Vec<CorollaryRow>> {
    (1..=n_max)
        .flat_map(|n| Family::ALL.into_iter().map(move |f| (n, f)))
        .map(|(n, f)| corollary_row(n, f))
        .collect()
}

/// How many ±2 rows satisfy "L − 2 ≡ 3 mod 8" and "L ≡ 3 mod 8".
pub fn congruence_discrepancy(rows: &[CorollaryRow]) -> (usize, usize, usize) {
    let two: Vec<&CorollaryRow> = rows.iter().filter(|r| r.minus_two_residue8.is_some()).collect();
    let shifted = two.iter().filter(|r| r.minus_two_residue8 == Some(3)).count();
    let plain = two.iter().filter(|r| r.residue8 == 3).count();
    (two.len(), plain, shifted)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsRecord {
    pub braid: String,
    pub strands: usize,
    pub word_length: usize,
    pub components: usize,
    pub writhe: i64,
    pub alexander: Option<String>,
    pub conway: Option<String>,
    /// Skein route; absent when the word exceeds the recursion bound.
    pub conway_skein: Option<String>,
    pub c2_gauss: Option<i64>,
    #[serde(serialize_with = "json_number::option::serialize")]
    pub c2: Option<BigInt>,
    pub arf: Option<u8>,
    pub arf_oracle: Option<u8>,
    #[serde(serialize_with = "json_number::option::serialize")]
    pub det: Option<BigInt>,
    pub consistent: bool,
}

impl Tabular for InvariantsRecord {
    fn headers() -> Vec<&'static str> {
        vec![
            "braid", "strands", "word_length", "components", "writhe", "alexander", "conway",
            "conway_skein", "c2_gauss", "c2", "arf", "arf_oracle", "det", "consistent",
        ]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.braid.clone(),
            self.strands.to_string(),
            self.word_length.to_string(),
            self.components.to_string(),
            self.writhe.to_string(),
            opt(&self.alexander),
            opt(&self.conway),
            opt(&self.conway_skein),
            opt(&self.c2_gauss),
            opt(&self.c2),
            opt(&self.arf),
            opt(&self.arf_oracle),
            opt(&self.det),
            bit(self.consistent),
        ]
    }
    fn passes(&self) -> bool {
        self.consistent
    }
}

/// Every invariant of one closure. Links get the skein Conway polynomial
/// only; knot-only fields stay empty.
pub fn invariants(w: &BraidWord) -> Result<InvariantsRecord> {
    let g = GaussDiagram::from_braid_closure(w);
    let skein = conway_skein(w).ok();
    let mut rec = InvariantsRecord {
        braid: w.to_string(),
        strands: w.strands(),
        word_length: w.len(),
        components: g.circle_count(),
        writhe: g.writhe(),
        alexander: None,
        conway: None,
        conway_skein: skein.as_ref().map(ToString::to_string),
        c2_gauss: None,
        c2: None,
        arf: None,
        arf_oracle: None,
        det: None,
        consistent: true,
    };
    if !w.is_knot() {
        return Ok(rec);
    }
    let alexander = alexander_of_closure(w)?;
    let conway = conway_from_alexander(&alexander)?;
    let c2_gauss = count_pattern(&g, CALIBRATED_PATTERN)?.signed;
    let c2 = c2_oracle(w)?;
    rec.consistent = BigInt::from(c2_gauss) == c2 && skein.as_ref().is_none_or(|s| *s == conway);
    rec.alexander = Some(alexander.to_string());
    rec.conway = Some(conway.to_string());
    rec.arf = Some(c2_gauss.rem_euclid(2) as u8);
    rec.arf_oracle = Some(arf_oracle(w)?);
    rec.c2_gauss = Some(c2_gauss);
    rec.c2 = Some(c2);
    rec.det = Some(determinant(w)?);
    Ok(rec)
}
