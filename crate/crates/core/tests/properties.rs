use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use braid_arf::braid::{parse_braid_word, BraidWord};
use braid_arf::gauss::GaussDiagram;
use braid_arf::oracle::burau::identity;
use braid_arf::oracle::laurent::LaurentPolynomial;
use braid_arf::oracle::{
    alexander_of_closure, arf_oracle, conway_of_closure, determinant, reduced_burau,
};
use braid_arf::pv::{arf_of_braid_closure, c2_of_braid_closure, count_pattern, CALIBRATED_PATTERN};
use braid_arf::sequences::{lucas, residue_mod8};

fn word_in(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let letters = v.into_iter().map(|(i, neg)| if neg { -i } else { i }).collect();
        BraidWord::new(letters, strands).unwrap()
    })
}

fn b3_knot(max_len: usize) -> impl Strategy<Value = BraidWord> {
    word_in(3, max_len).prop_filter("knot closure", BraidWord::is_knot)
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (-3i64..=3, prop::collection::vec(-5i64..=5, 0..5))
        .prop_map(|(lo, c)| LaurentPolynomial::from_coeffs(lo, &c))
}

proptest! {
    #[test]
    fn permutation_of_power(w in word_in(4, 8), n in 0usize..=12) {
        prop_assert_eq!(w.power(n).permutation(), w.permutation().pow(n));
    }

    #[test]
    fn free_reduce_is_idempotent_and_preserves_closure(w in word_in(4, 12)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert_eq!(r.permutation(), w.permutation());
        prop_assert_eq!(r.closure_components(), w.closure_components());
    }

    #[test]
    fn text_form_parses_back(w in word_in(5, 10)) {
        prop_assert_eq!(parse_braid_word(&w.to_string(), Some(w.strands())).unwrap(), w);
    }

    #[test]
    fn diagram_shape_follows_word(w in word_in(4, 12)) {
        let g = GaussDiagram::from_braid_closure(&w);
        prop_assert_eq!(g.arrow_count(), w.len());
        prop_assert_eq!(g.circle_count(), w.closure_components());
        prop_assert_eq!(g.writhe(), w.positive_letters() as i64 - w.negative_letters() as i64);
        let endpoints: usize = g.circles().iter().map(Vec::len).sum();
        prop_assert_eq!(endpoints, 2 * g.arrow_count());
    }

    #[test]
    fn deletion_order_does_not_matter(
        w in b3_knot(12),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..6),
    ) {
        let g = GaussDiagram::from_braid_closure(&w);
        prop_assume!(g.arrow_count() > 0);
        let set: BTreeSet<usize> = picks.iter().map(|i| i.index(g.arrow_count())).collect();
        let at_once = g.delete_arrows(&set).unwrap();
        // one at a time, highest index first so lower indices survive renumbering
        let mut stepwise = g.clone();
        for &i in set.iter().rev() {
            stepwise = stepwise.delete_arrows(&[i].into_iter().collect()).unwrap();
        }
        prop_assert_eq!(at_once.canonical_code().unwrap(), stepwise.canonical_code().unwrap());
    }

    #[test]
    fn c2_is_base_point_independent(w in b3_knot(10)) {
        let g = GaussDiagram::from_braid_closure(&w);
        let c2 = count_pattern(&g, CALIBRATED_PATTERN).unwrap().signed;
        for r in g.all_rebasings() {
            prop_assert_eq!(count_pattern(&r, CALIBRATED_PATTERN).unwrap().signed, c2);
        }
    }

    #[test]
    fn rebased_diagrams_stay_isomorphic(w in b3_knot(10), gap in any::<prop::sample::Index>()) {
        let g = GaussDiagram::from_braid_closure(&w);
        let r = g.rebase(gap.index(g.gap_count())).unwrap();
        prop_assert!(r.isomorphic_unbased(&g).unwrap());
    }

    #[test]
    fn gauss_c2_matches_burau(w in b3_knot(10)) {
        let c2 = c2_of_braid_closure(&w).unwrap();
        prop_assert_eq!(BigInt::from(c2), conway_of_closure(&w).unwrap().z2());
    }

    #[test]
    fn arf_is_mirror_invariant(w in b3_knot(10)) {
        prop_assert_eq!(arf_of_braid_closure(&w).unwrap(), arf_of_braid_closure(&w.mirror()).unwrap());
        prop_assert_eq!(arf_oracle(&w).unwrap(), arf_oracle(&w.mirror()).unwrap());
    }

    #[test]
    fn burau_is_a_homomorphism(w in word_in(4, 8)) {
        let a = reduced_burau(&w).unwrap();
        let b = reduced_burau(&w.inverse()).unwrap();
        prop_assert_eq!(braid_arf::oracle::burau::mat_mul(&a, &b), identity(3));
    }

    #[test]
    fn alexander_is_normalized(w in b3_knot(10)) {
        let a = alexander_of_closure(&w).unwrap();
        prop_assert!(a.is_palindromic());
        prop_assert_eq!(a.evaluate_i64(1).unwrap(), BigInt::from(1));
        let c = conway_of_closure(&w).unwrap();
        prop_assert!(c.is_knot_like());
        prop_assert!(determinant(&w).unwrap().is_odd());
    }

    #[test]
    fn markov_stabilization_keeps_alexander(w in word_in(2, 6)) {
        prop_assume!(w.is_knot());
        let stabilized = w.with_strands(3).unwrap().concat(&BraidWord::new(vec![2], 3).unwrap());
        prop_assert!(stabilized.is_knot());
        prop_assert_eq!(alexander_of_closure(&w).unwrap(), alexander_of_closure(&stabilized).unwrap());
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent(), v in -3i64..=3) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
        if v == 1 || v == -1 {
            let lhs = (&a * &b).evaluate_i64(v).unwrap();
            prop_assert_eq!(lhs, a.evaluate_i64(v).unwrap() * b.evaluate_i64(v).unwrap());
        }
    }
}

#[test]
fn lucas_mod_8_has_period_12() {
    let residues: Vec<u8> = (1..=212).map(|n| residue_mod8(&lucas(n).unwrap())).collect();
    for n in 0..200 {
        assert_eq!(residues[n], residues[n + 12], "n = {}", n + 1);
    }
    // and 12 is the least period
    for p in 1..12 {
        assert!((0..200).any(|n| residues[n] != residues[n + p]), "period {p}");
    }
}

#[test]
fn golden_canonical_codes() {
    let text = include_str!("fixtures/golden_codes.txt");
    let mut checked = 0;
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let w = parse_braid_word(parts[0], Some(parts[1].parse().unwrap())).unwrap();
        let g = GaussDiagram::from_braid_closure(&w);
        assert_eq!(g.canonical_code().unwrap(), parts[2], "word {:?}", parts[0]);
        checked += 1;
    }
    assert_eq!(checked, 4);
}
