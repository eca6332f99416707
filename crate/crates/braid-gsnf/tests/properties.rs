//! Randomized properties: parsing round-trips, the order axioms, strategy
//! independence of normal forms, oracle agreement, and the normal-form
//! shape invariants.

use std::cmp::Ordering;

use proptest::prelude::*;

use braid_gsnf::artin::oracle_equal;
use braid_gsnf::order::compare;
use braid_gsnf::rewrite::{
    decompose_normal_form, equal_words, normal_form, normal_form_with, reduction_trace,
    Strategy as ReductionStrategy, DEFAULT_BUDGET,
};
use braid_gsnf::rules::RuleSet;
use braid_gsnf::sym::{is_pure, permutation_of, sym_normal_form};
use braid_gsnf::word::{
    artin_to_band, band_to_artin, ArtinLetter, ArtinWord, BandLetter, BandWord, Sign, StrandCount,
};

const STRANDS: usize = 4;

fn n() -> StrandCount {
    StrandCount::new(STRANDS).unwrap()
}

fn rules() -> RuleSet {
    RuleSet::instantiate(n())
}

fn sign_strategy() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn band_letter() -> impl Strategy<Value = BandLetter> {
    prop_oneof![
        (1..STRANDS).prop_map(BandLetter::SigmaInv),
        (2..=STRANDS, sign_strategy()).prop_flat_map(|(j, sign)| {
            (1..j).prop_map(move |i| BandLetter::band(i, j, sign))
        }),
    ]
}

fn band_word(max_len: usize) -> impl Strategy<Value = BandWord> {
    proptest::collection::vec(band_letter(), 0..=max_len)
        .prop_map(|letters| BandWord::new(n(), letters).unwrap())
}

fn artin_word(max_len: usize) -> impl Strategy<Value = ArtinWord> {
    proptest::collection::vec((1..STRANDS, sign_strategy()), 0..=max_len).prop_map(|letters| {
        ArtinWord::new(
            n(),
            letters
                .into_iter()
                .map(|(i, sign)| ArtinLetter::new(i, sign))
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn band_parse_render_round_trip(w in band_word(20)) {
        let rendered = w.render();
        prop_assert_eq!(BandWord::parse(&rendered, n()).unwrap(), w);
    }

    #[test]
    fn artin_parse_render_round_trip(w in artin_word(20)) {
        let rendered = w.render();
        prop_assert_eq!(ArtinWord::parse(&rendered, n()).unwrap(), w);
    }

    #[test]
    fn order_is_total_and_antisymmetric(u in band_word(10), v in band_word(10)) {
        let forward = compare(&u, &v).unwrap();
        let backward = compare(&v, &u).unwrap();
        prop_assert_eq!(forward, backward.reverse());
        prop_assert_eq!(forward == Ordering::Equal, u == v);
    }

    #[test]
    fn order_is_transitive(a in band_word(8), b in band_word(8), c in band_word(8)) {
        let mut sorted = [a, b, c];
        sorted.sort_by(|x, y| compare(x, y).unwrap());
        prop_assert_ne!(compare(&sorted[0], &sorted[1]).unwrap(), Ordering::Greater);
        prop_assert_ne!(compare(&sorted[1], &sorted[2]).unwrap(), Ordering::Greater);
        prop_assert_ne!(compare(&sorted[0], &sorted[2]).unwrap(), Ordering::Greater);
    }

    #[test]
    fn order_is_compatible_with_concatenation(
        u in band_word(6),
        v in band_word(6),
        a in band_word(4),
        b in band_word(4),
    ) {
        let plain = compare(&u, &v).unwrap();
        let framed = compare(
            &a.concat(&u).unwrap().concat(&b).unwrap(),
            &a.concat(&v).unwrap().concat(&b).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(plain, framed);
    }

    #[test]
    fn normal_form_is_strategy_independent(w in artin_word(16)) {
        let rules = rules();
        let wb = artin_to_band(&w);
        let rightmost = normal_form_with(&wb, &rules, DEFAULT_BUDGET, ReductionStrategy::Rightmost).unwrap();
        // A few words of this size push the leftmost trace past any
        // practical budget; agreement is checked whenever it finishes.
        if let Ok(leftmost) = normal_form_with(&wb, &rules, DEFAULT_BUDGET, ReductionStrategy::Leftmost) {
            prop_assert_eq!(leftmost, rightmost);
        }
    }

    #[test]
    fn every_reduction_step_decreases(w in band_word(10)) {
        let rules = rules();
        let trace = reduction_trace(&w, &rules, DEFAULT_BUDGET, ReductionStrategy::Rightmost).unwrap();
        for pair in trace.windows(2) {
            prop_assert_eq!(compare(&pair[1], &pair[0]).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn normal_forms_are_irreducible_and_shaped(w in band_word(12)) {
        let rules = rules();
        let nf = normal_form(&w, &rules, DEFAULT_BUDGET).unwrap();
        prop_assert!(rules.leftmost_match(nf.letters(), 0).is_none());
        let decomposition = decompose_normal_form(&nf).unwrap();
        prop_assert_eq!(decomposition.reassemble(), nf);
    }

    #[test]
    fn tail_matches_the_permutation_tuple(w in band_word(12)) {
        let rules = rules();
        let nf = normal_form(&w, &rules, DEFAULT_BUDGET).unwrap();
        let decomposition = decompose_normal_form(&nf).unwrap();
        let tuple = sym_normal_form(&permutation_of(&w));
        prop_assert_eq!(decomposition.tail_indices(), tuple.indices());
    }

    #[test]
    fn purity_is_the_permutation_kernel(w in band_word(12)) {
        let rules = rules();
        prop_assert_eq!(is_pure(&w, &rules), permutation_of(&w).is_identity());
    }

    #[test]
    fn permutation_projection_is_a_homomorphism(u in band_word(10), v in band_word(10)) {
        let product = u.concat(&v).unwrap();
        prop_assert_eq!(
            permutation_of(&product),
            permutation_of(&u).then(&permutation_of(&v))
        );
    }

    #[test]
    fn reduction_preserves_the_braid(w in band_word(8)) {
        let rules = rules();
        let nf = normal_form(&w, &rules, DEFAULT_BUDGET).unwrap();
        prop_assert!(oracle_equal(&band_to_artin(&w), &band_to_artin(&nf)).unwrap());
    }

    #[test]
    fn alphabet_conversions_preserve_the_braid(w in artin_word(8)) {
        let rules = rules();
        let round_trip = band_to_artin(&artin_to_band(&w));
        prop_assert!(oracle_equal(&w, &round_trip).unwrap());
        prop_assert!(equal_words(
            &artin_to_band(&w),
            &artin_to_band(&round_trip),
            &rules,
            DEFAULT_BUDGET
        )
        .unwrap());
    }
}
