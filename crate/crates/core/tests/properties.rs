//! Randomized invariants of the Demazure operators, reflection chains,
//! decompositions, and the JSON serialization layer.

use proptest::collection::vec;
use proptest::prelude::*;

use twisted_demazure::affine::{AffineData, AffineWeight};
use twisted_demazure::cartan::{FiniteRootSystem, FiniteType};
use twisted_demazure::characters::{Exponent, FormalCharacter};
use twisted_demazure::demazure::{
    demazure_apply_word_finite, demazure_d, demazure_op, is_in_x,
};
use twisted_demazure::json::{from_json_string, module_output, to_json_string};
use twisted_demazure::rat::{rat, ratq, Rat};

const TYPE_NAMES: &[&str] = &[
    "A2(2)", "A4(2)", "A5(2)", "A3(2)", "D4(2)", "D4(3)", "A1(1)", "A2(1)", "C2(1)",
];

fn any_type() -> impl Strategy<Value = AffineData> {
    prop::sample::select(TYPE_NAMES.to_vec())
        .prop_map(|n| AffineData::parse(n).expect("known type"))
}

fn rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(i128::from(x))).collect()
}

/// An arbitrary integral affine weight (node pairings plus δ-coordinate).
fn any_affine_weight(data: &AffineData) -> impl Strategy<Value = AffineWeight> {
    (vec(-3i64..=3, data.num_nodes()), -2i64..=2).prop_map(|(coords, d)| {
        AffineWeight::new(rats(&coords), rat(i128::from(d)))
    })
}

/// A small random affine character with a few signed terms.
fn any_character(data: &AffineData) -> impl Strategy<Value = FormalCharacter> {
    let nodes = data.num_nodes();
    vec((vec(-3i64..=3, nodes), -2i64..=2, prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)]), 1..4)
        .prop_map(move |terms| {
            let mut ch = FormalCharacter::zero_affine(nodes);
            for (coords, d, c) in terms {
                ch.add_term_affine(&rats(&coords), rat(i128::from(d)), c);
            }
            ch
        })
}

/// Reflect every exponent of a character at node `i`.
fn reflect_character(data: &AffineData, ch: &FormalCharacter, i: usize) -> FormalCharacter {
    let mut out = FormalCharacter::zero_affine(ch.width());
    for (e, &c) in ch.terms() {
        let w = AffineWeight::new(e.coords.clone(), e.delta);
        let r = data.simple_reflection(i, &w).expect("valid node");
        out.add_term_affine(&r.pairings, r.delta, c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// D_i ∘ D_i = D_i as operators on arbitrary characters.
    #[test]
    fn operator_idempotence(
        (data, ch, i) in any_type().prop_flat_map(|data| {
            let nodes = data.num_nodes();
            (any_character(&data), 0..nodes).prop_map(move |(ch, i)| (data.clone(), ch, i))
        })
    ) {
        let once = demazure_op(&data, &ch, i).unwrap();
        let twice = demazure_op(&data, &once, i).unwrap();
        prop_assert_eq!(once, twice);
    }

    /// The image of D_i is symmetric under the reflection s_i: string sums
    /// are preserved term-by-term when every exponent is reflected.
    #[test]
    fn operator_image_reflection_symmetric(
        (data, ch, i) in any_type().prop_flat_map(|data| {
            let nodes = data.num_nodes();
            (any_character(&data), 0..nodes).prop_map(move |(ch, i)| (data.clone(), ch, i))
        })
    ) {
        let image = demazure_op(&data, &ch, i).unwrap();
        let reflected = reflect_character(&data, &image, i);
        prop_assert_eq!(image, reflected);
    }

    /// Simple reflections are involutions and preserve the affine level.
    #[test]
    fn reflection_involution_and_level(
        (data, w, i) in any_type().prop_flat_map(|data| {
            let nodes = data.num_nodes();
            (any_affine_weight(&data), 0..nodes).prop_map(move |(w, i)| (data.clone(), w, i))
        })
    ) {
        let r = data.simple_reflection(i, &w).unwrap();
        let back = data.simple_reflection(i, &r).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(data.level(&r).unwrap(), data.level(&w).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    /// The dominance chain raises a positive-level weight to a dominant one;
    /// the returned word is reduced and replays to the original weight.
    #[test]
    fn dominance_chain_replay(
        (data, w) in any_type().prop_flat_map(|data| {
            any_affine_weight(&data).prop_map(move |w| (data.clone(), w))
        })
    ) {
        prop_assume!(data.level(&w).unwrap() > rat(0));
        let (top, word) = data.dominance_chain(&w).unwrap();
        prop_assert!(top.is_dominant(), "chain top {top} is not dominant");
        prop_assert_eq!(data.level(&top).unwrap(), data.level(&w).unwrap());
        prop_assert!(data.is_reduced_word(&word).unwrap(), "chain word {word:?} is not reduced");
        // `word[0]` was applied first while raising, so as a group element
        // (leftmost letter outermost) the word carries the top back down.
        let down = data.apply_word_to_weight(&word, &top).unwrap();
        prop_assert_eq!(&down, &w);
        // Replay the raising steps one reflection at a time.
        let mut up = w.clone();
        for &i in &word {
            up = data.simple_reflection(i, &up).unwrap();
        }
        prop_assert_eq!(&up, &top);
    }

    /// Membership in the realizable set agrees with the module constructor:
    /// `demazure_d` succeeds exactly when the pair is admissible.
    #[test]
    fn realizability_matches_constructor(
        (data, lambda, k) in any_type().prop_flat_map(|data| {
            let rank = data.rank();
            (vec(0i64..=2, rank), prop_oneof![
                Just(ratq(1, 2)), Just(rat(1)), Just(ratq(3, 2)), Just(rat(2)),
            ])
            .prop_map(move |(l, k)| (data.clone(), rats(&l), k))
        })
    ) {
        let admissible = is_in_x(&data, &lambda, k).unwrap();
        match demazure_d(&data, k, &lambda) {
            Ok(result) => {
                prop_assert!(admissible);
                prop_assert!(result.dimension() >= 1);
                // The extreme weight occurs exactly once.
                let target = &result.target;
                let coeff = result.character.coeff(&Exponent {
                    coords: target.pairings.clone(),
                    delta: target.delta,
                });
                prop_assert_eq!(coeff, 1);
            }
            Err(e) => prop_assert!(!admissible, "constructor failed on admissible pair: {e}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Iterating the finite operators along the longest word reproduces the
    /// irreducible character computed by the independent multiplicity oracle.
    #[test]
    fn longest_word_matches_irreducible_character(
        (ftype, lambda) in prop::sample::select(vec![
            FiniteType::A(1), FiniteType::A(2), FiniteType::A(3),
            FiniteType::B(2), FiniteType::C(2), FiniteType::G2,
        ])
        .prop_flat_map(|t| {
            let rank = FiniteRootSystem::new(t).unwrap().rank();
            vec(0i64..=2, rank).prop_map(move |l| (t, l))
        })
    ) {
        let rs = FiniteRootSystem::new(ftype).unwrap();
        let lambda = rats(&lambda);
        let start = FormalCharacter::monomial_finite(&lambda);
        let full = demazure_apply_word_finite(&rs, &start, rs.longest_word()).unwrap();
        let irr = rs.irr_char(&lambda).unwrap();
        prop_assert_eq!(full, irr);
    }

    /// Graded, restricted, and decomposed views of a module are mutually
    /// consistent, and the decomposition reconstructs the restriction.
    #[test]
    fn module_views_are_consistent(
        (data, lambda, k) in any_type().prop_flat_map(|data| {
            let rank = data.rank();
            (vec(0i64..=2, rank), 1i64..=2)
                .prop_map(move |(l, k)| (data.clone(), rats(&l), rat(i128::from(k))))
        })
    ) {
        prop_assume!(is_in_x(&data, &lambda, k).unwrap());
        let result = demazure_d(&data, k, &lambda).unwrap();
        let graded = result.graded();
        prop_assert_eq!(graded.dimension() as u128, result.dimension());
        let restricted = result.restricted();
        prop_assert_eq!(restricted.dimension() as u128, result.dimension());
        let decomposition = result.decompose(&data).unwrap();
        prop_assert!(decomposition.parts().values().all(|&m| m > 0));
        let rebuilt = decomposition.reconstruct(data.g0()).unwrap();
        prop_assert_eq!(rebuilt, restricted);
    }

    /// Serialized module descriptions survive a parse/re-serialize cycle
    /// byte for byte.
    #[test]
    fn json_round_trip_is_byte_identical(
        (data, lambda, k) in any_type().prop_flat_map(|data| {
            let rank = data.rank();
            (vec(0i64..=2, rank), prop_oneof![Just(ratq(1, 2)), Just(rat(1)), Just(rat(2))])
                .prop_map(move |(l, k)| (data.clone(), rats(&l), k))
        })
    ) {
        prop_assume!(is_in_x(&data, &lambda, k).unwrap());
        let result = demazure_d(&data, k, &lambda).unwrap();
        let output = module_output(&data, &result).unwrap();
        let text = to_json_string(&output).unwrap();
        let parsed = from_json_string(&text).unwrap();
        let text_again = to_json_string(&parsed).unwrap();
        prop_assert_eq!(&text, &text_again);
        prop_assert_eq!(parsed.dimension, output.dimension);
        prop_assert_eq!(&parsed.type_name, &output.type_name);
    }
}
