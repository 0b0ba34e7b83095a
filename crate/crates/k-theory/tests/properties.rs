//! Laws of the class arithmetic checked over randomized small matroids:
//! the commuting square with the Tutte polynomial, ring homomorphism
//! behavior, and coherence of covering sums with witness sums.

use k_theory::{
    direct_sum_covering, direct_sum_witness, gamma, is_covering, rho, tg_invariant,
    CoveringStructureTag, K0IsoElement,
};
use matroid_core::{all_matroids_up_to, eid, from_graph, uniform, ElementId, Matroid};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::OnceLock;
use tutte_engine::{build_indecomposable_tree, tutte, Covering, MinIdPicker, SeededRandomPicker};

fn corpus() -> &'static Vec<Matroid> {
    static CORPUS: OnceLock<Vec<Matroid>> = OnceLock::new();
    CORPUS.get_or_init(|| all_matroids_up_to(4))
}

fn arb_matroid() -> impl Strategy<Value = Matroid> {
    let from_corpus = (0usize..corpus().len()).prop_map(|i| corpus()[i].clone());
    let graphical = (1usize..=4, proptest::collection::vec((0usize..4, 0usize..4), 0..=5))
        .prop_map(|(v, raw)| {
            let edges: Vec<(usize, usize, ElementId)> = raw
                .into_iter()
                .enumerate()
                .map(|(k, (a, b))| (a % v, b % v, eid(k as u32 + 1)))
                .collect();
            from_graph(v, &edges).expect("edge labels are distinct and vertices reduced mod v")
        });
    let uniform_like = (0usize..=4)
        .prop_flat_map(|n| (0..=n, Just(n)))
        .prop_map(|(r, n)| uniform(r, n));
    prop_oneof![from_corpus, graphical, uniform_like]
}

/// A small formal combination of corpus classes with coefficients in [-3,3].
fn arb_element() -> impl Strategy<Value = K0IsoElement> {
    proptest::collection::vec((arb_matroid(), -3i64..=3), 0..=3).prop_map(|parts| {
        parts.iter().fold(K0IsoElement::zero(), |acc, (m, c)| {
            &acc + &K0IsoElement::class_of(m).scale(&BigInt::from(*c))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn class_collapse_commutes_with_tutte(m in arb_matroid()) {
        let image = gamma(&K0IsoElement::class_of(&m));
        prop_assert_eq!(rho(&image), tutte(&m));
    }

    #[test]
    fn split_relations_die_in_the_quotient(m in arb_matroid()) {
        for e in m.nondegenerate_elements() {
            let relation = &(&K0IsoElement::class_of(&m)
                - &K0IsoElement::class_of(&m.contract(e).unwrap()))
                - &K0IsoElement::class_of(&m.delete(e).unwrap());
            prop_assert!(gamma(&relation).is_zero());
        }
    }

    #[test]
    fn gamma_and_rho_are_ring_homomorphisms(a in arb_element(), b in arb_element()) {
        let product = &a * &b;
        prop_assert_eq!(gamma(&product), &gamma(&a) * &gamma(&b));
        prop_assert_eq!(rho(&gamma(&product)), &rho(&gamma(&a)) * &rho(&gamma(&b)));
        let sum = &a + &b;
        prop_assert_eq!(gamma(&sum), &gamma(&a) + &gamma(&b));
    }

    #[test]
    fn unit_and_zero_laws_hold(a in arb_element()) {
        prop_assert_eq!(&(&K0IsoElement::one() * &a), &a);
        prop_assert_eq!(&(&a * &K0IsoElement::one()), &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&K0IsoElement::zero() * &a).is_zero());
    }

    #[test]
    fn evaluation_factors_through_the_polynomial(m in arb_matroid(), x in -3i64..=3, y in -3i64..=3) {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        prop_assert_eq!(tg_invariant(&m, &x, &y), tutte(&m).eval(&x, &y));
    }

    #[test]
    fn leaf_families_are_tutte_coverings(m in arb_matroid(), seed in 0u64..256) {
        let tree = build_indecomposable_tree(&m, &SeededRandomPicker::new(seed));
        let c = tree.leaf_to_root();
        let verdict = is_covering(CoveringStructureTag::Tc, &c, Some(&tree), 0).unwrap();
        prop_assert!(verdict.is_covering());
    }

    #[test]
    fn covering_sums_match_witness_sums(a in arb_matroid(), b in arb_matroid()) {
        let ta = build_indecomposable_tree(&a, &MinIdPicker);
        let tb = build_indecomposable_tree(&b, &MinIdPicker);
        let witness = direct_sum_witness(&ta, &tb).unwrap();
        let pairwise = direct_sum_covering(&ta.leaf_to_root(), &tb.leaf_to_root()).unwrap();
        prop_assert!(witness.leaf_to_root().same_covering(&pairwise));
        prop_assert_eq!(witness.root_matroid(), &a.direct_sum(&b).0);
    }

    #[test]
    fn accepted_coverings_are_sound_for_the_quotient(m in arb_matroid()) {
        let tree = build_indecomposable_tree(&m, &MinIdPicker);
        let c: Covering = tree.leaf_to_root();
        let mut difference = K0IsoElement::class_of(&m);
        for leg in c.legs() {
            difference = &difference - &K0IsoElement::class_of(leg.source());
        }
        prop_assert!(gamma(&difference).is_zero());
    }
}
