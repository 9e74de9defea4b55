mod common;

use std::sync::Arc;

use haar_core::{atlas, FiniteGroup, Permutation};
use proptest::prelude::*;

fn groups() -> Vec<Arc<FiniteGroup>> {
    common::PROPERTY_GROUPS
        .iter()
        .map(|n| Arc::new(atlas(n).unwrap()))
        .collect()
}

fn instance() -> impl Strategy<Value = (usize, Vec<bool>)> {
    (
        0..common::PROPERTY_GROUPS.len(),
        prop::collection::vec(any::<bool>(), 24),
    )
}

fn subset(g: &FiniteGroup, bits: &[bool], with_identity: bool) -> Vec<usize> {
    let mut s: Vec<usize> = (1..g.order())
        .filter(|&i| bits[i % bits.len()] ^ (i >= bits.len()))
        .collect();
    if with_identity || s.is_empty() {
        s.insert(0, 0);
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn right_translations_lie_in_aut((gi, bits) in instance()) {
        let g = &groups()[gi];
        let s = subset(g, &bits, false);
        prop_assert!(common::right_translations_are_automorphisms(g, &s).is_ok());
    }

    #[test]
    fn f_and_i_members_are_automorphisms((gi, bits) in instance()) {
        let g = &groups()[gi];
        let s = subset(g, &bits, true);
        let r = common::f_and_i_are_automorphisms(g, &s);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn connectivity_iff_generation((gi, bits) in instance()) {
        let g = &groups()[gi];
        let s = subset(g, &bits, false);
        let r = common::connectivity_matches_span(g, &s);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn bsgs_matches_brute_force(
        degree in 1usize..7,
        seeds in prop::collection::vec(prop::collection::vec(any::<u32>(), 7), 0..4),
    ) {
        let gens: Vec<Permutation> = seeds
            .iter()
            .map(|keys| {
                let mut idx: Vec<u32> = (0..degree as u32).collect();
                idx.sort_by_key(|&i| keys[i as usize]);
                Permutation::from_images(idx).unwrap()
            })
            .collect();
        let r = common::bsgs_invariants(degree, &gens);
        prop_assert!(r.is_ok(), "{:?}", r);
    }
}

#[test]
fn normalizer_formula_on_small_groups() {
    let mut rng = common::rng(3);
    let mut checked = 0;
    for g in groups().iter().filter(|g| g.order() <= 12) {
        for _ in 0..4 {
            let s = common::random_subset(&mut rng, g.order(), true);
            if common::normalizer_formula_holds(g, &s)
                .unwrap_or_else(|e| panic!("{} {s:?}: {e}", g.name()))
            {
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
