use proptest::prelude::*;

use subrep_core::{
    build_g, classify_finite, contains_pattern, embeds, find_embedding, is_coflower, is_flower,
    oracle_subrep, verify_subrep, PatternKind, Poset, Witness,
};

/// A random poset on `n` points: random upward pairs, closed, then shuffled.
fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(0.35), pairs),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, keep, perm)| {
            let covers: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(keep)
                .filter_map(|(pair, k)| k.then_some(pair))
                .collect();
            let names = (1..=n).map(|i| i.to_string()).collect();
            Poset::from_index_covers(names, &covers)
                .unwrap()
                .permuted(&perm)
        })
}

fn subset_of(p: &Poset, bits: u64) -> Poset {
    p.induced(p.mask(bits & p.all().bits()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_code_ignores_labelling(p in poset(7), seed in any::<u64>()) {
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left(seed as usize % n);
        if seed & 1 == 1 {
            perm.reverse();
        }
        let q = p.permuted(&perm);
        prop_assert_eq!(p.canonical_code().unwrap(), q.canonical_code().unwrap());
        prop_assert!(p.is_isomorphic(&q));
        prop_assert!(p.canonical_code().unwrap().decode().is_isomorphic(&p));
    }

    #[test]
    fn embedding_is_reflexive_and_found_maps_are_valid(p in poset(7), bits in any::<u64>()) {
        prop_assert!(embeds(&p, &p));
        let s = subset_of(&p, bits | 1);
        let e = find_embedding(&s, &p).unwrap();
        prop_assert!(e.is_valid(&s, &p));
    }

    #[test]
    fn embedding_is_transitive(a in poset(4), b in poset(5), c in poset(6)) {
        if embeds(&a, &b) && embeds(&b, &c) {
            prop_assert!(embeds(&a, &c));
        }
    }

    #[test]
    fn flower_iff_dual_is_coflower(p in poset(7)) {
        prop_assert_eq!(is_flower(&p), is_coflower(&p.dual()));
        prop_assert_eq!(is_coflower(&p), is_flower(&p.dual()));
    }

    #[test]
    fn classifier_agrees_with_oracle(p in poset(6)) {
        let verdict = classify_finite(&p).unwrap();
        prop_assert!(verdict.recheck(&p));
        prop_assert_eq!(verdict.sub_representable, oracle_subrep(&p).unwrap().is_some());
        prop_assert_eq!(
            classify_finite(&p.dual()).unwrap().sub_representable,
            verdict.sub_representable
        );
    }

    #[test]
    fn negative_verdicts_carry_a_pattern(p in poset(8)) {
        let verdict = classify_finite(&p).unwrap();
        if !verdict.sub_representable {
            prop_assert!(verdict.recheck(&p));
            let is_reason = matches!(verdict.witness, Some(Witness::Reason(_)));
            prop_assert!(!is_reason);
        }
    }

    #[test]
    fn flowers_contain_a_vee(p in poset(6)) {
        if is_flower(&p).is_some() {
            prop_assert!(contains_pattern(&p, PatternKind::Vee));
        }
        if is_coflower(&p).is_some() {
            prop_assert!(contains_pattern(&p, PatternKind::Wedge));
        }
    }

    #[test]
    fn built_maps_are_valid_and_class_constant(p in poset(6)) {
        if !classify_finite(&p).unwrap().sub_representable {
            return Ok(());
        }
        let g = build_g(&p).unwrap();
        prop_assert!(verify_subrep(&p, &g).unwrap().is_empty());
        let mut seen = std::collections::BTreeMap::new();
        for (s, t) in g.table() {
            let code = p.induced(*s).canonical_code().unwrap();
            prop_assert_eq!(*seen.entry(code).or_insert(*t), *t);
            prop_assert_eq!(g.get(*t), Some(*t));
        }
    }

    #[test]
    fn mutual_embedding_of_equal_size_subsets_is_isomorphism(
        p in poset(6),
        a in any::<u64>(),
        b in any::<u64>(),
    ) {
        let s = subset_of(&p, a | 1);
        let t = subset_of(&p, b | 1);
        if s.len() == t.len() && embeds(&s, &t) && embeds(&t, &s) {
            prop_assert_eq!(s.canonical_code().unwrap(), t.canonical_code().unwrap());
        }
    }

    #[test]
    fn heredity_on_random_subsets(p in poset(6), bits in any::<u64>()) {
        let s = subset_of(&p, bits | 1);
        if !classify_finite(&s).unwrap().sub_representable {
            prop_assert!(!classify_finite(&p).unwrap().sub_representable);
        }
    }
}
