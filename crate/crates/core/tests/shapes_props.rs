//! Property-based invariants for partitions, tableaux, and RSK.

use proptest::prelude::*;
use symf::scalars::{Param, ParamRat};
use symf::shapes::{
    charge, cocharge, enumerate_partitions, insert, insert_word, kostka, q_binomial, rsk, ssyt,
    unrsk, Biword, Partition, SkewShape, SsytFilter, Tableau,
};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..=5).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts")
    })
}

/// Two partitions of the same size n with 1 ≤ n ≤ 6.
fn arb_same_size_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1u32..=6).prop_flat_map(|n| {
        let all = enumerate_partitions(n, None, None);
        let count = all.len();
        let all2 = all.clone();
        (0..count, 0..count).prop_map(move |(i, j)| (all[i].clone(), all2[j].clone()))
    })
}

fn arb_word() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=4, 0..=8)
}

/// A lexicographic biword built from a sorted list of random pairs.
fn arb_biword() -> impl Strategy<Value = Biword> {
    prop::collection::vec((1u32..=4, 1u32..=4), 0..=8).prop_map(|mut pairs| {
        pairs.sort_unstable();
        Biword::new(
            pairs.iter().map(|&(b, _)| b).collect(),
            pairs.iter().map(|&(_, a)| a).collect(),
        )
        .expect("sorted pairs are lexicographic")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(mu in arb_partition()) {
        let conj = mu.conjugate();
        prop_assert_eq!(conj.size(), mu.size());
        prop_assert_eq!(conj.conjugate(), mu);
    }

    #[test]
    fn conjugation_swaps_arms_and_legs(mu in arb_partition()) {
        let conj = mu.conjugate();
        for (x, y) in mu.cells() {
            prop_assert_eq!(mu.arm(x, y), conj.leg(y, x));
            prop_assert_eq!(mu.leg(x, y), conj.arm(y, x));
            prop_assert_eq!(mu.hook(x, y), conj.hook(y, x));
        }
    }

    #[test]
    fn dominance_reverses_under_conjugation((lambda, mu) in arb_same_size_pair()) {
        let forward = lambda.dominates(&mu).unwrap();
        let reversed = mu.conjugate().dominates(&lambda.conjugate()).unwrap();
        prop_assert_eq!(forward, reversed);
    }

    #[test]
    fn kostka_positive_iff_dominance((lambda, mu) in arb_same_size_pair()) {
        let count = kostka(&lambda, &mu).unwrap();
        prop_assert_eq!(count > 0, lambda.dominates(&mu).unwrap());
        if lambda == mu {
            prop_assert_eq!(count, 1);
        }
    }

    #[test]
    fn rsk_roundtrips_on_biwords(w in arb_biword()) {
        let (p, q) = rsk(&w);
        prop_assert!(p.is_semistandard());
        prop_assert!(q.is_semistandard());
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(unrsk(&p, &q).unwrap(), w);
    }

    #[test]
    fn rsk_of_inverse_swaps_tableaux(w in arb_biword()) {
        let (p, q) = rsk(&w);
        let (pi, qi) = rsk(&w.inverse());
        prop_assert_eq!(pi, q);
        prop_assert_eq!(qi, p);
    }

    #[test]
    fn insertion_grows_one_corner(word in arb_word(), a in 1u32..=4) {
        let tau = insert_word(&word);
        let (next, (x, y)) = insert(&tau, a);
        prop_assert!(next.is_semistandard());
        prop_assert_eq!(next.size(), tau.size() + 1);
        prop_assert!(next.shape().outer().contains(tau.shape().outer()));
        prop_assert_eq!(next.shape().outer().part(y), x as u32 + 1);
    }

    #[test]
    fn reading_word_recovers_tableau(word in arb_word()) {
        let tau = insert_word(&word);
        prop_assert_eq!(insert_word(&tau.reading_word()), tau);
    }

    #[test]
    fn charge_and_cocharge_sum_to_n_of_content((lambda, mu) in arb_same_size_pair()) {
        for tau in ssyt(
            &SkewShape::straight(lambda.clone()),
            SsytFilter::Content(mu.parts()),
        ) {
            let total = charge(&tau).unwrap() + cocharge(&tau).unwrap();
            prop_assert_eq!(total, mu.n_stat());
        }
    }

    #[test]
    fn q_binomial_symmetry_and_pascal(n in 1u32..=7, k in 0u32..=7) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
        let lower = if k == 0 {
            ParamRat::zero()
        } else {
            q_binomial(n - 1, k - 1)
        };
        let qk = ParamRat::monomial(&[(Param::Q, k)]);
        prop_assert_eq!(q_binomial(n, k), lower + qk * q_binomial(n - 1, k));
    }

    #[test]
    fn ssyt_are_valid_and_sorted(mu in arb_partition()) {
        prop_assume!(mu.size() <= 6);
        let list = ssyt(&SkewShape::straight(mu.clone()), SsytFilter::MaxEntry(3));
        for tau in &list {
            prop_assert!(tau.is_semistandard());
            prop_assert_eq!(tau.shape().outer(), &mu);
        }
        let words: Vec<Vec<u32>> = list.iter().map(Tableau::reading_word).collect();
        let mut sorted = words.clone();
        sorted.sort();
        prop_assert_eq!(words, sorted);
    }
}
