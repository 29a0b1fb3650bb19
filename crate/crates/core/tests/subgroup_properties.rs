mod common;

use common::{arb_subgroup_pair, arb_word, graph_sample, reduced_words};
use proptest::prelude::*;
use stallings::lab::{analyze_pair, sample_reports, Distribution};
use stallings::random::{rng_from_seed, sample_graph_based, GraphBasedParams, InjectionKind};
use stallings::{fold_from_words, Index, Subgroup};

fn finite_index_sample(rank: usize, n: usize, seed: u64) -> Subgroup {
    let p = GraphBasedParams::new(rank, n).unwrap().with_kind(InjectionKind::Total);
    sample_graph_based(&p, &mut rng_from_seed(seed)).unwrap().subgroup
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn intersection_matches_membership_oracle((h, k) in arb_subgroup_pair(3, 4)) {
        prop_assume!(h.graph().vertex_count() <= 5 && k.graph().vertex_count() <= 5);
        let meet = h.intersect(&k).unwrap();
        for w in reduced_words(h.ambient_rank(), 5) {
            prop_assert_eq!(meet.contains(&w), h.contains(&w) && k.contains(&w), "word {}", w);
        }
    }

    #[test]
    fn intersection_is_symmetric((h, k) in arb_subgroup_pair(3, 5)) {
        prop_assert_eq!(h.intersect(&k).unwrap(), k.intersect(&h).unwrap());
        prop_assert_eq!(h.join(&k).unwrap(), k.join(&h).unwrap());
    }

    #[test]
    fn join_idempotent_and_absorbing((h, k) in arb_subgroup_pair(3, 5)) {
        prop_assert!(h.join(&h).unwrap().is_isomorphic(&h));
        let meet = h.intersect(&k).unwrap();
        prop_assert!(h.join(&meet).unwrap().is_isomorphic(&h));
    }

    #[test]
    fn join_contains_both((h, k) in arb_subgroup_pair(3, 5)) {
        let join = h.join(&k).unwrap();
        for g in h.basis().iter().chain(k.basis().iter()) {
            prop_assert!(join.contains(g));
        }
    }

    #[test]
    fn hnc_and_shnc_hold((h, k) in arb_subgroup_pair(3, 6)) {
        let r = analyze_pair(&h, &k).unwrap();
        prop_assert!(r.holds_hnc && r.holds_shnc);
        prop_assert!(r.shnc_sum >= r.rr_meet);
    }

    #[test]
    fn report_swaps_with_arguments((h, k) in arb_subgroup_pair(3, 6)) {
        prop_assert_eq!(analyze_pair(&k, &h).unwrap(), analyze_pair(&h, &k).unwrap().swapped());
    }

    #[test]
    fn basis_round_trips((h, _k) in arb_subgroup_pair(3, 7)) {
        let basis = h.basis();
        prop_assert_eq!(basis.len(), h.rank());
        for b in &basis {
            prop_assert!(h.contains(b));
        }
        let refolded = fold_from_words(h.ambient_rank(), &basis).unwrap();
        prop_assert!(refolded.is_isomorphic(h.graph()));
    }

    #[test]
    fn conjugation_moves_members((h, _k) in arb_subgroup_pair(3, 5), w in arb_word(2, 4)) {
        let c = h.conjugate(&w).unwrap();
        prop_assert_eq!(c.rank(), h.rank());
        for b in h.basis() {
            prop_assert!(c.contains(&(&(&w * &b) * &w.inverse())));
        }
        // conjugating back recovers H
        prop_assert_eq!(c.conjugate(&w.inverse()).unwrap(), h);
    }

    #[test]
    fn shnc_sum_is_conjugation_invariant((h, k) in arb_subgroup_pair(2, 5), w in arb_word(2, 4)) {
        let base = h.shnc_left_side(&k).unwrap();
        prop_assert_eq!(h.conjugate(&w).unwrap().shnc_left_side(&k).unwrap(), base);
        prop_assert_eq!(h.shnc_left_side(&k.conjugate(&w).unwrap()).unwrap(), base);
    }

    #[test]
    fn index_multiplies_through_join(seed in any::<u64>(), rank in 2usize..4, n in 1usize..6) {
        let k = finite_index_sample(rank, n, seed);
        let h = graph_sample(rank, n, seed ^ 1);
        let join = h.join(&k).unwrap();
        let f_k = k.index_in_free_group().finite().unwrap();
        let f_join = join.index_in_free_group().finite().unwrap();
        let join_k = join.relative_index(&k).unwrap().finite().unwrap();
        prop_assert_eq!(f_k, f_join * join_k);
        prop_assert_eq!(Subgroup::full(rank).relative_index(&k).unwrap(), Index::Finite(f_k));
    }

    #[test]
    fn index_rank_identity(seed in any::<u64>(), rank in 2usize..5, n in 1usize..9) {
        let h = finite_index_sample(rank, n, seed);
        prop_assert_eq!(h.index_in_free_group(), Index::Finite(n));
        prop_assert_eq!(h.reduced_rank(), (rank - 1) * n);
    }
}

#[test]
fn finite_index_iehnc_holds_on_samples() {
    for rank in 2..=3 {
        let d = Distribution::FiniteIndex { rank, max_rejections: 10_000 };
        for n in 2..=6 {
            for r in sample_reports(&d, n, 50, 77, 0).unwrap() {
                assert!(r.holds_iehnc, "rank {rank}, n {n}: {r}");
            }
        }
    }
}
