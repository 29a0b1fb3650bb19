#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use stallings::random::{rng_from_seed, sample_graph_based, GraphBasedParams};
use stallings::{Letter, Subgroup, Word};

/// Every reduced word of length at most `max_len` over `rank` generators,
/// built by brute-force extension without using the library's reduction.
pub fn reduced_words(rank: usize, max_len: usize) -> Vec<Word> {
    let letters: Vec<i32> = (1..=rank as i32).flat_map(|i| [i, -i]).collect();
    let mut layer: Vec<Vec<i32>> = vec![vec![]];
    let mut all = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() != Some(&-l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter()
        .map(|w| Word::from_signed(&w).unwrap())
        .collect()
}

/// Reduced products of at most `max_factors` elements of `gens ∪ gens⁻¹`,
/// keeping only those of length at most `max_len`.
pub fn products(gens: &[Word], max_factors: usize, max_len: usize) -> BTreeSet<Word> {
    let factors: Vec<Word> = gens
        .iter()
        .filter(|g| !g.is_empty())
        .flat_map(|g| [g.clone(), g.inverse()])
        .collect();
    let mut out = BTreeSet::from([Word::identity()]);
    let mut layer = vec![Word::identity()];
    for _ in 0..max_factors {
        let mut next = Vec::new();
        for w in &layer {
            for f in &factors {
                next.push(w * f);
            }
        }
        for w in &next {
            if w.len() <= max_len {
                out.insert(w.clone());
            }
        }
        layer = next;
    }
    out
}

pub fn arb_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let letter = (1..=rank, any::<bool>()).prop_map(|(i, inv)| Letter::new(i, inv));
    prop::collection::vec(letter, 0..=max_len).prop_map(Word::reduce)
}

/// `(rank, generators)` with small generators.
pub fn arb_generators(
    max_rank: usize,
    max_gens: usize,
    max_len: usize,
) -> impl Strategy<Value = (usize, Vec<Word>)> {
    (1..=max_rank).prop_flat_map(move |rank| {
        (
            Just(rank),
            prop::collection::vec(arb_word(rank, max_len), 0..=max_gens),
        )
    })
}

/// Random core graph from the graph-based model, as a subgroup.
pub fn graph_sample(rank: usize, n: usize, seed: u64) -> Subgroup {
    let p = GraphBasedParams::new(rank, n).unwrap();
    sample_graph_based(&p, &mut rng_from_seed(seed)).unwrap().subgroup
}

pub fn arb_subgroup_pair(max_rank: usize, max_len: usize) -> impl Strategy<Value = (Subgroup, Subgroup)> {
    (2..=max_rank).prop_flat_map(move |rank| {
        let gens = || prop::collection::vec(arb_word(rank, max_len), 0..=3);
        (gens(), gens()).prop_map(move |(a, b)| {
            (
                Subgroup::from_words(rank, &a).unwrap(),
                Subgroup::from_words(rank, &b).unwrap(),
            )
        })
    })
}
