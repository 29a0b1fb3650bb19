use stallings::lab::{run_experiment, Distribution, ExperimentRow};

fn row(d: Distribution, param: usize, samples: usize) -> ExperimentRow {
    run_experiment(&d, &[param], samples, 42, 0).unwrap().remove(0)
}

#[test]
fn word_based_meets_get_rarer_with_length() {
    let d = Distribution::WordBased { rank: 2, generators: 2 };
    let pcts: Vec<f64> = [4, 12, 20]
        .iter()
        .map(|&n| row(d, n, 2000).pct_nontrivial_meet)
        .collect();
    assert!(pcts[0] > pcts[1] && pcts[1] > pcts[2], "{pcts:?}");
    assert!(pcts[2] < 10.0, "{pcts:?}");
}

#[test]
fn graph_based_meets_are_more_frequent() {
    let graph = row(Distribution::GraphBased { rank: 2, max_rejections: 100_000 }, 16, 1000);
    let word = row(Distribution::WordBased { rank: 2, generators: 4 }, 16, 1000);
    assert!(
        graph.pct_nontrivial_meet > word.pct_nontrivial_meet,
        "graph {} vs word {}",
        graph.pct_nontrivial_meet,
        word.pct_nontrivial_meet
    );
}

#[test]
fn finite_index_pairs_never_violate_iehnc() {
    for rank in [2, 3] {
        let d = Distribution::FiniteIndex { rank, max_rejections: 100_000 };
        for r in run_experiment(&d, &[2, 4, 6, 8], 200, 5, 0).unwrap() {
            assert_eq!(r.pct_counterexample, 0.0, "{r:?}");
        }
    }
}
