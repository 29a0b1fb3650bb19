//! Frequency experiments over random subgroup pairs, with CSV output.
//!
//! Every pair owns its RNG stream, derived from `(seed, param, sample index)`,
//! so results do not depend on the number of worker threads.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lab::report::{analyze_pair, ConjectureReport};
use crate::random::{
    derive_seed, sample_graph_based, sample_word_based, task_rng, GraphBasedParams,
    InjectionKind, TaskRng, WordBasedParams,
};
use crate::subgroup::Subgroup;

pub const CSV_HEADER: &str = "distribution,rank,param,samples,pct_counterexample,pct_nontrivial_meet,seed";

/// A source of random subgroup pairs indexed by one integer parameter.
pub trait PairSource: Sync {
    /// Value of the `distribution` CSV column.
    fn tag(&self) -> String;

    fn ambient_rank(&self) -> usize;

    fn sample_pair(&self, param: usize, rng: &mut TaskRng) -> Result<(Subgroup, Subgroup)>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// Independent graph-based samples with `param` vertices.
    GraphBased { rank: usize, max_rejections: usize },
    /// Independent word-based samples with `generators` words of length below `param`.
    WordBased { rank: usize, generators: usize },
    /// `H` graph-based, `K` a random covering of the rose; both on `param` vertices.
    FiniteIndex { rank: usize, max_rejections: usize },
}

impl PairSource for Distribution {
    fn tag(&self) -> String {
        match self {
            Distribution::GraphBased { .. } => "graph".to_string(),
            Distribution::WordBased { generators, .. } => format!("word-k{generators}"),
            Distribution::FiniteIndex { .. } => "finite-index".to_string(),
        }
    }

    fn ambient_rank(&self) -> usize {
        match *self {
            Distribution::GraphBased { rank, .. }
            | Distribution::WordBased { rank, .. }
            | Distribution::FiniteIndex { rank, .. } => rank,
        }
    }

    fn sample_pair(&self, param: usize, rng: &mut TaskRng) -> Result<(Subgroup, Subgroup)> {
        match *self {
            Distribution::GraphBased {
                rank,
                max_rejections,
            } => {
                let p = GraphBasedParams::new(rank, param)?.with_max_rejections(max_rejections)?;
                let h = sample_graph_based(&p, rng)?.subgroup;
                let k = sample_graph_based(&p, rng)?.subgroup;
                Ok((h, k))
            }
            Distribution::WordBased { rank, generators } => {
                let p = WordBasedParams::new(rank, generators, param)?;
                let h = sample_word_based(&p, rng).subgroup;
                let k = sample_word_based(&p, rng).subgroup;
                Ok((h, k))
            }
            Distribution::FiniteIndex {
                rank,
                max_rejections,
            } => {
                let p = GraphBasedParams::new(rank, param)?.with_max_rejections(max_rejections)?;
                let h = sample_graph_based(&p, rng)?.subgroup;
                let k = sample_graph_based(&p.with_kind(InjectionKind::Total), rng)?.subgroup;
                Ok((h, k))
            }
        }
    }
}

/// One CSV record: counterexample and nontrivial-intersection percentages at one parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub distribution: String,
    pub rank: usize,
    pub param: usize,
    pub samples: usize,
    /// Among pairs with both reduced ranks positive.
    pub pct_counterexample: f64,
    pub pct_nontrivial_meet: f64,
    pub seed: u64,
}

impl ExperimentRow {
    fn from_reports(source: &dyn PairSource, param: usize, seed: u64, reports: &[ConjectureReport]) -> Self {
        let nondegenerate: Vec<_> = reports.iter().filter(|r| r.is_nondegenerate()).collect();
        let violations = nondegenerate.iter().filter(|r| !r.holds_iehnc).count();
        let nontrivial = reports.iter().filter(|r| r.rk_meet > 0).count();
        let pct = |num: usize, den: usize| if den == 0 { 0.0 } else { 100.0 * num as f64 / den as f64 };
        ExperimentRow {
            distribution: source.tag(),
            rank: source.ambient_rank(),
            param,
            samples: reports.len(),
            pct_counterexample: pct(violations, nondegenerate.len()),
            pct_nontrivial_meet: pct(nontrivial, reports.len()),
            seed,
        }
    }
}

impl fmt::Display for ExperimentRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{:.4},{:.4},{}",
            self.distribution,
            self.rank,
            self.param,
            self.samples,
            self.pct_counterexample,
            self.pct_nontrivial_meet,
            self.seed
        )
    }
}

pub fn write_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))
}

/// Analyzes `samples` pairs at one parameter, in sample-index order.
/// `jobs = 0` uses one worker per core.
pub fn sample_reports(
    source: &dyn PairSource,
    param: usize,
    samples: usize,
    seed: u64,
    jobs: usize,
) -> Result<Vec<ConjectureReport>> {
    let point_seed = derive_seed(seed, param as u64);
    let results: Vec<Result<ConjectureReport>> = pool(jobs)?.install(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = task_rng(point_seed, i as u64);
                let (h, k) = source.sample_pair(param, &mut rng)?;
                analyze_pair(&h, &k)
            })
            .collect()
    });
    results.into_iter().collect()
}

/// One row per parameter point.
pub fn run_experiment(
    source: &dyn PairSource,
    params: &[usize],
    samples: usize,
    seed: u64,
    jobs: usize,
) -> Result<Vec<ExperimentRow>> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    params
        .iter()
        .map(|&param| {
            let reports = sample_reports(source, param, samples, seed, jobs).map_err(|e| {
                Error::Experiment {
                    param,
                    source: Box::new(e),
                }
            })?;
            Ok(ExperimentRow::from_reports(source, param, seed, &reports))
        })
        .collect()
}
