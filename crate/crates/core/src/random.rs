//! Random subgroups: the word-based and graph-based models.
//!
//! All sampling is driven by a caller-supplied RNG. [`task_rng`] derives an
//! independent, reproducible stream per task from a master seed.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{PartialInjection, StallingsGraph};
use crate::subgroup::Subgroup;
use crate::word::{Letter, Word};

pub type TaskRng = ChaCha8Rng;

pub const DEFAULT_MAX_REJECTIONS: usize = 10_000;

const SPLIT_MULTIPLIER: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed of the `index`-th task under `master`: xor with an odd multiple of
/// the index, then one splitmix64 finalisation round.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ SPLIT_MULTIPLIER.wrapping_mul(index);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_from_seed(seed: u64) -> TaskRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn task_rng(master: u64, index: u64) -> TaskRng {
    rng_from_seed(derive_seed(master, index))
}

/// A uniformly random reduced word of exactly `len` letters over `rank` generators.
pub fn sample_reduced_word<R: Rng + ?Sized>(rank: usize, len: usize, rng: &mut R) -> Word {
    assert!(rank >= 1);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    for _ in 0..len {
        let letter = match letters.last() {
            None => letter_at(rng.random_range(0..2 * rank)),
            Some(prev) => {
                // 2r - 1 choices: skip the inverse of the previous letter
                let forbidden = letter_code(prev.inverse());
                let mut code = rng.random_range(0..2 * rank - 1);
                if code >= forbidden {
                    code += 1;
                }
                letter_at(code)
            }
        };
        letters.push(letter);
    }
    Word::reduce(letters)
}

fn letter_at(code: usize) -> Letter {
    Letter::new(code / 2 + 1, code % 2 == 1)
}

fn letter_code(letter: Letter) -> usize {
    2 * letter.slot() + usize::from(letter.is_inverse())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordBasedParams {
    pub ambient_rank: usize,
    pub generator_count: usize,
    /// Generators have length strictly less than this.
    pub max_len: usize,
}

impl WordBasedParams {
    pub fn new(ambient_rank: usize, generator_count: usize, max_len: usize) -> Result<Self> {
        if ambient_rank < 2 || generator_count < 1 || max_len < 2 {
            return Err(Error::InvalidParameter(format!(
                "word-based model needs r >= 2, k >= 1, n >= 2 (got r={ambient_rank}, k={generator_count}, n={max_len})"
            )));
        }
        Ok(WordBasedParams {
            ambient_rank,
            generator_count,
            max_len,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSample {
    pub generators: Vec<Word>,
    pub subgroup: Subgroup,
}

/// `k` generators, each of length uniform on `1..max_len` and then uniform
/// among reduced words of that length.
pub fn sample_word_based<R: Rng + ?Sized>(params: &WordBasedParams, rng: &mut R) -> WordSample {
    let generators: Vec<Word> = (0..params.generator_count)
        .map(|_| {
            let len = rng.random_range(1..params.max_len);
            sample_reduced_word(params.ambient_rank, len, rng)
        })
        .collect();
    let subgroup = Subgroup::from_words(params.ambient_rank, &generators)
        .expect("sampled letters are within the ambient rank");
    WordSample {
        generators,
        subgroup,
    }
}

/// Exactly uniform sampler for partial injections on `n` points.
///
/// A partial injection with domain size `k` is a choice of domain, image and
/// bijection, so there are `C(n,k)^2 k!` of them. The domain size is drawn
/// with those weights; the domain is then a uniform `k`-subset and the image
/// a uniform ordered `k`-subset.
#[derive(Clone, Debug)]
pub struct PartialInjectionSampler {
    n: usize,
    cumulative: Vec<f64>,
}

impl PartialInjectionSampler {
    pub fn new(n: usize) -> Self {
        let weights = partial_injection_counts(n);
        let total: BigUint = weights.iter().sum();
        let scale = BigUint::one() << 53u32;
        let mut prefix = BigUint::ZERO;
        let cumulative = weights
            .iter()
            .map(|w| {
                prefix += w;
                let scaled = (&prefix * &scale) / &total;
                scaled.to_f64().expect("scaled prefix fits in f64") / (1u64 << 53) as f64
            })
            .collect();
        PartialInjectionSampler { n, cumulative }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> PartialInjection {
        let u: f64 = rng.random();
        let k = self
            .cumulative
            .iter()
            .position(|&c| u < c)
            .unwrap_or(self.n);
        let mut domain = rand::seq::index::sample(rng, self.n, k).into_vec();
        domain.sort_unstable();
        let image = rand::seq::index::sample(rng, self.n, k).into_vec();
        let mut forward = vec![None; self.n];
        for (v, w) in domain.into_iter().zip(image) {
            forward[v] = Some(w);
        }
        PartialInjection::from_forward(forward).expect("distinct images")
    }
}

/// `C(n,k)^2 k!` for `k = 0..=n`.
pub fn partial_injection_counts(n: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n + 1);
    let mut binom = BigUint::one();
    let mut fact = BigUint::one();
    for k in 0..=n {
        if k > 0 {
            binom = binom * BigUint::from(n + 1 - k) / BigUint::from(k);
            fact *= BigUint::from(k);
        }
        out.push(&binom * &binom * &fact);
    }
    out
}

pub fn sample_partial_injection<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PartialInjection {
    PartialInjectionSampler::new(n).sample(rng)
}

pub fn sample_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PartialInjection {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    PartialInjection::from_forward(image.into_iter().map(Some).collect()).expect("a permutation")
}

/// Which maps a graph-based draw uses for each letter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InjectionKind {
    #[default]
    Partial,
    /// Uniform permutations: every accepted graph covers the rose.
    Total,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphBasedParams {
    pub ambient_rank: usize,
    pub vertex_count: usize,
    pub max_rejections: usize,
    pub kind: InjectionKind,
}

impl GraphBasedParams {
    pub fn new(ambient_rank: usize, vertex_count: usize) -> Result<Self> {
        if ambient_rank < 2 || vertex_count < 1 {
            return Err(Error::InvalidParameter(format!(
                "graph-based model needs r >= 2, n >= 1 (got r={ambient_rank}, n={vertex_count})"
            )));
        }
        Ok(GraphBasedParams {
            ambient_rank,
            vertex_count,
            max_rejections: DEFAULT_MAX_REJECTIONS,
            kind: InjectionKind::Partial,
        })
    }

    pub fn with_max_rejections(mut self, max_rejections: usize) -> Result<Self> {
        if max_rejections == 0 {
            return Err(Error::InvalidParameter("max_rejections must be at least 1".into()));
        }
        self.max_rejections = max_rejections;
        Ok(self)
    }

    pub fn with_kind(mut self, kind: InjectionKind) -> Self {
        self.kind = kind;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSample {
    pub subgroup: Subgroup,
    /// 1-based number of the accepted draw.
    pub attempts: usize,
}

/// Draws one map per letter on `n` vertices, accepting the first graph that
/// is connected and has no leaf other than the basepoint.
pub fn sample_graph_based<R: Rng + ?Sized>(
    params: &GraphBasedParams,
    rng: &mut R,
) -> Result<GraphSample> {
    let sampler = PartialInjectionSampler::new(params.vertex_count);
    for attempt in 1..=params.max_rejections {
        let maps = (0..params.ambient_rank)
            .map(|_| match params.kind {
                InjectionKind::Partial => sampler.sample(rng),
                InjectionKind::Total => sample_permutation(params.vertex_count, rng),
            })
            .collect();
        let graph = StallingsGraph::from_maps(params.ambient_rank, 0, maps)?;
        if graph.is_core() {
            let subgroup = Subgroup::from_core_graph(graph)?;
            return Ok(GraphSample {
                subgroup,
                attempts: attempt,
            });
        }
    }
    Err(Error::SamplingFailure {
        attempts: params.max_rejections,
    })
}
