use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use stallings::format::{self, Input, Presentation};
use stallings::lab::{self, Distribution};
use stallings::random::{
    rng_from_seed, sample_graph_based, sample_word_based, GraphBasedParams, InjectionKind,
    WordBasedParams, DEFAULT_MAX_REJECTIONS,
};
use stallings::{Subgroup, Word};

/// Stallings graphs of subgroups of free groups, and the Hanna Neumann inequality lab.
///
/// Inputs are subgroup files (`rank r` then one generator per line) or graph
/// files (`rank n basepoint` then `a v w` edges); the format is detected from
/// the header.
#[derive(Debug, Parser)]
#[command(name = "stallings", version)]
struct Cli {
    /// Write data here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fold a subgroup presentation into its core graph.
    Fold { input: PathBuf },
    /// Core graph of the intersection of two subgroups.
    Intersect { left: PathBuf, right: PathBuf },
    /// Core graph of the subgroup generated by two subgroups.
    Join { left: PathBuf, right: PathBuf },
    /// Rank and reduced rank.
    Rank { input: PathBuf },
    /// Index in the free group, or in the subgroup given with --in.
    Index {
        input: PathBuf,
        #[arg(long = "in", value_name = "SUPERGROUP")]
        supergroup: Option<PathBuf>,
    },
    /// Whether a word lies in the subgroup.
    Member {
        input: PathBuf,
        #[command(flatten)]
        word: WordArg,
    },
    /// A free basis read off a spanning tree, as a subgroup file.
    Basis { input: PathBuf },
    /// Core graph of w H w^-1.
    Conjugate {
        input: PathBuf,
        #[command(flatten)]
        word: WordArg,
    },
    /// Draw one random subgroup.
    Sample(SampleArgs),
    /// Ranks and inequality verdicts for a pair of subgroups.
    Analyze { left: PathBuf, right: PathBuf },
    /// Write a builtin counterexample pair: `iehnc v=4 l=4` or `guzman`.
    Examples {
        name: String,
        params: Vec<String>,
    },
    /// Counterexample and nontrivial-intersection frequencies as CSV.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args)]
struct WordArg {
    /// Word as signed generator indices, e.g. "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    /// Random partial injections with rejection.
    Graph,
    /// Random reduced generator words.
    Word,
    /// Random covering of the rose; experiments pair it with a graph-based H.
    FiniteIndex,
}

#[derive(Debug, Args)]
struct SampleArgs {
    model: Model,
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Vertex count (graph) or exclusive word-length bound (word).
    #[arg(long)]
    param: usize,
    /// Number of generator words (word model).
    #[arg(long, default_value_t = 4)]
    generators: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_REJECTIONS)]
    max_rejections: usize,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    model: Model,
    #[arg(long, default_value_t = 2)]
    rank: usize,
    #[arg(long, default_value_t = 4)]
    generators: usize,
    #[arg(long, default_value_t = 2)]
    param_min: usize,
    #[arg(long, default_value_t = 20)]
    param_max: usize,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_REJECTIONS)]
    max_rejections: usize,
}

fn read_subgroup(path: &Path) -> Result<Subgroup> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let input = format::parse_input(&text).with_context(|| format!("parsing {}", path.display()))?;
    let subgroup = match input {
        Input::Presentation(p) => Subgroup::from_words(p.rank, &p.generators)?,
        Input::Graph(g) => {
            ensure!(g.is_connected(), "{}: graph is not connected", path.display());
            Subgroup::from_graph(&g)
        }
    };
    Ok(subgroup)
}

fn parse_word(text: &str, rank: usize) -> Result<Word> {
    let values = text
        .split_whitespace()
        .map(|t| t.parse::<i32>().with_context(|| format!("bad letter `{t}`")))
        .collect::<Result<Vec<_>>>()?;
    let word = Word::from_signed(&values).context("letter 0 is not a generator")?;
    word.check_rank(rank)?;
    Ok(word)
}

fn graph_text(subgroup: &Subgroup) -> String {
    format::write_graph(subgroup.graph())
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn key_values(params: &[String]) -> Result<Vec<(String, usize)>> {
    params
        .iter()
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .with_context(|| format!("expected key=value, got `{p}`"))?;
            let v = v.parse().with_context(|| format!("`{k}` needs an integer"))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn examples(name: &str, params: &[String], out: Option<&Path>) -> Result<()> {
    let (h, k): (Presentation, Presentation) = match name {
        "iehnc" => {
            let mut v = None;
            let mut l = None;
            for (key, value) in key_values(params)? {
                match key.as_str() {
                    "v" => v = Some(value),
                    "l" => l = Some(value),
                    other => bail!("unknown parameter `{other}` for iehnc (expected v, l)"),
                }
            }
            let (Some(v), Some(l)) = (v, l) else {
                bail!("usage: examples iehnc v=<v> l=<l>");
            };
            lab::iehnc_presentations(v, l)?
        }
        "guzman" => {
            ensure!(params.is_empty(), "guzman takes no parameters");
            lab::guzman_presentations()
        }
        other => bail!("unknown example `{other}` (expected iehnc or guzman)"),
    };
    let (h, k) = (format::write_presentation(&h), format::write_presentation(&k));
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            fs::write(dir.join("H.txt"), h)?;
            fs::write(dir.join("K.txt"), k)?;
            Ok(())
        }
        None => {
            print!("# H\n{h}# K\n{k}");
            Ok(())
        }
    }
}

fn sample(args: &SampleArgs) -> Result<String> {
    let mut rng = rng_from_seed(args.seed);
    match args.model {
        Model::Graph | Model::FiniteIndex => {
            let kind = if args.model == Model::Graph {
                InjectionKind::Partial
            } else {
                InjectionKind::Total
            };
            let params = GraphBasedParams::new(args.rank, args.param)?
                .with_max_rejections(args.max_rejections)?
                .with_kind(kind);
            let s = sample_graph_based(&params, &mut rng)?;
            Ok(format::write_graph_with_comment(
                s.subgroup.graph(),
                &format!("seed={} attempt={}", args.seed, s.attempts),
            ))
        }
        Model::Word => {
            let params = WordBasedParams::new(args.rank, args.generators, args.param)?;
            let s = sample_word_based(&params, &mut rng);
            let gens = s
                .generators
                .iter()
                .map(|g| format!("[{g}]"))
                .collect::<Vec<_>>()
                .join(" ");
            Ok(format::write_graph_with_comment(
                s.subgroup.graph(),
                &format!("seed={} attempt=1 generators={gens}", args.seed),
            ))
        }
    }
}

fn experiment(args: &ExperimentArgs) -> Result<String> {
    ensure!(args.param_min <= args.param_max, "--param-min exceeds --param-max");
    let distribution = match args.model {
        Model::Graph => Distribution::GraphBased {
            rank: args.rank,
            max_rejections: args.max_rejections,
        },
        Model::Word => Distribution::WordBased {
            rank: args.rank,
            generators: args.generators,
        },
        Model::FiniteIndex => Distribution::FiniteIndex {
            rank: args.rank,
            max_rejections: args.max_rejections,
        },
    };
    let params: Vec<usize> = (args.param_min..=args.param_max).collect();
    let rows = lab::run_experiment(&distribution, &params, args.samples, args.seed, args.jobs)?;
    Ok(lab::write_csv(&rows))
}

fn run(cli: Cli) -> Result<()> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Fold { input } => emit(out, &graph_text(&read_subgroup(&input)?)),
        Command::Intersect { left, right } => {
            let meet = read_subgroup(&left)?.intersect(&read_subgroup(&right)?)?;
            emit(out, &graph_text(&meet))
        }
        Command::Join { left, right } => {
            let join = read_subgroup(&left)?.join(&read_subgroup(&right)?)?;
            emit(out, &graph_text(&join))
        }
        Command::Rank { input } => {
            let h = read_subgroup(&input)?;
            emit(out, &format!("rank={}\nreduced_rank={}\n", h.rank(), h.reduced_rank()))
        }
        Command::Index { input, supergroup } => {
            let h = read_subgroup(&input)?;
            let index = match supergroup {
                Some(sup) => read_subgroup(&sup)?.relative_index(&h)?,
                None => h.index_in_free_group(),
            };
            emit(out, &format!("index={index}\n"))
        }
        Command::Member { input, word } => {
            let h = read_subgroup(&input)?;
            let w = parse_word(&word.word, h.ambient_rank())?;
            emit(out, &format!("member={}\n", h.contains(&w)))
        }
        Command::Basis { input } => {
            let h = read_subgroup(&input)?;
            let p = Presentation {
                rank: h.ambient_rank(),
                generators: h.basis(),
            };
            emit(out, &format::write_presentation(&p))
        }
        Command::Conjugate { input, word } => {
            let h = read_subgroup(&input)?;
            let w = parse_word(&word.word, h.ambient_rank())?;
            emit(out, &graph_text(&h.conjugate(&w)?))
        }
        Command::Sample(args) => emit(out, &sample(&args)?),
        Command::Analyze { left, right } => {
            let report = lab::analyze_pair(&read_subgroup(&left)?, &read_subgroup(&right)?)?;
            emit(out, &report.to_string())
        }
        Command::Examples { name, params } => examples(&name, &params, out),
        Command::Experiment(args) => emit(out, &experiment(&args)?),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
