use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use trendsax::benchmark::{ReportFormat, WordLength, DEFAULT_RATIO};
use trendsax::{DivisibilityPolicy, Scheme};

#[derive(Debug, Parser)]
#[command(
    name = "trendsax",
    version,
    about = "SAX words, lower-bound checks and 1NN benchmarks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the SAX word of every series in a UCR-format file.
    Convert(ConvertArgs),
    /// Fuzz the MINDIST <= Euclidean lower bound on random Gaussian pairs.
    VerifyBound(VerifyArgs),
    /// Tune and evaluate one scheme on one dataset.
    Evaluate(EvaluateArgs),
    /// Evaluate every scheme on every dataset and report the error matrix.
    Benchmark(BenchmarkArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Classic,
    Overlap,
    Intertwine,
    Split,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Classic => Scheme::Classic,
            SchemeArg::Overlap => Scheme::Overlap,
            SchemeArg::Intertwine => Scheme::Intertwine,
            SchemeArg::Split => Scheme::Split,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Strict,
    Truncate,
}

impl From<PolicyArg> for DivisibilityPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Strict => DivisibilityPolicy::Strict,
            PolicyArg::Truncate => DivisibilityPolicy::Truncate,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    Text,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Text => ReportFormat::Text,
        }
    }
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Fixed number of segments per word.
    #[arg(long, conflicts_with = "ratio")]
    pub word_count: Option<usize>,
    /// Compression ratio n:m (m = n / ratio).
    #[arg(long)]
    pub ratio: Option<usize>,
    #[arg(long, value_enum, default_value = "truncate")]
    pub policy: PolicyArg,
}

impl WordArgs {
    pub fn word_length(&self) -> WordLength {
        match (self.word_count, self.ratio) {
            (Some(m), _) => WordLength::Count(m),
            (None, Some(r)) => WordLength::Ratio(r),
            (None, None) => WordLength::Ratio(DEFAULT_RATIO),
        }
    }
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// UCR-format series file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "classic")]
    pub scheme: SchemeArg,
    #[arg(long, default_value_t = 4)]
    pub alphabet: usize,
    #[command(flatten)]
    pub word: WordArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Series length.
    #[arg(long, default_value_t = 128)]
    pub length: usize,
    /// Pairs per (scheme, alphabet) configuration.
    #[arg(long, default_value_t = 1000)]
    pub pairs: usize,
    /// Schemes to check (default: all four).
    #[arg(long = "scheme", value_enum)]
    pub schemes: Vec<SchemeArg>,
    /// Alphabet sizes, e.g. "3,5,10" or "3..10".
    #[arg(
        long = "alphabet-range",
        visible_alias = "alphabet",
        default_value = "3,5,10"
    )]
    pub alphabets: String,
    #[command(flatten)]
    pub word: WordArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Dataset directory holding <name>_TRAIN and <name>_TEST.
    #[arg(long, required_unless_present_all = ["train", "test"])]
    pub dataset: Option<PathBuf>,
    #[arg(long, requires = "test", conflicts_with = "dataset")]
    pub train: Option<PathBuf>,
    #[arg(long, requires = "train", conflicts_with = "dataset")]
    pub test: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "classic")]
    pub scheme: SchemeArg,
    /// Candidate alphabet sizes, e.g. "3..20" or "4,6,8".
    #[arg(
        long = "alphabet-range",
        visible_alias = "alphabet",
        default_value = "3..20"
    )]
    pub alphabets: String,
    #[command(flatten)]
    pub word: WordArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BenchmarkArgs {
    /// Dataset directories.
    pub datasets: Vec<PathBuf>,
    /// Use every subdirectory of this directory as a dataset (sorted by name).
    #[arg(long)]
    pub root: Option<PathBuf>,
    /// Schemes to run (default: all four).
    #[arg(long = "scheme", value_enum)]
    pub schemes: Vec<SchemeArg>,
    #[arg(
        long = "alphabet-range",
        visible_alias = "alphabet",
        default_value = "3..20"
    )]
    pub alphabets: String,
    #[command(flatten)]
    pub word: WordArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Parses "3..20", "3..=20", "3-20" (all inclusive) or "3,5,7".
pub fn parse_alphabets(spec: &str) -> Result<Vec<usize>> {
    let spec = spec.trim();
    let range = ["..=", "..", "-", ":"]
        .iter()
        .find_map(|sep| spec.split_once(sep));
    let sizes: Vec<usize> = match range {
        Some((lo, hi)) if !spec.contains(',') => {
            let lo: usize = lo
                .trim()
                .parse()
                .with_context(|| format!("bad alphabet range {spec:?}"))?;
            let hi: usize = hi
                .trim()
                .parse()
                .with_context(|| format!("bad alphabet range {spec:?}"))?;
            if lo > hi {
                bail!("alphabet range {spec:?} is empty");
            }
            (lo..=hi).collect()
        }
        _ => spec
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .with_context(|| format!("bad alphabet size {s:?}"))
            })
            .collect::<Result<_>>()?,
    };
    if sizes.is_empty() {
        bail!("no alphabet sizes given");
    }
    Ok(sizes)
}

pub fn schemes_or_all(schemes: &[SchemeArg]) -> Vec<Scheme> {
    if schemes.is_empty() {
        Scheme::ALL.to_vec()
    } else {
        Scheme::ALL
            .into_iter()
            .filter(|s| schemes.iter().any(|a| Scheme::from(*a) == *s))
            .collect()
    }
}
