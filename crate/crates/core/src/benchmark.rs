//! Benchmark sweeps over datasets and schemes, and report serialization.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{evaluate, EvaluationReport, Protocol};
use crate::error::{Result, SaxError};
use crate::repr::{MAX_ALPHABET, MIN_ALPHABET};
use crate::segmentation::{DivisibilityPolicy, Scheme};
use crate::ucr::{dataset_name, load_dataset_dir, DatasetPair};

/// Default searched alphabet sizes.
pub const DEFAULT_ALPHABETS: std::ops::RangeInclusive<usize> = 3..=20;
/// Default compression ratio n:m.
pub const DEFAULT_RATIO: usize = 4;

/// How the word length `m` is derived from the series length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WordLength {
    /// `m = max(1, n / ratio)`.
    Ratio(usize),
    /// Fixed `m`.
    Count(usize),
}

impl Default for WordLength {
    fn default() -> Self {
        WordLength::Ratio(DEFAULT_RATIO)
    }
}

impl WordLength {
    pub fn resolve(self, n: usize) -> Result<usize> {
        match self {
            WordLength::Ratio(0) => Err(SaxError::param("compression ratio must be at least 1")),
            WordLength::Ratio(r) => Ok((n / r).max(1)),
            WordLength::Count(0) => Err(SaxError::param("word length must be at least 1")),
            WordLength::Count(m) => Ok(m),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchmarkConfig {
    /// Dataset directories, each holding `<name>_TRAIN` and `<name>_TEST`.
    pub datasets: Vec<PathBuf>,
    pub schemes: Vec<Scheme>,
    pub word_length: WordLength,
    pub alphabets: Vec<usize>,
    pub policy: DivisibilityPolicy,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        BenchmarkConfig {
            datasets: Vec::new(),
            schemes: Scheme::ALL.to_vec(),
            word_length: WordLength::default(),
            alphabets: DEFAULT_ALPHABETS.collect(),
            policy: DivisibilityPolicy::Truncate,
            jobs: None,
        }
    }
}

impl BenchmarkConfig {
    fn validate(&self) -> Result<()> {
        if self.schemes.is_empty() {
            return Err(SaxError::param("no schemes selected"));
        }
        if self.alphabets.is_empty() {
            return Err(SaxError::param("alphabet range is empty"));
        }
        if let Some(a) = self
            .alphabets
            .iter()
            .find(|a| !(MIN_ALPHABET..=MAX_ALPHABET).contains(a))
        {
            return Err(SaxError::param(format!(
                "alphabet size {a} outside [{MIN_ALPHABET}, {MAX_ALPHABET}]"
            )));
        }
        if self.jobs == Some(0) {
            return Err(SaxError::param("--jobs must be at least 1"));
        }
        match self.word_length {
            WordLength::Ratio(0) | WordLength::Count(0) => {
                Err(SaxError::param("word length must be positive"))
            }
            _ => Ok(()),
        }
    }

    /// Selected schemes, deduplicated, in canonical order.
    fn canonical_schemes(&self) -> Vec<Scheme> {
        Scheme::ALL
            .into_iter()
            .filter(|s| self.schemes.contains(s))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkCell {
    #[serde(flatten)]
    pub report: EvaluationReport,
    pub is_row_min: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkRow {
    pub dataset: String,
    pub cells: Vec<BenchmarkCell>,
    /// Set when the dataset could not be loaded or evaluated; `cells` is
    /// then empty.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeWins {
    pub scheme: Scheme,
    pub wins: usize,
}

/// One row per dataset, one cell per scheme, plus per-scheme win counts.
/// A scheme wins a row when its test error equals the row minimum, so ties
/// credit every tied scheme.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkMatrix {
    pub schemes: Vec<Scheme>,
    pub rows: Vec<BenchmarkRow>,
    pub wins: Vec<SchemeWins>,
}

/// Outcome of evaluating one dataset under every scheme.
pub type RowOutcome = std::result::Result<Vec<EvaluationReport>, String>;

impl BenchmarkMatrix {
    /// Assembles a matrix, flagging row minima and counting wins.
    pub fn from_outcomes(schemes: Vec<Scheme>, outcomes: Vec<(String, RowOutcome)>) -> Self {
        let rows: Vec<BenchmarkRow> = outcomes
            .into_iter()
            .map(|(dataset, outcome)| match outcome {
                Ok(reports) => {
                    let best = reports
                        .iter()
                        .map(|r| r.test_error)
                        .fold(f64::INFINITY, f64::min);
                    let cells = reports
                        .into_iter()
                        .map(|report| BenchmarkCell {
                            is_row_min: report.test_error == best,
                            report,
                        })
                        .collect();
                    BenchmarkRow {
                        dataset,
                        cells,
                        error: None,
                    }
                }
                Err(e) => BenchmarkRow {
                    dataset,
                    cells: Vec::new(),
                    error: Some(e),
                },
            })
            .collect();
        let wins = schemes
            .iter()
            .map(|&scheme| SchemeWins {
                scheme,
                wins: rows
                    .iter()
                    .flat_map(|r| &r.cells)
                    .filter(|c| c.report.scheme == scheme && c.is_row_min)
                    .count(),
            })
            .collect();
        BenchmarkMatrix {
            schemes,
            rows,
            wins,
        }
    }

    pub fn wins_for(&self, scheme: Scheme) -> Option<usize> {
        self.wins
            .iter()
            .find(|w| w.scheme == scheme)
            .map(|w| w.wins)
    }
}

/// Evaluates one split under each scheme. Any failure fails the whole row.
pub fn evaluate_pair(
    pair: &DatasetPair,
    schemes: &[Scheme],
    word_length: WordLength,
    alphabets: &[usize],
    policy: DivisibilityPolicy,
) -> RowOutcome {
    let m = word_length
        .resolve(pair.train.series_length())
        .map_err(|e| e.to_string())?;
    schemes
        .par_iter()
        .map(|&scheme| {
            let protocol = Protocol::new(scheme, m).with_policy(policy);
            evaluate(&pair.train, &pair.test, &protocol, alphabets).map(|e| EvaluationReport {
                dataset: pair.name.clone(),
                ..e.report
            })
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.to_string())
}

fn run_rows(config: &BenchmarkConfig, schemes: &[Scheme]) -> Vec<(String, RowOutcome)> {
    config
        .datasets
        .par_iter()
        .map(|dir| {
            let name = dataset_name(dir);
            let outcome = load_dataset_dir(dir)
                .map_err(|e| e.to_string())
                .and_then(|pair| {
                    evaluate_pair(
                        &pair,
                        schemes,
                        config.word_length,
                        &config.alphabets,
                        config.policy,
                    )
                });
            if let Err(e) = &outcome {
                log::error!("{name}: {e}");
            }
            (name, outcome)
        })
        .collect()
}

/// Runs every configured dataset under every configured scheme. Per-dataset
/// failures become error rows; only an invalid configuration is fatal.
pub fn run_benchmark(config: &BenchmarkConfig) -> Result<BenchmarkMatrix> {
    config.validate()?;
    let schemes = config.canonical_schemes();
    let outcomes = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| SaxError::param(format!("cannot start worker pool: {e}")))?
            .install(|| run_rows(config, &schemes)),
        None => run_rows(config, &schemes),
    };
    Ok(BenchmarkMatrix::from_outcomes(schemes, outcomes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Json,
    Text,
}

impl FromStr for ReportFormat {
    type Err = SaxError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "text" | "table" | "text-table" => Ok(ReportFormat::Text),
            other => Err(SaxError::param(format!("unknown report format {other:?}"))),
        }
    }
}

/// Flat csv record. Error rows leave every evaluation field empty.
#[derive(Debug, Serialize, Deserialize)]
struct CsvRecord {
    dataset: String,
    scheme: Option<Scheme>,
    alpha_chosen: Option<usize>,
    m: Option<usize>,
    train_error: Option<f64>,
    test_error: Option<f64>,
    misclassified: Option<usize>,
    total: Option<usize>,
    is_row_min: Option<bool>,
    error: Option<String>,
}

fn csv_err(e: impl std::fmt::Display) -> SaxError {
    SaxError::Report(e.to_string())
}

fn write_csv(matrix: &BenchmarkMatrix, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in &matrix.rows {
        if let Some(e) = &row.error {
            w.serialize(CsvRecord {
                dataset: row.dataset.clone(),
                scheme: None,
                alpha_chosen: None,
                m: None,
                train_error: None,
                test_error: None,
                misclassified: None,
                total: None,
                is_row_min: None,
                error: Some(e.clone()),
            })
            .map_err(csv_err)?;
        }
        for cell in &row.cells {
            let r = &cell.report;
            w.serialize(CsvRecord {
                dataset: row.dataset.clone(),
                scheme: Some(r.scheme),
                alpha_chosen: Some(r.alpha),
                m: Some(r.m),
                train_error: Some(r.train_error),
                test_error: Some(r.test_error),
                misclassified: Some(r.misclassified),
                total: Some(r.total),
                is_row_min: Some(cell.is_row_min),
                error: None,
            })
            .map_err(csv_err)?;
        }
    }
    w.flush().map_err(csv_err)
}

/// Rebuilds a matrix from a csv report. Row-minimum flags and win counts are
/// recomputed from the parsed errors rather than trusted.
pub fn parse_csv_report(text: &str) -> Result<BenchmarkMatrix> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut outcomes: Vec<(String, RowOutcome)> = Vec::new();
    for (i, rec) in reader.deserialize::<CsvRecord>().enumerate() {
        let rec = rec.map_err(csv_err)?;
        let missing = |field: &str| SaxError::Report(format!("record {}: missing {field}", i + 1));
        let outcome = match rec.error {
            Some(e) => Err(e),
            None => Ok(vec![EvaluationReport {
                dataset: rec.dataset.clone(),
                scheme: rec.scheme.ok_or_else(|| missing("scheme"))?,
                alpha: rec.alpha_chosen.ok_or_else(|| missing("alpha_chosen"))?,
                m: rec.m.ok_or_else(|| missing("m"))?,
                train_error: rec.train_error.ok_or_else(|| missing("train_error"))?,
                test_error: rec.test_error.ok_or_else(|| missing("test_error"))?,
                misclassified: rec.misclassified.ok_or_else(|| missing("misclassified"))?,
                total: rec.total.ok_or_else(|| missing("total"))?,
            }]),
        };
        match (outcomes.last_mut(), outcome) {
            (Some((name, Ok(cells))), Ok(more)) if *name == rec.dataset => cells.extend(more),
            (_, outcome) => outcomes.push((rec.dataset, outcome)),
        }
    }
    let schemes = Scheme::ALL
        .into_iter()
        .filter(|s| {
            outcomes.iter().any(|(_, o)| {
                o.as_ref()
                    .is_ok_and(|cells| cells.iter().any(|c| c.scheme == *s))
            })
        })
        .collect();
    Ok(BenchmarkMatrix::from_outcomes(schemes, outcomes))
}

/// Renders `x` with `digits` significant digits, trailing zeros removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn render_text(matrix: &BenchmarkMatrix) -> String {
    let mut table: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["dataset".to_string()];
    header.extend(matrix.schemes.iter().map(|s| format!("{s}-SAX")));
    table.push(header);
    for row in &matrix.rows {
        let mut line = vec![row.dataset.clone()];
        if let Some(e) = &row.error {
            line.push(format!("error: {e}"));
        } else {
            for scheme in &matrix.schemes {
                let cell = row.cells.iter().find(|c| c.report.scheme == *scheme);
                line.push(match cell {
                    Some(c) if c.is_row_min => {
                        format!("_{}_", format_significant(c.report.test_error, 5))
                    }
                    Some(c) => format!(" {} ", format_significant(c.report.test_error, 5)),
                    None => "-".to_string(),
                });
            }
        }
        table.push(line);
    }
    let mut footer = vec!["wins".to_string()];
    footer.extend(matrix.wins.iter().map(|w| format!(" {} ", w.wins)));
    table.push(footer);

    let columns = table.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            table
                .iter()
                .filter(|r| r.len() == columns || c == 0)
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for (i, line) in table.iter().enumerate() {
        let cells: Vec<String> = line
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if c == 0 {
                    format!("{s:<w$}", w = widths[0])
                } else {
                    format!("{s:>w$}", w = widths[c])
                }
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        if i == 0 || i == table.len() - 2 {
            let total = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
            let _ = writeln!(out, "{}", "-".repeat(total));
        }
    }
    out.push_str("(row minima are marked _like this_)\n");
    out
}

pub fn emit_report(
    matrix: &BenchmarkMatrix,
    format: ReportFormat,
    mut out: impl Write,
) -> Result<()> {
    let io = |source| SaxError::Io {
        path: PathBuf::from("<report>"),
        source,
    };
    match format {
        ReportFormat::Csv => write_csv(matrix, out),
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, matrix).map_err(csv_err)?;
            writeln!(out).map_err(io)
        }
        ReportFormat::Text => out.write_all(render_text(matrix).as_bytes()).map_err(io),
    }
}

pub fn render_report(matrix: &BenchmarkMatrix, format: ReportFormat) -> Result<String> {
    let mut buf = Vec::new();
    emit_report(matrix, format, &mut buf)?;
    String::from_utf8(buf).map_err(csv_err)
}

pub fn write_report(matrix: &BenchmarkMatrix, format: ReportFormat, path: &Path) -> Result<()> {
    let text = render_report(matrix, format)?;
    fs::write(path, text).map_err(|source| SaxError::Io {
        path: path.to_path_buf(),
        source,
    })
}
