mod args;

use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use trendsax::benchmark::{
    emit_report, run_benchmark, write_report, BenchmarkConfig, BenchmarkMatrix,
};
use trendsax::distance::verify_lower_bound_with;
use trendsax::ucr::{load_dataset_dir, load_ucr, DatasetPair};
use trendsax::{
    evaluate, make_alphabet_table, paa, segment, symbolize, znormalize, EvaluationReport, Protocol,
    Scheme, TimeSeries,
};

use crate::args::{
    parse_alphabets, schemes_or_all, BenchmarkArgs, Cli, Command, ConvertArgs, EvaluateArgs,
    FormatArg, VerifyArgs,
};

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Convert(a) => convert(a),
        Command::VerifyBound(a) => verify_bound(a),
        Command::Evaluate(a) => evaluate_one(a),
        Command::Benchmark(a) => benchmark(a),
    }
}

fn convert(a: ConvertArgs) -> Result<()> {
    let data = load_ucr(&a.input)?;
    let n = data.series_length();
    let m = a.word.word_length().resolve(n)?;
    let seg = segment(a.scheme.into(), n, m, a.word.policy.into())?;
    let table = make_alphabet_table(a.alphabet)?;

    let mut out = io::stdout().lock();
    let mut json = Vec::new();
    if a.format == FormatArg::Csv {
        writeln!(out, "index,label,word")?;
    }
    for (i, (s, label)) in data.series().iter().zip(data.labels()).enumerate() {
        let word = symbolize(&paa(&znormalize(s), &seg)?, &table).to_string();
        match a.format {
            FormatArg::Text => writeln!(out, "{label}\t{word}")?,
            FormatArg::Csv => writeln!(out, "{i},{label},{word}")?,
            FormatArg::Json => {
                json.push(serde_json::json!({ "index": i, "label": label, "word": word }))
            }
        }
    }
    if a.format == FormatArg::Json {
        let doc = serde_json::json!({
            "scheme": Scheme::from(a.scheme),
            "alphabet_size": a.alphabet,
            "m": m,
            "source_length": seg.effective_length(),
            "words": json,
        });
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)?;
    }
    Ok(())
}

fn verify_bound(a: VerifyArgs) -> Result<()> {
    let m = a.word.word_length().resolve(a.length)?;
    let alphabets = parse_alphabets(&a.alphabets)?;
    let mut violations = 0usize;
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "scheme\talphabet\tpairs\tviolations\tmin_slack\tmean_slack"
    )?;
    for scheme in schemes_or_all(&a.schemes) {
        for &alpha in &alphabets {
            let table = make_alphabet_table(alpha)?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let mut draw = || -> Result<TimeSeries> {
                let v: Vec<f64> = (0..a.length)
                    .map(|_| StandardNormal.sample(&mut rng))
                    .collect();
                Ok(znormalize(&TimeSeries::new(v)?))
            };
            let (mut bad, mut min_slack, mut total_slack) = (0usize, f64::INFINITY, 0.0);
            for _ in 0..a.pairs {
                let (s, t) = (draw()?, draw()?);
                let r = verify_lower_bound_with(&s, &t, scheme, m, &table)?;
                bad += usize::from(!r.holds);
                min_slack = min_slack.min(r.slack);
                total_slack += r.slack;
            }
            violations += bad;
            writeln!(
                out,
                "{scheme}\t{alpha}\t{}\t{bad}\t{min_slack:.6}\t{:.6}",
                a.pairs,
                total_slack / a.pairs.max(1) as f64
            )?;
        }
    }
    out.flush()?;
    if violations > 0 {
        bail!("lower bound violated on {violations} pairs");
    }
    Ok(())
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()?
            .install(f)),
        None => Ok(f()),
    }
}

fn evaluate_one(a: EvaluateArgs) -> Result<()> {
    let pair = match (&a.dataset, &a.train, &a.test) {
        (Some(dir), _, _) => load_dataset_dir(dir)?,
        (None, Some(train), Some(test)) => {
            let name = train
                .file_stem()
                .map(|s| s.to_string_lossy().trim_end_matches("_TRAIN").to_string())
                .unwrap_or_default();
            DatasetPair::new(name, load_ucr(train)?, load_ucr(test)?)?
        }
        _ => bail!("give either --dataset or both --train and --test"),
    };
    let alphabets = parse_alphabets(&a.alphabets)?;
    let m = a.word.word_length().resolve(pair.train.series_length())?;
    let scheme: Scheme = a.scheme.into();
    let protocol = Protocol::new(scheme, m).with_policy(a.word.policy.into());
    let e = with_jobs(a.jobs, || {
        evaluate(&pair.train, &pair.test, &protocol, &alphabets)
    })??;
    let report = EvaluationReport {
        dataset: pair.name.clone(),
        ..e.report
    };

    let mut out = io::stdout().lock();
    match a.format {
        FormatArg::Text => {
            writeln!(out, "dataset        {}", report.dataset)?;
            writeln!(out, "scheme         {}", report.scheme)?;
            writeln!(out, "m              {}", report.m)?;
            writeln!(out, "alphabet       {}", report.alpha)?;
            writeln!(out, "train error    {} (leave-one-out)", report.train_error)?;
            writeln!(
                out,
                "test error     {} ({}/{})",
                report.test_error, report.misclassified, report.total
            )?;
        }
        format => {
            let matrix =
                BenchmarkMatrix::from_outcomes(vec![scheme], vec![(pair.name, Ok(vec![report]))]);
            emit_report(&matrix, format.into(), &mut out)?;
        }
    }
    Ok(())
}

fn dataset_dirs(a: &BenchmarkArgs) -> Result<Vec<PathBuf>> {
    let mut dirs = a.datasets.clone();
    if let Some(root) = &a.root {
        let mut found: Vec<PathBuf> = std::fs::read_dir(root)
            .with_context(|| format!("cannot list {}", root.display()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_dir())
            .collect();
        found.sort();
        dirs.extend(found);
    }
    if dirs.is_empty() {
        bail!("no datasets given; pass dataset directories or --root");
    }
    Ok(dirs)
}

fn benchmark(a: BenchmarkArgs) -> Result<()> {
    let config = BenchmarkConfig {
        datasets: dataset_dirs(&a)?,
        schemes: schemes_or_all(&a.schemes),
        word_length: a.word.word_length(),
        alphabets: parse_alphabets(&a.alphabets)?,
        policy: a.word.policy.into(),
        jobs: a.jobs,
    };
    let matrix = run_benchmark(&config)?;
    match &a.output {
        Some(path) => write_report(&matrix, a.format.into(), path)?,
        None => emit_report(&matrix, a.format.into(), io::stdout().lock())?,
    }
    let failed = matrix.rows.iter().filter(|r| r.error.is_some()).count();
    if failed > 0 {
        log::warn!(
            "{failed} of {} datasets failed; see error rows",
            matrix.rows.len()
        );
    }
    Ok(())
}
