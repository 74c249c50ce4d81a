//! Property checks for every module, run under a seeded proptest runner so
//! the same cases are generated on every run.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};
use rand::SeedableRng;
use trendsax::benchmark::{
    parse_csv_report, render_report, BenchmarkMatrix, ReportFormat, RowOutcome,
};
use trendsax::classify::{EncodedSet, Label};
use trendsax::distance::verify_lower_bound;
use trendsax::ucr::parse_ucr;
use trendsax::{
    evaluate, loocv_error, make_alphabet_table, mindist, nn1, paa, segment, symbolize, znormalize,
    AlphabetTable, DivisibilityPolicy, EvaluationReport, LabeledDataset, PaaVector, Protocol,
    SaxError, SaxWord, Scheme, Segmentation, TimeSeries,
};

pub const CASES: u32 = 256;
const SEED: [u8; 32] = *b"trendsax-invariant-suite-seed-01";

pub type Check = fn() -> Result<(), String>;

fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner().run(&strategy, test).map_err(|e| match e {
        TestError::Fail(why, value) => format!("{why} (minimal input: {value:?})"),
        TestError::Abort(why) => format!("aborted: {why}"),
    })
}

fn scheme() -> impl Strategy<Value = Scheme> {
    prop::sample::select(Scheme::ALL.to_vec())
}

fn finite() -> impl Strategy<Value = f64> {
    -1e3..1e3f64
}

fn values(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(finite(), 1..=max_len)
}

/// (n, m) with 1 <= m <= n.
fn length_and_words() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=96).prop_flat_map(|n| (Just(n), 1..=n))
}

fn gaussian_pair(n: usize, seed: u64) -> (TimeSeries, TimeSeries) {
    let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let s = super::series(super::gaussian(&mut r, n));
    let t = super::series(super::gaussian(&mut r, n));
    (znormalize(&s), znormalize(&t))
}

fn seg_blocks(seg: &Segmentation) -> Vec<Vec<usize>> {
    seg.blocks().map(<[usize]>::to_vec).collect()
}

// ---- core representation ----

pub fn breakpoints_antisymmetric() -> Result<(), String> {
    run(2usize..=26, |a| {
        let t = make_alphabet_table(a).unwrap();
        let bp = t.breakpoints();
        prop_assert_eq!(bp.len(), a - 1);
        for i in 0..bp.len() {
            prop_assert!((bp[i] + bp[bp.len() - 1 - i]).abs() < 1e-9);
            if i > 0 {
                prop_assert!(bp[i] > bp[i - 1]);
            }
        }
        Ok(())
    })
}

pub fn pair_dist_zero_band() -> Result<(), String> {
    run(
        (2usize..=26).prop_flat_map(|a| (Just(a), 0..a, 0..a)),
        |(a, i, j)| {
            let t = make_alphabet_table(a).unwrap();
            let d = t.dist(i as u8, j as u8);
            prop_assert_eq!(d, t.dist(j as u8, i as u8));
            prop_assert!(d >= 0.0);
            prop_assert_eq!(d == 0.0, i.abs_diff(j) <= 1);
            Ok(())
        },
    )
}

pub fn paa_permutation_invariant() -> Result<(), String> {
    let strategy =
        (length_and_words(), scheme(), any::<u64>()).prop_flat_map(|((n, m), s, seed)| {
            (
                prop::collection::vec(finite(), n),
                Just(m),
                Just(s),
                Just(seed),
            )
        });
    run(strategy, |(v, m, s, seed)| {
        let n = v.len();
        let ts = TimeSeries::new(v).unwrap();
        let seg = segment(s, n, m, DivisibilityPolicy::Truncate).unwrap();
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let shuffled: Vec<Vec<usize>> = seg_blocks(&seg)
            .into_iter()
            .map(|mut b| {
                rand::seq::SliceRandom::shuffle(b.as_mut_slice(), &mut r);
                b
            })
            .collect();
        let seg2 = Segmentation::from_blocks(s, n, shuffled).unwrap();
        let a = paa(&ts, &seg).unwrap();
        let b = paa(&ts, &seg2).unwrap();
        for (x, y) in a.means().iter().zip(b.means()) {
            prop_assert!((x - y).abs() <= 1e-12 * (1.0 + x.abs()), "{} vs {}", x, y);
        }
        Ok(())
    })
}

pub fn znormalize_moments_and_idempotence() -> Result<(), String> {
    run(values(200), |v| {
        let z = znormalize(&TimeSeries::new(v).unwrap());
        let is_zero = z.values().iter().all(|&x| x == 0.0);
        if !is_zero {
            prop_assert!(z.mean().abs() < 1e-9);
            prop_assert!((z.std_dev() - 1.0).abs() < 1e-9);
        }
        let zz = znormalize(&z);
        for (a, b) in z.values().iter().zip(zz.values()) {
            prop_assert!((a - b).abs() < 1e-9);
        }
        Ok(())
    })
}

pub fn symbolize_monotone() -> Result<(), String> {
    let strategy = (
        2usize..=26,
        prop::collection::vec((-4.0..4.0f64, 0.0..3.0f64), 1..40),
    );
    run(strategy, |(a, pairs)| {
        let t = make_alphabet_table(a).unwrap();
        let lo: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let hi: Vec<f64> = pairs.iter().map(|p| p.0 + p.1).collect();
        // build PAA vectors through identity segmentations
        let to_paa = |v: &[f64]| -> PaaVector {
            let n = v.len();
            paa(
                &TimeSeries::new(v.to_vec()).unwrap(),
                &segment(Scheme::Classic, n, n, DivisibilityPolicy::Strict).unwrap(),
            )
            .unwrap()
        };
        let w1 = symbolize(&to_paa(&lo), &t);
        let w2 = symbolize(&to_paa(&hi), &t);
        for (x, y) in w1.symbols().iter().zip(w2.symbols()) {
            prop_assert!(x <= y);
        }
        Ok(())
    })
}

// ---- segmentation ----

pub fn segmentation_partitions() -> Result<(), String> {
    run((length_and_words(), scheme()), |((n, m), s)| {
        let seg = segment(s, n, m, DivisibilityPolicy::Truncate).unwrap();
        let w = n / m;
        prop_assert_eq!(seg.num_blocks(), m);
        prop_assert_eq!(seg.effective_length(), m * w);
        let mut seen = vec![0u32; m * w];
        for b in seg.blocks() {
            prop_assert_eq!(b.len(), w);
            for &i in b {
                prop_assert!(i < m * w);
                seen[i] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        // sorted blocks concatenated form a permutation of 0..m*w
        let mut all: Vec<usize> = seg_blocks(&seg)
            .into_iter()
            .flat_map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..m * w).collect::<Vec<_>>());
        // the closed-form oracle agrees block for block
        let mut got = seg_blocks(&seg);
        got.iter_mut().for_each(|b| b.sort_unstable());
        prop_assert_eq!(got, super::oracle::blocks(s, n, m));
        Ok(())
    })
}

pub fn overlap_is_boundary_involution() -> Result<(), String> {
    run(length_and_words(), |(n, m)| {
        let w = n / m;
        let overlap = segment(Scheme::Overlap, n, m, DivisibilityPolicy::Truncate).unwrap();
        let classic = segment(Scheme::Classic, n, m, DivisibilityPolicy::Truncate).unwrap();
        let mut blocks = seg_blocks(&overlap);
        if w >= 2 {
            for i in 0..m - 1 {
                let last = blocks[i][w - 1];
                let first = blocks[i + 1][0];
                blocks[i][w - 1] = first;
                blocks[i + 1][0] = last;
            }
        }
        prop_assert_eq!(blocks, seg_blocks(&classic));
        Ok(())
    })
}

pub fn unit_blocks_agree() -> Result<(), String> {
    run(1usize..=200, |n| {
        let classic =
            seg_blocks(&segment(Scheme::Classic, n, n, DivisibilityPolicy::Strict).unwrap());
        for s in Scheme::ALL {
            prop_assert_eq!(
                &seg_blocks(&segment(s, n, n, DivisibilityPolicy::Strict).unwrap()),
                &classic
            );
        }
        Ok(())
    })
}

pub fn paired_schemes_stay_in_span() -> Result<(), String> {
    run(
        (
            1usize..=50,
            prop::sample::select(vec![Scheme::Intertwine, Scheme::Split]),
        ),
        |(w, s)| {
            let seg = segment(s, 2 * w, 2, DivisibilityPolicy::Strict).unwrap();
            let mut all: Vec<usize> = seg.blocks().flatten().copied().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..2 * w).collect::<Vec<_>>());
            Ok(())
        },
    )
}

// ---- distance ----

fn word_pair() -> impl Strategy<Value = (usize, Vec<u8>, Vec<u8>, usize)> {
    (2usize..=26, 1usize..=32, 1usize..=8).prop_flat_map(|(a, m, w)| {
        let sym = prop::collection::vec(0..a as u8, m);
        (Just(a), sym.clone(), sym, Just(m * w))
    })
}

pub fn mindist_metric_basics() -> Result<(), String> {
    run(word_pair(), |(a, x, y, n)| {
        let t = make_alphabet_table(a).unwrap();
        let wx = SaxWord::new(x, a, n).unwrap();
        let wy = SaxWord::new(y, a, n).unwrap();
        let d = mindist(&wx, &wy, &t).unwrap();
        prop_assert!(d >= 0.0);
        prop_assert_eq!(d, mindist(&wy, &wx, &t).unwrap());
        prop_assert_eq!(mindist(&wx, &wx, &t).unwrap(), 0.0);
        Ok(())
    })
}

pub fn lower_bound_holds() -> Result<(), String> {
    let strategy = (8usize..=160, scheme(), 2usize..=26, any::<u64>())
        .prop_flat_map(|(n, s, a, seed)| (Just(n), 1..=n, Just(s), Just(a), Just(seed)));
    run(strategy, |(n, m, s, a, seed)| {
        let (x, y) = gaussian_pair(n, seed);
        let r = verify_lower_bound(&x, &y, s, m, a).unwrap();
        prop_assert!(r.holds, "mindist {} > euclidean {}", r.mindist, r.euclidean);
        Ok(())
    })
}

pub fn mindist_depends_only_on_words() -> Result<(), String> {
    run((1usize..=64, 2usize..=26, any::<u64>()), |(n, a, seed)| {
        let (x, y) = gaussian_pair(n, seed);
        let t = make_alphabet_table(a).unwrap();
        let mut reference = None;
        // with one point per block every scheme yields the same words
        for s in Scheme::ALL {
            let seg = segment(s, n, n, DivisibilityPolicy::Strict).unwrap();
            let wx = symbolize(&paa(&x, &seg).unwrap(), &t);
            let wy = symbolize(&paa(&y, &seg).unwrap(), &t);
            let d = mindist(&wx, &wy, &t).unwrap();
            match reference {
                None => reference = Some((wx, wy, d)),
                Some((ref rx, ref ry, rd)) => {
                    prop_assert_eq!(rx, &wx);
                    prop_assert_eq!(ry, &wy);
                    prop_assert_eq!(rd, d);
                }
            }
        }
        Ok(())
    })
}

/// Mean slack over a fixed pair set does not grow from alpha 3 to alpha 10.
pub fn slack_shrinks_with_alphabet() -> Result<(), String> {
    let pairs: Vec<_> = (0..200).map(|i| gaussian_pair(64, 9_000 + i)).collect();
    let mean_slack = |a: usize| -> f64 {
        pairs
            .iter()
            .map(|(x, y)| {
                verify_lower_bound(x, y, Scheme::Classic, 16, a)
                    .unwrap()
                    .slack
            })
            .sum::<f64>()
            / pairs.len() as f64
    };
    let (s3, s10) = (mean_slack(3), mean_slack(10));
    if s10 <= s3 {
        Ok(())
    } else {
        Err(format!(
            "mean slack {s10} at alpha 10 exceeds {s3} at alpha 3"
        ))
    }
}

// ---- classify ----

pub fn nn1_argmin_scale_invariant() -> Result<(), String> {
    let strategy =
        (3usize..=12, 1usize..=12, 1usize..=20, 0.01..100.0f64).prop_flat_map(|(a, m, k, c)| {
            let word = prop::collection::vec(0..a as u8, m);
            (
                Just(a),
                word.clone(),
                prop::collection::vec((word, 0i64..4), k),
                Just(c),
            )
        });
    run(strategy, |(a, q, train, c)| {
        let t = make_alphabet_table(a).unwrap();
        let n = q.len() * 4;
        let query = SaxWord::new(q, a, n).unwrap();
        let words: Vec<(SaxWord, Label)> = train
            .into_iter()
            .map(|(w, l)| (SaxWord::new(w, a, n).unwrap(), l))
            .collect();
        let label = nn1(&query, &words, &t).unwrap();
        // argmin over distances rescaled by c, first index on ties
        let scaled = |w: &SaxWord| -> f64 {
            query
                .symbols()
                .iter()
                .zip(w.symbols())
                .map(|(&x, &y)| (c * t.dist(x, y)).powi(2))
                .sum()
        };
        let mut best = 0;
        for j in 1..words.len() {
            if scaled(&words[j].0) < scaled(&words[best].0) {
                best = j;
            }
        }
        prop_assert_eq!(label, words[best].1);
        Ok(())
    })
}

fn small_split(seed: u64) -> (LabeledDataset, LabeledDataset, usize) {
    let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = rand::Rng::random_range(&mut r, 8..=40);
    let classes = rand::Rng::random_range(&mut r, 2..=4);
    let (train, test) = super::synthetic_split(&mut r, classes, n, 12, 10, 0.8);
    (train, test, n)
}

pub fn evaluate_deterministic_across_threads() -> Result<(), String> {
    run((any::<u64>(), scheme()), |(seed, s)| {
        let (train, test, n) = small_split(seed);
        let p = Protocol::new(s, (n / 4).max(1));
        let alphas = [3, 4, 6, 9];
        let go = |threads: usize| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| evaluate(&train, &test, &p, &alphas).unwrap())
        };
        let (a, b) = (go(1), go(4));
        prop_assert_eq!(&a.report, &b.report);
        prop_assert_eq!(&a.predictions, &b.predictions);
        prop_assert_eq!(
            format!("{:?}", a.report.train_error.to_bits()),
            format!("{:?}", b.report.train_error.to_bits())
        );
        Ok(())
    })
}

pub fn error_accounting_is_exact() -> Result<(), String> {
    run((any::<u64>(), scheme()), |(seed, s)| {
        let (train, test, n) = small_split(seed);
        let e = evaluate(&train, &test, &Protocol::new(s, (n / 3).max(1)), &[3, 5]).unwrap();
        let r = &e.report;
        prop_assert_eq!(r.test_error, r.misclassified as f64 / r.total as f64);
        prop_assert_eq!(
            (r.test_error * r.total as f64).round() as usize,
            r.misclassified
        );
        prop_assert_eq!(r.total, test.len());
        prop_assert!((0.0..=1.0).contains(&r.train_error));
        Ok(())
    })
}

pub fn collapsed_words_do_not_crash() -> Result<(), String> {
    let strategy = (
        prop::collection::vec((-5.0..5.0f64, 0i64..3), 2..20),
        1usize..=12,
        scheme(),
        2usize..=26,
    );
    run(strategy, |(rows, n, s, a)| {
        let data = LabeledDataset::new(
            rows.iter()
                .map(|&(c, l)| (TimeSeries::new(vec![c; n]).unwrap(), l))
                .collect(),
        )
        .unwrap();
        let labels = data.labels();
        let wrong = (0..labels.len())
            .filter(|&i| labels[if i == 0 { 1 } else { 0 }] != labels[i])
            .count();
        let got = loocv_error(&data, &Protocol::new(s, (n / 2).max(1)), a).unwrap();
        prop_assert_eq!(got, wrong as f64 / labels.len() as f64);
        // every series encodes to the same word
        let enc = EncodedSet::new(&data, &Protocol::new(s, (n / 2).max(1))).unwrap();
        let words = enc.words(&AlphabetTable::new(a).unwrap());
        prop_assert!(words.iter().all(|w| w == &words[0]));
        Ok(())
    })
}

// ---- data io and reports ----

fn ucr_text() -> impl Strategy<Value = String> {
    let token = prop_oneof![
        (-100i32..100).prop_map(|v| v.to_string()),
        (-1e6..1e6f64).prop_map(|v| v.to_string()),
        Just("NaN".to_string()),
        Just("inf".to_string()),
        Just("".to_string()),
        Just("x1".to_string()),
        Just("1e400".to_string()),
        Just("2.5".to_string()),
    ];
    let sep = prop::sample::select(vec![",", "\t", " ", ", "]);
    let line = (prop::collection::vec(token, 0..8), sep).prop_map(|(t, s)| t.join(s));
    prop::collection::vec(line, 0..8).prop_map(|lines| lines.join("\n"))
}

pub fn ucr_parser_is_total() -> Result<(), String> {
    run(ucr_text(), |text| {
        match parse_ucr(&text, std::path::Path::new("fuzz")) {
            Ok(d) => {
                prop_assert!(!d.is_empty());
                let n = d.series_length();
                prop_assert!(d.series().iter().all(|s| s.len() == n));
            }
            Err(SaxError::Format { line, .. }) => {
                let non_blank = text.lines().filter(|l| !l.trim().is_empty()).count();
                prop_assert!(line <= text.lines().count());
                // line 0 is only used when there is nothing to parse
                prop_assert_eq!(line == 0, non_blank == 0);
            }
            Err(other) => {
                return Err(TestCaseError::fail(format!(
                    "unexpected error kind: {other}"
                )))
            }
        }
        Ok(())
    })
}

fn outcomes() -> impl Strategy<Value = Vec<(String, RowOutcome)>> {
    let err = prop::sample::select(vec![0.0, 0.1 + 0.2, 1.0 / 3.0, 1e-300, 0.125, 1.0]);
    let row = (
        any::<bool>(),
        prop::collection::vec((0usize..5, err, 3usize..21), 4),
    )
        .prop_map(|(failed, cells)| {
            if failed {
                Err("could not load, \"x\"\nsecond line".to_string())
            } else {
                Ok(cells
                    .into_iter()
                    .zip(Scheme::ALL)
                    .map(|((wrong, train_error, alpha), scheme)| EvaluationReport {
                        dataset: String::new(),
                        scheme,
                        alpha,
                        m: 7,
                        train_error,
                        test_error: wrong as f64 / 4.0,
                        misclassified: wrong,
                        total: 4,
                    })
                    .collect::<Vec<_>>())
            }
        });
    prop::collection::vec(row, 1..8).prop_map(|rows| {
        rows.into_iter()
            .enumerate()
            .map(|(i, r)| {
                let name = format!("D{i}");
                let r = r.map(|cells| {
                    cells
                        .into_iter()
                        .map(|c| EvaluationReport {
                            dataset: name.clone(),
                            ..c
                        })
                        .collect()
                });
                (name, r)
            })
            .collect()
    })
}

pub fn win_counts_match_recount() -> Result<(), String> {
    run(outcomes(), |rows| {
        let m = BenchmarkMatrix::from_outcomes(Scheme::ALL.to_vec(), rows);
        let mut recount = [0usize; 4];
        for row in &m.rows {
            let Some(best) = row.cells.iter().map(|c| c.report.misclassified).min() else {
                continue;
            };
            for c in &row.cells {
                prop_assert_eq!(c.is_row_min, c.report.misclassified == best);
                if c.report.misclassified == best {
                    recount[Scheme::ALL
                        .iter()
                        .position(|s| *s == c.report.scheme)
                        .unwrap()] += 1;
                }
            }
        }
        let wins: Vec<usize> = m.wins.iter().map(|w| w.wins).collect();
        prop_assert_eq!(wins, recount.to_vec());
        let evaluated = m.rows.iter().filter(|r| r.error.is_none()).count();
        prop_assert!(recount.iter().sum::<usize>() >= evaluated);
        Ok(())
    })
}

pub fn matrix_order_invariant() -> Result<(), String> {
    run((outcomes(), any::<u64>()), |(rows, seed)| {
        let mut shuffled = rows.clone();
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut r);
        let a = BenchmarkMatrix::from_outcomes(Scheme::ALL.to_vec(), rows);
        let b = BenchmarkMatrix::from_outcomes(Scheme::ALL.to_vec(), shuffled);
        prop_assert_eq!(&a.wins, &b.wins);
        let mut ra = a.rows.clone();
        let mut rb = b.rows.clone();
        ra.sort_by(|x, y| x.dataset.cmp(&y.dataset));
        rb.sort_by(|x, y| x.dataset.cmp(&y.dataset));
        prop_assert_eq!(ra, rb);
        Ok(())
    })
}

pub fn csv_report_byte_stable() -> Result<(), String> {
    run(outcomes(), |rows| {
        let m = BenchmarkMatrix::from_outcomes(Scheme::ALL.to_vec(), rows);
        let csv = render_report(&m, ReportFormat::Csv).unwrap();
        let parsed = parse_csv_report(&csv).unwrap();
        prop_assert_eq!(render_report(&parsed, ReportFormat::Csv).unwrap(), csv);
        let json = render_report(&m, ReportFormat::Json).unwrap();
        let back: BenchmarkMatrix = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, m);
        Ok(())
    })
}

/// Every property, by module.
pub fn all() -> Vec<(&'static str, Check)> {
    vec![
        (
            "core-repr: breakpoints antisymmetric and increasing",
            breakpoints_antisymmetric as Check,
        ),
        (
            "core-repr: pair_dist zero iff |i-j| <= 1",
            pair_dist_zero_band,
        ),
        (
            "core-repr: paa permutation-invariant within blocks",
            paa_permutation_invariant,
        ),
        (
            "core-repr: znormalize moments and idempotence",
            znormalize_moments_and_idempotence,
        ),
        ("core-repr: symbolize monotone", symbolize_monotone),
        (
            "segmentation: exact partition, sorted-permutation, oracle agreement",
            segmentation_partitions,
        ),
        (
            "segmentation: overlap boundary swap is an involution",
            overlap_is_boundary_involution,
        ),
        (
            "segmentation: w = 1 identical across schemes",
            unit_blocks_agree,
        ),
        (
            "segmentation: paired schemes stay inside their 2w span",
            paired_schemes_stay_in_span,
        ),
        (
            "distance: mindist symmetric, non-negative, zero on self",
            mindist_metric_basics,
        ),
        ("distance: lower bound holds", lower_bound_holds),
        (
            "distance: mindist depends only on the words",
            mindist_depends_only_on_words,
        ),
        (
            "distance: mean slack at alpha 10 <= alpha 3",
            slack_shrinks_with_alphabet,
        ),
        (
            "classify: nn1 argmin scale-invariant",
            nn1_argmin_scale_invariant,
        ),
        (
            "classify: evaluate deterministic across thread counts",
            evaluate_deterministic_across_threads,
        ),
        (
            "classify: test_error * total == misclassified",
            error_accounting_is_exact,
        ),
        (
            "classify: collapsed words use first-index fallback",
            collapsed_words_do_not_crash,
        ),
        (
            "data-io: load_ucr total with line-numbered errors",
            ucr_parser_is_total,
        ),
        (
            "data-io: win counts equal recount of row minima",
            win_counts_match_recount,
        ),
        (
            "data-io: matrix invariant to dataset order",
            matrix_order_invariant,
        ),
        (
            "data-io: csv byte-stable and json round-trips",
            csv_report_byte_stable,
        ),
    ]
}
