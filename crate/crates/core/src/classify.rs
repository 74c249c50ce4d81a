//! 1NN classification in SAX word space with leave-one-out alphabet tuning.
//!
//! Words for a dataset are built in two stages: normalization, segmentation
//! and PAA happen once per scheme ([`EncodedSet`]), and only the cheap
//! discretization is repeated per alphabet size. Candidate alphabets and test
//! instances are evaluated in parallel on the ambient rayon pool; results are
//! always collected by index so the outcome does not depend on scheduling.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::mindist;
use crate::error::{Result, SaxError};
use crate::repr::{
    paa, symbolize, znormalize, AlphabetTable, PaaVector, SaxWord, TimeSeries, MAX_ALPHABET,
    MIN_ALPHABET,
};
use crate::segmentation::{segment, DivisibilityPolicy, Scheme, Segmentation};

pub type Label = i64;

/// Series with integer class labels, all of one length.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    series: Vec<TimeSeries>,
    labels: Vec<Label>,
}

impl LabeledDataset {
    pub fn new(instances: Vec<(TimeSeries, Label)>) -> Result<Self> {
        let Some(first) = instances.first() else {
            return Err(SaxError::input("dataset is empty"));
        };
        let n = first.0.len();
        if let Some(pos) = instances.iter().position(|(s, _)| s.len() != n) {
            return Err(SaxError::input(format!(
                "instance {pos} has length {} but instance 0 has length {n}",
                instances[pos].0.len()
            )));
        }
        let (series, labels) = instances.into_iter().unzip();
        Ok(LabeledDataset { series, labels })
    }

    pub fn series(&self) -> &[TimeSeries] {
        &self.series
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    pub fn series_length(&self) -> usize {
        self.series[0].len()
    }

    /// Distinct labels in order of first appearance.
    pub fn classes(&self) -> Vec<Label> {
        let mut out = Vec::new();
        for &l in &self.labels {
            if !out.contains(&l) {
                out.push(l);
            }
        }
        out
    }
}

/// Fixed part of the SAX configuration; only the alphabet size is tuned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Protocol {
    pub scheme: Scheme,
    /// Word length (number of segments).
    pub m: usize,
    pub policy: DivisibilityPolicy,
}

impl Protocol {
    pub fn new(scheme: Scheme, m: usize) -> Self {
        Protocol {
            scheme,
            m,
            policy: DivisibilityPolicy::Truncate,
        }
    }

    pub fn with_policy(mut self, policy: DivisibilityPolicy) -> Self {
        self.policy = policy;
        self
    }
}

/// Segment means for every instance of a dataset under one segmentation.
#[derive(Debug, Clone)]
pub struct EncodedSet {
    segmentation: Segmentation,
    paa: Vec<PaaVector>,
}

impl EncodedSet {
    /// Z-normalizes each full series, then averages over the segmentation
    /// (truncation, if any, happens after normalization).
    pub fn new(data: &LabeledDataset, protocol: &Protocol) -> Result<Self> {
        let segmentation = segment(
            protocol.scheme,
            data.series_length(),
            protocol.m,
            protocol.policy,
        )?;
        Self::with_segmentation(data.series(), segmentation)
    }

    fn with_segmentation(series: &[TimeSeries], segmentation: Segmentation) -> Result<Self> {
        let paa = series
            .iter()
            .map(|s| paa(&znormalize(s), &segmentation))
            .collect::<Result<Vec<_>>>()?;
        Ok(EncodedSet { segmentation, paa })
    }

    pub fn segmentation(&self) -> &Segmentation {
        &self.segmentation
    }

    pub fn words(&self, table: &AlphabetTable) -> Vec<SaxWord> {
        self.paa.iter().map(|p| symbolize(p, table)).collect()
    }
}

/// Squared MINDIST up to the constant `n/m` factor. Callers guarantee that
/// both words come from the same table and segmentation.
fn mindist_key(a: &SaxWord, b: &SaxWord, table: &AlphabetTable) -> f64 {
    a.symbols()
        .iter()
        .zip(b.symbols())
        .map(|(&x, &y)| table.dist_sq(x, y))
        .sum()
}

/// Index of the closest word, skipping `exclude`. Ties go to the lowest index.
fn nearest_index(
    query: &SaxWord,
    words: &[SaxWord],
    table: &AlphabetTable,
    exclude: Option<usize>,
) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (j, w) in words.iter().enumerate() {
        if Some(j) == exclude {
            continue;
        }
        let d = mindist_key(query, w, table);
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((j, d));
        }
    }
    best.map(|(j, _)| j)
}

/// Label of the training word closest to `query` under MINDIST, the earliest
/// one on ties.
pub fn nn1(
    query: &SaxWord,
    train_words: &[(SaxWord, Label)],
    table: &AlphabetTable,
) -> Result<Label> {
    let mut best: Option<(Label, f64)> = None;
    for (w, label) in train_words {
        let d = mindist(query, w, table)?;
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((*label, d));
        }
    }
    best.map(|(l, _)| l)
        .ok_or_else(|| SaxError::input("1NN needs at least one training word"))
}

fn loocv_misclassified(words: &[SaxWord], labels: &[Label], table: &AlphabetTable) -> usize {
    (0..words.len())
        .into_par_iter()
        .map(|i| {
            let j =
                nearest_index(&words[i], words, table, Some(i)).expect("at least two instances");
            usize::from(labels[j] != labels[i])
        })
        .sum()
}

/// Fraction of training instances misclassified by 1NN against the others.
pub fn loocv_error(
    train: &LabeledDataset,
    protocol: &Protocol,
    alphabet_size: usize,
) -> Result<f64> {
    if train.len() < 2 {
        return Err(SaxError::input(
            "leave-one-out needs at least two instances",
        ));
    }
    let table = AlphabetTable::new(alphabet_size)?;
    let encoded = EncodedSet::new(train, protocol)?;
    let wrong = loocv_misclassified(&encoded.words(&table), train.labels(), &table);
    Ok(wrong as f64 / train.len() as f64)
}

/// A protocol with its alphabet fixed and the training words retained.
#[derive(Debug, Clone)]
pub struct TunedModel {
    pub protocol: Protocol,
    pub alphabet_size: usize,
    /// Leave-one-out error at the chosen alphabet size.
    pub train_error: f64,
    pub table: AlphabetTable,
    pub segmentation: Segmentation,
    pub train_words: Vec<(SaxWord, Label)>,
}

impl TunedModel {
    pub fn word(&self, series: &TimeSeries) -> Result<SaxWord> {
        Ok(symbolize(
            &paa(&znormalize(series), &self.segmentation)?,
            &self.table,
        ))
    }

    pub fn classify(&self, series: &TimeSeries) -> Result<Label> {
        nn1(&self.word(series)?, &self.train_words, &self.table)
    }
}

fn check_alphabets(alphabets: &[usize]) -> Result<()> {
    if alphabets.is_empty() {
        return Err(SaxError::param("alphabet range is empty"));
    }
    if let Some(a) = alphabets
        .iter()
        .find(|a| !(MIN_ALPHABET..=MAX_ALPHABET).contains(a))
    {
        return Err(SaxError::param(format!(
            "alphabet size {a} outside [{MIN_ALPHABET}, {MAX_ALPHABET}]"
        )));
    }
    Ok(())
}

/// Picks the alphabet size with the lowest leave-one-out 1NN error on
/// `train`. Ties go to the smallest size.
pub fn tune_alphabet(
    train: &LabeledDataset,
    protocol: &Protocol,
    alphabets: &[usize],
) -> Result<TunedModel> {
    check_alphabets(alphabets)?;
    if train.len() < 2 {
        return Err(SaxError::input(
            "leave-one-out needs at least two instances",
        ));
    }
    let encoded = EncodedSet::new(train, protocol)?;
    tune_encoded(train, &encoded, protocol, alphabets)
}

fn tune_encoded(
    train: &LabeledDataset,
    encoded: &EncodedSet,
    protocol: &Protocol,
    alphabets: &[usize],
) -> Result<TunedModel> {
    let scores = alphabets
        .par_iter()
        .map(|&a| {
            let table = AlphabetTable::new(a)?;
            let words = encoded.words(&table);
            let wrong = loocv_misclassified(&words, train.labels(), &table);
            Ok((a, wrong, table, words))
        })
        .collect::<Result<Vec<_>>>()?;

    let (alphabet_size, wrong, table, words) = scores
        .into_iter()
        .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
        .expect("alphabet range checked non-empty");

    Ok(TunedModel {
        protocol: *protocol,
        alphabet_size,
        train_error: wrong as f64 / train.len() as f64,
        table,
        segmentation: encoded.segmentation.clone(),
        train_words: words
            .into_iter()
            .zip(train.labels().iter().copied())
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub dataset: String,
    pub scheme: Scheme,
    pub alpha: usize,
    pub m: usize,
    pub train_error: f64,
    pub test_error: f64,
    pub misclassified: usize,
    pub total: usize,
}

/// Result of [`evaluate`]: the tuned model, the summary report and one
/// predicted label per test instance.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub model: TunedModel,
    pub report: EvaluationReport,
    pub predictions: Vec<Label>,
}

/// Tunes the alphabet on `train`, then classifies every `test` instance by
/// 1NN against the training words.
pub fn evaluate(
    train: &LabeledDataset,
    test: &LabeledDataset,
    protocol: &Protocol,
    alphabets: &[usize],
) -> Result<Evaluation> {
    if train.series_length() != test.series_length() {
        return Err(SaxError::input(format!(
            "train series have length {} but test series have length {}",
            train.series_length(),
            test.series_length()
        )));
    }
    let model = tune_alphabet(train, protocol, alphabets)?;
    let test_set = EncodedSet::with_segmentation(test.series(), model.segmentation.clone())?;
    let test_words = test_set.words(&model.table);
    let train_words: Vec<SaxWord> = model.train_words.iter().map(|(w, _)| w.clone()).collect();

    let predictions: Vec<Label> = test_words
        .par_iter()
        .map(|q| {
            let j = nearest_index(q, &train_words, &model.table, None)
                .expect("training set is non-empty");
            model.train_words[j].1
        })
        .collect();
    let misclassified = predictions
        .iter()
        .zip(test.labels())
        .filter(|(p, l)| p != l)
        .count();

    let report = EvaluationReport {
        dataset: String::new(),
        scheme: protocol.scheme,
        alpha: model.alphabet_size,
        m: model.segmentation.num_blocks(),
        train_error: model.train_error,
        test_error: misclassified as f64 / test.len() as f64,
        misclassified,
        total: test.len(),
    };
    Ok(Evaluation {
        model,
        report,
        predictions,
    })
}
