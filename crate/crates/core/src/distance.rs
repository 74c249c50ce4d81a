//! Euclidean distance, MINDIST on SAX words and the lower-bound audit.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SaxError};
use crate::repr::{paa, symbolize, AlphabetTable, SaxWord, TimeSeries};
use crate::segmentation::{segment, DivisibilityPolicy, Scheme};

/// Slack allowed when checking `mindist <= euclidean`.
pub const LOWER_BOUND_TOLERANCE: f64 = 1e-9;

pub fn euclidean(s: &TimeSeries, t: &TimeSeries) -> Result<f64> {
    if s.len() != t.len() {
        return Err(SaxError::input(format!(
            "length mismatch: {} vs {}",
            s.len(),
            t.len()
        )));
    }
    Ok(s.values()
        .iter()
        .zip(t.values())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt())
}

fn check_compatible(a: &SaxWord, b: &SaxWord, table: &AlphabetTable) -> Result<()> {
    if a.len() != b.len() {
        return Err(SaxError::input(format!(
            "word lengths differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if a.alphabet_size() != b.alphabet_size() || a.alphabet_size() != table.alphabet_size() {
        return Err(SaxError::input(format!(
            "alphabet sizes differ: {}, {} and table {}",
            a.alphabet_size(),
            b.alphabet_size(),
            table.alphabet_size()
        )));
    }
    if a.source_length() != b.source_length() {
        return Err(SaxError::input(format!(
            "source lengths differ: {} vs {}",
            a.source_length(),
            b.source_length()
        )));
    }
    Ok(())
}

/// Lower-bounding distance between two words built from the same
/// segmentation length and alphabet.
pub fn mindist(a: &SaxWord, b: &SaxWord, table: &AlphabetTable) -> Result<f64> {
    check_compatible(a, b, table)?;
    Ok(mindist_unchecked(a, b, table))
}

/// `mindist` without compatibility checks, for hot loops over words that are
/// known to share a table.
pub(crate) fn mindist_unchecked(a: &SaxWord, b: &SaxWord, table: &AlphabetTable) -> f64 {
    let ratio = a.source_length() as f64 / a.len() as f64;
    let sum: f64 = a
        .symbols()
        .iter()
        .zip(b.symbols())
        .map(|(&x, &y)| table.dist_sq(x, y))
        .sum();
    ratio.sqrt() * sum.sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LowerBoundReport {
    pub mindist: f64,
    pub euclidean: f64,
    pub holds: bool,
    /// `euclidean - mindist`.
    pub slack: f64,
}

/// Checks `mindist(word(s), word(t)) <= euclidean(s, t)` for one pair.
///
/// The series are expected to be z-normalized already; they are used as
/// given. Series whose length is not a multiple of `m` are truncated for the
/// words, while the Euclidean distance covers the full series.
pub fn verify_lower_bound(
    s: &TimeSeries,
    t: &TimeSeries,
    scheme: Scheme,
    m: usize,
    alphabet_size: usize,
) -> Result<LowerBoundReport> {
    let table = AlphabetTable::new(alphabet_size)?;
    verify_lower_bound_with(s, t, scheme, m, &table)
}

pub fn verify_lower_bound_with(
    s: &TimeSeries,
    t: &TimeSeries,
    scheme: Scheme,
    m: usize,
    table: &AlphabetTable,
) -> Result<LowerBoundReport> {
    let euclidean = euclidean(s, t)?;
    let seg = segment(scheme, s.len(), m, DivisibilityPolicy::Truncate)?;
    let ws = symbolize(&paa(s, &seg)?, table);
    let wt = symbolize(&paa(t, &seg)?, table);
    let mindist = mindist(&ws, &wt, table)?;
    Ok(LowerBoundReport {
        mindist,
        euclidean,
        holds: mindist <= euclidean + LOWER_BOUND_TOLERANCE,
        slack: euclidean - mindist,
    })
}
