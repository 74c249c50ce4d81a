//! Series normalization, Gaussian breakpoints, PAA and discretization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SaxError};
use crate::normal::normal_quantile;
use crate::segmentation::Segmentation;

/// Population standard deviations below this are treated as a constant series.
pub const CONSTANT_STD_EPS: f64 = 1e-12;

pub const MIN_ALPHABET: usize = 2;
pub const MAX_ALPHABET: usize = 26;

/// A non-empty sequence of finite reals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct TimeSeries(Vec<f64>);

impl TimeSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(SaxError::input(
                "time series must contain at least one value",
            ));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(SaxError::input(format!(
                "non-finite value {} at position {pos}",
                values[pos]
            )));
        }
        Ok(TimeSeries(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.0.iter().sum::<f64>() / self.0.len() as f64
    }

    /// Population (divide-by-n) standard deviation.
    pub fn std_dev(&self) -> f64 {
        let mean = self.mean();
        let ss: f64 = self.0.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ss / self.0.len() as f64).sqrt()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.0
    }
}

impl TryFrom<Vec<f64>> for TimeSeries {
    type Error = SaxError;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        TimeSeries::new(values)
    }
}

impl From<TimeSeries> for Vec<f64> {
    fn from(ts: TimeSeries) -> Self {
        ts.0
    }
}

/// Rescales to zero mean and unit population standard deviation.
///
/// A series whose standard deviation is below [`CONSTANT_STD_EPS`] maps to
/// all zeros.
pub fn znormalize(series: &TimeSeries) -> TimeSeries {
    let mean = series.mean();
    let std = series.std_dev();
    if std < CONSTANT_STD_EPS {
        return TimeSeries(vec![0.0; series.len()]);
    }
    TimeSeries(series.values().iter().map(|v| (v - mean) / std).collect())
}

/// Segment means of a series under some [`Segmentation`].
#[derive(Debug, Clone, PartialEq)]
pub struct PaaVector {
    means: Vec<f64>,
    source_length: usize,
}

impl PaaVector {
    pub fn means(&self) -> &[f64] {
        &self.means
    }

    /// Number of source points the means were computed over.
    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn len(&self) -> usize {
        self.means.len()
    }

    pub fn is_empty(&self) -> bool {
        self.means.is_empty()
    }
}

/// Averages the series over each block of `seg`.
///
/// Blocks need not be contiguous. Indices past the segmentation's effective
/// length (dropped by truncation) are ignored.
pub fn paa(series: &TimeSeries, seg: &Segmentation) -> Result<PaaVector> {
    if series.len() != seg.source_length() {
        return Err(SaxError::input(format!(
            "segmentation built for length {} applied to series of length {}",
            seg.source_length(),
            series.len()
        )));
    }
    let values = series.values();
    let means = seg
        .blocks()
        .map(|block| block.iter().map(|&i| values[i]).sum::<f64>() / block.len() as f64)
        .collect();
    Ok(PaaVector {
        means,
        source_length: seg.effective_length(),
    })
}

/// Equiprobable Gaussian breakpoints with the symbol-pair distance table.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphabetTable {
    alphabet_size: usize,
    breakpoints: Vec<f64>,
    pair_dist: Vec<f64>,
    pair_dist_sq: Vec<f64>,
}

impl AlphabetTable {
    pub fn new(alphabet_size: usize) -> Result<Self> {
        if !(MIN_ALPHABET..=MAX_ALPHABET).contains(&alphabet_size) {
            return Err(SaxError::param(format!(
                "alphabet size {alphabet_size} outside [{MIN_ALPHABET}, {MAX_ALPHABET}]"
            )));
        }
        let a = alphabet_size;
        let mut breakpoints: Vec<f64> = (1..a)
            .map(|i| normal_quantile(i as f64 / a as f64))
            .collect();
        // Force exact antisymmetry; the quantile is only symmetric to rounding.
        for i in 0..breakpoints.len() / 2 {
            let j = breakpoints.len() - 1 - i;
            let half = 0.5 * (breakpoints[j] - breakpoints[i]);
            breakpoints[i] = -half;
            breakpoints[j] = half;
        }
        let nb = breakpoints.len();
        if nb % 2 == 1 {
            breakpoints[nb / 2] = 0.0;
        }

        let mut pair_dist = vec![0.0; a * a];
        for r in 0..a {
            for c in 0..a {
                if r.abs_diff(c) > 1 {
                    let (lo, hi) = (r.min(c), r.max(c));
                    // symbols are 0-based, breakpoints vector is 0-based too
                    pair_dist[r * a + c] = breakpoints[hi - 1] - breakpoints[lo];
                }
            }
        }
        let pair_dist_sq = pair_dist.iter().map(|d| d * d).collect();
        Ok(AlphabetTable {
            alphabet_size,
            breakpoints,
            pair_dist,
            pair_dist_sq,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Lower-bounding distance between two symbols.
    pub fn dist(&self, a: u8, b: u8) -> f64 {
        self.pair_dist[a as usize * self.alphabet_size + b as usize]
    }

    pub(crate) fn dist_sq(&self, a: u8, b: u8) -> f64 {
        self.pair_dist_sq[a as usize * self.alphabet_size + b as usize]
    }

    /// Symbol index for a single PAA value: the number of breakpoints
    /// strictly below it, so a value equal to a breakpoint maps down.
    pub fn symbol_for(&self, value: f64) -> u8 {
        self.breakpoints.partition_point(|b| *b < value) as u8
    }
}

/// Shorthand for [`AlphabetTable::new`].
pub fn make_alphabet_table(alphabet_size: usize) -> Result<AlphabetTable> {
    AlphabetTable::new(alphabet_size)
}

/// A discretized PAA vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SaxWord {
    symbols: Vec<u8>,
    alphabet_size: usize,
    source_length: usize,
}

impl SaxWord {
    pub fn new(symbols: Vec<u8>, alphabet_size: usize, source_length: usize) -> Result<Self> {
        if !(MIN_ALPHABET..=MAX_ALPHABET).contains(&alphabet_size) {
            return Err(SaxError::param(format!(
                "alphabet size {alphabet_size} out of range"
            )));
        }
        if symbols.is_empty() {
            return Err(SaxError::input("word must have at least one symbol"));
        }
        if let Some(s) = symbols.iter().find(|&&s| s as usize >= alphabet_size) {
            return Err(SaxError::input(format!(
                "symbol {s} out of range for alphabet size {alphabet_size}"
            )));
        }
        if source_length < symbols.len() {
            return Err(SaxError::input(format!(
                "source length {source_length} shorter than word length {}",
                symbols.len()
            )));
        }
        Ok(SaxWord {
            symbols,
            alphabet_size,
            source_length,
        })
    }

    /// Parses a letter word such as `"abca"`.
    pub fn from_letters(letters: &str, alphabet_size: usize, source_length: usize) -> Result<Self> {
        let symbols = letters
            .bytes()
            .map(|b| {
                if b.is_ascii_lowercase() {
                    Ok(b - b'a')
                } else {
                    Err(SaxError::input(format!("invalid symbol {:?}", b as char)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SaxWord::new(symbols, alphabet_size, source_length)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn source_length(&self) -> usize {
        self.source_length
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for SaxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", (b'a' + s) as char)?;
        }
        Ok(())
    }
}

pub fn symbolize(paa: &PaaVector, table: &AlphabetTable) -> SaxWord {
    SaxWord {
        symbols: paa.means.iter().map(|&v| table.symbol_for(v)).collect(),
        alphabet_size: table.alphabet_size,
        source_length: paa.source_length,
    }
}
