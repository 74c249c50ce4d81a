//! Index partitions for classic SAX and the three trend-capturing variants.
//!
//! Every scheme assigns each of the first `m * w` indices to exactly one of
//! `m` blocks of `w` indices. Only classic keeps blocks contiguous; the others
//! move indices across neighbouring blocks so the block means carry some
//! information about local trend.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SaxError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Classic,
    Overlap,
    Intertwine,
    Split,
}

impl Scheme {
    /// Canonical ordering used for reports.
    pub const ALL: [Scheme; 4] = [
        Scheme::Classic,
        Scheme::Overlap,
        Scheme::Intertwine,
        Scheme::Split,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::Classic => "classic",
            Scheme::Overlap => "overlap",
            Scheme::Intertwine => "intertwine",
            Scheme::Split => "split",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scheme {
    type Err = SaxError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "classic" => Ok(Scheme::Classic),
            "overlap" => Ok(Scheme::Overlap),
            "intertwine" => Ok(Scheme::Intertwine),
            "split" => Ok(Scheme::Split),
            other => Err(SaxError::param(format!("unknown scheme {other:?}"))),
        }
    }
}

/// How to handle a series length that is not a multiple of the word length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DivisibilityPolicy {
    /// Reject lengths not divisible by the word length.
    Strict,
    /// Drop the trailing `n mod m` points.
    #[default]
    Truncate,
}

impl FromStr for DivisibilityPolicy {
    type Err = SaxError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "strict" => Ok(DivisibilityPolicy::Strict),
            "truncate" => Ok(DivisibilityPolicy::Truncate),
            other => Err(SaxError::param(format!(
                "unknown divisibility policy {other:?}"
            ))),
        }
    }
}

impl fmt::Display for DivisibilityPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisibilityPolicy::Strict => "strict",
            DivisibilityPolicy::Truncate => "truncate",
        })
    }
}

/// A partition of `0..m*w` into `m` blocks of `w` indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    scheme: Scheme,
    source_length: usize,
    block_len: usize,
    // block i occupies indices[i * block_len..(i + 1) * block_len]
    indices: Vec<usize>,
}

impl Segmentation {
    /// Builds a segmentation from explicit blocks, checking the partition
    /// property. `source_length` may exceed the covered range (truncation).
    pub fn from_blocks(
        scheme: Scheme,
        source_length: usize,
        blocks: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = blocks.len();
        if m == 0 {
            return Err(SaxError::input("segmentation needs at least one block"));
        }
        let w = blocks[0].len();
        if w == 0 || blocks.iter().any(|b| b.len() != w) {
            return Err(SaxError::input(
                "all blocks must have the same non-zero size",
            ));
        }
        let n_eff = m * w;
        if n_eff > source_length {
            return Err(SaxError::input(format!(
                "blocks cover {n_eff} indices but the series has only {source_length}"
            )));
        }
        let mut seen = vec![false; n_eff];
        for &i in blocks.iter().flatten() {
            if i >= n_eff || std::mem::replace(&mut seen[i], true) {
                return Err(SaxError::input(format!(
                    "blocks are not a partition of 0..{n_eff} (offending index {i})"
                )));
            }
        }
        Ok(Segmentation {
            scheme,
            source_length,
            block_len: w,
            indices: blocks.into_iter().flatten().collect(),
        })
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    /// Length of the series this segmentation was built for.
    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// Number of indices covered by blocks (`m * w`).
    pub fn effective_length(&self) -> usize {
        self.indices.len()
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn num_blocks(&self) -> usize {
        self.indices.len() / self.block_len
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.indices[i * self.block_len..(i + 1) * self.block_len]
    }

    pub fn blocks(&self) -> std::slice::ChunksExact<'_, usize> {
        self.indices.chunks_exact(self.block_len)
    }
}

/// Partitions a length-`n` series into `m` blocks under `scheme`.
pub fn segment(
    scheme: Scheme,
    n: usize,
    m: usize,
    policy: DivisibilityPolicy,
) -> Result<Segmentation> {
    if m == 0 {
        return Err(SaxError::param("word length must be at least 1"));
    }
    if m > n {
        return Err(SaxError::param(format!(
            "word length {m} exceeds series length {n}"
        )));
    }
    if policy == DivisibilityPolicy::Strict && !n.is_multiple_of(m) {
        return Err(SaxError::Divisibility { n, m });
    }
    let w = n / m;
    let mut indices: Vec<usize> = (0..m * w).collect();
    match scheme {
        Scheme::Classic => {}
        Scheme::Overlap => overlap(&mut indices, m, w),
        Scheme::Intertwine => paired(&mut indices, m, w, intertwine_span),
        Scheme::Split => paired(&mut indices, m, w, split_span),
    }
    Ok(Segmentation {
        scheme,
        source_length: n,
        block_len: w,
        indices,
    })
}

/// Swaps the last index of each block with the first index of the next.
fn overlap(indices: &mut [usize], m: usize, w: usize) {
    // with w == 1 a block's first and last point coincide; nothing to swap
    if w < 2 {
        return;
    }
    for i in 0..m - 1 {
        let boundary = (i + 1) * w;
        indices.swap(boundary - 1, boundary);
    }
}

/// Applies `fill` to each consecutive pair of blocks. An odd trailing block
/// stays contiguous.
fn paired(indices: &mut [usize], m: usize, w: usize, fill: fn(&mut [usize], usize, usize)) {
    for pair in 0..m / 2 {
        let start = pair * 2 * w;
        fill(&mut indices[start..start + 2 * w], start, w);
    }
}

/// First block takes even offsets of the span, second block the odd ones.
fn intertwine_span(span: &mut [usize], start: usize, w: usize) {
    for k in 0..w {
        span[k] = start + 2 * k;
        span[w + k] = start + 2 * k + 1;
    }
}

/// Runs of two consecutive indices alternate between the two blocks. For odd
/// `w` the final run is shared, its earlier index going to the first block.
fn split_span(span: &mut [usize], start: usize, w: usize) {
    let (mut first, mut second) = (Vec::with_capacity(w), Vec::with_capacity(w));
    let full_runs = if w.is_multiple_of(2) { w } else { w - 1 };
    for run in 0..full_runs {
        let dst = if run % 2 == 0 {
            &mut first
        } else {
            &mut second
        };
        dst.extend([start + 2 * run, start + 2 * run + 1]);
    }
    if w % 2 == 1 {
        first.push(start + 2 * full_runs);
        second.push(start + 2 * full_runs + 1);
    }
    span[..w].copy_from_slice(&first);
    span[w..].copy_from_slice(&second);
}
