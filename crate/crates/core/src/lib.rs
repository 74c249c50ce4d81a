//! Symbolic aggregate approximation (SAX) with trend-capturing segmentations.
//!
//! Besides classic contiguous PAA segments the crate provides three
//! alternative index partitions (`overlap`, `intertwine`, `split`) that mix
//! points across neighbouring segments. All of them keep the MINDIST lower
//! bound on Euclidean distance because PAA only needs each block to average
//! a fixed set of `w` distinct points.
//!
//! The [`classify`] and [`benchmark`] modules reproduce the usual 1NN
//! evaluation protocol on UCR-format datasets.

pub mod benchmark;
pub mod classify;
pub mod distance;
pub mod error;
pub mod normal;
pub mod repr;
pub mod segmentation;
pub mod ucr;

pub use classify::{
    evaluate, loocv_error, nn1, tune_alphabet, Evaluation, EvaluationReport, LabeledDataset,
    Protocol, TunedModel,
};
pub use distance::{euclidean, mindist, verify_lower_bound, LowerBoundReport};
pub use error::{Result, SaxError};
pub use repr::{
    make_alphabet_table, paa, symbolize, znormalize, AlphabetTable, PaaVector, SaxWord, TimeSeries,
};
pub use segmentation::{segment, DivisibilityPolicy, Scheme, Segmentation};
