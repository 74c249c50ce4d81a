//! UCR archive text format.
//!
//! One instance per line: the class label followed by the series values.
//! The separator is detected from the first non-blank line of each file:
//! comma, then tab, then any run of whitespace.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::classify::{Label, LabeledDataset};
use crate::error::{Result, SaxError};
use crate::repr::TimeSeries;

const LABEL_ROUNDING_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Separator {
    Comma,
    Tab,
    Whitespace,
}

impl Separator {
    fn detect(line: &str) -> Self {
        if line.contains(',') {
            Separator::Comma
        } else if line.contains('\t') {
            Separator::Tab
        } else {
            Separator::Whitespace
        }
    }

    fn fields<'a>(self, line: &'a str) -> Box<dyn Iterator<Item = &'a str> + 'a> {
        match self {
            Separator::Comma => Box::new(line.split(',').map(str::trim)),
            Separator::Tab => Box::new(line.split('\t').map(str::trim)),
            Separator::Whitespace => Box::new(line.split_whitespace()),
        }
    }
}

fn parse_label(field: &str) -> std::result::Result<Label, String> {
    let v: f64 = field
        .parse()
        .map_err(|_| format!("label {field:?} is not a number"))?;
    let rounded = v.round();
    if !v.is_finite() || (v - rounded).abs() > LABEL_ROUNDING_TOLERANCE {
        return Err(format!("label {field:?} is not an integer"));
    }
    if rounded.abs() > (1u64 << 53) as f64 {
        return Err(format!("label {field:?} out of range"));
    }
    Ok(rounded as Label)
}

/// Parses UCR-format text. `path` is only used in error messages.
pub fn parse_ucr(text: &str, path: &Path) -> Result<LabeledDataset> {
    let err = |line: usize, message: String| SaxError::Format {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut separator = None;
    let mut width = None;
    let mut instances = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let sep = *separator.get_or_insert_with(|| Separator::detect(line));
        let mut fields = sep.fields(line);
        let label = parse_label(fields.next().unwrap_or_default()).map_err(|m| err(lineno, m))?;
        let values = fields
            .enumerate()
            .map(|(col, f)| match f.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok(v),
                Ok(_) => Err(err(
                    lineno,
                    format!("non-finite value {f:?} in column {}", col + 2),
                )),
                Err(_) => Err(err(
                    lineno,
                    format!("invalid number {f:?} in column {}", col + 2),
                )),
            })
            .collect::<Result<Vec<f64>>>()?;
        if values.is_empty() {
            return Err(err(lineno, "row has a label but no values".into()));
        }
        match width {
            None => width = Some(values.len()),
            Some(w) if w != values.len() => {
                return Err(err(
                    lineno,
                    format!("row has {} values but earlier rows have {w}", values.len()),
                ));
            }
            Some(_) => {}
        }
        let series = TimeSeries::new(values).map_err(|e| err(lineno, e.to_string()))?;
        instances.push((series, label));
    }

    if instances.is_empty() {
        return Err(err(0, "file contains no instances".into()));
    }
    LabeledDataset::new(instances)
}

pub fn load_ucr(path: impl AsRef<Path>) -> Result<LabeledDataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| SaxError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_ucr(&text, path)
}

/// Writes a dataset in comma-separated UCR format.
pub fn write_ucr(data: &LabeledDataset, mut out: impl Write) -> std::io::Result<()> {
    for (series, label) in data.series().iter().zip(data.labels()) {
        write!(out, "{label}")?;
        for v in series.values() {
            write!(out, ",{v}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// A named train/test split.
#[derive(Debug, Clone)]
pub struct DatasetPair {
    pub name: String,
    pub train: LabeledDataset,
    pub test: LabeledDataset,
}

impl DatasetPair {
    pub fn new(
        name: impl Into<String>,
        train: LabeledDataset,
        test: LabeledDataset,
    ) -> Result<Self> {
        let name = name.into();
        if train.series_length() != test.series_length() {
            return Err(SaxError::input(format!(
                "{name}: train length {} differs from test length {}",
                train.series_length(),
                test.series_length()
            )));
        }
        let known = train.classes();
        for label in test.classes() {
            if !known.contains(&label) {
                log::warn!("{name}: test label {label} does not occur in the training split");
            }
        }
        Ok(DatasetPair { name, train, test })
    }
}

fn find_split(dir: &Path, name: &str, split: &str) -> Result<PathBuf> {
    let stem = format!("{name}_{split}");
    for ext in ["", ".tsv", ".txt", ".csv"] {
        let candidate = dir.join(format!("{stem}{ext}"));
        if candidate.is_file() {
            return Ok(candidate);
        }
    }
    Err(SaxError::Io {
        path: dir.join(&stem),
        source: std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("no {split} file for {name}"),
        ),
    })
}

/// Loads `<dir>/<name>_TRAIN[.tsv|.txt|.csv]` and the matching `_TEST` file,
/// where `<name>` is the directory's own name.
pub fn load_dataset_dir(dir: impl AsRef<Path>) -> Result<DatasetPair> {
    let dir = dir.as_ref();
    let name = dataset_name(dir);
    let train = load_ucr(find_split(dir, &name, "TRAIN")?)?;
    let test = load_ucr(find_split(dir, &name, "TEST")?)?;
    DatasetPair::new(name, train, test)
}

pub fn dataset_name(dir: &Path) -> String {
    dir.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| dir.display().to_string())
}
