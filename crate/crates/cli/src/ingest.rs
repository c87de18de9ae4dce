//! CSV ingestion of dated observations.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use permplane::TimeSeries;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed CSV: {source}")]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{path}: duplicate header {column:?}")]
    DuplicateHeader { path: PathBuf, column: String },
    #[error("{path}: missing column {column:?}")]
    MissingColumn { path: PathBuf, column: String },
    #[error("{path}: row {row}: cannot parse {value:?} in column {column:?} as a finite number")]
    BadValue {
        path: PathBuf,
        row: usize,
        column: String,
        value: String,
    },
    #[error("{path}: row {row}: missing field {column:?}")]
    MissingField {
        path: PathBuf,
        row: usize,
        column: String,
    },
    #[error("{path}: {source}")]
    Series {
        path: PathBuf,
        source: permplane::Error,
    },
}

/// Reads `value_column` (and optionally `date_column`) from a headed CSV file.
///
/// Rows are numbered from 1 starting at the first data row. Blank, `NA` and
/// other non-finite values are rejected rather than skipped.
pub fn ingest_csv(
    path: &Path,
    date_column: Option<&str>,
    value_column: &str,
    name: &str,
) -> Result<TimeSeries, IngestError> {
    let bytes = std::fs::read(path).map_err(|source| IngestError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(&bytes, path, date_column, value_column, name)
}

pub(crate) fn parse_csv(
    bytes: &[u8],
    path: &Path,
    date_column: Option<&str>,
    value_column: &str,
    name: &str,
) -> Result<TimeSeries, IngestError> {
    let csv_err = |source| IngestError::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(bytes);

    let headers = reader.headers().map_err(csv_err)?.clone();
    let mut seen = HashSet::new();
    for h in headers.iter() {
        if !seen.insert(h) {
            return Err(IngestError::DuplicateHeader {
                path: path.to_path_buf(),
                column: h.to_string(),
            });
        }
    }
    let column_index = |column: &str| {
        headers
            .iter()
            .position(|h| h == column)
            .ok_or_else(|| IngestError::MissingColumn {
                path: path.to_path_buf(),
                column: column.to_string(),
            })
    };
    let value_idx = column_index(value_column)?;
    let date_idx = date_column.map(column_index).transpose()?;

    let mut values = Vec::new();
    let mut labels = date_idx.map(|_| Vec::new());
    for (i, record) in reader.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(csv_err)?;
        let field = |idx: usize, column: &str| {
            record.get(idx).ok_or_else(|| IngestError::MissingField {
                path: path.to_path_buf(),
                row,
                column: column.to_string(),
            })
        };
        let raw = field(value_idx, value_column)?;
        let value = raw
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| IngestError::BadValue {
                path: path.to_path_buf(),
                row,
                column: value_column.to_string(),
                value: raw.to_string(),
            })?;
        values.push(value);
        if let (Some(labels), Some(idx), Some(column)) = (labels.as_mut(), date_idx, date_column) {
            labels.push(field(idx, column)?.to_string());
        }
    }

    let series = match labels {
        Some(labels) => TimeSeries::with_labels(name, values, labels),
        None => TimeSeries::new(name, values),
    };
    series.map_err(|source| IngestError::Series {
        path: path.to_path_buf(),
        source,
    })
}
