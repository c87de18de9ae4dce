#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use permplane::TimeSeries;
use permplane_cli::{InputSpec, RunConfig};

/// Writes `series` as a `date,value` CSV under `dir`.
pub fn write_series(dir: &Path, series: &TimeSeries) -> PathBuf {
    let path = dir.join(format!("{}.csv", series.name()));
    let mut text = String::from("date,value\n");
    for (i, v) in series.values().iter().enumerate() {
        text.push_str(&format!("day{:05},{v}\n", i + 1));
    }
    fs::write(&path, text).unwrap();
    path
}

pub fn input_for(path: &Path, name: &str) -> InputSpec {
    InputSpec {
        name: name.into(),
        path: path.to_path_buf(),
        value_column: "value".into(),
        date_column: Some("date".into()),
    }
}

pub fn config(inputs: Vec<InputSpec>, out: &Path) -> RunConfig {
    RunConfig {
        inputs,
        output_dir: Some(out.to_path_buf()),
        bounds_grid: 400,
        ..RunConfig::default()
    }
}

/// File name → contents for every file in `dir`.
pub fn snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

/// Numeric columns of a headed CSV file, by header name.
pub fn read_column(path: &Path, column: &str) -> Vec<f64> {
    let mut reader = csv::Reader::from_path(path).unwrap();
    let idx = reader
        .headers()
        .unwrap()
        .iter()
        .position(|h| h == column)
        .unwrap();
    reader
        .records()
        .map(|r| r.unwrap()[idx].parse().unwrap())
        .collect()
}
