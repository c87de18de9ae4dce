//! End-to-end run: ingest, window, surrogates, bounds, reports.

use std::fs;
use std::path::{Path, PathBuf};

use permplane::bounds::{max_complexity_curve, min_complexity_curve};
use permplane::surrogate::{shuffle_surrogate, GENERATOR};
use permplane::{slide, subsample_trajectory, BoundsCurve, TimeSeries, Trajectory};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::{InputSpec, OutputFormat, RunConfig};
use crate::error::PipelineError;
use crate::ingest::parse_csv;
use crate::report::{summary_table, table_rows, SummaryColumn};

pub const METADATA_FILE: &str = "metadata.json";

/// Results for one input series.
#[derive(Debug, Clone)]
pub struct SeriesAnalysis {
    pub input: InputSpec,
    pub rows: usize,
    pub sha256: String,
    pub trajectory: Trajectory,
    /// Trajectories of shuffled copies, in seed order.
    pub surrogates: Vec<(u64, Trajectory)>,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub config: RunConfig,
    pub bounds: BoundsCurve,
    pub series: Vec<SeriesAnalysis>,
    pub summary: Vec<SummaryColumn>,
}

/// Loads an input's bytes once so the digest and the parsed series agree.
fn load(input: &InputSpec) -> Result<(TimeSeries, String), PipelineError> {
    let ingest = |source| PipelineError::Ingest {
        series: input.name.clone(),
        source,
    };
    let bytes = fs::read(&input.path).map_err(|source| {
        ingest(crate::ingest::IngestError::Io {
            path: input.path.clone(),
            source,
        })
    })?;
    let series = parse_csv(
        &bytes,
        &input.path,
        input.date_column.as_deref(),
        &input.value_column,
        &input.name,
    )
    .map_err(ingest)?;
    Ok((series, hex::encode(Sha256::digest(&bytes))))
}

fn check_in_bounds(bounds: &BoundsCurve, t: &Trajectory, what: &str) -> Result<(), PipelineError> {
    for r in &t.results {
        let q = &r.quantifiers;
        let inside = bounds
            .contains(q.entropy, q.complexity)
            .map_err(|e| PipelineError::Invariant(format!("{}: {e}", t.series_name)))?;
        if !inside {
            return Err(PipelineError::Invariant(format!(
                "{} {what} window {}: (H, C) = ({}, {}) lies outside the complexity bounds",
                t.series_name, r.index, q.entropy, q.complexity
            )));
        }
    }
    Ok(())
}

/// Runs every computation of the pipeline without touching the output
/// directory.
pub fn analyze(config: &RunConfig) -> Result<Analysis, PipelineError> {
    let spec = config.validate()?;
    let bounds = BoundsCurve::for_dimension(config.embedding_dimension, config.bounds_grid)
        .map_err(|e| PipelineError::Config(e.to_string()))?;

    let mut series = Vec::with_capacity(config.inputs.len());
    for input in &config.inputs {
        let analysis = |stage, source| PipelineError::Analysis {
            series: input.name.clone(),
            stage,
            source,
        };
        let (raw, sha256) = load(input)?;
        let rows = raw.len();
        let data = if config.difference {
            raw.first_difference()
                .map_err(|e| analysis("first difference", e))?
        } else {
            raw
        };
        let trajectory = slide(&data, &spec).map_err(|e| analysis("sliding window", e))?;
        check_in_bounds(&bounds, &trajectory, "original")?;

        let mut surrogates = Vec::with_capacity(config.surrogate_seeds.len());
        for &seed in &config.surrogate_seeds {
            let shuffled = shuffle_surrogate(&data, seed);
            let t = slide(&shuffled, &spec).map_err(|e| analysis("surrogate window", e))?;
            check_in_bounds(&bounds, &t, "surrogate")?;
            surrogates.push((seed, t));
        }
        series.push(SeriesAnalysis {
            input: input.clone(),
            rows,
            sha256,
            trajectory,
            surrogates,
        });
    }

    let trajectories: Vec<&Trajectory> = series.iter().map(|s| &s.trajectory).collect();
    let summary = summary_table(&trajectories, config.reference_series.as_deref())?;

    Ok(Analysis {
        config: config.clone(),
        bounds,
        series,
        summary,
    })
}

/// Files written by [`run_pipeline`], relative to the output directory.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub analysis: Analysis,
    pub files: Vec<PathBuf>,
}

/// Analyses every input and writes the plot-ready files and reports into
/// `config.output_dir`.
pub fn run_pipeline(config: &RunConfig) -> Result<RunReport, PipelineError> {
    let dir = config
        .output_dir
        .clone()
        .ok_or_else(|| PipelineError::Config("no output directory given".into()))?;
    let analysis = analyze(config)?;
    let files = write_outputs(&analysis, &dir)?;
    Ok(RunReport { analysis, files })
}

struct Output<'a> {
    dir: &'a Path,
    files: Vec<PathBuf>,
}

impl Output<'_> {
    fn write(&mut self, name: String, contents: Vec<u8>) -> Result<(), PipelineError> {
        let path = self.dir.join(&name);
        fs::write(&path, contents).map_err(|source| PipelineError::Write { path, source })?;
        self.files.push(PathBuf::from(name));
        Ok(())
    }

    fn csv(
        &mut self,
        name: String,
        header: &[&str],
        rows: Vec<Vec<String>>,
    ) -> Result<(), PipelineError> {
        let bytes = csv_bytes(header, rows).map_err(|source| PipelineError::Write {
            path: self.dir.join(&name),
            source,
        })?;
        self.write(name, bytes)
    }

    fn json<T: Serialize>(&mut self, name: String, value: &T) -> Result<(), PipelineError> {
        let mut bytes = serde_json::to_vec_pretty(value).expect("report types serialize");
        bytes.push(b'\n');
        self.write(name, bytes)
    }
}

fn csv_bytes(header: &[&str], rows: Vec<Vec<String>>) -> std::io::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.into_inner().map_err(|e| e.into_error())
}

/// Full-precision (shortest round-trip) number.
fn num(x: f64) -> String {
    format!("{x}")
}

#[derive(Serialize)]
struct TrajectoryRow<'a> {
    index: usize,
    begin: &'a str,
    end: &'a str,
    #[serde(rename = "S")]
    shannon: f64,
    #[serde(rename = "H")]
    entropy: f64,
    #[serde(rename = "C")]
    complexity: f64,
}

#[derive(Serialize)]
struct TableRow<'a> {
    statistic: &'a str,
    values: Vec<Option<f64>>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    series: Vec<&'a str>,
    rows: Vec<TableRow<'a>>,
}

#[derive(Serialize)]
struct InputRecord<'a> {
    name: &'a str,
    path: &'a Path,
    sha256: &'a str,
    rows: usize,
    windows: usize,
}

#[derive(Serialize)]
struct Metadata<'a> {
    tool: &'static str,
    version: &'static str,
    generator: &'static str,
    alphabet_size: usize,
    bounds_interpolation_slack: f64,
    inputs: Vec<InputRecord<'a>>,
    outputs: Vec<PathBuf>,
    config: RunConfig,
}

fn write_outputs(analysis: &Analysis, dir: &Path) -> Result<Vec<PathBuf>, PipelineError> {
    fs::create_dir_all(dir).map_err(|source| PipelineError::Write {
        path: dir.to_path_buf(),
        source,
    })?;
    let config = &analysis.config;
    let mut out = Output {
        dir,
        files: Vec::new(),
    };

    let m = analysis.bounds.alphabet_size();
    for (name, curve) in [
        (
            "bounds_min.csv",
            min_complexity_curve(m, config.bounds_grid),
        ),
        (
            "bounds_max.csv",
            max_complexity_curve(m, config.bounds_grid),
        ),
    ] {
        let curve = curve.map_err(|e| PipelineError::Config(e.to_string()))?;
        let rows = curve
            .iter()
            .map(|p| vec![num(p.entropy), num(p.complexity)])
            .collect();
        out.csv(name.into(), &["H", "C"], rows)?;
    }

    for s in &analysis.series {
        let name = &s.input.name;
        let t = &s.trajectory;
        match config.output_format {
            OutputFormat::Csv => {
                let rows = t
                    .results
                    .iter()
                    .map(|r| {
                        let q = &r.quantifiers;
                        vec![
                            r.index.to_string(),
                            r.begin_label.clone(),
                            r.end_label.clone(),
                            num(q.shannon),
                            num(q.entropy),
                            num(q.complexity),
                        ]
                    })
                    .collect();
                out.csv(
                    format!("{name}.trajectory.csv"),
                    &["index", "begin", "end", "S", "H", "C"],
                    rows,
                )?;
            }
            OutputFormat::Json => {
                let rows: Vec<TrajectoryRow> = t
                    .results
                    .iter()
                    .map(|r| TrajectoryRow {
                        index: r.index,
                        begin: &r.begin_label,
                        end: &r.end_label,
                        shannon: r.quantifiers.shannon,
                        entropy: r.quantifiers.entropy,
                        complexity: r.quantifiers.complexity,
                    })
                    .collect();
                out.json(format!("{name}.trajectory.json"), &rows)?;
            }
        }

        let plane = t
            .results
            .iter()
            .map(|r| vec![num(r.quantifiers.entropy), num(r.quantifiers.complexity)])
            .collect();
        out.csv(format!("{name}.cecp.csv"), &["H", "C"], plane)?;

        let evolution = t
            .results
            .iter()
            .map(|r| vec![r.index.to_string(), num(r.quantifiers.entropy)])
            .collect();
        out.csv(format!("{name}.entropy.csv"), &["index", "H"], evolution)?;

        let scheme = subsample_trajectory(t, config.subsample_ratio)
            .map_err(|e| PipelineError::Config(e.to_string()))?;
        let scheme_rows = scheme
            .results
            .iter()
            .map(|r| {
                vec![
                    r.index.to_string(),
                    num(r.quantifiers.entropy),
                    num(r.quantifiers.complexity),
                ]
            })
            .collect();
        out.csv(
            format!("{name}.scheme.csv"),
            &["index", "H", "C"],
            scheme_rows,
        )?;

        if !s.surrogates.is_empty() {
            let mut rows: Vec<Vec<String>> = Vec::new();
            let mut push = |source: &str, seed: String, t: &Trajectory| {
                for r in &t.results {
                    rows.push(vec![
                        source.to_string(),
                        seed.clone(),
                        r.index.to_string(),
                        num(r.quantifiers.entropy),
                        num(r.quantifiers.complexity),
                    ]);
                }
            };
            push("original", String::new(), t);
            for (seed, st) in &s.surrogates {
                push("surrogate", seed.to_string(), st);
            }
            out.csv(
                format!("{name}.surrogate.csv"),
                &["source", "seed", "index", "H", "C"],
                rows,
            )?;
        }
    }

    let summary_name = format!("summary.{}", config.output_format.extension());
    match config.output_format {
        OutputFormat::Csv => {
            let mut header = vec!["statistic"];
            header.extend(analysis.summary.iter().map(|c| c.series.as_str()));
            let rows = table_rows(&analysis.summary)
                .into_iter()
                .map(|(label, cells)| {
                    let mut row = vec![label.to_string()];
                    row.extend(cells);
                    row
                })
                .collect();
            out.csv(summary_name, &header, rows)?;
        }
        OutputFormat::Json => {
            let table = TableJson {
                series: analysis.summary.iter().map(|c| c.series.as_str()).collect(),
                rows: table_rows(&analysis.summary)
                    .into_iter()
                    .map(|(statistic, cells)| TableRow {
                        statistic,
                        // cells are already rounded to six significant digits
                        values: cells.iter().map(|c| c.parse().ok()).collect(),
                    })
                    .collect(),
            };
            out.json(summary_name, &table)?;
        }
    }

    let mut recorded = config.clone();
    recorded.output_dir = None;
    let mut outputs = out.files.clone();
    outputs.push(PathBuf::from(METADATA_FILE));
    let metadata = Metadata {
        tool: "permplane",
        version: env!("CARGO_PKG_VERSION"),
        generator: GENERATOR,
        alphabet_size: m,
        bounds_interpolation_slack: analysis.bounds.interpolation_slack(),
        inputs: analysis
            .series
            .iter()
            .map(|s| InputRecord {
                name: &s.input.name,
                path: &s.input.path,
                sha256: &s.sha256,
                rows: s.rows,
                windows: s.trajectory.len(),
            })
            .collect(),
        outputs,
        config: recorded,
    };
    out.json(METADATA_FILE.into(), &metadata)?;
    Ok(out.files)
}
