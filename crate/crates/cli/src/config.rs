use std::path::{Path, PathBuf};

use permplane::{OrdinalConfig, WindowSpec};
use serde::{Deserialize, Serialize};

use crate::error::PipelineError;

/// One input series: a CSV file and the columns to read from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub name: String,
    pub path: PathBuf,
    pub value_column: String,
    #[serde(default)]
    pub date_column: Option<String>,
}

impl InputSpec {
    /// Parses `NAME:PATH:VALUE_COLUMN[:DATE_COLUMN]`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let parts: Vec<&str> = text.split(':').collect();
        match parts.as_slice() {
            [name, path, value] | [name, path, value, ""] => Ok(Self {
                name: name.to_string(),
                path: PathBuf::from(path),
                value_column: value.to_string(),
                date_column: None,
            }),
            [name, path, value, date] => Ok(Self {
                name: name.to_string(),
                path: PathBuf::from(path),
                value_column: value.to_string(),
                date_column: Some(date.to_string()),
            }),
            _ => Err(format!(
                "expected NAME:PATH:VALUE_COLUMN[:DATE_COLUMN], got {text:?}"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

fn default_dimension() -> usize {
    4
}
fn default_delay() -> usize {
    1
}
fn default_window() -> usize {
    300
}
fn default_step() -> usize {
    20
}
fn default_ratio() -> usize {
    4
}
fn default_grid() -> usize {
    permplane::bounds::DEFAULT_GRID
}

/// Everything needed to reproduce a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub inputs: Vec<InputSpec>,
    #[serde(default = "default_dimension")]
    pub embedding_dimension: usize,
    #[serde(default = "default_delay")]
    pub embedding_delay: usize,
    #[serde(default = "default_window")]
    pub window_length: usize,
    #[serde(default = "default_step")]
    pub step: usize,
    #[serde(default)]
    pub max_windows: Option<usize>,
    /// Analyse first differences instead of levels.
    #[serde(default)]
    pub difference: bool,
    #[serde(default)]
    pub surrogate_seeds: Vec<u64>,
    #[serde(default)]
    pub reference_series: Option<String>,
    /// Keep one window in `subsample_ratio` for the movement-scheme export.
    #[serde(default = "default_ratio")]
    pub subsample_ratio: usize,
    #[serde(default = "default_grid")]
    pub bounds_grid: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            inputs: Vec::new(),
            embedding_dimension: default_dimension(),
            embedding_delay: default_delay(),
            window_length: default_window(),
            step: default_step(),
            max_windows: None,
            difference: false,
            surrogate_seeds: Vec::new(),
            reference_series: None,
            subsample_ratio: default_ratio(),
            bounds_grid: default_grid(),
            output_dir: None,
            output_format: OutputFormat::Csv,
        }
    }
}

#[derive(Deserialize)]
struct MetadataEnvelope {
    config: RunConfig,
}

impl RunConfig {
    /// Loads a TOML or JSON config; a run's `metadata.json` is accepted too.
    pub fn from_file(path: &Path) -> Result<Self, PipelineError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            PipelineError::Config(format!("cannot read config {}: {e}", path.display()))
        })?;
        let bad = |e: String| PipelineError::Config(format!("{}: {e}", path.display()));
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => {
                let value: serde_json::Value =
                    serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
                if value.get("config").is_some() {
                    serde_json::from_value::<MetadataEnvelope>(value)
                        .map(|m| m.config)
                        .map_err(|e| bad(e.to_string()))
                } else {
                    serde_json::from_value(value).map_err(|e| bad(e.to_string()))
                }
            }
            Some("toml") => toml::from_str(&text).map_err(|e| bad(e.to_string())),
            _ => Err(bad("config must be a .toml or .json file".into())),
        }
    }

    pub fn ordinal(&self) -> Result<OrdinalConfig, PipelineError> {
        OrdinalConfig::new(self.embedding_dimension, self.embedding_delay)
            .map_err(|e| PipelineError::Config(e.to_string()))
    }

    pub fn window_spec(&self) -> Result<WindowSpec, PipelineError> {
        WindowSpec::new(self.window_length, self.step, self.ordinal()?)
            .and_then(|s| s.with_max_windows(self.max_windows))
            .map_err(|e| PipelineError::Config(e.to_string()))
    }

    /// Checks cross-field constraints; numeric ranges are checked by the core
    /// types.
    pub fn validate(&self) -> Result<WindowSpec, PipelineError> {
        let spec = self.window_spec()?;
        if self.inputs.is_empty() {
            return Err(PipelineError::Config("no input series".into()));
        }
        let mut names = std::collections::HashSet::new();
        for input in &self.inputs {
            if input.name.is_empty() || !input.name.chars().all(valid_name_char) {
                return Err(PipelineError::Config(format!(
                    "series name {:?} must be non-empty and use only letters, digits, '-', '_' or '.'",
                    input.name
                )));
            }
            if !names.insert(input.name.as_str()) {
                return Err(PipelineError::Config(format!(
                    "duplicate series name {:?}",
                    input.name
                )));
            }
        }
        if let Some(reference) = &self.reference_series {
            if !names.contains(reference.as_str()) {
                return Err(PipelineError::Config(format!(
                    "reference series {reference:?} is not among the inputs"
                )));
            }
        }
        if self.subsample_ratio < 1 {
            return Err(PipelineError::Config("subsample ratio must be >= 1".into()));
        }
        if self.bounds_grid < 2 {
            return Err(PipelineError::Config("bounds grid must be >= 2".into()));
        }
        Ok(spec)
    }
}

fn valid_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.')
}
