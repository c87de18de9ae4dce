//! Pipeline around the `permplane` library: CSV ingestion, per-series
//! sliding-window quantifiers, shuffle surrogates, complexity bounds and
//! cross-series reports.

pub mod config;
pub mod error;
pub mod ingest;
pub mod pipeline;
pub mod report;

pub use config::{InputSpec, OutputFormat, RunConfig};
pub use error::PipelineError;
pub use ingest::{ingest_csv, IngestError};
pub use pipeline::{analyze, run_pipeline, Analysis, RunReport, SeriesAnalysis};
