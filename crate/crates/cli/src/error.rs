use std::path::PathBuf;

use thiserror::Error;

use crate::ingest::IngestError;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("series {series}: {source}")]
    Ingest { series: String, source: IngestError },

    #[error("series {series}: {stage}: {source}")]
    Analysis {
        series: String,
        stage: &'static str,
        source: permplane::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl PipelineError {
    /// 2 configuration, 3 data, 4 internal invariant.
    pub fn exit_code(&self) -> u8 {
        match self {
            PipelineError::Config(_) => 2,
            PipelineError::Ingest { .. }
            | PipelineError::Analysis { .. }
            | PipelineError::Write { .. } => 3,
            PipelineError::Invariant(_) => 4,
        }
    }
}
