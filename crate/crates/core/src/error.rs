//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid concept: {0:?}")]
    InvalidConcept(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("unknown entity: {0:?}")]
    UnknownEntity(String),
    #[error("unknown relation: {0:?}")]
    UnknownRelation(String),
    #[error("cannot corrupt: entity vocabulary has fewer than 2 entries")]
    CannotCorrupt,
    #[error("training diverged at epoch {epoch}: loss is not finite")]
    TrainingDiverged { epoch: usize },
    #[error("unparseable intent label: {0:?}")]
    UnparseableIntent(String),
    #[error("intent corruption infeasible for mode {mode}: {msg}")]
    CorruptionInfeasible { mode: &'static str, msg: String },
    #[error("empty utterance")]
    EmptyUtterance,
    #[error("unknown POS tag: {0:?}")]
    UnknownPosTag(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("PU calibration failed: estimated c = {0} is not usable")]
    CalibrationFailed(f64),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
