use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("position index {k} outside 1..={n}")]
    PositionOutOfRange { k: usize, n: usize },

    #[error("state has {got} position labels, model expects {expected}")]
    StateArity { got: usize, expected: usize },

    #[error("cyclic model needs at least one state")]
    EmptyModel,

    #[error("time step must be positive, got {0}")]
    NonPositiveTau(f64),

    #[error("pair factors must share the cutoff: {a} vs {b}")]
    CutoffMismatch { a: usize, b: usize },

    #[error("pair factors must share the time step: {a} vs {b}")]
    TauMismatch { a: f64, b: f64 },

    #[error("mode label {n} outside 0..={max}")]
    ModeOutOfRange { n: usize, max: usize },

    #[error("invalid |j,m> label: {0}")]
    InvalidLabel(String),

    #[error("matrix shapes differ: {a_rows}x{a_cols} vs {b_rows}x{b_cols}")]
    ShapeMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },

    #[error("operation requires an su(1,1) discrete-series representation")]
    NotSu11,

    #[error("representation weight out of range: {0}")]
    InvalidWeight(String),

    #[error("truncation dimension {dim} invalid: {reason}")]
    InvalidDimension { dim: usize, reason: String },

    #[error("diagonal of (L3 + 1/2) not positive at row {row}: {value}")]
    NonPositiveDiagonal { row: usize, value: f64 },

    #[error("trajectory parameters invalid: {0}")]
    InvalidTrajectory(String),

    #[error("config: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
