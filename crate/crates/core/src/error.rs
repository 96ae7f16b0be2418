use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("well strength bL must be positive and finite, got {0}")]
    InvalidStrength(f64),

    #[error("eigenvalue candidate z = {0} must be positive")]
    NonPositiveZ(f64),

    #[error("z = {z} is not below the well strength bL = {strength}: the state is not bound")]
    Unbound { z: f64, strength: f64 },

    #[error("invalid scan interval [{lo}, {hi}] with step {step}")]
    InvalidInterval { lo: f64, hi: f64, step: f64 },

    #[error("function evaluated to {value} at x = {x}")]
    NonFiniteEvaluation { x: f64, value: f64 },

    #[error("bracket [{a}, {b}] does not straddle a root: f(a) = {fa}, f(b) = {fb}")]
    InvalidBracket { a: f64, b: f64, fa: f64, fb: f64 },

    #[error("z = {z} is not an eigenvalue: scaled |det| = {residual:e} exceeds {threshold:e}")]
    NotAnEigenvalue {
        z: f64,
        residual: f64,
        threshold: f64,
    },

    #[error("null space at z = {0} is not one-dimensional")]
    DegenerateEigenvalue(f64),

    #[error("eigenvalues {0} and {1} are not strictly ascending")]
    TiedEigenvalues(f64, f64),

    #[error("eigenfunction has zero norm")]
    ZeroNorm,

    #[error("level count must be at least 1")]
    InvalidCount,

    #[error("an infinite well needs an explicit level count")]
    MissingLevelCount,

    #[error("unsupported plot request: {0}")]
    UnsupportedPlot(&'static str),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
