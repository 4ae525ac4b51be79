//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by algebra, group, orbit and realization operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("unknown algebra identifier `{0}`")]
    UnknownAlgebra(String),

    #[error("algebra `{algebra}` requires parameter `{param}`")]
    MissingParameter { algebra: String, param: String },

    #[error("invalid parameter `{param}` = {value}: {reason}")]
    InvalidParameter {
        param: String,
        value: f64,
        reason: String,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("structure constants violate antisymmetry at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("algebra `{0}` is not step-2 nilpotent: [[{1}, {2}], {3}] != 0")]
    NotStepTwoNilpotent(String, String, String, String),

    #[error("unknown cocycle kind `{0}`")]
    UnknownCocycleKind(String),

    #[error("chart kind mismatch: orbit uses {expected}, point is {got}")]
    ChartKindMismatch { expected: String, got: String },

    #[error("dual vector has class {got}, orbit is {expected}")]
    ClassMismatch { expected: String, got: String },

    #[error("operation undefined on the zero-dimensional point orbit")]
    PointOrbit,

    #[error("flow requires at least one step")]
    ZeroSteps,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
