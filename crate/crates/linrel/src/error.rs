//! Error type shared by all modules.

use crate::C64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("vector length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("space dimension mismatch: {left} vs {right}")]
    SpaceDimMismatch { left: usize, right: usize },

    #[error("containment violated: {what} (defect {defect:.3e})")]
    NotContained { what: &'static str, defect: f64 },

    #[error("relation is not symmetric")]
    NotSymmetric,

    #[error("relation is not positive")]
    NotPositive,

    #[error("relation is not quasi-null")]
    NotQuasiNull,

    #[error("map is not a contraction (largest singular value {sigma_max})")]
    NotContraction { sigma_max: f64 },

    #[error("map is not an isometry (defect {defect:.3e})")]
    NotIsometry { defect: f64 },

    #[error(
        "alpha not below greatest lower bound and not above smallest upper bound: \
         alpha = {alpha} lies in [{lower}, {upper}]"
    )]
    AlphaInsideBounds { alpha: f64, lower: f64, upper: f64 },

    #[error("sum of relation and deficiency space is not direct")]
    NonDirectSum,

    #[error("extension summand is not orthogonal to the base relation (defect {defect:.3e})")]
    ExtensionNotOrthogonal { defect: f64 },

    #[error(
        "extension is not symmetric: the map does not correspond to a symmetric \
         extension of the base relation (defect {defect:.3e})"
    )]
    ExtensionNotSymmetric { defect: f64 },

    #[error("deficiency probes disagree: dimensions {dims:?} at probes {probes:?}")]
    ProbeDisagreement { probes: Vec<C64>, dims: Vec<usize> },

    #[error("probe {probe} is an eigenvalue; it lies outside the quasi-regular set")]
    ProbeNotQuasiRegular { probe: C64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("internal consistency failure: {context} (defect {defect:.3e})")]
    InternalInconsistency { context: &'static str, defect: f64 },

    #[error("eigenvalue iteration failed to converge")]
    Eigensolver,
}
