//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by construction and computation routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must live over the same ring (or have the same
    /// arity) do not.
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// Objects combined across distinct rings.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A declared grading is not standard: some variable degree is not a
    /// standard basis vector of the grading group.
    #[error("non-standard grading: {0}")]
    NotStandardGraded(String),

    /// Malformed input that passed parsing but fails a semantic rule.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An ideal required to be primary for the irrelevant maximal ideal
    /// is not (some variable admits no pure power).
    #[error("ideal is not primary for the maximal ideal: {0}")]
    NotMPrimary(String),

    /// Saturation by the zero ideal is undefined.
    #[error("saturation by the zero ideal is undefined")]
    ZeroIdealSaturation,

    /// The saturation chain exceeded its proven stabilization cap; this
    /// indicates a bug, not bad input.
    #[error("saturation chain exceeded the stabilization cap of {cap} steps")]
    SaturationDiverged { cap: usize },

    /// The module is supported away from the positive orthant, so no
    /// nonzero Hilbert polynomial exists.
    #[error("module has empty support in the positive orthant")]
    EmptySupport,

    /// Interpolation failed validation on every retry grid.
    #[error("interpolation unstable after {attempts} attempt(s): {detail}")]
    Unstable { attempts: usize, detail: String },

    /// A zero polynomial was supplied where a nonzero one is required.
    #[error("zero polynomial has no leading terms")]
    ZeroPolynomial,

    /// A value that must be a nonnegative integer is not.
    #[error("extracted multiplicity is not a nonnegative integer: {0}")]
    BadMultiplicity(String),

    /// A standing hypothesis of the computation fails for the given data.
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// A quotient requested from a brute-force length computation is not
    /// finite-dimensional.
    #[error("quotient has infinite length{}", match .0 { Some(d) => format!(": {d}"), None => String::new() })]
    InfiniteLength(Option<String>),

    /// An aggregate that must divide evenly does not; flags a bug.
    #[error("non-integral quotient: {0}")]
    NonIntegralQuotient(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
