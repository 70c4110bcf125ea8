use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid sequence spec: k = {k}, m = {m} (need k >= 2, m >= 1)")]
    InvalidSpec { k: usize, m: u64 },

    #[error("need at least {min} terms, got {count}")]
    TooFewTerms { count: usize, min: usize },

    #[error("denominator series has zero constant term")]
    ZeroConstantTerm,

    #[error("power series coefficient {index} is not an integer")]
    NonIntegralSeries { index: usize },

    #[error("sequence must start with a(0) = 0, found {found}")]
    NonZeroLeadingTerm { found: String },

    #[error("precision must be at least 1 bit")]
    InvalidPrecision,

    #[error("polynomial has an exact rational root at a bisection point {at}")]
    ExactRoot { at: String },

    #[error(
        "root iteration did not converge after {iterations} iterations (residuals: {residuals:?})"
    )]
    NonConvergence {
        iterations: usize,
        residuals: Vec<f64>,
    },

    #[error("root set check failed: {0}")]
    RootSet(String),

    #[error("cubic has {0} real roots; single-real-root Cardano branch does not apply")]
    CardanoBranch(&'static str),

    #[error("Vandermonde system is numerically singular (pivot ratio {pivot_ratio:e})")]
    SingularSystem { pivot_ratio: f64 },

    #[error("triangle check requires nonzero inputs")]
    ZeroInput,

    #[error("enumeration would produce {count} tilings, cap is {cap}")]
    EnumerationCap { count: String, cap: usize },

    #[error("tiling count mismatch at board length {length}: dp = {dp}, sequence = {sequence}")]
    TilingMismatch {
        length: usize,
        dp: String,
        sequence: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
