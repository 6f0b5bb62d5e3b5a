use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid `{field}` = {value}: {reason}")]
    InvalidParameter {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("third-order coefficient is singular at alpha = {alpha}")]
    SingularGamma3 { alpha: f64 },

    #[error(
        "negative discriminant {value} in the third-order dissociation level (unphysical regime)"
    )]
    NegativeDiscriminant { value: f64 },

    #[error("dissociation level is unbounded in the harmonic limit (De -> infinity)")]
    Unbounded,

    #[error("mode frequency vanishes at n = {n} while initial momentum is non-zero")]
    ZeroModeFrequency { n: f64 },

    #[error("time grid: {0}")]
    InvalidGrid(&'static str),

    #[error("step size underflow at t = {t:e} s (h = {h:e} s)")]
    StepSizeUnderflow { t: f64, h: f64 },

    #[error("level n = {n} is outside the usable block of a dimension-{dim} truncation")]
    Truncation { n: usize, dim: usize },

    #[error("molecule config: {0}")]
    Config(String),
}
