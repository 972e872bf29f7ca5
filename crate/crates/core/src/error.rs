use thiserror::Error;

/// Errors raised by the engine model and its numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (nonpositive width, negative λ, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// μ(λ) has a pole at λ = 1/2.
    #[error("singularity: mu(lambda) is undefined at lambda = {lambda}")]
    Singularity { lambda: f64 },

    /// The operation has no meaning for the requested λ mode.
    #[error("unsupported lambda mode: {0}")]
    UnsupportedMode(String),

    /// A width lies outside the interval traversed by a process leg.
    #[error("width {l} outside leg interval [{lo}, {hi}]")]
    OutOfRange { l: f64, lo: f64, hi: f64 },

    /// The adiabatic expansion would not expand: L3 must exceed L2.
    #[error("degenerate cycle: L3 = {l3} must exceed L2 = {l2}")]
    DegenerateCycle { l2: f64, l3: f64 },

    /// Invalid numerical configuration (tolerance, step, sample count).
    #[error("config error: {0}")]
    Config(String),

    /// The root finder was handed an interval without a sign change.
    #[error("no sign change on [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// An iterative kernel ran out of depth or iterations.
    #[error("no convergence on [{lo}, {hi}]: {reason}")]
    NonConvergence { lo: f64, hi: f64, reason: String },

    /// A computation produced NaN or infinity.
    #[error("non-finite value in {context}")]
    NonFinite { context: String },
}

impl Error {
    /// True for failures of the numerics rather than of the caller's input.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::NonFinite { .. } | Error::Bracket { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
