//! Error type shared by all modules.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A physical input failed validation; the message names the fields.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The parametric-oscillation denominator κ² + Δ'² − 4G² is not positive
    /// at the requested operating point.
    #[error("above parametric-oscillation threshold: κ² + Δ'² − 4G² = {denominator} ≤ 0")]
    AboveThreshold { denominator: f64 },

    /// No branch of the steady state passes the linear stability test.
    #[error("no linearly stable steady-state branch")]
    NoStableBranch,

    /// The requested quantity is meaningless because the fixed point is
    /// linearly unstable.
    #[error("linearized dynamics unstable: max Re λ = {max_re}")]
    UnstableSystem { max_re: f64 },

    /// Characteristic-polynomial coefficients degenerated.
    #[error("ill-conditioned drift matrix: {0}")]
    IllConditioned(String),

    /// The lower normal-mode frequency came out imaginary (ω₋² < 0).
    #[error("imaginary normal mode: ω₋² = {omega_minus_sq}")]
    ImaginaryMode { omega_minus_sq: f64 },

    /// A covariance matrix violated the physicality bounds needed for the
    /// symplectic-eigenvalue formulas.
    #[error("unphysical covariance matrix: {0}")]
    UnphysicalCm(String),

    /// A branch index passed to an explicit-branch policy does not exist.
    #[error("branch index {index} out of range ({count} branches)")]
    BranchIndex { index: usize, count: usize },
}
