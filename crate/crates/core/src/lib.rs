//! Quantum dynamics of a driven Fabry-Perot cavity whose movable end mirror
//! couples to an intracavity medium combining a Kerr nonlinearity with a
//! degenerate parametric amplifier.
//!
//! The crate is organised around the stages of the calculation:
//!
//! * [`params`] — physical inputs and the derived rates and couplings,
//! * [`steady`] — the nonlinear intensity self-consistency and its branches,
//! * [`linearized`] — drift matrix of the fluctuations, noise model, stability,
//! * [`spectrum`] — frequency grids, sampled spectra and peak detection,
//! * [`mechspectra`] — mirror displacement spectrum, effective mechanical
//!   response and cooling figures,
//! * [`outfield`] — transmitted-field intensity and quadrature noise spectra,
//! * [`entangle`] — stationary covariance matrix and logarithmic negativity,
//! * [`oracle`] — independent verification routes (grid scans, finite
//!   differences, covariance relaxation) used by the test suites.
//!
//! Everything is pure computation on value types; no IO happens here. All
//! angular frequencies are stored in rad/s.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constants;
pub mod entangle;
pub mod error;
pub mod linearized;
pub mod mechspectra;
pub mod oracle;
pub mod outfield;
pub mod params;
pub mod poly;
pub mod spectrum;
pub mod steady;

pub use error::Error;
pub use linearized::{drift_matrix, stability, DriftMatrix, NoiseModel, StabilityReport};
pub use params::{derive_params, validate, DerivedParams, SystemParams, ValidationReport};
pub use steady::{solve_branches, steady_state, BranchPolicy, BranchSet, SteadyState};

/// Convenience bundle of a parameter set, its derived quantities and the
/// steady-state operating point every linearized quantity is built on.
#[derive(Debug, Clone)]
pub struct Operating {
    pub params: SystemParams,
    pub derived: DerivedParams,
    pub steady: SteadyState,
}

impl Operating {
    /// Solve the steady state under `policy` and bundle the result.
    pub fn solve(params: SystemParams, policy: BranchPolicy) -> Result<Self, Error> {
        let derived = params::derive_params(&params)?;
        let branches = steady::solve_branches(&params, &derived)?;
        let steady = steady::steady_state(&params, &derived, &branches, policy)?;
        Ok(Self {
            params,
            derived,
            steady,
        })
    }
}
