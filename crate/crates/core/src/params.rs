//! Physical inputs and derived rates/couplings.
//!
//! All angular frequencies are rad/s. Conversions from ordinary frequencies
//! (caption-style "ω_m/2π = 10 MHz") belong at the configuration boundary,
//! not here.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Float;

use crate::constants::{C_LIGHT, HBAR, K_B};
use crate::error::Error;

/// User-facing physical parameters of the cavity-mirror-medium system.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    /// Mechanical resonance frequency ω_m (rad/s).
    pub omega_m: f64,
    /// Effective mass of the movable mirror (kg).
    pub mass: f64,
    /// Mechanical quality factor Q.
    pub q_factor: f64,
    /// Cavity length L (m).
    pub length: f64,
    /// Drive laser wavelength λ (m).
    pub wavelength: f64,
    /// Input laser power P (W).
    pub power: f64,
    /// Cavity amplitude decay rate κ (rad/s).
    pub kappa: f64,
    /// Bare laser detuning Δ₀ = ω₀ − ω_L (rad/s).
    pub detuning: f64,
    /// Parametric gain G of the down-conversion medium (rad/s).
    pub gain: f64,
    /// Pump phase θ of the parametric medium (rad), in [0, 2π).
    pub theta: f64,
    /// Kerr anharmonicity η (rad/s per photon number).
    pub eta: f64,
    /// Temperature of the mirror's thermal bath (K).
    pub temperature: f64,
}

/// Quantities derived from [`SystemParams`] by the standard Fabry-Perot
/// relations. The conversions g_m = ω₀/L and ε = √(2κP/ħω₀) are the ones
/// needed to reproduce figure-caption parameter sets given only
/// (P, λ, L, κ); swap them here if a different cavity convention is wanted.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedParams {
    /// Mechanical energy decay rate γ_m = ω_m/Q (rad/s).
    pub gamma_m: f64,
    /// Cavity resonance ω₀ = 2πc/λ (rad/s).
    pub omega_cav: f64,
    /// Optomechanical frequency pull g_m = ω₀/L (rad/s per m).
    pub g_m: f64,
    /// Single-photon coupling g₀ = √(ħ/2mω_m)·g_m (rad/s).
    pub g_0: f64,
    /// Drive amplitude ε = √(2κP/ħω₀) (1/s).
    pub drive: f64,
    /// Thermal phonon occupancy n̄ = [exp(ħω_m/k_BT) − 1]⁻¹.
    pub n_bar: f64,
}

/// Violated invariants and advisory warnings for a parameter set.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the invariants of `p`. Never fails; reports.
///
/// Violations cover sign/finiteness constraints. Warnings flag regimes the
/// single-mode model starts to mistrust: the adiabatic limit ω_m ≪ πc/L and
/// sideband resolution κ vs ω_m.
pub fn validate(p: &SystemParams) -> ValidationReport {
    let mut r = ValidationReport::default();

    let mut positive = |name: &str, v: f64| {
        if !v.is_finite() || v <= 0.0 {
            r.violations.push(format!("{name} must be finite and > 0 (got {v:e})"));
        }
    };
    positive("omega_m", p.omega_m);
    positive("mass", p.mass);
    positive("q_factor", p.q_factor);
    positive("length", p.length);
    positive("wavelength", p.wavelength);
    positive("kappa", p.kappa);

    let mut nonnegative = |name: &str, v: f64| {
        if !v.is_finite() || v < 0.0 {
            r.violations.push(format!("{name} must be finite and >= 0 (got {v:e})"));
        }
    };
    nonnegative("power", p.power);
    nonnegative("gain", p.gain);
    nonnegative("eta", p.eta);
    nonnegative("temperature", p.temperature);

    if !p.detuning.is_finite() {
        r.violations.push(format!("detuning must be finite (got {:e})", p.detuning));
    }
    if !p.theta.is_finite() || p.theta < 0.0 || p.theta >= 2.0 * core::f64::consts::PI {
        r.violations.push(format!("theta must lie in [0, 2π) (got {:e})", p.theta));
    }

    if p.omega_m > 0.0 && p.length > 0.0 {
        let fsr_bound = core::f64::consts::PI * C_LIGHT / p.length;
        if p.omega_m >= 0.1 * fsr_bound {
            r.warnings.push(format!(
                "adiabatic limit questionable: omega_m = {:.3e} not small against πc/L = {:.3e}",
                p.omega_m, fsr_bound
            ));
        }
    }
    if p.kappa > 0.0 && p.omega_m > 0.0 && p.kappa >= p.omega_m {
        r.warnings.push(format!(
            "not sideband resolved: kappa = {:.3e} >= omega_m = {:.3e}",
            p.kappa, p.omega_m
        ));
    }
    r
}

/// Populate [`DerivedParams`] from validated inputs. Pure and deterministic.
pub fn derive_params(p: &SystemParams) -> Result<DerivedParams, Error> {
    let report = validate(p);
    if !report.is_ok() {
        return Err(Error::InvalidParams(report.violations.join("; ")));
    }
    let omega_cav = 2.0 * core::f64::consts::PI * C_LIGHT / p.wavelength;
    let g_m = omega_cav / p.length;
    let g_0 = (HBAR / (2.0 * p.mass * p.omega_m)).sqrt() * g_m;
    let drive = (2.0 * p.kappa * p.power / (HBAR * omega_cav)).sqrt();
    let n_bar = if p.temperature == 0.0 {
        0.0
    } else {
        1.0 / (HBAR * p.omega_m / (K_B * p.temperature)).exp_m1()
    };
    Ok(DerivedParams {
        gamma_m: p.omega_m / p.q_factor,
        omega_cav,
        g_m,
        g_0,
        drive,
        n_bar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    pub(crate) fn caption_params() -> SystemParams {
        // ω_m/2π = 10 MHz, m = 10 ng, Q = 5e5, L = 1 mm, λ = 1064 nm,
        // P = 6.9 mW, κ = 0.1 ω_m, Δ₀ = ω_m, θ = π/2, T = 0.4 K
        let omega_m = 2.0 * core::f64::consts::PI * 1.0e7;
        SystemParams {
            omega_m,
            mass: 1.0e-11,
            q_factor: 5.0e5,
            length: 1.0e-3,
            wavelength: 1.064e-6,
            power: 6.9e-3,
            kappa: 0.1 * omega_m,
            detuning: omega_m,
            gain: 0.0,
            theta: core::f64::consts::FRAC_PI_2,
            eta: 0.0,
            temperature: 0.4,
        }
    }

    #[test]
    fn cavity_resonance_for_1064nm() {
        let d = derive_params(&caption_params()).unwrap();
        assert_relative_eq!(d.omega_cav, 1.770e15, max_relative = 1e-3);
    }

    #[test]
    fn mechanical_damping_rate() {
        let d = derive_params(&caption_params()).unwrap();
        assert_relative_eq!(d.gamma_m, 125.66, max_relative = 1e-4);
        // γ_m · Q reproduces ω_m to machine precision
        let p = caption_params();
        assert_relative_eq!(d.gamma_m * p.q_factor, p.omega_m, max_relative = 4.0 * f64::EPSILON);
    }

    #[test]
    fn thermal_occupancy_at_0p4_kelvin() {
        let d = derive_params(&caption_params()).unwrap();
        assert_relative_eq!(d.n_bar, 833.0, max_relative = 1e-3);
        let mut p = caption_params();
        p.temperature = 0.0;
        assert_eq!(derive_params(&p).unwrap().n_bar, 0.0);
    }

    #[test]
    fn coupling_scales_as_inverse_sqrt_mass() {
        let p = caption_params();
        let d1 = derive_params(&p).unwrap();
        let mut p4 = p.clone();
        p4.mass *= 4.0;
        let d4 = derive_params(&p4).unwrap();
        // quadrupling the mass halves g₀ exactly (power-of-two scaling)
        assert_eq!(d4.g_0, d1.g_0 / 2.0);
    }

    #[test]
    fn drive_scales_as_sqrt_power() {
        let p = caption_params();
        let d1 = derive_params(&p).unwrap();
        let mut p2 = p.clone();
        p2.power *= 2.0;
        let d2 = derive_params(&p2).unwrap();
        assert_relative_eq!(d2.drive, d1.drive * 2f64.sqrt(), max_relative = 4.0 * f64::EPSILON);
    }

    #[test]
    fn derive_is_deterministic() {
        let p = caption_params();
        let a = derive_params(&p).unwrap();
        let b = derive_params(&p).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn validation_reports() {
        assert!(validate(&caption_params()).is_ok());

        let mut bad = caption_params();
        bad.mass = 0.0;
        let r = validate(&bad);
        assert!(!r.is_ok());
        assert!(r.violations.iter().any(|v| v.contains("mass")));
        assert!(derive_params(&bad).is_err());

        // L = 1 µm keeps ω_m ≪ πc/L: no adiabatic warning
        let mut short = caption_params();
        short.length = 1.0e-6;
        let r = validate(&short);
        assert!(r.is_ok());
        assert!(!r.warnings.iter().any(|w| w.contains("adiabatic")));
    }
}
