//! Analytic expressions for Gaussian and Fock states: Wehrl entropy, Fisher
//! information, complexity, their s-ordered generalizations, and the
//! energy-constrained Gaussian optimum. These double as oracles for the
//! quadrature pipeline.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::special::{digamma_int, ln_factorial};
use crate::states::StateSpec;

/// Moment set (Δ, A, B) of a (possibly s-ordered) Gaussian distribution:
///
/// Δ_s = (n̄ + (1−s)/2)² − s(2n̄+1)sinh²r,
/// A_s = −s + (2n̄+1)cosh 2r,
/// B   = (n̄+½) sinh 2r.
///
/// The Husimi case is s = −1, where Δ = (n̄+1)² + (2n̄+1)sinh²r and
/// A = 1 + (2n̄+1)cosh 2r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianMoments {
    pub delta: f64,
    pub a: f64,
    pub b: f64,
}

impl GaussianMoments {
    /// s-ordered moments; caller is responsible for admissibility.
    pub fn ordered(nbar: f64, r: f64, s: f64) -> Self {
        let sinh2 = r.sinh() * r.sinh();
        let delta = {
            let half = nbar + 0.5 * (1.0 - s);
            half * half - s * ((2.0 * nbar + 1.0) * sinh2)
        };
        let a = -s + (2.0 * nbar + 1.0) * (2.0 * r).cosh();
        let b = (nbar + 0.5) * (2.0 * r).sinh();
        Self { delta, a, b }
    }

    /// Husimi-order moments (s = −1).
    pub fn husimi(nbar: f64, r: f64) -> Self {
        Self::ordered(nbar, r, -1.0)
    }
}

/// (S_W, I, C) of the Gaussian family: S = 1 + ½lnΔ, I = A/(2Δ), C = A/(2√Δ).
pub fn gaussian_closed(nbar: f64, r: f64) -> (f64, f64, f64) {
    let m = GaussianMoments::husimi(nbar, r);
    (
        1.0 + 0.5 * m.delta.ln(),
        m.a / (2.0 * m.delta),
        m.a / (2.0 * m.delta.sqrt()),
    )
}

/// s-ordered (S, I_s, C_s) of the Gaussian family; requires s < 1 − 2τ_m.
pub fn s_gaussian_closed(nbar: f64, r: f64, s: f64) -> Result<(f64, f64, f64)> {
    let bound = ((2.0 * nbar + 1.0) * (-2.0 * r).exp()).min(1.0);
    if s.is_nan() || s >= bound {
        return Err(Error::OrderingNotAdmissible {
            s,
            requirement: format!("s < {bound}"),
        });
    }
    let m = GaussianMoments::ordered(nbar, r, s);
    Ok((
        1.0 + 0.5 * m.delta.ln(),
        m.a / (2.0 * m.delta),
        m.a / (2.0 * m.delta.sqrt()),
    ))
}

/// (S_W, C) of the Fock state |k⟩:
/// S_W = 1 + k + ln k! − kψ(k+1),  C = k! e^{k − kψ(k+1)} (log-space).
pub fn fock_closed(k: u32) -> (f64, f64) {
    let kf = k as f64;
    let psi = digamma_int(k as u64 + 1);
    let ln_fact = ln_factorial(k as u64);
    let entropy = 1.0 + kf + ln_fact - kf * psi;
    let complexity = (ln_fact + kf - kf * psi).exp();
    (entropy, complexity)
}

/// Closed-form extremizers of C over Gaussian states at mean photon number E:
/// the squeezed vacuum with r = ln(√E + √(E+1)) attains C_max = √(E+1); every
/// displaced thermal state with n̄ + |ξ|² = E attains the minimum C = 1.
pub fn optimal_gaussian_at_energy(e: f64) -> (StateSpec, f64, f64) {
    assert!(e >= 0.0, "energy must be nonnegative");
    let r = (e.sqrt() + (e + 1.0).sqrt()).ln();
    (
        StateSpec::gaussian(0.0, r, 0.0, C64::new(0.0, 0.0)),
        (e + 1.0).sqrt(),
        1.0,
    )
}

/// Outcome of the grid-plus-refinement search over the energy shell.
#[derive(Debug, Clone, Copy)]
pub struct EnergySearch {
    pub energy: f64,
    pub nbar: f64,
    pub r: f64,
    pub xi_abs_sq: f64,
    pub c_max: f64,
    /// Minimum found on the r = 0 slice (displaced thermal states).
    pub c_min_thermal_slice: f64,
}

/// Brute-force maximization of C over the surface
/// E = n̄ + |ξ|² + (2n̄+1)sinh²r, on a dense (n̄, r) grid with local
/// refinement. |ξ|² is eliminated: for given (n̄, r) it takes up the slack,
/// so feasibility is n̄ + (2n̄+1)sinh²r ≤ E, and C itself is ξ-independent.
pub fn search_optimal_at_energy(e: f64, grid: usize, rounds: usize) -> EnergySearch {
    assert!(e >= 0.0 && grid >= 2);
    let feasible_r_max = |nbar: f64| ((e - nbar) / (2.0 * nbar + 1.0)).max(0.0).sqrt().asinh();

    let mut lo_n = 0.0f64;
    let mut hi_n = e.max(1e-12);
    let mut lo_fr = 0.0f64;
    let mut hi_fr = 1.0f64;
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    let mut min_thermal = f64::INFINITY;

    for round in 0..rounds.max(1) {
        for i in 0..grid {
            let nbar = lo_n + (hi_n - lo_n) * i as f64 / (grid - 1) as f64;
            if nbar > e {
                continue;
            }
            let r_max = feasible_r_max(nbar);
            for j in 0..grid {
                let fr = lo_fr + (hi_fr - lo_fr) * j as f64 / (grid - 1) as f64;
                let r = fr * r_max;
                let (_, _, c) = gaussian_closed(nbar, r);
                if c > best.0 {
                    best = (c, nbar, r);
                }
                if round == 0 && j == 0 {
                    // r = 0 slice: displaced thermal states
                    let (_, _, c0) = gaussian_closed(nbar, 0.0);
                    min_thermal = min_thermal.min(c0);
                }
            }
        }
        // zoom around the incumbent
        let span_n = (hi_n - lo_n) * 0.25;
        lo_n = (best.1 - span_n).max(0.0);
        hi_n = (best.1 + span_n).min(e.max(1e-12));
        let fr_best = if feasible_r_max(best.1) > 0.0 {
            best.2 / feasible_r_max(best.1)
        } else {
            1.0
        };
        let span_fr = (hi_fr - lo_fr) * 0.25;
        lo_fr = (fr_best - span_fr).max(0.0);
        hi_fr = (fr_best + span_fr).min(1.0);
    }

    let xi_abs_sq = (e - best.1 - (2.0 * best.1 + 1.0) * best.2.sinh().powi(2)).max(0.0);
    EnergySearch {
        energy: e,
        nbar: best.1,
        r: best.2,
        xi_abs_sq,
        c_max: best.0,
        c_min_thermal_slice: min_thermal,
    }
}
