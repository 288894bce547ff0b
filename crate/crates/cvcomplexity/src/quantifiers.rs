//! Companion nonclassicality and non-Gaussianity quantifiers: Mandel Q,
//! nonclassical depth (floored and unfloored), Wigner–Yanase skew-information
//! nonclassicality, Wigner negativity, and the Fock-state values of two
//! non-Gaussianity measures (Hilbert–Schmidt and relative-entropy distance to
//! the matched Gaussian reference).

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phasespace::fock_wigner_radial;
use crate::quadrature::{integrate_radial, QuadratureConfig};
use crate::states::{CheckedState, FockDensity, Kind};

/// One row of quantifier values for a state. Entries that are only defined
/// for some families are optional.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantifierRow {
    pub mandel_q: f64,
    pub nonclassical_depth: f64,
    pub nonclassical_depth_unfloored: f64,
    pub skew_info: f64,
    pub wigner_negativity: Option<f64>,
    pub delta_a: Option<f64>,
    pub delta_b: Option<f64>,
}

/// Mandel Q = [tr(ρ a†²a²) − (tr ρ a†a)²] / tr(ρ a†a) ≥ −1.
///
/// Gaussian states use the moment closed form (which, unlike the complexity,
/// depends on the displacement ξ and on the squeezing angle θ); other
/// families take photon-number moments from the truncated Fock expansion.
pub fn mandel_q(state: &CheckedState) -> Result<f64> {
    match state.kind() {
        Kind::Coherent { beta } => {
            if beta.norm_sqr() == 0.0 {
                Err(Error::ZeroMeanPhoton)
            } else {
                Ok(0.0)
            }
        }
        Kind::Thermal { nbar } => {
            if *nbar == 0.0 {
                Err(Error::ZeroMeanPhoton)
            } else {
                Ok(*nbar)
            }
        }
        Kind::Fock { k } => {
            if *k == 0 {
                Err(Error::ZeroMeanPhoton)
            } else {
                Ok(-1.0)
            }
        }
        Kind::Gaussian { nbar, r, theta, xi } => mandel_gaussian(*nbar, *r, *theta, *xi),
        Kind::FockMatrix(f) => mandel_from_probs(&f.diag_probs()),
        _ => {
            let trunc = state.to_fock_matrix_auto(MOMENT_TRUNC_TOL)?;
            let probs: Vec<f64> = (0..trunc.dim).map(|n| trunc.rho[(n, n)].re).collect();
            mandel_from_probs(&probs)
        }
    }
}

fn mandel_gaussian(nbar: f64, r: f64, theta: f64, xi: C64) -> Result<f64> {
    let mean = nbar + xi.norm_sqr() + (2.0 * nbar + 1.0) * r.sinh().powi(2);
    if mean <= 0.0 {
        return Err(Error::ZeroMeanPhoton);
    }
    let nh = nbar + 0.5;
    let mix = xi * r.cosh() + xi.conj() * C64::from_polar(1.0, theta) * r.sinh();
    let num = nh * nh * (4.0 * r).cosh() + 2.0 * nh * mix.norm_sqr() - 0.25;
    let den = nh * (2.0 * r).cosh() + xi.norm_sqr() - 0.5;
    Ok(num / den - 1.0)
}

fn mandel_from_probs(probs: &[f64]) -> Result<f64> {
    let mean: f64 = probs.iter().enumerate().map(|(n, p)| n as f64 * p).sum();
    if mean < 1e-12 {
        return Err(Error::ZeroMeanPhoton);
    }
    let fact2: f64 = probs
        .iter()
        .enumerate()
        .map(|(n, p)| n as f64 * (n as f64 - 1.0) * p)
        .sum();
    Ok((fact2 - mean * mean) / mean)
}

/// Second moments feel the truncation tail more than the trace does, so the
/// moment paths retain probability down to a tighter floor.
const MOMENT_TRUNC_TOL: f64 = 1e-12;

/// Nonclassical depth (τ_m, τ̃_m): the floored value in [0, 1] and its
/// unfloored variant, whose negative values grade classicality.
///
/// Supported families: Gaussian (closed form), Fock (maximal, τ = 1 for
/// k ≥ 1), and the classical families (τ = 0).
pub fn nonclassical_depth(state: &CheckedState) -> Result<(f64, f64)> {
    match state.kind() {
        Kind::Gaussian { nbar, r, .. } => {
            let t = r.tanh();
            let unfloored = ((nbar + 1.0) * t - nbar) / (1.0 + t);
            Ok((unfloored.max(0.0), unfloored))
        }
        Kind::Coherent { .. } => Ok((0.0, 0.0)),
        Kind::Thermal { nbar } => Ok((0.0, -nbar)),
        Kind::Fock { k } => {
            if *k == 0 {
                Ok((0.0, 0.0))
            } else {
                Ok((1.0, 1.0))
            }
        }
        Kind::CoherentMixture { .. } | Kind::PhaseAveragedCoherent { .. } => Ok((0.0, 0.0)),
        _ => Err(Error::Unsupported(format!(
            "nonclassical depth not implemented for {}",
            state.family_name()
        ))),
    }
}

/// Wigner–Yanase skew-information nonclassicality.
///
/// Closed forms: Gaussian (½ + n̄ − √(n̄(n̄+1)))cosh 2r and Fock k + ½.
/// The generic path evaluates N = tr(ρ a†a) + ½ − tr(√ρ a† √ρ a) from the
/// eigendecomposition of the truncated density matrix; this is the operator
/// ordering that reproduces both closed forms.
pub fn skew_info_nonclassicality(state: &CheckedState) -> Result<f64> {
    match state.kind() {
        Kind::Gaussian { nbar, r, .. } => {
            Ok((0.5 + nbar - (nbar * (nbar + 1.0)).sqrt()) * (2.0 * r).cosh())
        }
        Kind::Coherent { .. } => Ok(0.5),
        Kind::Thermal { nbar } => Ok(0.5 + nbar - (nbar * (nbar + 1.0)).sqrt()),
        Kind::Fock { k } => Ok(*k as f64 + 0.5),
        Kind::FockMatrix(f) => Ok(skew_info_generic(f)),
        _ => {
            let trunc = state.to_fock_matrix_auto(MOMENT_TRUNC_TOL)?;
            let f = FockDensity {
                dim: trunc.dim,
                rho: trunc.rho,
                diagonal: false,
            };
            Ok(skew_info_generic(&f))
        }
    }
}

fn skew_info_generic(f: &FockDensity) -> f64 {
    let dim = f.dim;
    let eig = f.rho.clone().symmetric_eigen();
    // √ρ = U √D U†, clamping eigenvalue round-off at zero
    let mut sqrt_d = DMatrix::<C64>::zeros(dim, dim);
    for i in 0..dim {
        sqrt_d[(i, i)] = C64::new(eig.eigenvalues[i].max(0.0).sqrt(), 0.0);
    }
    let u = &eig.eigenvectors;
    let m = u * sqrt_d * u.adjoint();

    let mut lowering = DMatrix::<C64>::zeros(dim, dim);
    for n in 1..dim {
        lowering[(n - 1, n)] = C64::new((n as f64).sqrt(), 0.0);
    }
    let t = (&m * lowering.adjoint() * &m * &lowering).trace().re;
    let mean: f64 = (0..dim).map(|n| n as f64 * f.rho[(n, n)].re).sum();
    mean + 0.5 - t
}

/// Wigner negativity δ = ∫|W₀| d²α/π − 1 with error estimate.
///
/// Exactly 0 for the Gaussian families (positive Wigner function, no
/// integration); quadrature over the signed Laguerre form for Fock states;
/// unsupported otherwise.
pub fn wigner_negativity(state: &CheckedState, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    match state.kind() {
        Kind::Gaussian { .. } | Kind::Coherent { .. } | Kind::Thermal { .. } => Ok((0.0, 0.0)),
        Kind::Fock { k } => {
            let k = *k;
            let scale = (k as f64 + 1.0).sqrt();
            let (total, err) =
                integrate_radial(|r| fock_wigner_radial(k, r).abs(), scale, cfg)?;
            Ok((total - 1.0, err))
        }
        _ => Err(Error::Unsupported(format!(
            "wigner negativity restricted to gaussian and fock states, got {}",
            state.family_name()
        ))),
    }
}

/// Fock-state values of the two non-Gaussianity quantifiers:
/// δ_A = ½(1 + 1/(2k+1)) − k^k/(k+1)^{k+1},
/// δ_B = (k+1)ln(k+1) − k ln k (0·ln 0 = 0).
pub fn nongaussianity_fock(k: u32) -> (f64, f64) {
    if k == 0 {
        return (0.0, 0.0);
    }
    let kf = k as f64;
    let ratio = (kf * kf.ln() - (kf + 1.0) * (kf + 1.0).ln()).exp();
    let delta_a = 0.5 * (1.0 + 1.0 / (2.0 * kf + 1.0)) - ratio;
    let delta_b = (kf + 1.0) * (kf + 1.0).ln() - kf * kf.ln();
    (delta_a, delta_b)
}

/// Assemble the full quantifier row for one state.
pub fn quantifier_row(state: &CheckedState, cfg: &QuadratureConfig) -> Result<QuantifierRow> {
    let mandel = mandel_q(state)?;
    let (depth, depth_unfloored) = nonclassical_depth(state)?;
    let skew = skew_info_nonclassicality(state)?;
    let (wigner, delta_a, delta_b) = match state.kind() {
        Kind::Gaussian { .. } | Kind::Coherent { .. } | Kind::Thermal { .. } => {
            (Some(0.0), Some(0.0), Some(0.0))
        }
        Kind::Fock { k } => {
            let (d, _) = wigner_negativity(state, cfg)?;
            let (da, db) = nongaussianity_fock(*k);
            (Some(d), Some(da), Some(db))
        }
        _ => (None, None, None),
    };
    Ok(QuantifierRow {
        mandel_q: mandel,
        nonclassical_depth: depth,
        nonclassical_depth_unfloored: depth_unfloored,
        skew_info: skew,
        wigner_negativity: wigner,
        delta_a,
        delta_b,
    })
}
