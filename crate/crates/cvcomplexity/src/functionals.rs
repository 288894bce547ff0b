//! The complexity quantifier and its ingredients.
//!
//! For a state with phase-space density W (the Husimi function at ordering
//! s = −1, or an admissible s-ordered distribution):
//!
//! * Wehrl entropy      S = −∫ W ln W d²α/π
//! * Fisher information I = ¼ ∫ ‖∇W‖²/W d²α/π
//! * complexity         C = e^{S−1} · I
//!
//! C ≥ 1 for every state, with equality exactly on displaced thermal states;
//! pure states have I = 1. Radially symmetric states integrate on the radial
//! fast path; Gaussian-family states route to the closed forms unless the
//! quadrature pipeline is forced explicitly.

use serde::{Deserialize, Serialize};

use crate::closed_form::s_gaussian_closed;
use crate::error::Result;
use crate::phasespace::Dist;
use crate::quadrature::{integrate_plane, integrate_radial, QuadratureConfig};
use crate::states::{CheckedState, Kind};

/// How a report was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Quadrature,
}

/// Entropy, Fisher information, and complexity of one state at one ordering.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexityReport {
    /// S (Wehrl entropy at s = −1, otherwise the s-ordered entropy).
    pub entropy: f64,
    /// I ∈ (0, 1] at s = −1.
    pub fisher: f64,
    /// C = e^{entropy − 1} · fisher, exactly as computed.
    pub complexity: f64,
    /// Ordering parameter (−1 for the Husimi case).
    pub s: f64,
    pub err_entropy: f64,
    pub err_fisher: f64,
    pub method: Method,
}

impl ComplexityReport {
    fn assemble(
        entropy: (f64, f64),
        fisher: (f64, f64),
        s: f64,
        method: Method,
    ) -> Self {
        Self {
            entropy: entropy.0,
            fisher: fisher.0,
            complexity: (entropy.0 - 1.0).exp() * fisher.0,
            s,
            err_entropy: entropy.1,
            err_fisher: fisher.1,
            method,
        }
    }
}

fn entropy_term(w: f64, floor: f64) -> f64 {
    // 0·ln 0 = 0 convention
    if w <= floor {
        0.0
    } else {
        -w * w.ln()
    }
}

fn fisher_term(w: f64, gx: f64, gy: f64, floor: f64) -> f64 {
    // the integrand vanishes with W except at isolated removable points
    if w <= floor {
        0.0
    } else {
        0.25 * (gx * gx + gy * gy) / w
    }
}

fn entropy_of(dist: &Dist, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    let floor = cfg.floor_eps;
    if dist.is_radial() {
        integrate_radial(|r| entropy_term(dist.radial_value(r), floor), dist.scale(), cfg)
    } else {
        integrate_plane(
            |x, y| entropy_term(dist.value(x, y), floor),
            dist.center(),
            dist.scale(),
            cfg,
        )
    }
}

fn fisher_of(dist: &Dist, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    let floor = cfg.floor_eps;
    if dist.is_radial() {
        integrate_radial(
            |r| {
                let (w, dw) = dist.radial_value_deriv(r);
                fisher_term(w, dw, 0.0, floor)
            },
            dist.scale(),
            cfg,
        )
    } else {
        integrate_plane(
            |x, y| {
                let (w, gx, gy) = dist.value_grad(x, y);
                fisher_term(w, gx, gy, floor)
            },
            dist.center(),
            dist.scale(),
            cfg,
        )
    }
}

/// Wehrl entropy S_W = −∫ Q ln Q d²α/π with error estimate.
pub fn wehrl_entropy(state: &CheckedState, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    entropy_of(&Dist::husimi(state), cfg)
}

/// Fisher information I = ¼∫ ‖∇Q‖²/Q d²α/π with error estimate.
pub fn fisher_information(state: &CheckedState, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    fisher_of(&Dist::husimi(state), cfg)
}

/// Entropy of the s-ordered distribution.
pub fn s_wehrl_entropy(
    state: &CheckedState,
    s: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    entropy_of(&Dist::new(state, s)?, cfg)
}

/// Fisher information of the s-ordered distribution.
pub fn s_fisher_information(
    state: &CheckedState,
    s: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    fisher_of(&Dist::new(state, s)?, cfg)
}

/// Complexity report at the Husimi ordering. Gaussian-family states use the
/// closed forms; everything else is integrated numerically.
pub fn complexity(state: &CheckedState, cfg: &QuadratureConfig) -> Result<ComplexityReport> {
    s_complexity(state, -1.0, cfg)
}

/// Complexity report forced through the quadrature pipeline (oracle checks).
pub fn complexity_via_quadrature(
    state: &CheckedState,
    cfg: &QuadratureConfig,
) -> Result<ComplexityReport> {
    s_complexity_via_quadrature(state, -1.0, cfg)
}

/// s-ordered complexity report C_s = e^{S_s − 1} I_s.
pub fn s_complexity(
    state: &CheckedState,
    s: f64,
    cfg: &QuadratureConfig,
) -> Result<ComplexityReport> {
    if let Kind::Gaussian { nbar, r, .. } = state.kind() {
        let (entropy, fisher, _) = s_gaussian_closed(*nbar, *r, s)?;
        return Ok(ComplexityReport::assemble(
            (entropy, 0.0),
            (fisher, 0.0),
            s,
            Method::ClosedForm,
        ));
    }
    s_complexity_via_quadrature(state, s, cfg)
}

/// s-ordered complexity report, never consulting closed forms.
pub fn s_complexity_via_quadrature(
    state: &CheckedState,
    s: f64,
    cfg: &QuadratureConfig,
) -> Result<ComplexityReport> {
    let dist = Dist::new(state, s)?;
    let entropy = entropy_of(&dist, cfg)?;
    let fisher = fisher_of(&dist, cfg)?;
    Ok(ComplexityReport::assemble(
        entropy,
        fisher,
        s,
        Method::Quadrature,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::EULER_GAMMA;
    use crate::states::{validate, StateSpec};
    use approx::assert_relative_eq;
    use num_complex::Complex64 as C64;

    fn st(s: StateSpec) -> CheckedState {
        validate(&s).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn coherent_state_baseline() {
        let state = st(StateSpec::coherent(C64::new(0.9, -0.3)));
        let (s, _) = wehrl_entropy(&state, &cfg()).unwrap();
        assert_relative_eq!(s, 1.0, epsilon = 1e-9);
        let (i, _) = fisher_information(&state, &cfg()).unwrap();
        assert_relative_eq!(i, 1.0, epsilon = 1e-9);
        let rep = complexity(&state, &cfg()).unwrap();
        assert_relative_eq!(rep.complexity, 1.0, epsilon = 1e-8);
        assert_eq!(rep.method, Method::Quadrature);
    }

    #[test]
    fn fock_entropy_matches_digamma_formula() {
        use crate::closed_form::fock_closed;
        for k in [0u32, 1, 2, 5] {
            let state = st(StateSpec::fock(k));
            let (s, _) = wehrl_entropy(&state, &cfg()).unwrap();
            let (s_closed, _) = fock_closed(k);
            assert_relative_eq!(s, s_closed, max_relative = 1e-8);
        }
        // k = 1 explicitly: S = 1 + γ
        let (s, _) = wehrl_entropy(&st(StateSpec::fock(1)), &cfg()).unwrap();
        assert_relative_eq!(s, 1.0 + EULER_GAMMA, max_relative = 1e-9);
    }

    #[test]
    fn thermal_entropy_value() {
        // S_W(thermal nbar=1) = 1 + ln 2
        let state = st(StateSpec::thermal(1.0));
        let (s, err) = wehrl_entropy(&state, &cfg()).unwrap();
        assert!((s - (1.0 + std::f64::consts::LN_2)).abs() <= 1e-8, "S = {s}");
        assert!(err < 1e-8);
    }

    #[test]
    fn checked_states_shared_across_threads() {
        // reports from concurrent workers on one shared state are bitwise
        // equal to the sequential result
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<CheckedState>();

        let state = std::sync::Arc::new(st(StateSpec::fock(2)));
        let cfg = cfg();
        let sequential = complexity(&state, &cfg).unwrap().complexity;
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let state = state.clone();
                std::thread::spawn(move || {
                    complexity(&state, &QuadratureConfig::default())
                        .unwrap()
                        .complexity
                })
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap().to_bits(), sequential.to_bits());
        }
    }

    #[test]
    fn thermal_fisher_is_inverse_temperature() {
        for nbar in [0.5, 1.0, 4.0] {
            let state = st(StateSpec::thermal(nbar));
            let (i, _) = fisher_information(&state, &cfg()).unwrap();
            assert_relative_eq!(i, 1.0 / (nbar + 1.0), max_relative = 1e-8);
        }
    }

    #[test]
    fn gaussian_routes_to_closed_form() {
        let state = st(StateSpec::gaussian(0.6, 1.1, 0.4, C64::new(1.0, 1.0)));
        let rep = complexity(&state, &cfg()).unwrap();
        assert_eq!(rep.method, Method::ClosedForm);
        let (s, i, _) = crate::closed_form::gaussian_closed(0.6, 1.1);
        assert_eq!(rep.entropy.to_bits(), s.to_bits());
        assert_eq!(rep.fisher.to_bits(), i.to_bits());
        // report invariant: complexity is assembled from its own fields
        assert_eq!(
            rep.complexity.to_bits(),
            ((rep.entropy - 1.0).exp() * rep.fisher).to_bits()
        );
    }

    #[test]
    fn gaussian_quadrature_agrees_with_closed_form() {
        let state = st(StateSpec::gaussian(1.0, 1.0, std::f64::consts::PI / 3.0,
            C64::new(1.0, 0.5)));
        let rep = complexity_via_quadrature(&state, &cfg()).unwrap();
        // frozen scipy dblquad reference for this parameter point
        assert_relative_eq!(rep.entropy, 2.0485973548, max_relative = 1e-8);
        assert_relative_eq!(rep.fisher, 0.7543991272, max_relative = 1e-7);
        assert_relative_eq!(rep.complexity, 2.1527877931, max_relative = 1e-7);
    }

    #[test]
    fn photon_added_thermal_fisher_scales() {
        // I(PAT{k, n̄}) = 1/(n̄+1) by the uniform-scaling property
        let (k, nbar) = (2u32, 1.5);
        let state = st(StateSpec::photon_added_thermal(k, nbar));
        let (i, _) = fisher_information(&state, &cfg()).unwrap();
        assert_relative_eq!(i, 1.0 / (nbar + 1.0), max_relative = 1e-7);
    }

    #[test]
    fn thermal_s_complexity_stays_one() {
        let state = st(StateSpec::thermal(1.0));
        for s in [-3.0, -1.0, 0.0, 0.5] {
            let rep = s_complexity(&state, s, &cfg()).unwrap();
            assert_relative_eq!(rep.complexity, 1.0, epsilon = 1e-7);
            assert_eq!(rep.method, Method::Quadrature);
        }
    }

    #[test]
    fn inadmissible_ordering_refused() {
        let state = st(StateSpec::fock(2));
        assert!(s_complexity(&state, 0.0, &cfg()).is_err());
        let state = st(StateSpec::cat(C64::new(1.0, 0.0), 0.0));
        assert!(s_complexity(&state, -0.5, &cfg()).is_err());
    }

    #[test]
    fn fock_s_complexity_against_independent_values() {
        // frozen scipy quad references (radial Laguerre form)
        let cases = [
            (1u32, -2.0, 1.12265208),
            (2, -2.0, 1.41254721),
            (3, -5.0, 1.11818014),
            (4, -20.0, 1.00479722),
        ];
        for (k, s, expect) in cases {
            let rep = s_complexity(&st(StateSpec::fock(k)), s, &cfg()).unwrap();
            assert_relative_eq!(rep.complexity, expect, max_relative = 1e-6);
        }
    }

    #[test]
    fn mixture_fisher_below_one() {
        // frozen scipy dblquad references
        let state = st(StateSpec::coherent_mixture(C64::new(0.5, 0.0)));
        let (i, _) = fisher_information(&state, &cfg()).unwrap();
        assert_relative_eq!(i, 0.83752835, max_relative = 1e-6);
        let state = st(StateSpec::coherent_mixture(C64::new(1.0, 0.0)));
        let rep = complexity(&state, &cfg()).unwrap();
        assert_relative_eq!(rep.fisher, 0.76898178, max_relative = 1e-6);
        assert_relative_eq!(rep.complexity, 1.26792807, max_relative = 1e-6);
    }

    #[test]
    fn convolved_matrix_state_matches_laguerre_route() {
        // |1⟩ presented as a generic matrix: s < −1 goes through the
        // numerical convolution; the Fock family uses the closed form
        let fock = st(StateSpec::fock(1));
        let generic = st(fock.to_fock_matrix(12).unwrap().into_spec());
        let s = -2.0;
        let direct = s_complexity(&fock, s, &cfg()).unwrap();
        let conv = s_complexity(&generic, s, &cfg()).unwrap();
        assert_relative_eq!(conv.complexity, direct.complexity, max_relative = 1e-5);
        assert_relative_eq!(conv.complexity, 1.12265208, max_relative = 1e-5);
    }
}
