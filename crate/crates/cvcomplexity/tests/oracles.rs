//! Independent numeric oracles for the quadrature pipeline.
//!
//! Everything in here deliberately avoids the adaptive Gauss–Kronrod engine:
//! fixed-step midpoint/Simpson grids, analytic Gaussian integrals, and
//! finite differences, re-deriving the same quantities along a second route.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cvcomplexity::quadrature::{integrate_plane, integrate_radial, QuadratureConfig};
use cvcomplexity::states::{validate, StateSpec};
use cvcomplexity::{wehrl_entropy, PhasePoint};

/// Plain fixed-step midpoint rule over a square, measure dxdy/π.
fn midpoint_plane<F: Fn(f64, f64) -> f64>(f: F, half: f64, n: usize) -> f64 {
    let step = 2.0 * half / n as f64;
    let mut sum = 0.0;
    for iy in 0..n {
        let y = -half + (iy as f64 + 0.5) * step;
        for ix in 0..n {
            let x = -half + (ix as f64 + 0.5) * step;
            sum += f(x, y);
        }
    }
    sum * step * step / std::f64::consts::PI
}

#[test]
fn entropy_against_fixed_grid_oracle() {
    // the adaptive engine and a 1600x1600 midpoint grid must agree
    let cfg = QuadratureConfig::default();
    let specs = [
        StateSpec::cat(C64::new(1.0, 0.0), std::f64::consts::PI / 2.0),
        StateSpec::fock(2),
        StateSpec::coherent_mixture(C64::new(0.8, 0.0)),
    ];
    for spec in specs {
        let state = validate(&spec).unwrap();
        let (adaptive, _) = wehrl_entropy(&state, &cfg).unwrap();
        let brute = midpoint_plane(
            |x, y| {
                let q = state.husimi_q(PhasePoint::new(x, y));
                if q < 1e-300 {
                    0.0
                } else {
                    -q * q.ln()
                }
            },
            14.0,
            1600,
        );
        assert!(
            (adaptive - brute).abs() < 5e-6,
            "{spec:?}: adaptive {adaptive} vs midpoint {brute}"
        );
    }
}

#[test]
fn plane_and_radial_integrators_agree() {
    // entropy integrand of a Fock state along both reductions
    let cfg = QuadratureConfig::default();
    let state = validate(&StateSpec::fock(3)).unwrap();
    let ent = |q: f64| if q < 1e-300 { 0.0 } else { -q * q.ln() };
    let (radial, er) = integrate_radial(
        |r| ent(state.husimi_q(PhasePoint::new(r, 0.0))),
        2.0,
        &cfg,
    )
    .unwrap();
    let (plane, ep) = integrate_plane(
        |x, y| ent(state.husimi_q(PhasePoint::new(x, y))),
        (0.0, 0.0),
        2.0,
        &cfg,
    )
    .unwrap();
    assert!(
        (radial - plane).abs() < 1e-9_f64.max(er + ep),
        "radial {radial} vs plane {plane}"
    );

    // off-center symmetry axis: coherent state about its displacement
    let beta = (1.1, -0.4);
    let state = validate(&StateSpec::coherent(C64::new(beta.0, beta.1))).unwrap();
    let (radial, er) = integrate_radial(
        |r| ent(state.husimi_q(PhasePoint::new(beta.0 + r, beta.1))),
        1.0,
        &cfg,
    )
    .unwrap();
    let (plane, ep) = integrate_plane(
        |x, y| ent(state.husimi_q(PhasePoint::new(x, y))),
        beta,
        1.0,
        &cfg,
    )
    .unwrap();
    assert!(
        (radial - plane).abs() < 1e-9_f64.max(er + ep),
        "coherent: radial {radial} vs plane {plane}"
    );
}

#[test]
fn error_estimate_is_conservative_on_gaussians() {
    // randomized anisotropic displaced Gaussians with known integrals:
    // the reported estimate must bound the true error almost always
    let cfg = QuadratureConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut covered = 0;
    let trials = 100;
    for _ in 0..trials {
        let a: f64 = rng.gen_range(0.2..3.0);
        let b: f64 = rng.gen_range(0.2..3.0);
        let x0: f64 = rng.gen_range(-1.5..1.5);
        let y0: f64 = rng.gen_range(-1.5..1.5);
        let amp: f64 = rng.gen_range(0.5..2.0);
        let exact = amp / (a * b).sqrt();
        let scale = (1.0 / a.min(b)).sqrt();
        let (value, err_est) = integrate_plane(
            |x: f64, y: f64| amp * (-a * (x - x0).powi(2) - b * (y - y0).powi(2)).exp(),
            (x0, y0),
            scale,
            &cfg,
        )
        .unwrap();
        // tail outside the box is part of the true error; keep a floor for
        // the exactly-zero-estimate case
        if (value - exact).abs() <= err_est.max(1e-13 * exact) {
            covered += 1;
        }
    }
    assert!(covered >= 99, "estimate covered only {covered}/{trials}");
}

#[test]
fn doubling_the_margin_is_negligible() {
    // tail-truncation adequacy at the default margin
    let base = QuadratureConfig::default();
    let wide = QuadratureConfig {
        radius_margin: 16.0,
        ..base
    };
    for spec in [
        StateSpec::thermal(1.2),
        StateSpec::cat(C64::new(1.5, 0.0), 0.0),
        StateSpec::photon_added_coherent(C64::new(1.0, 0.5)),
    ] {
        let state = validate(&spec).unwrap();
        let (s1, _) = wehrl_entropy(&state, &base).unwrap();
        let (s2, _) = wehrl_entropy(&state, &wide).unwrap();
        assert!(
            (s1 - s2).abs() <= base.target_rel_tol * s1.abs(),
            "{spec:?}: margin 8 gives {s1}, margin 16 gives {s2}"
        );
    }
}

#[test]
fn quasiprob_normalization_below_husimi_order() {
    // the convolution route must stay normalized: photon-added coherent at
    // s = -2 via numerical Gaussian smoothing of the Husimi function
    let cfg = QuadratureConfig {
        target_rel_tol: 1e-7,
        ..Default::default()
    };
    let state = validate(&StateSpec::photon_added_coherent(C64::new(0.5, 0.0))).unwrap();
    let s = -2.0;
    let (norm, _) = integrate_plane(
        |x, y| state.quasiprob_s(PhasePoint::new(x, y), s).unwrap(),
        (0.5, 0.0),
        3.5,
        &cfg,
    )
    .unwrap();
    assert!((norm - 1.0).abs() < 1e-6, "norm(W_s) = {norm}");
}

#[test]
fn fisher_gradient_route_against_finite_difference_probe() {
    // spot-check the assembled Fisher integrand (not just the gradient) by
    // rebuilding it from finite differences at scattered points
    let specs = [
        StateSpec::cat(C64::new(1.1, 0.4), 0.7),
        StateSpec::gaussian(0.4, 0.9, 0.8, C64::new(0.3, -0.2)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for spec in specs {
        let state = validate(&spec).unwrap();
        for _ in 0..25 {
            let p = PhasePoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let q = state.husimi_q(p);
            if q < 1e-12 {
                continue;
            }
            let (gx, gy) = state.husimi_grad(p);
            let (fx, fy) = state.husimi_grad_fd(p);
            let analytic = (gx * gx + gy * gy) / (4.0 * q);
            let probed = (fx * fx + fy * fy) / (4.0 * q);
            assert!(
                (analytic - probed).abs() <= 1e-6 * (1.0 + analytic),
                "{spec:?} at ({}, {}): {analytic} vs {probed}",
                p.x,
                p.y
            );
        }
    }
}
