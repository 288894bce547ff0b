//! Verification suites: invariance properties of the complexity quantifier,
//! reproduction of the quantifier table, and the energy-constrained Gaussian
//! optimum. Each check records its measured deviation against a pinned
//! tolerance.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::SeedableRng;
use serde::Serialize;

use crate::closed_form::{gaussian_closed, search_optimal_at_energy};
use crate::error::Result;
use crate::functionals::{complexity_via_quadrature, fisher_information};
use crate::quadrature::QuadratureConfig;
use crate::quantifiers::{
    mandel_q, nonclassical_depth, nongaussianity_fock, skew_info_nonclassicality,
    wigner_negativity,
};
use crate::sampling::random_fock_matrix_spec;
use crate::states::{validate, StateSpec};

/// Result of a single verification check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn new(name: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        let deviation = deviation.abs();
        Self {
            name: name.into(),
            deviation,
            tolerance,
            passed: deviation <= tolerance,
        }
    }
}

/// Render checks as text lines; returns true iff all passed.
pub fn render(checks: &[Check]) -> (String, bool) {
    let mut all = true;
    let mut out = String::new();
    for c in checks {
        all &= c.passed;
        out.push_str(&format!(
            "[{}] {}: deviation {:.3e} (tolerance {:.1e})\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.deviation,
            c.tolerance
        ));
    }
    (out, all)
}

fn quad_c(spec: &StateSpec, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(complexity_via_quadrature(&validate(spec)?, cfg)?.complexity)
}

/// Invariance suite: displacement, rotation, scaling, the isoperimetric lower
/// bound, and the pure/mixed Fisher dichotomy, all through the quadrature
/// pipeline.
pub fn propositions(cfg: &QuadratureConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // displacement invariance of a squeezed thermal state
    let base = quad_c(
        &StateSpec::gaussian(0.5, 0.8, PI / 5.0, C64::new(0.0, 0.0)),
        cfg,
    )?;
    let mut spread = 0.0f64;
    for xi in [C64::new(1.0, 1.0), C64::new(3.0, 0.0)] {
        let c = quad_c(&StateSpec::gaussian(0.5, 0.8, PI / 5.0, xi), cfg)?;
        spread = spread.max((c - base).abs());
    }
    checks.push(Check::new(
        "displacement invariance of C (gaussian, xi in {0, 1+i, 3})",
        spread,
        1e-7,
    ));

    // rotation invariance of a cat state
    let c0 = quad_c(&StateSpec::cat(C64::new(1.2, 0.0), PI / 3.0), cfg)?;
    let rot = C64::from_polar(1.2, 1.1);
    let c1 = quad_c(&StateSpec::cat(rot, PI / 3.0), cfg)?;
    checks.push(Check::new(
        "rotation invariance of C (cat, beta -> beta e^{i chi})",
        c1 - c0,
        1e-6,
    ));

    // uniform scaling: photon-added thermal against its Fock partner
    let c_pat = quad_c(&StateSpec::photon_added_thermal(2, 1.5), cfg)?;
    let c_fock = quad_c(&StateSpec::fock(2), cfg)?;
    checks.push(Check::new(
        "scaling invariance of C (photon-added thermal vs fock k=2)",
        c_pat - c_fock,
        1e-6,
    ));

    // isoperimetric bound on random mixed states
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut worst = f64::INFINITY;
    for _ in 0..20 {
        let spec = random_fock_matrix_spec(8, &mut rng);
        worst = worst.min(quad_c(&spec, cfg)?);
    }
    checks.push(Check::new(
        "isoperimetric bound C >= 1 (20 random mixed states, dim 8)",
        (1.0 - worst).max(0.0),
        1e-6,
    ));

    // pure states have unit Fisher information
    for spec in [StateSpec::fock(3), StateSpec::cat(C64::new(1.0, 0.0), PI / 2.0)] {
        let (i, _) = fisher_information(&validate(&spec)?, cfg)?;
        checks.push(Check::new(
            format!("pure-state fisher = 1 ({})", spec.family_name()),
            i - 1.0,
            1e-6,
        ));
    }

    // mixed states stay at or below the bound
    for spec in [
        StateSpec::thermal(1.3),
        StateSpec::coherent_mixture(C64::new(0.9, 0.0)),
    ] {
        let (i, _) = fisher_information(&validate(&spec)?, cfg)?;
        checks.push(Check::new(
            format!("mixed-state fisher <= 1 ({})", spec.family_name()),
            (i - 1.0).max(0.0),
            1e-8,
        ));
    }

    Ok(checks)
}

/// Quantifier-table suite: Fock rows k = 1..5 and a Gaussian parameter grid
/// against independently written closed-form expressions.
pub fn table2(cfg: &QuadratureConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    for k in 1..=5u32 {
        let state = validate(&StateSpec::fock(k))?;
        let kf = k as f64;
        checks.push(Check::new(
            format!("fock k={k}: mandel = -1"),
            mandel_q(&state)? + 1.0,
            1e-8,
        ));
        let (tau, _) = nonclassical_depth(&state)?;
        checks.push(Check::new(
            format!("fock k={k}: nonclassical depth = 1"),
            tau - 1.0,
            1e-8,
        ));
        checks.push(Check::new(
            format!("fock k={k}: skew information = k + 1/2"),
            skew_info_nonclassicality(&state)? - (kf + 0.5),
            1e-8,
        ));
        // exact small-integer powers as the independent route
        let expect_da = 0.5 * (1.0 + 1.0 / (2.0 * kf + 1.0))
            - kf.powi(k as i32) / (kf + 1.0).powi(k as i32 + 1);
        let expect_db = (kf + 1.0) * (kf + 1.0).ln() - kf * kf.ln();
        let (da, db) = nongaussianity_fock(k);
        checks.push(Check::new(
            format!("fock k={k}: hilbert-schmidt non-gaussianity"),
            da - expect_da,
            1e-8,
        ));
        checks.push(Check::new(
            format!("fock k={k}: relative-entropy non-gaussianity"),
            db - expect_db,
            1e-8,
        ));
    }

    // Gaussian grid, including displacement and angle dependence
    for (nbar, r, theta, xi) in [
        (0.0, 0.0, 0.0, C64::new(0.0, 0.0)),
        (0.5, 0.0, 0.0, C64::new(0.8, -0.4)),
        (0.5, 0.7, PI / 3.0, C64::new(1.0, 0.5)),
        (2.0, 1.2, 1.0, C64::new(0.0, 2.0)),
    ] {
        let state = validate(&StateSpec::gaussian(nbar, r, theta, xi))?;
        let label = format!("gaussian(nbar={nbar}, r={r}, theta={theta:.2}, xi={xi})");

        if state.mean_photon() > 0.0 {
            let nh: f64 = nbar + 0.5;
            let mix = xi * r.cosh() + xi.conj() * C64::from_polar(1.0, theta) * r.sinh();
            let expect = (nh * nh * (4.0 * r).cosh() + 2.0 * nh * mix.norm_sqr() - 0.25)
                / (nh * (2.0 * r).cosh() + xi.norm_sqr() - 0.5)
                - 1.0;
            checks.push(Check::new(
                format!("{label}: mandel moment form"),
                mandel_q(&state)? - expect,
                1e-8,
            ));
        }

        let t = r.tanh();
        let expect_depth = (((nbar + 1.0) * t - nbar) / (1.0 + t)).max(0.0);
        checks.push(Check::new(
            format!("{label}: nonclassical depth"),
            nonclassical_depth(&state)?.0 - expect_depth,
            1e-8,
        ));

        let expect_skew = (0.5 + nbar - (nbar * (nbar + 1.0)).sqrt()) * (2.0 * r).cosh();
        checks.push(Check::new(
            format!("{label}: skew information"),
            skew_info_nonclassicality(&state)? - expect_skew,
            1e-8,
        ));

        let (neg, _) = wigner_negativity(&state, cfg)?;
        checks.push(Check::new(format!("{label}: wigner negativity = 0"), neg, 1e-8));

        let (s_cl, i_cl, c_cl) = gaussian_closed(nbar, r);
        let rep = complexity_via_quadrature(&state, cfg)?;
        let dev = (rep.entropy - s_cl)
            .abs()
            .max((rep.fisher - i_cl).abs())
            .max((rep.complexity - c_cl).abs());
        checks.push(Check::new(
            format!("{label}: quadrature matches closed complexity"),
            dev,
            1e-6,
        ));
    }

    // displaced thermal: generic moment path against the closed form
    let xi = C64::new(0.7, 0.3);
    let state = validate(&StateSpec::gaussian(0.8, 0.0, 0.0, xi))?;
    let closed = mandel_q(&state)?;
    let generic = mandel_q(&validate(
        &state.to_fock_matrix_auto(1e-12)?.into_spec(),
    )?)?;
    checks.push(Check::new(
        "mandel generic fock-moment path (displaced thermal)",
        generic - closed,
        1e-6,
    ));

    Ok(checks)
}

/// Energy-constrained optimum: grid-plus-refinement search against the
/// squeezed-vacuum closed form.
pub fn prop4(e: f64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let found = search_optimal_at_energy(e, 41, 4);
    let r_star = (e.sqrt() + (e + 1.0).sqrt()).ln();
    checks.push(Check::new(
        format!("E={e}: max complexity = sqrt(E+1)"),
        found.c_max - (e + 1.0).sqrt(),
        1e-4,
    ));
    checks.push(Check::new(
        format!("E={e}: argmax thermal photon number = 0"),
        found.nbar,
        1e-3,
    ));
    checks.push(Check::new(
        format!("E={e}: argmax squeezing = asinh(sqrt(E))"),
        found.r - r_star,
        1e-3,
    ));
    checks.push(Check::new(
        format!("E={e}: argmax displacement = 0"),
        found.xi_abs_sq,
        1e-3,
    ));
    checks.push(Check::new(
        format!("E={e}: minimum on the thermal slice = 1"),
        found.c_min_thermal_slice - 1.0,
        1e-9,
    ));
    Ok(checks)
}
