//! Phase-space distributions: the Husimi function Q(α|ρ) = ⟨α|ρ|α⟩ with its
//! analytic gradient, and the s-ordered quasiprobabilities W_s(α|ρ) for the
//! (state, s) combinations on which W_s is pointwise nonnegative.
//!
//! Everything is normalized against the measure d²α/π. Ordering conventions:
//! s = −1 is the Husimi function, s = 0 the Wigner function, s = 1 the
//! P-function. Admissibility is state dependent:
//!
//! * classical families (coherent, thermal, phase-averaged coherent, coherent
//!   mixture): s < 1, with Gaussian/Bessel closed forms;
//! * Gaussian states: s < 1 − 2τ_m, where the quasiprobability is again a
//!   Gaussian;
//! * Fock states: s ≤ −1, with a Laguerre closed form below the Husimi order;
//! * photon-added, cat, and generic matrix states: s ≤ −1, where W_s for
//!   s < −1 is the Husimi function smoothed by a Gaussian kernel of variance
//!   (−1−s)/4 per axis — evaluated as a real-space convolution on a fixed
//!   composite Kronrod grid (no Fourier transforms anywhere).

use num_complex::Complex64 as C64;

use crate::closed_form::GaussianMoments;
use crate::error::{Error, Result};
use crate::quadrature::{GK_NODES, GK_WEIGHTS_K};
use crate::special::{bessel_i0e, bessel_i1e, laguerre_deriv, laguerre_pair, ln_factorial};
use crate::states::{CheckedState, FockDensity, Kind};

/// Point α = x + i y in the phase plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub x: f64,
    pub y: f64,
}

impl PhasePoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
    pub fn to_complex(self) -> C64 {
        C64::new(self.x, self.y)
    }
}

impl From<C64> for PhasePoint {
    fn from(z: C64) -> Self {
        Self { x: z.re, y: z.im }
    }
}

/// Admissibility region for the ordering parameter of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderingBound {
    /// s strictly below the bound.
    Below(f64),
    /// s at or below the bound.
    AtOrBelow(f64),
}

impl OrderingBound {
    pub fn admits(&self, s: f64) -> bool {
        match *self {
            OrderingBound::Below(b) => s < b,
            OrderingBound::AtOrBelow(b) => s <= b,
        }
    }

    pub fn requirement(&self) -> String {
        match *self {
            OrderingBound::Below(b) => format!("s < {b}"),
            OrderingBound::AtOrBelow(b) => format!("s <= {b}"),
        }
    }
}

impl CheckedState {
    /// Husimi function Q(α|ρ) ∈ [0, 1].
    pub fn husimi_q(&self, p: PhasePoint) -> f64 {
        husimi(self.kind(), p.x, p.y)
    }

    /// Analytic gradient (∂Q/∂x, ∂Q/∂y).
    pub fn husimi_grad(&self, p: PhasePoint) -> (f64, f64) {
        let (_, gx, gy) = husimi_grad(self.kind(), p.x, p.y);
        (gx, gy)
    }

    /// Central finite-difference gradient with step h = 1e-5·(1+|α|).
    /// Exists for cross-validation of the analytic gradient only.
    pub fn husimi_grad_fd(&self, p: PhasePoint) -> (f64, f64) {
        let h = 1e-5 * (1.0 + (p.x * p.x + p.y * p.y).sqrt());
        let q = |x: f64, y: f64| husimi(self.kind(), x, y);
        (
            (q(p.x + h, p.y) - q(p.x - h, p.y)) / (2.0 * h),
            (q(p.x, p.y + h) - q(p.x, p.y - h)) / (2.0 * h),
        )
    }

    /// State-dependent admissibility region for the ordering parameter.
    pub fn ordering_bound(&self) -> OrderingBound {
        match self.kind() {
            Kind::Coherent { .. }
            | Kind::Thermal { .. }
            | Kind::CoherentMixture { .. }
            | Kind::PhaseAveragedCoherent { .. } => OrderingBound::Below(1.0),
            Kind::Gaussian { nbar, r, .. } => {
                // 1 - 2*max(0, tau_m) = min(1, (2n̄+1)e^{-2r})
                OrderingBound::Below(((2.0 * nbar + 1.0) * (-2.0 * r).exp()).min(1.0))
            }
            Kind::Fock { .. }
            | Kind::PhotonAddedThermal { .. }
            | Kind::PhotonAddedCoherent { .. }
            | Kind::Cat { .. }
            | Kind::FockMatrix(_) => OrderingBound::AtOrBelow(-1.0),
        }
    }

    /// True iff W_s is guaranteed pointwise nonnegative and implemented for
    /// this state. s = −1 (the Husimi case) is always admissible.
    pub fn s_admissible(&self, s: f64) -> bool {
        s.is_finite() && (s == -1.0 || self.ordering_bound().admits(s))
    }

    /// s-ordered quasiprobability W_s(α|ρ) ≥ 0, measure d²α/π.
    pub fn quasiprob_s(&self, p: PhasePoint, s: f64) -> Result<f64> {
        let dist = Dist::new(self, s)?;
        Ok(dist.value(p.x, p.y))
    }
}

/// Evaluator for one (state, ordering) pair, used by all functionals.
pub(crate) struct Dist<'a> {
    state: &'a CheckedState,
    s: f64,
}

impl<'a> Dist<'a> {
    pub fn new(state: &'a CheckedState, s: f64) -> Result<Self> {
        if !state.s_admissible(s) {
            return Err(Error::OrderingNotAdmissible {
                s,
                requirement: state.ordering_bound().requirement(),
            });
        }
        Ok(Self { state, s })
    }

    pub fn husimi(state: &'a CheckedState) -> Self {
        Self { state, s: -1.0 }
    }

    fn uses_husimi(&self) -> bool {
        self.s == -1.0
    }

    fn uses_convolution(&self) -> bool {
        self.s < -1.0
            && matches!(
                self.state.kind(),
                Kind::PhotonAddedThermal { .. }
                    | Kind::PhotonAddedCoherent { .. }
                    | Kind::Cat { .. }
                    | Kind::FockMatrix(_)
            )
    }

    /// Whether the distribution depends on |α − center| only.
    pub fn is_radial(&self) -> bool {
        match self.state.kind() {
            Kind::Thermal { .. }
            | Kind::Fock { .. }
            | Kind::PhotonAddedThermal { .. }
            | Kind::PhaseAveragedCoherent { .. }
            | Kind::Coherent { .. } => true,
            Kind::Gaussian { r, .. } => *r == 0.0,
            Kind::FockMatrix(f) => f.diagonal,
            _ => false,
        }
    }

    pub fn center(&self) -> (f64, f64) {
        match self.state.kind() {
            Kind::Coherent { beta } => (beta.re, beta.im),
            Kind::Gaussian { xi, .. } => (xi.re, xi.im),
            Kind::PhotonAddedCoherent { beta } => (beta.re, beta.im),
            _ => (0.0, 0.0),
        }
    }

    /// Spread of the distribution in units where a coherent-state Husimi
    /// function has scale 1.
    pub fn scale(&self) -> f64 {
        // width factor of the s-ordered single-bump profiles; 1 at s = -1
        let width = ((1.0 - self.s) / 2.0).sqrt();
        match self.state.kind() {
            Kind::Coherent { .. } => width,
            // exact variance of the thermal profile at this ordering
            Kind::Thermal { nbar } => ((2.0 * nbar + 1.0 - self.s) / 2.0).sqrt(),
            Kind::Gaussian { nbar, r, .. } => {
                // widest principal axis from the moment set, normalized so
                // the thermal reduction reproduces sqrt(n̄ + 1)
                let m = GaussianMoments::ordered(*nbar, *r, self.s);
                (2.0 * m.delta / (m.a - 2.0 * m.b)).sqrt().max(1e-3)
            }
            Kind::Fock { k } => (*k as f64 + 1.0).sqrt() * width,
            Kind::PhotonAddedThermal { k, nbar } => {
                let base = ((*k as f64 + 1.0) * (nbar + 1.0)).sqrt();
                if self.uses_convolution() {
                    base + ((-1.0 - self.s) / 2.0).sqrt()
                } else {
                    base
                }
            }
            Kind::PhotonAddedCoherent { beta } | Kind::Cat { beta, .. } => {
                let base = beta.norm() + 2.0;
                if self.uses_convolution() {
                    base + ((-1.0 - self.s) / 2.0).sqrt()
                } else {
                    base
                }
            }
            Kind::CoherentMixture { beta } => (beta.norm() + 2.0) * width,
            Kind::PhaseAveragedCoherent { beta_mod } => (beta_mod + 2.0) * width,
            Kind::FockMatrix(f) => {
                let base = (0.5 * (f.dim as f64).sqrt()).max(1.0);
                if self.uses_convolution() {
                    base + ((-1.0 - self.s) / 2.0).sqrt()
                } else {
                    base
                }
            }
        }
    }

    pub fn value(&self, x: f64, y: f64) -> f64 {
        if self.uses_husimi() {
            husimi(self.state.kind(), x, y)
        } else if self.uses_convolution() {
            self.convolve(x, y).0
        } else {
            ws_closed(self.state.kind(), x, y, self.s)
        }
    }

    pub fn value_grad(&self, x: f64, y: f64) -> (f64, f64, f64) {
        if self.uses_husimi() {
            husimi_grad(self.state.kind(), x, y)
        } else if self.uses_convolution() {
            self.convolve(x, y)
        } else {
            ws_closed_grad(self.state.kind(), x, y, self.s)
        }
    }

    /// Value at radius r from the center; requires [`Self::is_radial`].
    pub fn radial_value(&self, r: f64) -> f64 {
        debug_assert!(self.is_radial());
        let (cx, cy) = self.center();
        self.value(cx + r, cy)
    }

    /// (value, d/dr) at radius r from the center; requires [`Self::is_radial`].
    pub fn radial_value_deriv(&self, r: f64) -> (f64, f64) {
        debug_assert!(self.is_radial());
        if self.uses_husimi() {
            if let Some(vd) = husimi_radial_deriv(self.state.kind(), r) {
                return vd;
            }
        } else if !self.uses_convolution() {
            if let Some(vd) = ws_radial_deriv(self.state.kind(), r, self.s) {
                return vd;
            }
        }
        // convolution path: gradient along +x at (r, 0) is the radial derivative
        let (cx, cy) = self.center();
        let (v, gx, _) = self.value_grad(cx + r, cy);
        (v, gx)
    }

    /// Gaussian-kernel convolution of the Husimi function, computed together
    /// with its gradient; used for s < −1 on states without closed forms.
    fn convolve(&self, x: f64, y: f64) -> (f64, f64, f64) {
        let t = -1.0 - self.s;
        debug_assert!(t > 0.0);
        let kernel_half = 6.0 * (t / 2.0).sqrt();
        let husimi_scale = Dist::husimi(self.state).scale();
        let (cx, cy) = self.center();
        let support_half = 8.0 * husimi_scale + 1.0;

        // integrand support = kernel box ∩ Husimi support box
        let x0 = (x - kernel_half).max(cx - support_half);
        let x1 = (x + kernel_half).min(cx + support_half);
        let y0 = (y - kernel_half).max(cy - support_half);
        let y1 = (y + kernel_half).min(cy + support_half);
        if x0 >= x1 || y0 >= y1 {
            return (0.0, 0.0, 0.0);
        }

        // fixed composite rule resolving both the kernel width and the
        // unit-width features of the Husimi function
        let panel = 1.5 * (0.5 * t.sqrt()).min(0.8);
        let nx = (((x1 - x0) / panel).ceil() as usize).clamp(1, 48);
        let ny = (((y1 - y0) / panel).ceil() as usize).clamp(1, 48);
        let hx = 0.5 * (x1 - x0) / nx as f64;
        let hy = 0.5 * (y1 - y0) / ny as f64;
        let norm = 2.0 / t;
        let kind = self.state.kind();

        let mut acc = [0.0f64; 3];
        for iy in 0..ny {
            let pcy = y0 + (2 * iy + 1) as f64 * hy;
            for ix in 0..nx {
                let pcx = x0 + (2 * ix + 1) as f64 * hx;
                let mut p = [0.0f64; 3];
                for (j, nyj) in GK_NODES.iter().enumerate() {
                    let by = pcy + hy * nyj;
                    for (i, nxi) in GK_NODES.iter().enumerate() {
                        let bx = pcx + hx * nxi;
                        let q = husimi(kind, bx, by);
                        if q == 0.0 {
                            continue;
                        }
                        let dx = x - bx;
                        let dy = y - by;
                        let k = norm * (-2.0 * (dx * dx + dy * dy) / t).exp();
                        let w = GK_WEIGHTS_K[i] * GK_WEIGHTS_K[j] * q * k;
                        p[0] += w;
                        p[1] += w * (-4.0 * dx / t);
                        p[2] += w * (-4.0 * dy / t);
                    }
                }
                let scale = hx * hy / std::f64::consts::PI;
                acc[0] += p[0] * scale;
                acc[1] += p[1] * scale;
                acc[2] += p[2] * scale;
            }
        }
        (acc[0], acc[1], acc[2])
    }
}

// ---------------------------------------------------------------------------
// Husimi functions
// ---------------------------------------------------------------------------

fn husimi(kind: &Kind, x: f64, y: f64) -> f64 {
    match kind {
        Kind::Coherent { beta } => {
            let dx = x - beta.re;
            let dy = y - beta.im;
            (-(dx * dx + dy * dy)).exp()
        }
        Kind::Thermal { nbar } => {
            let c = 1.0 / (nbar + 1.0);
            c * (-c * (x * x + y * y)).exp()
        }
        Kind::Fock { k } => fock_husimi(*k, x * x + y * y),
        Kind::Gaussian { nbar, r, theta, xi } => {
            let m = GaussianMoments::husimi(*nbar, *r);
            gaussian_value(&m, *theta, *xi, x, y)
        }
        Kind::PhotonAddedThermal { k, nbar } => {
            let u = x * x + y * y;
            let np1 = nbar + 1.0;
            if u == 0.0 {
                return 0.0;
            }
            (*k as f64 * u.ln() - u / np1
                - ln_factorial(*k as u64)
                - (*k as f64 + 1.0) * np1.ln())
            .exp()
        }
        Kind::PhotonAddedCoherent { beta } => {
            let dx = x - beta.re;
            let dy = y - beta.im;
            (x * x + y * y) / (1.0 + beta.norm_sqr()) * (-(dx * dx + dy * dy)).exp()
        }
        Kind::Cat { beta, phi, norm_sq } => {
            let (e1, e2, e0, ph) = cat_pieces(*beta, *phi, x, y);
            ((e1 + e2) + 2.0 * e0 * ph.cos()) / norm_sq
        }
        Kind::CoherentMixture { beta } => {
            let d1 = (x - beta.re).powi(2) + (y - beta.im).powi(2);
            let d2 = (x + beta.re).powi(2) + (y + beta.im).powi(2);
            0.5 * ((-d1).exp() + (-d2).exp())
        }
        Kind::PhaseAveragedCoherent { beta_mod } => {
            let r = (x * x + y * y).sqrt();
            let z = 2.0 * beta_mod * r;
            (-(r - beta_mod).powi(2)).exp() * bessel_i0e(z)
        }
        Kind::FockMatrix(f) => fock_matrix_eval(f, x, y, false).0,
    }
}

/// (Q, ∂Q/∂x, ∂Q/∂y).
fn husimi_grad(kind: &Kind, x: f64, y: f64) -> (f64, f64, f64) {
    match kind {
        Kind::Coherent { beta } => {
            let q = husimi(kind, x, y);
            (q, -2.0 * (x - beta.re) * q, -2.0 * (y - beta.im) * q)
        }
        Kind::Thermal { nbar } => {
            let q = husimi(kind, x, y);
            let c = 2.0 / (nbar + 1.0);
            (q, -c * x * q, -c * y * q)
        }
        Kind::Fock { k } => {
            let u = x * x + y * y;
            let (q, dq_du) = fock_husimi_du(*k, u);
            (q, 2.0 * x * dq_du, 2.0 * y * dq_du)
        }
        Kind::Gaussian { nbar, r, theta, xi } => {
            let m = GaussianMoments::husimi(*nbar, *r);
            gaussian_value_grad(&m, *theta, *xi, x, y)
        }
        Kind::PhotonAddedThermal { k, nbar } => {
            let u = x * x + y * y;
            let (q, dq_du) = pat_husimi_du(*k, *nbar, u);
            (q, 2.0 * x * dq_du, 2.0 * y * dq_du)
        }
        Kind::PhotonAddedCoherent { beta } => {
            let dx = x - beta.re;
            let dy = y - beta.im;
            let u = x * x + y * y;
            let c = 1.0 / (1.0 + beta.norm_sqr());
            let e = (-(dx * dx + dy * dy)).exp();
            let q = c * u * e;
            (
                q,
                c * e * 2.0 * (x - u * dx),
                c * e * 2.0 * (y - u * dy),
            )
        }
        Kind::Cat { beta, phi, norm_sq } => {
            let (e1, e2, e0, ph) = cat_pieces(*beta, *phi, x, y);
            let (sin_ph, cos_ph) = ph.sin_cos();
            let q = ((e1 + e2) + 2.0 * e0 * cos_ph) / norm_sq;
            let gx = (-2.0 * (x - beta.re) * e1 - 2.0 * (x + beta.re) * e2
                + 2.0 * e0 * (-2.0 * x * cos_ph + 2.0 * beta.im * sin_ph))
                / norm_sq;
            let gy = (-2.0 * (y - beta.im) * e1 - 2.0 * (y + beta.im) * e2
                + 2.0 * e0 * (-2.0 * y * cos_ph - 2.0 * beta.re * sin_ph))
                / norm_sq;
            (q, gx, gy)
        }
        Kind::CoherentMixture { beta } => {
            let e1 = (-((x - beta.re).powi(2) + (y - beta.im).powi(2))).exp();
            let e2 = (-((x + beta.re).powi(2) + (y + beta.im).powi(2))).exp();
            let q = 0.5 * (e1 + e2);
            let gx = -(x - beta.re) * e1 - (x + beta.re) * e2;
            let gy = -(y - beta.im) * e1 - (y + beta.im) * e2;
            (q, gx, gy)
        }
        Kind::PhaseAveragedCoherent { beta_mod } => {
            let r = (x * x + y * y).sqrt();
            let (q, dq_dr) = phase_averaged_radial(*beta_mod, r, 1.0);
            if r < 1e-150 {
                (q, 0.0, 0.0)
            } else {
                (q, dq_dr * x / r, dq_dr * y / r)
            }
        }
        Kind::FockMatrix(f) => fock_matrix_eval(f, x, y, true),
    }
}

/// (Q, dQ/dr) for radially symmetric Husimi functions, None when not radial.
fn husimi_radial_deriv(kind: &Kind, r: f64) -> Option<(f64, f64)> {
    let u = r * r;
    match kind {
        Kind::Coherent { .. } => {
            let q = (-u).exp();
            Some((q, -2.0 * r * q))
        }
        Kind::Thermal { nbar } => {
            let c = 1.0 / (nbar + 1.0);
            let q = c * (-c * u).exp();
            Some((q, -2.0 * c * r * q))
        }
        Kind::Fock { k } => {
            let (q, dq_du) = fock_husimi_du(*k, u);
            Some((q, 2.0 * r * dq_du))
        }
        Kind::Gaussian { nbar, r: sq, .. } if *sq == 0.0 => {
            let c = 1.0 / (nbar + 1.0);
            let q = c * (-c * u).exp();
            Some((q, -2.0 * c * r * q))
        }
        Kind::PhotonAddedThermal { k, nbar } => {
            let (q, dq_du) = pat_husimi_du(*k, *nbar, u);
            Some((q, 2.0 * r * dq_du))
        }
        Kind::PhaseAveragedCoherent { beta_mod } => Some(phase_averaged_radial(*beta_mod, r, 1.0)),
        Kind::FockMatrix(f) if f.diagonal => Some(fock_matrix_radial(f, r)),
        _ => None,
    }
}

/// Fock Husimi |α|^{2k} e^{-|α|²}/k! in log space; u = |α|².
fn fock_husimi(k: u32, u: f64) -> f64 {
    if k == 0 {
        return (-u).exp();
    }
    if u == 0.0 {
        return 0.0;
    }
    (k as f64 * u.ln() - u - ln_factorial(k as u64)).exp()
}

/// (Q, dQ/du) for the Fock Husimi.
fn fock_husimi_du(k: u32, u: f64) -> (f64, f64) {
    if k == 0 {
        let q = (-u).exp();
        return (q, -q);
    }
    let kf = k as f64;
    let lf = ln_factorial(k as u64);
    if u == 0.0 {
        // k = 1: Q = u e^{-u} has slope 1 at the origin
        return (0.0, if k == 1 { 1.0 } else { 0.0 });
    }
    let q = (kf * u.ln() - u - lf).exp();
    // k u^{k-1} - u^k, assembled in log space to survive large k
    let d = ((kf - 1.0) * u.ln() - u - lf).exp() * kf - q;
    (q, d)
}

/// (Q, dQ/du) for the photon-added thermal Husimi.
fn pat_husimi_du(k: u32, nbar: f64, u: f64) -> (f64, f64) {
    let kf = k as f64;
    let np1 = nbar + 1.0;
    let ln_norm = ln_factorial(k as u64) + (kf + 1.0) * np1.ln();
    if u == 0.0 {
        return (0.0, if k == 1 { (-ln_norm).exp() } else { 0.0 });
    }
    let q = (kf * u.ln() - u / np1 - ln_norm).exp();
    let d = ((kf - 1.0) * u.ln() - u / np1 - ln_norm).exp() * kf - q / np1;
    (q, d)
}

/// (W, dW/dr) for the phase-averaged coherent family at ordering scale
/// c = 2/(1-s); the Husimi case is c = 1.
fn phase_averaged_radial(b: f64, r: f64, c: f64) -> (f64, f64) {
    let z = 2.0 * c * b * r;
    let scaled_exp = (-c * (r - b).powi(2)).exp();
    let i0 = bessel_i0e(z);
    let i1 = bessel_i1e(z);
    let w = c * scaled_exp * i0;
    let dw = c * scaled_exp * (-2.0 * c * r * i0 + 2.0 * c * b * i1);
    (w, dw)
}

fn cat_pieces(beta: C64, phi: f64, x: f64, y: f64) -> (f64, f64, f64, f64) {
    let e1 = (-((x - beta.re).powi(2) + (y - beta.im).powi(2))).exp();
    let e2 = (-((x + beta.re).powi(2) + (y + beta.im).powi(2))).exp();
    let e0 = (-(x * x + y * y) - beta.norm_sqr()).exp();
    // Im(α β*) = y Re β − x Im β
    let ph = phi + 2.0 * (y * beta.re - x * beta.im);
    (e1, e2, e0, ph)
}

/// Gaussian Husimi / s-ordered Gaussian, shared by both orderings through the
/// moment set (Δ, A, B).
fn gaussian_value(m: &GaussianMoments, theta: f64, xi: C64, x: f64, y: f64) -> f64 {
    let ux = x - xi.re;
    let uy = y - xi.im;
    let (st, ct) = theta.sin_cos();
    let n = -m.a * (ux * ux + uy * uy)
        + 2.0 * m.b * (ct * (ux * ux - uy * uy) + 2.0 * st * ux * uy);
    (n / (2.0 * m.delta) - 0.5 * m.delta.ln()).exp()
}

fn gaussian_value_grad(
    m: &GaussianMoments,
    theta: f64,
    xi: C64,
    x: f64,
    y: f64,
) -> (f64, f64, f64) {
    let ux = x - xi.re;
    let uy = y - xi.im;
    let (st, ct) = theta.sin_cos();
    let q = gaussian_value(m, theta, xi, x, y);
    let dn_dx = -2.0 * m.a * ux + 4.0 * m.b * (ct * ux + st * uy);
    let dn_dy = -2.0 * m.a * uy + 4.0 * m.b * (st * ux - ct * uy);
    (q, q * dn_dx / (2.0 * m.delta), q * dn_dy / (2.0 * m.delta))
}

// ---------------------------------------------------------------------------
// Generic Fock-basis states
// ---------------------------------------------------------------------------

/// Q = w†ρw with w_n = e^{-|α|²/2} α^n/√(n!); |w_n| ≤ 1 for every n, so the
/// evaluation never overflows. The gradient uses ∂w/∂x = −x w + Dw and
/// ∂w/∂y = −y w + i Dw with (Dw)_n = √n w_{n-1}.
fn fock_matrix_eval(f: &FockDensity, x: f64, y: f64, want_grad: bool) -> (f64, f64, f64) {
    let u = x * x + y * y;
    if 0.5 * u > 700.0 {
        // true Q is below f64 range here for any truncated state
        return (0.0, 0.0, 0.0);
    }
    let dim = f.dim;
    let alpha = C64::new(x, y);
    let mut w = vec![C64::new(0.0, 0.0); dim];
    w[0] = C64::new((-0.5 * u).exp(), 0.0);
    for n in 1..dim {
        w[n] = w[n - 1] * alpha / (n as f64).sqrt();
    }
    // rw = ρ w
    let mut rw = vec![C64::new(0.0, 0.0); dim];
    for (i, slot) in rw.iter_mut().enumerate() {
        let mut acc = C64::new(0.0, 0.0);
        for (j, wj) in w.iter().enumerate() {
            acc += f.rho[(i, j)] * wj;
        }
        *slot = acc;
    }
    let q: f64 = w.iter().zip(rw.iter()).map(|(a, b)| (a.conj() * b).re).sum();
    let q = q.max(0.0);
    if !want_grad {
        return (q, 0.0, 0.0);
    }
    // G = w† ρ (Dw)
    let mut g = C64::new(0.0, 0.0);
    for i in 0..dim {
        let mut acc = C64::new(0.0, 0.0);
        for j in 1..dim {
            acc += f.rho[(i, j)] * (w[j - 1] * (j as f64).sqrt());
        }
        g += w[i].conj() * acc;
    }
    (q, 2.0 * g.re - 2.0 * x * q, -2.0 * g.im - 2.0 * y * q)
}

/// Radial evaluation for diagonal matrices: q = Σ p_n w̃_n², with the real
/// weights w̃_n = e^{-r²/2} r^n/√(n!).
fn fock_matrix_radial(f: &FockDensity, r: f64) -> (f64, f64) {
    let u = r * r;
    if 0.5 * u > 700.0 {
        return (0.0, 0.0);
    }
    let dim = f.dim;
    let mut wt = vec![0.0f64; dim];
    wt[0] = (-0.5 * u).exp();
    for n in 1..dim {
        wt[n] = wt[n - 1] * r / (n as f64).sqrt();
    }
    let mut q = 0.0;
    let mut dq = 0.0;
    for n in 0..dim {
        let p = f.rho[(n, n)].re;
        q += p * wt[n] * wt[n];
        let dwn = if n == 0 { -r * wt[0] } else { (n as f64).sqrt() * wt[n - 1] - r * wt[n] };
        dq += p * 2.0 * wt[n] * dwn;
    }
    (q.max(0.0), dq)
}

// ---------------------------------------------------------------------------
// s-ordered closed forms
// ---------------------------------------------------------------------------

fn ws_closed(kind: &Kind, x: f64, y: f64, s: f64) -> f64 {
    match kind {
        Kind::Coherent { beta } => {
            let c = 2.0 / (1.0 - s);
            let d = (x - beta.re).powi(2) + (y - beta.im).powi(2);
            c * (-c * d).exp()
        }
        Kind::Thermal { nbar } => {
            let c = 2.0 / (2.0 * nbar + 1.0 - s);
            c * (-c * (x * x + y * y)).exp()
        }
        Kind::CoherentMixture { beta } => {
            let c = 2.0 / (1.0 - s);
            let d1 = (x - beta.re).powi(2) + (y - beta.im).powi(2);
            let d2 = (x + beta.re).powi(2) + (y + beta.im).powi(2);
            0.5 * c * ((-c * d1).exp() + (-c * d2).exp())
        }
        Kind::PhaseAveragedCoherent { beta_mod } => {
            let c = 2.0 / (1.0 - s);
            phase_averaged_radial(*beta_mod, (x * x + y * y).sqrt(), c).0
        }
        Kind::Gaussian { nbar, r, theta, xi } => {
            let m = GaussianMoments::ordered(*nbar, *r, s);
            gaussian_value(&m, *theta, *xi, x, y)
        }
        Kind::Fock { k } => fock_ws_radial(*k, s, (x * x + y * y).sqrt()).0,
        _ => unreachable!("convolution families handled by Dist"),
    }
}

fn ws_closed_grad(kind: &Kind, x: f64, y: f64, s: f64) -> (f64, f64, f64) {
    match kind {
        Kind::Coherent { beta } => {
            let w = ws_closed(kind, x, y, s);
            let c = 2.0 / (1.0 - s);
            (
                w,
                -2.0 * c * (x - beta.re) * w,
                -2.0 * c * (y - beta.im) * w,
            )
        }
        Kind::Thermal { nbar } => {
            let w = ws_closed(kind, x, y, s);
            let c = 2.0 / (2.0 * nbar + 1.0 - s);
            (w, -2.0 * c * x * w, -2.0 * c * y * w)
        }
        Kind::CoherentMixture { beta } => {
            let c = 2.0 / (1.0 - s);
            let d1 = (x - beta.re).powi(2) + (y - beta.im).powi(2);
            let d2 = (x + beta.re).powi(2) + (y + beta.im).powi(2);
            let w1 = 0.5 * c * (-c * d1).exp();
            let w2 = 0.5 * c * (-c * d2).exp();
            (
                w1 + w2,
                -2.0 * c * ((x - beta.re) * w1 + (x + beta.re) * w2),
                -2.0 * c * ((y - beta.im) * w1 + (y + beta.im) * w2),
            )
        }
        Kind::PhaseAveragedCoherent { beta_mod } => {
            let c = 2.0 / (1.0 - s);
            let r = (x * x + y * y).sqrt();
            let (w, dw) = phase_averaged_radial(*beta_mod, r, c);
            if r < 1e-150 {
                (w, 0.0, 0.0)
            } else {
                (w, dw * x / r, dw * y / r)
            }
        }
        Kind::Gaussian { nbar, r, theta, xi } => {
            let m = GaussianMoments::ordered(*nbar, *r, s);
            gaussian_value_grad(&m, *theta, *xi, x, y)
        }
        Kind::Fock { k } => {
            let r = (x * x + y * y).sqrt();
            let (w, dw) = fock_ws_radial(*k, s, r);
            if r < 1e-150 {
                (w, 0.0, 0.0)
            } else {
                (w, dw * x / r, dw * y / r)
            }
        }
        _ => unreachable!("convolution families handled by Dist"),
    }
}

fn ws_radial_deriv(kind: &Kind, r: f64, s: f64) -> Option<(f64, f64)> {
    let u = r * r;
    match kind {
        Kind::Coherent { .. } => {
            let c = 2.0 / (1.0 - s);
            let w = c * (-c * u).exp();
            Some((w, -2.0 * c * r * w))
        }
        Kind::Thermal { nbar } => {
            let c = 2.0 / (2.0 * nbar + 1.0 - s);
            let w = c * (-c * u).exp();
            Some((w, -2.0 * c * r * w))
        }
        Kind::PhaseAveragedCoherent { beta_mod } => {
            Some(phase_averaged_radial(*beta_mod, r, 2.0 / (1.0 - s)))
        }
        Kind::Gaussian { nbar, r: sq, .. } if *sq == 0.0 => {
            let c = 2.0 / (2.0 * nbar + 1.0 - s);
            let w = c * (-c * u).exp();
            Some((w, -2.0 * c * r * w))
        }
        Kind::Fock { k } => Some(fock_ws_radial(*k, s, r)),
        _ => None,
    }
}

/// (W_s, dW_s/dr) of the Fock state for s < −1: Laguerre form
/// W_s = (2/(1−s)) ((−1−s)/(1−s))^k e^{−2|α|²/(1−s)} L_k(4|α|²/(1−s²)).
/// The Laguerre argument is negative there, so W_s > 0 everywhere.
pub(crate) fn fock_ws_radial(k: u32, s: f64, r: f64) -> (f64, f64) {
    debug_assert!(s < -1.0);
    let u = r * r;
    let a = 2.0 / (1.0 - s);
    let b = 4.0 / (1.0 - s * s);
    let pref = a * ((-1.0 - s) / (1.0 - s)).powi(k as i32);
    let (l, _) = laguerre_pair(k, b * u);
    let dl = laguerre_deriv(k, b * u);
    let e = (-a * u).exp();
    let w = pref * e * l;
    let dw_du = pref * e * (-a * l + b * dl);
    (w, 2.0 * r * dw_du)
}

/// Signed Fock-state Wigner function (s = 0), radial profile. Used only by the
/// Wigner-negativity quantifier; it is not a `quasiprob_s` order because it
/// takes negative values for k ≥ 1.
pub(crate) fn fock_wigner_radial(k: u32, r: f64) -> f64 {
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let (l, _) = laguerre_pair(k, 4.0 * r * r);
    2.0 * sign * (-2.0 * r * r).exp() * l
}
