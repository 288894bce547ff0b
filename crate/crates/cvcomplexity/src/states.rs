//! State model: declarative state specifications, validation into checked
//! handles, Fock-basis truncation, and mean photon numbers.
//!
//! A [`StateSpec`] is a plain serializable description (the JSON wire format
//! uses `{"family": ..., "params": {...}}` with complex numbers as
//! `{"re": x, "im": y}`). [`validate`] turns it into a [`CheckedState`] with
//! normalized parameters; all numeric routines take checked states only.
//! Checked states are immutable and `Send + Sync`.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{laguerre_assoc, ln_factorial};

/// Hermiticity / trace slack accepted on input density matrices.
pub const MATRIX_INPUT_TOL: f64 = 1e-8;
/// Eigenvalues below this are rejected as non-physical.
pub const PSD_TOL: f64 = 1e-10;
/// Default minimum retained probability for Fock truncation.
pub const DEFAULT_TRUNC_TOL: f64 = 1e-10;

/// Complex number in the JSON parameter format.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub struct ComplexParam {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl ComplexParam {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }
}

impl From<C64> for ComplexParam {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexParam> for C64 {
    fn from(z: ComplexParam) -> Self {
        C64::new(z.re, z.im)
    }
}

/// Declarative description of a single-mode state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum StateSpec {
    /// Coherent state |β⟩.
    Coherent { beta: ComplexParam },
    /// Thermal state with mean photon number n̄ ≥ 0.
    Thermal { nbar: f64 },
    /// Number state |k⟩.
    Fock { k: u32 },
    /// Displaced squeezed thermal state: thermal n̄, squeezing magnitude r and
    /// angle θ, displacement ξ.
    Gaussian {
        nbar: f64,
        r: f64,
        theta: f64,
        xi: ComplexParam,
    },
    /// k-photon-added thermal state, k ≥ 1.
    PhotonAddedThermal { k: u32, nbar: f64 },
    /// Photon-added coherent state a†|β⟩ (normalized).
    PhotonAddedCoherent { beta: ComplexParam },
    /// Superposition (|β⟩ + e^{iφ}|−β⟩)/N_β.
    Cat { beta: ComplexParam, phi: f64 },
    /// 50/50 mixture of |β⟩ and |−β⟩.
    CoherentMixture { beta: ComplexParam },
    /// Coherent state with uniformly randomized phase; diagonal Poisson weights.
    PhaseAveragedCoherent { beta_mod: f64 },
    /// Generic truncated density matrix in the Fock basis.
    FockMatrix {
        dim: usize,
        re: Vec<Vec<f64>>,
        #[serde(default)]
        im: Vec<Vec<f64>>,
    },
}

impl StateSpec {
    pub fn coherent(beta: C64) -> Self {
        StateSpec::Coherent { beta: beta.into() }
    }
    pub fn thermal(nbar: f64) -> Self {
        StateSpec::Thermal { nbar }
    }
    pub fn fock(k: u32) -> Self {
        StateSpec::Fock { k }
    }
    pub fn gaussian(nbar: f64, r: f64, theta: f64, xi: C64) -> Self {
        StateSpec::Gaussian {
            nbar,
            r,
            theta,
            xi: xi.into(),
        }
    }
    pub fn photon_added_thermal(k: u32, nbar: f64) -> Self {
        StateSpec::PhotonAddedThermal { k, nbar }
    }
    pub fn photon_added_coherent(beta: C64) -> Self {
        StateSpec::PhotonAddedCoherent { beta: beta.into() }
    }
    pub fn cat(beta: C64, phi: f64) -> Self {
        StateSpec::Cat {
            beta: beta.into(),
            phi,
        }
    }
    pub fn coherent_mixture(beta: C64) -> Self {
        StateSpec::CoherentMixture { beta: beta.into() }
    }
    pub fn phase_averaged_coherent(beta_mod: f64) -> Self {
        StateSpec::PhaseAveragedCoherent { beta_mod }
    }

    /// Wrap a complex Fock-basis density matrix.
    pub fn fock_matrix(rho: &DMatrix<C64>) -> Self {
        let dim = rho.nrows();
        let re = (0..dim)
            .map(|i| (0..dim).map(|j| rho[(i, j)].re).collect())
            .collect();
        let im = (0..dim)
            .map(|i| (0..dim).map(|j| rho[(i, j)].im).collect())
            .collect();
        StateSpec::FockMatrix { dim, re, im }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            StateSpec::Coherent { .. } => "coherent",
            StateSpec::Thermal { .. } => "thermal",
            StateSpec::Fock { .. } => "fock",
            StateSpec::Gaussian { .. } => "gaussian",
            StateSpec::PhotonAddedThermal { .. } => "photon_added_thermal",
            StateSpec::PhotonAddedCoherent { .. } => "photon_added_coherent",
            StateSpec::Cat { .. } => "cat",
            StateSpec::CoherentMixture { .. } => "coherent_mixture",
            StateSpec::PhaseAveragedCoherent { .. } => "phase_averaged_coherent",
            StateSpec::FockMatrix { .. } => "fock_matrix",
        }
    }
}

/// Density matrix payload of a checked generic state.
#[derive(Debug, Clone)]
pub struct FockDensity {
    pub dim: usize,
    /// Hermitized, trace-renormalized matrix.
    pub rho: DMatrix<C64>,
    /// True when all off-diagonal entries vanish (radially symmetric Husimi).
    pub diagonal: bool,
}

impl FockDensity {
    pub fn diag_probs(&self) -> Vec<f64> {
        (0..self.dim).map(|n| self.rho[(n, n)].re).collect()
    }
}

/// Normalized, physical state ready for numeric evaluation.
#[derive(Debug, Clone)]
pub enum Kind {
    Coherent { beta: C64 },
    Thermal { nbar: f64 },
    Fock { k: u32 },
    Gaussian { nbar: f64, r: f64, theta: f64, xi: C64 },
    PhotonAddedThermal { k: u32, nbar: f64 },
    PhotonAddedCoherent { beta: C64 },
    Cat { beta: C64, phi: f64, norm_sq: f64 },
    CoherentMixture { beta: C64 },
    PhaseAveragedCoherent { beta_mod: f64 },
    FockMatrix(FockDensity),
}

/// Validated state handle. Construction goes through [`validate`].
#[derive(Debug, Clone)]
pub struct CheckedState {
    kind: Kind,
}

fn finite(v: f64, name: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::BadParameter(format!("{name} must be finite")))
    }
}

fn finite_c(z: C64, name: &str) -> Result<C64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::BadParameter(format!("{name} must be finite")))
    }
}

fn nonneg(v: f64, name: &str) -> Result<f64> {
    finite(v, name)?;
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(Error::BadParameter(format!("{name} must be >= 0, got {v}")))
    }
}

fn wrap_angle(phi: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    phi.rem_euclid(two_pi)
}

/// Validate a spec into a checked state.
///
/// `FockMatrix` inputs are symmetrized ((ρ+ρ†)/2) and trace-renormalized
/// before the positivity check; gross violations (asymmetry or trace
/// deviation beyond 1e-8, eigenvalue below −1e-10) are rejected.
pub fn validate(spec: &StateSpec) -> Result<CheckedState> {
    let kind = match spec {
        StateSpec::Coherent { beta } => Kind::Coherent {
            beta: finite_c((*beta).into(), "beta")?,
        },
        StateSpec::Thermal { nbar } => Kind::Thermal {
            nbar: nonneg(*nbar, "nbar")?,
        },
        StateSpec::Fock { k } => Kind::Fock { k: *k },
        StateSpec::Gaussian { nbar, r, theta, xi } => Kind::Gaussian {
            nbar: nonneg(*nbar, "nbar")?,
            r: nonneg(*r, "r")?,
            theta: wrap_angle(finite(*theta, "theta")?),
            xi: finite_c((*xi).into(), "xi")?,
        },
        StateSpec::PhotonAddedThermal { k, nbar } => {
            if *k < 1 {
                return Err(Error::BadParameter(
                    "photon_added_thermal requires k >= 1".into(),
                ));
            }
            Kind::PhotonAddedThermal {
                k: *k,
                nbar: nonneg(*nbar, "nbar")?,
            }
        }
        StateSpec::PhotonAddedCoherent { beta } => Kind::PhotonAddedCoherent {
            beta: finite_c((*beta).into(), "beta")?,
        },
        StateSpec::Cat { beta, phi } => {
            let beta = finite_c((*beta).into(), "beta")?;
            let phi = wrap_angle(finite(*phi, "phi")?);
            let b2 = beta.norm_sqr();
            let norm_sq = 2.0 * (1.0 + (-2.0 * b2).exp() * phi.cos());
            if norm_sq < 1e-12 {
                return Err(Error::DegenerateCat);
            }
            Kind::Cat { beta, phi, norm_sq }
        }
        StateSpec::CoherentMixture { beta } => Kind::CoherentMixture {
            beta: finite_c((*beta).into(), "beta")?,
        },
        StateSpec::PhaseAveragedCoherent { beta_mod } => Kind::PhaseAveragedCoherent {
            beta_mod: nonneg(*beta_mod, "beta_mod")?,
        },
        StateSpec::FockMatrix { dim, re, im } => Kind::FockMatrix(check_matrix(*dim, re, im)?),
    };
    Ok(CheckedState { kind })
}

fn check_matrix(dim: usize, re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<FockDensity> {
    if dim == 0 {
        return Err(Error::BadParameter("fock_matrix dim must be >= 1".into()));
    }
    let get = |rows: &[Vec<f64>], i: usize, j: usize| -> Result<f64> {
        if rows.is_empty() {
            return Ok(0.0); // omitted imaginary part
        }
        rows.get(i)
            .and_then(|row| row.get(j))
            .copied()
            .ok_or_else(|| Error::BadParameter(format!("fock_matrix rows must be {dim}x{dim}")))
            .and_then(|v| finite(v, "fock_matrix entry"))
    };
    if re.len() != dim {
        return Err(Error::BadParameter(format!(
            "fock_matrix re must have {dim} rows"
        )));
    }
    if !im.is_empty() && im.len() != dim {
        return Err(Error::BadParameter(format!(
            "fock_matrix im must have {dim} rows (or be omitted)"
        )));
    }
    let mut rho = DMatrix::<C64>::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            rho[(i, j)] = C64::new(get(re, i, j)?, get(im, i, j)?);
        }
    }

    // reject gross asymmetry before silently hermitizing round-off noise
    let mut max_asym = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            let d = (rho[(i, j)] - rho[(j, i)].conj()).norm();
            max_asym = max_asym.max(d);
        }
    }
    if max_asym > MATRIX_INPUT_TOL {
        return Err(Error::NonPhysical(format!(
            "matrix is not Hermitian (max |rho - rho^dag| = {max_asym:.3e})"
        )));
    }
    let herm = (&rho + rho.adjoint()) * C64::new(0.5, 0.0);

    let trace = herm.trace().re;
    if (trace - 1.0).abs() > MATRIX_INPUT_TOL {
        return Err(Error::NonPhysical(format!(
            "trace deviates from 1 by {:.3e}",
            (trace - 1.0).abs()
        )));
    }
    let rho = herm / C64::new(trace, 0.0);

    let eig = rho.clone().symmetric_eigen();
    let min_ev = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_ev < -PSD_TOL {
        return Err(Error::NonPhysical(format!(
            "negative eigenvalue {min_ev:.3e}"
        )));
    }

    let mut diagonal = true;
    'outer: for i in 0..dim {
        for j in 0..dim {
            if i != j && rho[(i, j)].norm() > 1e-14 {
                diagonal = false;
                break 'outer;
            }
        }
    }
    Ok(FockDensity { dim, rho, diagonal })
}

/// Truncated Fock-basis density matrix plus the probability it retains.
#[derive(Debug, Clone)]
pub struct FockTruncation {
    pub dim: usize,
    pub rho: DMatrix<C64>,
    pub retained_trace: f64,
}

impl FockTruncation {
    pub fn into_spec(self) -> StateSpec {
        StateSpec::fock_matrix(&self.rho)
    }
}

impl CheckedState {
    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn family_name(&self) -> &'static str {
        match &self.kind {
            Kind::Coherent { .. } => "coherent",
            Kind::Thermal { .. } => "thermal",
            Kind::Fock { .. } => "fock",
            Kind::Gaussian { .. } => "gaussian",
            Kind::PhotonAddedThermal { .. } => "photon_added_thermal",
            Kind::PhotonAddedCoherent { .. } => "photon_added_coherent",
            Kind::Cat { .. } => "cat",
            Kind::CoherentMixture { .. } => "coherent_mixture",
            Kind::PhaseAveragedCoherent { .. } => "phase_averaged_coherent",
            Kind::FockMatrix { .. } => "fock_matrix",
        }
    }

    /// Mean photon number E = tr(ρ a†a).
    pub fn mean_photon(&self) -> f64 {
        match &self.kind {
            Kind::Coherent { beta } => beta.norm_sqr(),
            Kind::Thermal { nbar } => *nbar,
            Kind::Fock { k } => *k as f64,
            Kind::Gaussian { nbar, r, xi, .. } => {
                nbar + xi.norm_sqr() + (2.0 * nbar + 1.0) * r.sinh().powi(2)
            }
            // negative-binomial photon statistics: E = (k+1) n̄ + k
            Kind::PhotonAddedThermal { k, nbar } => (*k as f64 + 1.0) * nbar + *k as f64,
            Kind::PhotonAddedCoherent { beta } => {
                let b = beta.norm_sqr();
                (1.0 + 3.0 * b + b * b) / (1.0 + b)
            }
            Kind::Cat { beta, phi, .. } => {
                let b2 = beta.norm_sqr();
                let e = (-2.0 * b2).exp() * phi.cos();
                b2 * (1.0 - e) / (1.0 + e)
            }
            Kind::CoherentMixture { beta } => beta.norm_sqr(),
            Kind::PhaseAveragedCoherent { beta_mod } => beta_mod * beta_mod,
            Kind::FockMatrix(f) => f
                .diag_probs()
                .iter()
                .enumerate()
                .map(|(n, p)| n as f64 * p)
                .sum(),
        }
    }

    /// Truncation dimension heuristic: max(16, ceil(E + 8·sqrt(E+1))).
    pub fn auto_dim(&self) -> usize {
        let e = self.mean_photon();
        ((e + 8.0 * (e + 1.0).sqrt()).ceil() as usize).max(16)
    }

    /// Truncated Fock-basis density matrix of this state.
    ///
    /// Fails with `TruncationTooSevere` when the retained probability drops
    /// below 1 − 1e-10, and with `Unsupported` for squeezed Gaussian states
    /// (those are served by closed forms instead).
    pub fn to_fock_matrix(&self, dim: usize) -> Result<FockTruncation> {
        self.to_fock_matrix_with_tol(dim, DEFAULT_TRUNC_TOL)
    }

    /// Truncation with automatic dimension growth: starts at [`auto_dim`]
    /// (a mean-plus-spread heuristic) and doubles until the retained
    /// probability reaches 1 − `tol`. Geometric thermal tails need this;
    /// the fixed heuristic only covers sub-Gaussian windows.
    ///
    /// [`auto_dim`]: CheckedState::auto_dim
    pub fn to_fock_matrix_auto(&self, tol: f64) -> Result<FockTruncation> {
        let mut dim = self.auto_dim();
        for _ in 0..6 {
            match self.to_fock_matrix_with_tol(dim, tol) {
                Err(Error::TruncationTooSevere { .. }) => dim *= 2,
                other => return other,
            }
        }
        self.to_fock_matrix_with_tol(dim, tol)
    }

    pub fn to_fock_matrix_with_tol(&self, dim: usize, tol: f64) -> Result<FockTruncation> {
        if dim == 0 {
            return Err(Error::BadParameter("truncation dim must be >= 1".into()));
        }
        let (rho, retained) = match &self.kind {
            Kind::Coherent { beta } => pure_to_matrix(&coherent_amplitudes(*beta, dim)),
            Kind::Thermal { nbar } => diagonal_to_matrix(&thermal_probs(*nbar, dim)),
            Kind::Fock { k } => {
                if (*k as usize) >= dim {
                    return Err(Error::TruncationTooSevere { retained: 0.0, tol });
                }
                let mut p = vec![0.0; dim];
                p[*k as usize] = 1.0;
                diagonal_to_matrix(&p)
            }
            Kind::Gaussian { nbar, r, xi, .. } => {
                if *r > 0.0 {
                    return Err(Error::Unsupported(
                        "squeezed Gaussian states are not truncated; closed forms are used".into(),
                    ));
                }
                displaced_thermal_matrix(*nbar, *xi, dim)
            }
            Kind::PhotonAddedThermal { k, nbar } => {
                diagonal_to_matrix(&photon_added_thermal_probs(*k, *nbar, dim))
            }
            Kind::PhotonAddedCoherent { beta } => {
                let base = coherent_amplitudes(*beta, dim.saturating_sub(1));
                let norm = (1.0 + beta.norm_sqr()).sqrt();
                let mut amps = vec![C64::new(0.0, 0.0); dim];
                for (n, c) in base.iter().enumerate() {
                    amps[n + 1] = c * ((n as f64 + 1.0).sqrt() / norm);
                }
                pure_to_matrix(&amps)
            }
            Kind::Cat { beta, phi, norm_sq } => {
                let base = coherent_amplitudes(*beta, dim);
                let ph = C64::from_polar(1.0, *phi);
                let amps: Vec<C64> = base
                    .iter()
                    .enumerate()
                    .map(|(n, c)| {
                        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                        c * (C64::new(1.0, 0.0) + ph * sign) / norm_sq.sqrt()
                    })
                    .collect();
                pure_to_matrix(&amps)
            }
            Kind::CoherentMixture { beta } => {
                let (r1, _) = pure_to_matrix(&coherent_amplitudes(*beta, dim));
                let (r2, _) = pure_to_matrix(&coherent_amplitudes(-*beta, dim));
                let rho = (r1 + r2) * C64::new(0.5, 0.0);
                let tr = rho.trace().re;
                (rho, tr)
            }
            Kind::PhaseAveragedCoherent { beta_mod } => {
                let b2 = beta_mod * beta_mod;
                let probs: Vec<f64> = (0..dim)
                    .map(|n| (n as f64 * b2.ln().max(-1e300) - b2 - ln_factorial(n as u64)).exp())
                    .map(|p| if p.is_finite() { p } else { 0.0 })
                    .collect();
                let probs = if *beta_mod == 0.0 {
                    let mut p = vec![0.0; dim];
                    p[0] = 1.0;
                    p
                } else {
                    probs
                };
                diagonal_to_matrix(&probs)
            }
            Kind::FockMatrix(f) => {
                if dim >= f.dim {
                    let mut rho = DMatrix::<C64>::zeros(dim, dim);
                    rho.view_mut((0, 0), (f.dim, f.dim)).copy_from(&f.rho);
                    (rho, 1.0)
                } else {
                    let rho = f.rho.view((0, 0), (dim, dim)).into_owned();
                    let tr = rho.trace().re;
                    (rho, tr)
                }
            }
        };
        if retained < 1.0 - tol {
            return Err(Error::TruncationTooSevere {
                retained,
                tol,
            });
        }
        Ok(FockTruncation {
            dim,
            rho,
            retained_trace: retained,
        })
    }
}

/// Coherent-state amplitudes c_n = e^{-|β|²/2} β^n/√(n!), n < dim.
fn coherent_amplitudes(beta: C64, dim: usize) -> Vec<C64> {
    let mut amps = vec![C64::new(0.0, 0.0); dim];
    if dim == 0 {
        return amps;
    }
    amps[0] = C64::new((-0.5 * beta.norm_sqr()).exp(), 0.0);
    for n in 1..dim {
        amps[n] = amps[n - 1] * beta / (n as f64).sqrt();
    }
    amps
}

fn thermal_probs(nbar: f64, dim: usize) -> Vec<f64> {
    let q = nbar / (nbar + 1.0);
    let mut p = vec![0.0; dim];
    let mut cur = 1.0 / (nbar + 1.0);
    for slot in p.iter_mut() {
        *slot = cur;
        cur *= q;
    }
    p
}

/// Diagonal weights of the k-photon-added thermal state: support on |n+k⟩ with
/// P(n+k) = C(n+k, k) q^n (1-q)^{k+1}, q = n̄/(n̄+1).
fn photon_added_thermal_probs(k: u32, nbar: f64, dim: usize) -> Vec<f64> {
    let q = nbar / (nbar + 1.0);
    let k = k as usize;
    let mut p = vec![0.0; dim];
    let base = (1.0 - q).powi(k as i32 + 1);
    for (n, m) in (k..dim).enumerate() {
        let ln_binom =
            ln_factorial(m as u64) - ln_factorial(n as u64) - ln_factorial(k as u64);
        let ln_q = if n == 0 { 0.0 } else { n as f64 * q.ln() };
        p[m] = (ln_binom + ln_q).exp() * base;
    }
    if nbar == 0.0 {
        // pure |k> limit; the formula above hits 0^0 at n = 0
        for slot in p.iter_mut() {
            *slot = 0.0;
        }
        if k < dim {
            p[k] = 1.0;
        }
    }
    p
}

fn pure_to_matrix(amps: &[C64]) -> (DMatrix<C64>, f64) {
    let dim = amps.len();
    let mut rho = DMatrix::<C64>::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            rho[(i, j)] = amps[i] * amps[j].conj();
        }
    }
    let retained: f64 = amps.iter().map(|c| c.norm_sqr()).sum();
    (rho, retained)
}

fn diagonal_to_matrix(probs: &[f64]) -> (DMatrix<C64>, f64) {
    let dim = probs.len();
    let mut rho = DMatrix::<C64>::zeros(dim, dim);
    for (n, p) in probs.iter().enumerate() {
        rho[(n, n)] = C64::new(*p, 0.0);
    }
    (rho, probs.iter().sum())
}

/// ⟨m|D(ξ)|n⟩ in the Fock basis (associated-Laguerre closed form).
pub(crate) fn displacement_element(m: usize, n: usize, xi: C64) -> C64 {
    let x = xi.norm_sqr();
    let pref = (-0.5 * x).exp();
    if m >= n {
        let a = (m - n) as u32;
        let ln_ratio = 0.5 * (ln_factorial(n as u64) - ln_factorial(m as u64));
        let lag = laguerre_assoc(n as u32, a, x);
        xi.powu(a) * (ln_ratio.exp() * pref * lag)
    } else {
        let a = (n - m) as u32;
        let ln_ratio = 0.5 * (ln_factorial(m as u64) - ln_factorial(n as u64));
        let lag = laguerre_assoc(m as u32, a, x);
        (-xi.conj()).powu(a) * (ln_ratio.exp() * pref * lag)
    }
}

/// Displaced thermal state D(ξ) ρ_th D(ξ)† truncated to `dim`.
fn displaced_thermal_matrix(nbar: f64, xi: C64, dim: usize) -> (DMatrix<C64>, f64) {
    let q = nbar / (nbar + 1.0);
    // inner thermal levels until the geometric tail is negligible
    let inner = if q > 0.0 {
        ((f64::ln(1e-16) / q.ln()).ceil() as usize + 2).max(dim)
    } else {
        dim
    };
    let p = thermal_probs(nbar, inner);
    let mut d = DMatrix::<C64>::zeros(dim, inner);
    for m in 0..dim {
        for j in 0..inner {
            d[(m, j)] = displacement_element(m, j, xi);
        }
    }
    let mut rho = DMatrix::<C64>::zeros(dim, dim);
    for m in 0..dim {
        for n in 0..dim {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..inner {
                acc += d[(m, j)] * p[j] * d[(n, j)].conj();
            }
            rho[(m, n)] = acc;
        }
    }
    let tr = rho.trace().re;
    (rho, tr)
}
