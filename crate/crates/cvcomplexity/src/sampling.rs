//! Random density matrices for property sweeps and verification suites.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use rand::Rng;

use crate::states::StateSpec;

/// Standard normal via Box–Muller.
fn normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Full-rank mixed state ρ = GG†/tr(GG†) with G a complex Ginibre matrix
/// (the Hilbert–Schmidt-induced measure; eigenbasis Haar distributed).
pub fn random_density_matrix(dim: usize, rng: &mut impl Rng) -> DMatrix<C64> {
    let g = DMatrix::<C64>::from_fn(dim, dim, |_, _| C64::new(normal(rng), normal(rng)));
    let rho = &g * g.adjoint();
    let tr = rho.trace().re;
    rho / C64::new(tr, 0.0)
}

/// Same, packaged as a state spec.
pub fn random_fock_matrix_spec(dim: usize, rng: &mut impl Rng) -> StateSpec {
    StateSpec::fock_matrix(&random_density_matrix(dim, rng))
}
