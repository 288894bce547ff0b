//! Photon-number ladders: Fock-state complexity, its independence from the
//! temperature of photon-added thermal states, and the crossover of the
//! photon-added coherent state between |1> and a displaced vacuum.
//!
//! ```bash
//! cargo run --release --example fock_photon_added
//! ```

use cvcomplexity::closed_form::fock_closed;
use cvcomplexity::special::EULER_GAMMA;
use cvcomplexity::{complexity, validate, QuadratureConfig, StateSpec};
use num_complex::Complex64;

fn main() -> cvcomplexity::Result<()> {
    let cfg = QuadratureConfig::default();

    println!("Fock ladder, closed form C(k) = k! e^(k - k psi(k+1)):");
    for k in 0..=8u32 {
        let (s, c) = fock_closed(k);
        println!("  k = {k}: S_W = {s:.6}  C = {c:.6}");
    }
    println!("  (C(1) = e^gamma = {:.6})", EULER_GAMMA.exp());

    println!();
    println!("photon-added thermal states: complexity ignores the temperature");
    for k in [1u32, 2, 3] {
        let (_, c_fock) = fock_closed(k);
        print!("  k = {k}: C(fock) = {c_fock:.6}; quadrature at nbar =");
        for nbar in [0.2, 1.0, 5.0] {
            let state = validate(&StateSpec::photon_added_thermal(k, nbar))?;
            let c = complexity(&state, &cfg)?.complexity;
            print!(" {nbar}: {c:.6}");
        }
        println!();
    }

    println!();
    println!("photon-added coherent state: e^gamma at beta -> 0, 1 at beta -> inf");
    for b in [0.05, 0.25, 0.5, 1.0, 2.0, 4.0] {
        let state = validate(&StateSpec::photon_added_coherent(Complex64::new(b, 0.0)))?;
        let c = complexity(&state, &cfg)?.complexity;
        println!("  |beta| = {b:>4}: C = {c:.6}");
    }
    Ok(())
}
