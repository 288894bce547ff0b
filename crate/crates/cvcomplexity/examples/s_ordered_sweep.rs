//! The s-ordered generalization C_s: sharper orderings (larger s) separate
//! states more aggressively, smoother orderings wash structure out, and the
//! admissibility bound is state dependent.
//!
//! ```bash
//! cargo run --release --example s_ordered_sweep
//! ```

use cvcomplexity::{s_complexity, validate, QuadratureConfig, StateSpec};
use num_complex::Complex64;

fn main() -> cvcomplexity::Result<()> {
    let cfg = QuadratureConfig::default();

    println!("phase-averaged coherent state, C_s rises steeply toward s = 1:");
    let pavg = validate(&StateSpec::phase_averaged_coherent(1.0))?;
    for s in [-1.0, -0.5, 0.0, 0.5, 0.9] {
        let rep = s_complexity(&pavg, s, &cfg)?;
        println!("  s = {s:>5}: C_s = {:.6}", rep.complexity);
    }

    println!();
    println!("Fock states need s <= -1; extra smoothing drives C_s back to 1:");
    for k in [1u32, 2, 4] {
        let state = validate(&StateSpec::fock(k))?;
        print!("  k = {k}:");
        for s in [-1.0, -2.0, -5.0, -20.0] {
            let rep = s_complexity(&state, s, &cfg)?;
            print!("  C_{s} = {:.5}", rep.complexity);
        }
        println!();
    }

    println!();
    println!("admissibility is state dependent:");
    let fock = validate(&StateSpec::fock(2))?;
    match s_complexity(&fock, 0.0, &cfg) {
        Err(e) => println!("  fock |2> at s = 0 is refused: {e}"),
        Ok(_) => unreachable!(),
    }
    let squeezed = validate(&StateSpec::gaussian(0.0, 0.8, 0.0, Complex64::new(0.0, 0.0)))?;
    println!(
        "  squeezed vacuum r = 0.8 admits {}",
        squeezed.ordering_bound().requirement()
    );

    println!();
    println!("rescaling |beta| by sqrt(1-s) makes the phase-averaged family");
    println!("ordering-independent:");
    let btilde = 0.7f64;
    for s in [-1.0f64, 0.0, 0.5] {
        let b = btilde * (1.0 - s).sqrt();
        let state = validate(&StateSpec::phase_averaged_coherent(b))?;
        let rep = s_complexity(&state, s, &cfg)?;
        println!("  s = {s:>4}: beta = {b:.4} -> C_s = {:.9}", rep.complexity);
    }
    Ok(())
}
