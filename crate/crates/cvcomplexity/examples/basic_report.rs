//! First contact: validate a few states and print their complexity reports.
//!
//! ```bash
//! cargo run --release --example basic_report
//! ```

use cvcomplexity::{complexity, validate, QuadratureConfig, StateSpec};
use num_complex::Complex64;

fn main() -> cvcomplexity::Result<()> {
    let cfg = QuadratureConfig::default();

    let states = [
        ("vacuum", StateSpec::coherent(Complex64::new(0.0, 0.0))),
        ("coherent |1+0.5i>", StateSpec::coherent(Complex64::new(1.0, 0.5))),
        ("thermal nbar=2", StateSpec::thermal(2.0)),
        ("fock |3>", StateSpec::fock(3)),
        (
            "squeezed thermal",
            StateSpec::gaussian(0.5, 1.0, 0.3, Complex64::new(1.0, -1.0)),
        ),
        (
            "even cat beta=1.5",
            StateSpec::cat(Complex64::new(1.5, 0.0), 0.0),
        ),
    ];

    println!(
        "{:<22} {:>10} {:>10} {:>12} {:>12}",
        "state", "entropy", "fisher", "complexity", "method"
    );
    for (label, spec) in states {
        let state = validate(&spec)?;
        let rep = complexity(&state, &cfg)?;
        println!(
            "{:<22} {:>10.6} {:>10.6} {:>12.6} {:>12}",
            label,
            rep.entropy,
            rep.fisher,
            rep.complexity,
            match rep.method {
                cvcomplexity::Method::ClosedForm => "closed",
                cvcomplexity::Method::Quadrature => "quadrature",
            }
        );
    }

    println!();
    println!("every row satisfies C >= 1; displaced thermal states sit exactly at 1");
    Ok(())
}
