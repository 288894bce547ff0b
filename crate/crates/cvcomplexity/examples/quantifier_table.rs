//! Side-by-side comparison of complexity with the standard nonclassicality
//! and non-Gaussianity quantifiers, reproducing the reference table for Fock
//! and Gaussian states.
//!
//! ```bash
//! cargo run --release --example quantifier_table
//! ```

use cvcomplexity::closed_form::fock_closed;
use cvcomplexity::quantifiers::quantifier_row;
use cvcomplexity::{complexity, validate, QuadratureConfig, StateSpec};
use num_complex::Complex64;

fn opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.5}")).unwrap_or_else(|| "-".into())
}

fn main() -> cvcomplexity::Result<()> {
    let cfg = QuadratureConfig::default();

    println!(
        "{:<26} {:>9} {:>8} {:>7} {:>7} {:>9} {:>9} {:>9}",
        "state", "C", "mandel", "depth", "skew", "wig-neg", "delta_A", "delta_B"
    );
    for k in 1..=5u32 {
        let state = validate(&StateSpec::fock(k))?;
        let row = quantifier_row(&state, &cfg)?;
        let (_, c) = fock_closed(k);
        println!(
            "{:<26} {:>9.5} {:>8.3} {:>7.3} {:>7.3} {:>9} {:>9} {:>9}",
            format!("fock |{k}>"),
            c,
            row.mandel_q,
            row.nonclassical_depth,
            row.skew_info,
            opt(row.wigner_negativity),
            opt(row.delta_a),
            opt(row.delta_b),
        );
    }
    for (nbar, r, xi) in [
        (0.0, 0.0, Complex64::new(1.0, 0.0)),
        (1.0, 0.0, Complex64::new(0.0, 0.0)),
        (0.5, 0.8, Complex64::new(0.5, 0.5)),
        (0.0, 1.2, Complex64::new(0.0, 0.0)),
    ] {
        let spec = StateSpec::gaussian(nbar, r, 0.0, xi);
        let state = validate(&spec)?;
        let row = quantifier_row(&state, &cfg)?;
        let c = complexity(&state, &cfg)?.complexity;
        println!(
            "{:<26} {:>9.5} {:>8.3} {:>7.3} {:>7.3} {:>9} {:>9} {:>9}",
            format!("gaussian({nbar},{r},xi={xi})"),
            c,
            row.mandel_q,
            row.nonclassical_depth,
            row.skew_info,
            opt(row.wigner_negativity),
            opt(row.delta_a),
            opt(row.delta_b),
        );
    }

    println!();
    println!("contrasts worth noticing:");
    println!("  - all Fock states saturate the nonclassical depth at 1, while C and");
    println!("    the skew information keep resolving them (both grow with k)");
    println!("  - Mandel Q and the depth see displacement/squeezing angle; C never does");
    println!("  - Gaussian states have zero Wigner negativity and non-Gaussianity but");
    println!("    arbitrarily large complexity under squeezing");
    Ok(())
}
