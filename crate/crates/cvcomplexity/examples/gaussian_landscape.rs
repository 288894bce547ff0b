//! The Gaussian complexity landscape in closed form: temperature and
//! squeezing dependence, plus the energy-constrained extremes.
//!
//! ```bash
//! cargo run --release --example gaussian_landscape
//! ```

use cvcomplexity::closed_form::{
    gaussian_closed, optimal_gaussian_at_energy, search_optimal_at_energy,
};

fn main() {
    println!("C(nbar, r) = A / (2 sqrt(Delta)):");
    print!("{:>6}", "nbar\\r");
    let rs = [0.0, 0.5, 1.0, 1.5, 2.0];
    for r in rs {
        print!("{r:>10.1}");
    }
    println!();
    for nbar in [0.0, 0.1, 1.0, 10.0] {
        print!("{nbar:>6.1}");
        for r in rs {
            let (_, _, c) = gaussian_closed(nbar, r);
            print!("{c:>10.4}");
        }
        println!();
    }

    println!();
    println!("limits: C -> cosh(2r) as nbar -> inf; C(squeezed vacuum) = cosh r");
    let (_, _, c) = gaussian_closed(1e9, 1.0);
    println!(
        "  nbar=1e9, r=1: C = {c:.6} vs cosh 2  = {:.6}",
        (2.0f64).cosh()
    );

    println!();
    println!("energy-constrained extremes over all Gaussian states:");
    for e in [0.5, 1.0, 3.0, 10.0] {
        let (spec, c_max, c_min) = optimal_gaussian_at_energy(e);
        let found = search_optimal_at_energy(e, 41, 4);
        let r = match spec {
            cvcomplexity::StateSpec::Gaussian { r, .. } => r,
            _ => unreachable!(),
        };
        println!(
            "  E = {e:>4}: max C = {c_max:.6} at squeezed vacuum r = {r:.4} \
             (grid search finds {:.6}); min C = {c_min} on displaced thermal states",
            found.c_max
        );
    }
}
