//! Bring your own state: build a density matrix in the Fock basis (here
//! from the JSON wire format), validate it, and run the full report.
//!
//! ```bash
//! cargo run --release --example custom_density_matrix
//! ```

use cvcomplexity::quantifiers::skew_info_nonclassicality;
use cvcomplexity::{complexity, validate, wehrl_entropy, QuadratureConfig, StateSpec};

fn main() -> cvcomplexity::Result<()> {
    let cfg = QuadratureConfig::default();

    // 60/40 mixture of |0> and |2> with a small coherence, as it would
    // arrive over the wire ("im" may be omitted when the matrix is real)
    let json = r#"{
        "family": "fock_matrix",
        "params": {
            "dim": 3,
            "re": [[0.6, 0.0, 0.1],
                   [0.0, 0.0, 0.0],
                   [0.1, 0.0, 0.4]]
        }
    }"#;
    let spec: StateSpec = serde_json::from_str(json)?;
    let state = validate(&spec)?;

    println!("mean photon number: {:.6}", state.mean_photon());
    let (s, err) = wehrl_entropy(&state, &cfg)?;
    println!("wehrl entropy:      {s:.8} (err est {err:.1e})");
    let rep = complexity(&state, &cfg)?;
    println!("fisher information: {:.8}", rep.fisher);
    println!("complexity:         {:.8}", rep.complexity);
    println!("skew information:   {:.8}", skew_info_nonclassicality(&state)?);

    // the same machinery rejects unphysical input
    let bad = r#"{
        "family": "fock_matrix",
        "params": {"dim": 2, "re": [[1.2, 0.0], [0.0, -0.2]]}
    }"#;
    let spec: StateSpec = serde_json::from_str(bad)?;
    match validate(&spec) {
        Err(e) => println!("\nnegative-eigenvalue input is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
