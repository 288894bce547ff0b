//! Library side of the command-line front end: single-state reports,
//! parameter sweeps, figure-data emission, and verification suites.
//!
//! The binary in `src/main.rs` is a thin argument parser over these
//! functions, so everything here is equally usable from library code and
//! from the runnable examples.

pub mod figures;
pub mod sweep;
pub mod verify;

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::Result;
use crate::functionals::{complexity, ComplexityReport};
use crate::quadrature::QuadratureConfig;
use crate::quantifiers::{quantifier_row, QuantifierRow};
use crate::states::{validate, StateSpec};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Full output of `compute`: the echoed spec, the complexity report, and
/// optionally the quantifier row.
#[derive(Debug, Serialize)]
pub struct ComputeOutput {
    pub state: StateSpec,
    pub report: ComplexityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantifiers: Option<QuantifierRow>,
    /// Set when the row was requested but is not defined for this family
    /// (e.g. nonclassical depth of cat states, Mandel Q of the vacuum).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantifiers_unavailable: Option<String>,
}

/// Read a state spec from a JSON file.
pub fn read_state_spec(path: &Path) -> Result<StateSpec> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// `compute` entry point: validate, evaluate, and return the report bundle.
///
/// A requested quantifier row degrades gracefully when some quantifier is
/// undefined for the family; numerical failures still propagate.
pub fn run_compute(
    spec: &StateSpec,
    cfg: &QuadratureConfig,
    with_quantifiers: bool,
) -> Result<ComputeOutput> {
    let state = validate(spec)?;
    let report = complexity(&state, cfg)?;
    let (quantifiers, quantifiers_unavailable) = if with_quantifiers {
        match quantifier_row(&state, cfg) {
            Ok(row) => (Some(row), None),
            Err(e @ (crate::Error::Unsupported(_) | crate::Error::ZeroMeanPhoton)) => {
                (None, Some(e.to_string()))
            }
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };
    Ok(ComputeOutput {
        state: spec.clone(),
        report,
        quantifiers,
        quantifiers_unavailable,
    })
}

/// FNV-1a over the canonical config string; stamped into CSV metadata so a
/// file records the numeric configuration that produced it.
pub fn config_hash(cfg: &QuadratureConfig) -> u64 {
    let text = format!(
        "radius_margin={};target_rel_tol={};max_subdivisions={};floor_eps={}",
        cfg.radius_margin, cfg.target_rel_tol, cfg.max_subdivisions, cfg.floor_eps
    );
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Write a CSV file: one `#` metadata line, a header row, then data rows.
/// All floats use the shortest round-trip representation, so output is
/// byte-identical across runs and thread counts.
pub fn write_csv(
    path: &Path,
    meta: &str,
    header: &[&str],
    rows: &[Vec<String>],
    cfg: &QuadratureConfig,
) -> Result<()> {
    let mut out = Vec::new();
    writeln!(
        out,
        "# cvcomplexity {TOOL_VERSION} {meta} config_hash={:016x} rel_tol={} radius_margin={} max_subdivisions={}",
        config_hash(cfg),
        cfg.target_rel_tol,
        cfg.radius_margin,
        cfg.max_subdivisions
    )?;
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        for v in row {
            debug_assert!(!v.contains("NaN") && !v.contains("inf"), "non-finite CSV value");
        }
        writeln!(out, "{}", row.join(","))?;
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Shortest round-trip decimal form of a float; rejects non-finite values.
pub fn fmt_f64(v: f64) -> String {
    assert!(v.is_finite(), "refusing to write non-finite value {v}");
    format!("{v}")
}
