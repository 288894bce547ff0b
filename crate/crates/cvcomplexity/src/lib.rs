//! Phase-space statistical complexity of single-mode continuous-variable
//! quantum states.
//!
//! The central quantity is
//!
//! ```text
//! C(ρ) = e^{S_W(ρ) − 1} · I(ρ)
//! ```
//!
//! where `S_W` is the Wehrl entropy of the Husimi function Q(α|ρ) = ⟨α|ρ|α⟩
//! (its spread in phase space) and `I` is the Fisher information of Q with
//! respect to phase-space location (its localization; the trace of the Fisher
//! matrix for estimating a displacement). The two pull in opposite
//! directions, and the entropy-power isoperimetric inequality pins the
//! product: C(ρ) ≥ 1 for every state, with equality exactly on displaced
//! thermal states. Squeezing raises C (cosh r for the squeezed vacuum),
//! photon number raises it (k! e^{k−kψ(k+1)} for |k⟩), and classical noise
//! alone never does.
//!
//! The crate provides:
//!
//! * a validated state model ([`states`]): coherent, thermal, Fock, general
//!   Gaussian, photon-added thermal/coherent, cat, coherent mixtures,
//!   phase-averaged coherent, and arbitrary Fock-basis density matrices;
//! * Husimi functions with analytic gradients, and s-ordered distributions
//!   W_s where they are pointwise nonnegative ([`phasespace`]);
//! * deterministic adaptive Gauss–Kronrod quadrature over the phase plane
//!   with radial fast paths ([`quadrature`]);
//! * Wehrl entropy, Fisher information, complexity, and the s-ordered
//!   generalization C_s ([`functionals`]);
//! * Gaussian/Fock closed forms and the energy-constrained optimizer
//!   ([`closed_form`]);
//! * comparison nonclassicality quantifiers: Mandel Q, nonclassical depth,
//!   skew-information nonclassicality, Wigner negativity, Fock
//!   non-Gaussianity distances ([`quantifiers`]);
//! * a CLI layer with `compute`, `sweep`, `figures`, `verify`
//!   ([`cli`], wrapped by the `cvcomplexity` binary).
//!
//! # Quick start
//!
//! ```
//! use cvcomplexity::{validate, complexity, QuadratureConfig, StateSpec};
//! use num_complex::Complex64;
//!
//! let cfg = QuadratureConfig::default();
//! let cat = validate(&StateSpec::cat(Complex64::new(1.0, 0.0), 0.0)).unwrap();
//! let report = complexity(&cat, &cfg).unwrap();
//! assert!(report.complexity >= 1.0 - 1e-9);
//! assert!((report.fisher - 1.0).abs() < 1e-6); // pure state
//! ```
//!
//! Runnable walkthroughs live in `examples/` (`cargo run --release
//! --example gaussian_landscape`, etc.).

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod functionals;
pub mod phasespace;
pub mod quadrature;
pub mod quantifiers;
pub mod sampling;
pub mod special;
pub mod states;

pub use error::{Error, Result};
pub use functionals::{
    complexity, complexity_via_quadrature, fisher_information, s_complexity,
    s_complexity_via_quadrature, s_fisher_information, s_wehrl_entropy, wehrl_entropy,
    ComplexityReport, Method,
};
pub use phasespace::{OrderingBound, PhasePoint};
pub use quadrature::QuadratureConfig;
pub use states::{validate, CheckedState, ComplexParam, FockTruncation, StateSpec};
