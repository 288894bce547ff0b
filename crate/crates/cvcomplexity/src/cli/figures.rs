//! Figure-data emission: fixed parameter grids for the standard plots, one
//! CSV per curve. Grid points run in parallel but rows are assembled in grid
//! order, so files are byte-identical across thread counts.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functionals::{s_complexity, ComplexityReport};
use crate::quadrature::QuadratureConfig;
use crate::states::{validate, StateSpec};

use super::{fmt_f64, write_csv};

/// Known figure identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig1a,
    Fig1b,
    Fig2,
    Fig3PhaseAveraged,
    Fig4,
    Fig5FockS,
}

impl std::str::FromStr for FigureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1a" => Ok(FigureId::Fig1a),
            "fig1b" => Ok(FigureId::Fig1b),
            "fig2" => Ok(FigureId::Fig2),
            "fig3_phase_averaged" => Ok(FigureId::Fig3PhaseAveraged),
            "fig4" => Ok(FigureId::Fig4),
            "fig5_fock_s" => Ok(FigureId::Fig5FockS),
            other => Err(Error::BadConfig(format!(
                "unknown figure id '{other}' (expected fig1a, fig1b, fig2, fig3_phase_averaged, fig4, fig5_fock_s)"
            ))),
        }
    }
}

impl FigureId {
    pub const ALL: [&'static str; 6] = [
        "fig1a",
        "fig1b",
        "fig2",
        "fig3_phase_averaged",
        "fig4",
        "fig5_fock_s",
    ];
}

fn grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
        .collect()
}

/// Evaluate C_s over one curve in parallel, preserving order.
fn curve<F>(xs: &[f64], s: f64, cfg: &QuadratureConfig, make: F) -> Result<Vec<ComplexityReport>>
where
    F: Fn(f64) -> StateSpec + Sync,
{
    let out: Vec<Result<ComplexityReport>> = xs
        .par_iter()
        .map(|&x| s_complexity(&validate(&make(x))?, s, cfg))
        .collect();
    out.into_iter().collect()
}

fn rows_basic(xs: &[f64], reps: &[ComplexityReport]) -> Vec<Vec<String>> {
    xs.iter()
        .zip(reps)
        .map(|(x, r)| {
            vec![
                fmt_f64(*x),
                fmt_f64(r.entropy),
                fmt_f64(r.fisher),
                fmt_f64(r.complexity),
            ]
        })
        .collect()
}

/// Write every CSV for `id` into `out_dir`. On any numerical failure no
/// partial file is left behind (rows are fully computed before writing).
pub fn run_figures(id: FigureId, out_dir: &Path, cfg: &QuadratureConfig) -> Result<Vec<String>> {
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    match id {
        FigureId::Fig1a => {
            // C vs n̄ at fixed squeezing
            let nbars = grid(0.0, 10.0, 101);
            for r in [0.5, 1.0, 1.5, 2.0] {
                let reps = curve(&nbars, -1.0, cfg, |nbar| {
                    StateSpec::gaussian(nbar, r, 0.0, C64::new(0.0, 0.0))
                })?;
                let file = out_dir.join(format!("fig1a_r{r}.csv"));
                write_csv(
                    &file,
                    &format!("figure=fig1a r={r}"),
                    &["nbar", "entropy", "fisher", "complexity"],
                    &rows_basic(&nbars, &reps),
                    cfg,
                )?;
                written.push(file.display().to_string());
            }
        }
        FigureId::Fig1b => {
            // semilog C vs r at fixed temperature
            let rs = grid(0.0, 5.0, 101);
            for nbar in [0.1, 1.0, 10.0] {
                let reps = curve(&rs, -1.0, cfg, |r| {
                    StateSpec::gaussian(nbar, r, 0.0, C64::new(0.0, 0.0))
                })?;
                let rows: Vec<Vec<String>> = rs
                    .iter()
                    .zip(&reps)
                    .map(|(r, rep)| {
                        vec![
                            fmt_f64(*r),
                            fmt_f64(rep.entropy),
                            fmt_f64(rep.fisher),
                            fmt_f64(rep.complexity),
                            fmt_f64(rep.complexity.log10()),
                        ]
                    })
                    .collect();
                let file = out_dir.join(format!("fig1b_nbar{nbar}.csv"));
                write_csv(
                    &file,
                    &format!("figure=fig1b nbar={nbar}"),
                    &["r", "entropy", "fisher", "complexity", "log10_complexity"],
                    &rows,
                    cfg,
                )?;
                written.push(file.display().to_string());
            }
        }
        FigureId::Fig2 => {
            // photon-added coherent complexity vs amplitude
            let betas = grid(0.05, 4.0, 80);
            let reps = curve(&betas, -1.0, cfg, |b| {
                StateSpec::photon_added_coherent(C64::new(b, 0.0))
            })?;
            let file = out_dir.join("fig2_photon_added_coherent.csv");
            write_csv(
                &file,
                "figure=fig2",
                &["beta", "entropy", "fisher", "complexity"],
                &rows_basic(&betas, &reps),
                cfg,
            )?;
            written.push(file.display().to_string());
        }
        FigureId::Fig3PhaseAveraged => {
            // s-ordered complexity of phase-averaged coherent states;
            // capped at s = 0.9: the integrands diverge toward s = 1
            let ss = grid(-1.0, 0.9, 39);
            for b in [0.5, 1.0, 1.5] {
                let out: Vec<Result<ComplexityReport>> = ss
                    .par_iter()
                    .map(|&s| {
                        s_complexity(
                            &validate(&StateSpec::phase_averaged_coherent(b))?,
                            s,
                            cfg,
                        )
                    })
                    .collect();
                let reps: Vec<ComplexityReport> = out.into_iter().collect::<Result<_>>()?;
                let file = out_dir.join(format!("fig3_phase_averaged_beta{b}.csv"));
                write_csv(
                    &file,
                    &format!("figure=fig3_phase_averaged beta={b}"),
                    &["s", "entropy", "fisher", "complexity"],
                    &rows_basic(&ss, &reps),
                    cfg,
                )?;
                written.push(file.display().to_string());
            }
        }
        FigureId::Fig4 => {
            // cat states vs the incoherent mixture, real amplitudes
            let betas = grid(0.05, 3.0, 60);
            let phis: [(f64, &str); 6] = [
                (0.0, "0"),
                (PI / 4.0, "pi_4"),
                (PI / 2.0, "pi_2"),
                (3.0 * PI / 4.0, "3pi_4"),
                (9.0 * PI / 10.0, "9pi_10"),
                (PI, "pi"),
            ];
            let reps = curve(&betas, -1.0, cfg, |b| {
                StateSpec::coherent_mixture(C64::new(b, 0.0))
            })?;
            let file = out_dir.join("fig4_mixture.csv");
            write_csv(
                &file,
                "figure=fig4 curve=mixture",
                &["beta", "entropy", "fisher", "complexity"],
                &rows_basic(&betas, &reps),
                cfg,
            )?;
            written.push(file.display().to_string());
            for (phi, label) in phis {
                let reps = curve(&betas, -1.0, cfg, |b| {
                    StateSpec::cat(C64::new(b, 0.0), phi)
                })?;
                let file = out_dir.join(format!("fig4_cat_phi_{label}.csv"));
                write_csv(
                    &file,
                    &format!("figure=fig4 curve=cat phi={phi}"),
                    &["beta", "entropy", "fisher", "complexity"],
                    &rows_basic(&betas, &reps),
                    cfg,
                )?;
                written.push(file.display().to_string());
            }
        }
        FigureId::Fig5FockS => {
            // s-ordered Fock complexity, s in [-20, -1]
            let ss = grid(-20.0, -1.0, 77);
            for k in [1u32, 2, 3, 4] {
                let out: Vec<Result<ComplexityReport>> = ss
                    .par_iter()
                    .map(|&s| s_complexity(&validate(&StateSpec::fock(k))?, s, cfg))
                    .collect();
                let reps: Vec<ComplexityReport> = out.into_iter().collect::<Result<_>>()?;
                let file = out_dir.join(format!("fig5_fock_k{k}.csv"));
                write_csv(
                    &file,
                    &format!("figure=fig5_fock_s k={k}"),
                    &["s", "entropy", "fisher", "complexity"],
                    &rows_basic(&ss, &reps),
                    cfg,
                )?;
                written.push(file.display().to_string());
            }
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_ids_parse() {
        for id in FigureId::ALL {
            assert!(id.parse::<FigureId>().is_ok());
        }
        assert!("fig9".parse::<FigureId>().is_err());
    }

    #[test]
    fn grids_match_captions() {
        let g = grid(0.0, 10.0, 101);
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 0.0);
        assert_eq!(*g.last().unwrap(), 10.0);
        let s = grid(-20.0, -1.0, 77);
        assert_eq!(s[0], -20.0);
        assert_eq!(*s.last().unwrap(), -1.0);
        assert!((s[1] - (-19.75)).abs() < 1e-12);
    }
}
