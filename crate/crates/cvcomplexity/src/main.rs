//! Thin command-line wrapper over the library's `cli` module.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input/validation error,
//! 3 numerical non-convergence.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cvcomplexity::cli::figures::{run_figures, FigureId};
use cvcomplexity::cli::sweep::{run_sweep, SweepSpec};
use cvcomplexity::cli::verify::{prop4, propositions, render, table2};
use cvcomplexity::cli::{read_state_spec, run_compute};
use cvcomplexity::{Error, QuadratureConfig};

#[derive(Parser)]
#[command(
    name = "cvcomplexity",
    version,
    about = "Phase-space complexity of single-mode continuous-variable quantum states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    numerics: Numerics,
    /// Emit machine-readable JSON where applicable (verify).
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sweeps and figure grids (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args)]
struct Numerics {
    /// Target relative tolerance of the adaptive quadrature.
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// Integration box half-width in units of the state's spread.
    #[arg(long, global = true)]
    radius_margin: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one state from a JSON spec and print a complexity report.
    Compute {
        /// Path to the state-spec JSON file.
        spec: PathBuf,
        /// Also compute the nonclassicality quantifier row.
        #[arg(long)]
        quantifiers: bool,
    },
    /// Run a parameter sweep described by a JSON file and write a CSV.
    Sweep {
        /// Path to the sweep JSON file.
        spec: PathBuf,
        /// Output CSV path.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Emit the data behind one of the standard figures as CSV files.
    Figures {
        /// fig1a | fig1b | fig2 | fig3_phase_averaged | fig4 | fig5_fock_s
        id: String,
        /// Output directory (created if missing).
        #[arg(short, long)]
        out_dir: PathBuf,
    },
    /// Run a verification suite and report per-check pass/fail.
    Verify {
        /// propositions | table2 | prop4
        suite: String,
        /// Mean photon number for the prop4 suite.
        #[arg(long, default_value_t = 1.0)]
        energy: f64,
    },
}

fn build_config(n: &Numerics) -> Result<QuadratureConfig, Error> {
    let mut cfg = QuadratureConfig::default();
    if let Some(t) = n.rel_tol {
        cfg.target_rel_tol = t;
    }
    if let Some(m) = n.radius_margin {
        cfg.radius_margin = m;
    }
    cfg.validated()
}

fn run(cli: Cli) -> Result<bool, Error> {
    let cfg = build_config(&cli.numerics)?;
    if let Some(threads) = cli.threads {
        // ignore failure when a pool already exists (tests call run twice)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match cli.command {
        Command::Compute { spec, quantifiers } => {
            let spec = read_state_spec(&spec)?;
            let out = run_compute(&spec, &cfg, quantifiers)?;
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(true)
        }
        Command::Sweep { spec, output } => {
            let text = std::fs::read_to_string(&spec)?;
            let sweep: SweepSpec = serde_json::from_str(&text)?;
            run_sweep(&sweep, &cfg, &output)?;
            eprintln!("wrote {}", output.display());
            Ok(true)
        }
        Command::Figures { id, out_dir } => {
            let id: FigureId = id.parse()?;
            let written = run_figures(id, &out_dir, &cfg)?;
            for f in written {
                eprintln!("wrote {f}");
            }
            Ok(true)
        }
        Command::Verify { suite, energy } => {
            let checks = match suite.as_str() {
                "propositions" => propositions(&cfg)?,
                "table2" => table2(&cfg)?,
                "prop4" => {
                    if energy.is_nan() || energy < 0.0 {
                        return Err(Error::BadParameter("energy must be >= 0".into()));
                    }
                    prop4(energy)?
                }
                other => {
                    return Err(Error::BadConfig(format!(
                        "unknown suite '{other}' (expected propositions, table2, prop4)"
                    )))
                }
            };
            let (text, all_passed) = render(&checks);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&checks)?);
            } else {
                print!("{text}");
            }
            Ok(all_passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
