use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lgdot::commands::{diagnostics, run_evolve, run_figure, run_sweep};
use lgdot::config::{parse_config, RunConfig};
use lgdot::validation::{render_table, run_suite, SuiteOptions};
use lgdot::{CliError, CliResult, FigureId};

/// Leggett-Garg inequalities for photon pairs from a quantum-dot cascade.
#[derive(Parser)]
#[command(name = "lgdot", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// K(t), K(2t), K+ and K− over the configured time grid.
    Evolve {
        #[arg(long)]
        config: PathBuf,
        /// Overrides run.output_dir.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One LG curve per value of the configured sweep axis, plus a summary.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerates the data and plot behind one figure.
    Figure {
        id: FigureId,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Runs the numerical self-checks; exits 1 if any fails.
    Validate {
        #[arg(long, hide = true)]
        corrupt_propagator: bool,
    },
}

fn load(path: &Path, out: Option<PathBuf>) -> CliResult<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let parsed = parse_config(&text)?;
    for (key, value) in &parsed.defaults {
        eprintln!("default: {key} = {value}");
    }
    let mut cfg = parsed.config;
    if let Some(dir) = out {
        cfg.output_dir = dir;
    }
    for note in diagnostics(&cfg) {
        eprintln!("warning: {note}");
    }
    Ok(cfg)
}

fn report(written: &[PathBuf]) {
    for p in written {
        println!("wrote {}", p.display());
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Evolve { config, out } => {
            let cfg = load(&config, out)?;
            if cfg.sweep.is_some() {
                eprintln!("note: evolve ignores run.sweep_axis/run.sweep_values");
            }
            report(&run_evolve(&cfg, "evolve", "K+ and K−")?);
        }
        Command::Sweep { config, out } => {
            let cfg = load(&config, out)?;
            report(&run_sweep(&cfg, "sweep", "K− across the sweep")?);
        }
        Command::Figure { id, out } => report(&run_figure(id, &out)?),
        Command::Validate { corrupt_propagator } => {
            let results = run_suite(SuiteOptions { corrupt_propagator });
            print!("{}", render_table(&results));
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                return Err(CliError::Validation(format!("{failed} of {} checks failed", results.len())));
            }
            println!("all {} checks passed", results.len());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
