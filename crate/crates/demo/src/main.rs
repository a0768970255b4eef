use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use proxkit_demo::{run_inpaint, write_outputs, DemoConfig, DemoError};

/// Total-variation inpainting demo: reconstruct a masked, noisy image and
/// report reconstruction quality.
#[derive(Parser)]
#[command(name = "demo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a phantom, degrade it, reconstruct it three ways, and
    /// write images, traces, and a summary to the output directory.
    Inpaint(InpaintArgs),
    /// Run quick numeric self-checks and exit nonzero on any failure.
    Selftest,
}

#[derive(Args)]
struct InpaintArgs {
    /// Image height in pixels (at least 8).
    #[arg(long, default_value_t = 64)]
    rows: usize,
    /// Image width in pixels (at least 8).
    #[arg(long, default_value_t = 64)]
    cols: usize,
    /// Probability that a pixel is observed, in (0, 1].
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Gaussian noise level on observed pixels.
    #[arg(long, default_value_t = 20.0 / 255.0)]
    sigma: f64,
    /// Data-fidelity weight for Problem II.
    #[arg(long, default_value_t = 10.0)]
    lambda: f64,
    /// Iteration cap for each solver run.
    #[arg(long, default_value_t = 100)]
    maxit: usize,
    /// Relative-variation stopping tolerance.
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Seed for the phantom and the degradation.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output directory (created if missing).
    #[arg(long, default_value = "out")]
    outdir: PathBuf,
    /// 0 = silent, 1 = per-solve summaries, 2 = per-iteration output.
    #[arg(long, default_value_t = 0)]
    verbose: u8,
}

impl From<InpaintArgs> for DemoConfig {
    fn from(a: InpaintArgs) -> Self {
        DemoConfig {
            rows: a.rows,
            cols: a.cols,
            p: a.p,
            sigma: a.sigma,
            lambda: a.lambda,
            maxit: a.maxit,
            tol: a.tol,
            seed: a.seed,
            outdir: a.outdir,
            verbose: a.verbose,
        }
    }
}

fn main() -> ExitCode {
    // clap exits with code 2 on unknown flags or malformed values.
    let cli = Cli::parse();
    match cli.command {
        Command::Inpaint(args) => {
            let cfg = DemoConfig::from(args);
            if let Err(err) = cfg.validate() {
                eprintln!("error: {err}");
                return ExitCode::from(2);
            }
            match run_inpaint(&cfg).and_then(|report| {
                write_outputs(&cfg, &report)?;
                Ok(report)
            }) {
                Ok(report) => {
                    for line in proxkit_demo::summary(&report) {
                        println!("{line}");
                    }
                    println!("outputs written to {}", cfg.outdir.display());
                    ExitCode::SUCCESS
                }
                Err(DemoError::Config(msg)) => {
                    eprintln!("error: invalid configuration: {msg}");
                    ExitCode::from(2)
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Selftest => {
            if proxkit_demo::run_selftest() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
