//! Image inpainting demo built on `proxkit`.
//!
//! The pipeline generates a piecewise-constant grayscale phantom, hides a
//! random subset of its pixels and adds Gaussian noise to the rest, then
//! reconstructs the image two ways:
//!
//! * **Problem I** — minimize `TV(x)` subject to `||M x - y|| <= epsilon`
//!   (Douglas-Rachford with the TV prox and the masked-ball projection);
//! * **Problem II** — minimize `lambda * ||M x - y||^2 + TV(x)` (solved
//!   twice: forward-backward using the data gradient, and Douglas-Rachford
//!   using the data prox).
//!
//! `M` is the pixel mask and `y` the observed image. Outputs are 8-bit PGM
//! images, per-iteration objective traces as CSV, and a `key=value`
//! summary with SNRs, iteration counts, and stop reasons. Everything is
//! seeded, so a given configuration reproduces byte-identical outputs.

mod config;
mod degrade;
mod io;
mod metrics;
mod phantom;
mod problems;
mod run;
mod selftest;

pub use config::DemoConfig;
pub use degrade::{degrade, DegradedInstance};
pub use io::{write_pgm, write_summary, write_trace_csv};
pub use metrics::compute_snr;
pub use phantom::make_phantom;
pub use problems::{ball_radius, solve_problem1, solve_problem2, Problem2Algorithm};
pub use run::{run_inpaint, summary, write_outputs, InpaintReport};
pub use selftest::run_selftest;

use thiserror::Error;

/// Errors surfaced by the demo pipeline.
#[derive(Debug, Error)]
pub enum DemoError {
    /// A configuration value was out of range.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An underlying solver or operator failed.
    #[error(transparent)]
    Solver(#[from] proxkit::Error),

    /// Writing an output file failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, DemoError>;
