use std::fs;

use proxkit::{SolveResult, StopReason};

use crate::{
    ball_radius, compute_snr, degrade, make_phantom, solve_problem1, solve_problem2, write_pgm,
    write_summary, write_trace_csv, DegradedInstance, DemoConfig, Problem2Algorithm, Result,
};

/// Everything one inpainting run produced, before any file is written.
#[derive(Debug)]
pub struct InpaintReport {
    pub instance: DegradedInstance,
    pub epsilon: f64,
    pub p1_dr: SolveResult,
    pub p2_fb: SolveResult,
    pub p2_dr: SolveResult,
    pub snr_observed: f64,
    pub snr_p1_dr: f64,
    pub snr_p2_fb: f64,
    pub snr_p2_dr: f64,
}

/// Run the whole pipeline in memory: phantom, degradation, the three
/// solves, and the SNRs. No files are touched; pair with
/// [`write_outputs`] for the on-disk artifacts.
pub fn run_inpaint(cfg: &DemoConfig) -> Result<InpaintReport> {
    cfg.validate()?;
    let original = make_phantom(cfg.rows, cfg.cols, cfg.seed);
    let instance = degrade(&original, cfg.p, cfg.sigma, cfg.seed + 1);

    let p1_dr = solve_problem1(&instance, cfg)?;
    let p2_fb = solve_problem2(&instance, cfg, Problem2Algorithm::ForwardBackward)?;
    let p2_dr = solve_problem2(&instance, cfg, Problem2Algorithm::DouglasRachford)?;

    let snr_observed = compute_snr(&instance.original, &instance.observed)?;
    let snr_p1_dr = compute_snr(&instance.original, &p1_dr.solution)?;
    let snr_p2_fb = compute_snr(&instance.original, &p2_fb.solution)?;
    let snr_p2_dr = compute_snr(&instance.original, &p2_dr.solution)?;

    Ok(InpaintReport {
        epsilon: ball_radius(cfg),
        instance,
        p1_dr,
        p2_fb,
        p2_dr,
        snr_observed,
        snr_p1_dr,
        snr_p2_fb,
        snr_p2_dr,
    })
}

fn stop_label(reason: StopReason) -> &'static str {
    match reason {
        StopReason::Tolerance => "tolerance",
        StopReason::MaxIterations => "maxit",
    }
}

/// Write the run's artifacts into `cfg.outdir` (created if missing):
/// original, observed, and reconstructed images as PGM, the three
/// objective traces as CSV, and `summary.txt` with SNRs, iteration
/// counts, and stop reasons.
pub fn write_outputs(cfg: &DemoConfig, report: &InpaintReport) -> Result<()> {
    fs::create_dir_all(&cfg.outdir)?;
    let dir = &cfg.outdir;
    let (rows, cols) = (cfg.rows, cfg.cols);

    write_pgm(&dir.join("original.pgm"), &report.instance.original, rows, cols)?;
    write_pgm(&dir.join("observed.pgm"), &report.instance.observed, rows, cols)?;
    write_pgm(&dir.join("sol_p1_dr.pgm"), &report.p1_dr.solution, rows, cols)?;
    write_pgm(&dir.join("sol_p2_fb.pgm"), &report.p2_fb.solution, rows, cols)?;
    write_pgm(&dir.join("sol_p2_dr.pgm"), &report.p2_dr.solution, rows, cols)?;

    write_trace_csv(&dir.join("trace_p1_dr.csv"), &report.p1_dr.trace)?;
    write_trace_csv(&dir.join("trace_p2_fb.csv"), &report.p2_fb.trace)?;
    write_trace_csv(&dir.join("trace_p2_dr.csv"), &report.p2_dr.trace)?;

    let entries: Vec<(String, String)> = vec![
        ("snr_observed".into(), format!("{:.6}", report.snr_observed)),
        ("snr_p1_dr".into(), format!("{:.6}", report.snr_p1_dr)),
        ("snr_p2_fb".into(), format!("{:.6}", report.snr_p2_fb)),
        ("snr_p2_dr".into(), format!("{:.6}", report.snr_p2_dr)),
        ("iterations_p1_dr".into(), report.p1_dr.iterations.to_string()),
        ("iterations_p2_fb".into(), report.p2_fb.iterations.to_string()),
        ("iterations_p2_dr".into(), report.p2_dr.iterations.to_string()),
        ("stop_p1_dr".into(), stop_label(report.p1_dr.stop_reason).into()),
        ("stop_p2_fb".into(), stop_label(report.p2_fb.stop_reason).into()),
        ("stop_p2_dr".into(), stop_label(report.p2_dr.stop_reason).into()),
    ];
    write_summary(&dir.join("summary.txt"), &entries)?;
    Ok(())
}

/// The summary entries as printed lines, identical to the contents of
/// `summary.txt`.
pub fn summary(report: &InpaintReport) -> Vec<String> {
    vec![
        format!("snr_observed={:.6}", report.snr_observed),
        format!("snr_p1_dr={:.6}", report.snr_p1_dr),
        format!("snr_p2_fb={:.6}", report.snr_p2_fb),
        format!("snr_p2_dr={:.6}", report.snr_p2_dr),
        format!("iterations_p1_dr={}", report.p1_dr.iterations),
        format!("iterations_p2_fb={}", report.p2_fb.iterations),
        format!("iterations_p2_dr={}", report.p2_dr.iterations),
        format!("stop_p1_dr={}", stop_label(report.p1_dr.stop_reason)),
        format!("stop_p2_fb={}", stop_label(report.p2_fb.stop_reason)),
        format!("stop_p2_dr={}", stop_label(report.p2_dr.stop_reason)),
    ]
}
