use crate::error::{Error, Result};

/// How much the iterative routines print.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Verbosity {
    /// Print nothing.
    #[default]
    Silent,
    /// Print a one-line summary when the run finishes.
    Summary,
    /// Print the objective at every iteration, then the summary.
    PerIteration,
}

/// Step scheme used by [`forward_backward`](crate::solvers::forward_backward).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FbMethod {
    /// Plain proximal gradient with relaxation `lambda`.
    Ista,
    /// Accelerated proximal gradient with the usual momentum sequence
    /// `t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2`.
    #[default]
    Fista,
}

/// Shared solver knobs.
///
/// `gamma` is the proximal step size, `lambda` the relaxation (its
/// admissible range depends on the solver), `tol` the relative-variation
/// stopping tolerance, and `maxit` the iteration cap.
#[derive(Clone, Debug)]
pub struct SolverParams {
    pub gamma: f64,
    pub lambda: f64,
    pub tol: f64,
    pub maxit: usize,
    pub verbosity: Verbosity,
    pub method: FbMethod,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            gamma: 1.0,
            lambda: 1.0,
            tol: 1e-4,
            maxit: 200,
            verbosity: Verbosity::Silent,
            method: FbMethod::Fista,
        }
    }
}

impl SolverParams {
    /// Checks the knobs every solver agrees on; solver-specific ranges
    /// (e.g. `lambda`, step-size bounds) are validated by each solver.
    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0) || !self.gamma.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "gamma must be positive and finite, got {}",
                self.gamma
            )));
        }
        if !(self.tol >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "tol must be nonnegative, got {}",
                self.tol
            )));
        }
        if self.maxit == 0 {
            return Err(Error::InvalidArgument("maxit must be at least 1".into()));
        }
        Ok(())
    }
}

/// Why a solver stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// The relative objective variation dropped below `tol`.
    Tolerance,
    /// The iteration cap was reached first.
    MaxIterations,
}

/// Outcome of a solver run.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub solution: Vec<f64>,
    /// Objective value recorded at each iteration, in order.
    pub trace: Vec<f64>,
    /// Number of iterations performed (equals `trace.len()`).
    pub iterations: usize,
    pub stop_reason: StopReason,
}

/// Floor used in the relative-variation test so a vanishing objective does
/// not divide by zero.
pub(crate) const OBJECTIVE_FLOOR: f64 = 2.2e-16;

/// Relative-variation stopping rule.
///
/// Returns true when `|current - previous| / max(|current|, 2.2e-16) < tol`.
/// With `tol = 0` it never fires, so runs are capped by `maxit` alone.
/// Callers skip the test (rather than call this) while either value is
/// nonfinite, e.g. before an iterate has entered an indicator's domain.
pub fn should_stop(current: f64, previous: f64, tol: f64) -> bool {
    (current - previous).abs() / current.abs().max(OBJECTIVE_FLOOR) < tol
}
