//! Iteration bookkeeping shared by the solvers: objective trace, stopping
//! decision, and verbosity printing live here so each solver's loop stays
//! focused on its update rule.

use crate::params::{should_stop, SolveResult, SolverParams, StopReason, Verbosity};

pub(crate) struct IterationLog<'a> {
    name: &'static str,
    params: &'a SolverParams,
    trace: Vec<f64>,
}

impl<'a> IterationLog<'a> {
    pub fn new(name: &'static str, params: &'a SolverParams) -> Self {
        IterationLog {
            name,
            params,
            trace: Vec::with_capacity(params.maxit),
        }
    }

    /// Record one iteration's objective. Returns true when the
    /// relative-variation rule fires and the solver should stop.
    ///
    /// The comparison is skipped (never fires) on the first iteration and
    /// whenever either value is nonfinite — an iterate still outside an
    /// indicator's domain reports `+inf`, which says nothing about
    /// stagnation.
    pub fn record(&mut self, objective: f64) -> bool {
        if self.params.verbosity == Verbosity::PerIteration {
            println!(
                "{}: iter {:4}  objective {:.6e}",
                self.name,
                self.trace.len() + 1,
                objective
            );
        }
        let stop = match self.trace.last() {
            Some(&prev) if prev.is_finite() && objective.is_finite() => {
                should_stop(objective, prev, self.params.tol)
            }
            _ => false,
        };
        self.trace.push(objective);
        stop
    }

    /// Wrap up: build the result and print the summary line if requested.
    pub fn finish(self, solution: Vec<f64>, stop_reason: StopReason) -> SolveResult {
        if self.params.verbosity != Verbosity::Silent {
            let last = self.trace.last().copied().unwrap_or(f64::NAN);
            let why = match stop_reason {
                StopReason::Tolerance => "relative variation below tol",
                StopReason::MaxIterations => "maxit reached",
            };
            println!(
                "{}: stopped after {} iteration(s), objective {:.6e} ({})",
                self.name,
                self.trace.len(),
                last,
                why
            );
        }
        let iterations = self.trace.len();
        SolveResult {
            solution,
            trace: self.trace,
            iterations,
            stop_reason,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_stops_on_stagnation_and_counts_iterations() {
        let params = SolverParams {
            tol: 1e-3,
            ..Default::default()
        };
        let mut log = IterationLog::new("test", &params);
        assert!(!log.record(10.0)); // first value: nothing to compare against
        assert!(!log.record(5.0)); // 50% change
        assert!(log.record(5.0 + 1e-6)); // tiny relative change: stop
        let result = log.finish(vec![0.0], StopReason::Tolerance);
        assert_eq!(result.iterations, 3);
        assert_eq!(result.trace, vec![10.0, 5.0, 5.0 + 1e-6]);
        assert_eq!(result.stop_reason, StopReason::Tolerance);
    }

    #[test]
    fn log_ignores_infinite_objectives() {
        let params = SolverParams {
            tol: 1e-3,
            ..Default::default()
        };
        let mut log = IterationLog::new("test", &params);
        assert!(!log.record(f64::INFINITY));
        // Two equal infinities must not count as "converged".
        assert!(!log.record(f64::INFINITY));
        assert!(!log.record(3.0)); // first finite value: still no comparison
        assert!(log.record(3.0));
    }
}
