use crate::error::{Error, Result};
use crate::function::{FunctionObject, ProblemSpec};
use crate::params::{SolveResult, SolverParams};

use super::douglas_rachford;

/// Minimize a sum of `K >= 2` prox-capable terms by Douglas-Rachford on the
/// K-fold product space.
///
/// The problem `min_x sum_k f_k(x)` is rewritten over
/// `(x_1, .., x_K)` as
///
/// ```text
///     min  sum_k f_k(x_k)  +  i_D(x_1, .., x_K)
/// ```
///
/// where `i_D` is the indicator of the diagonal `x_1 = .. = x_K`. The first
/// term is separable — its prox applies each `f_k`'s prox to its own block —
/// and the prox of `i_D` replaces every block by the blockwise mean. Both
/// are prox-capable, so a single [`douglas_rachford`] run solves the
/// product problem; the first block of its solution is returned.
///
/// Because the diagonal indicator sits in the `f2` slot, every recorded
/// iterate is exactly consensual and the trace equals the true objective
/// `sum_k f_k(x)` at each iteration.
pub fn solve_sum(x0: &[f64], problem: &ProblemSpec, params: &SolverParams) -> Result<SolveResult> {
    let n = problem.dimension();
    if x0.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x0.len(),
        });
    }
    let k = problem.functions().len();
    if k < 2 {
        return Err(Error::InvalidArgument(
            "solve_sum needs at least two functions; call the prox directly for one".into(),
        ));
    }
    for f in problem.functions() {
        if !f.has_prox() {
            return Err(Error::MissingCapability {
                what: "solve_sum",
                capability: "proximity operator on every function",
            });
        }
    }

    let terms: Vec<FunctionObject> = problem.functions().to_vec();
    let terms_eval = terms.clone();

    let separable = FunctionObject::from_prox(
        move |xs: &[f64]| {
            let mut total = 0.0;
            for (idx, f) in terms_eval.iter().enumerate() {
                let v = f.eval(&xs[idx * n..(idx + 1) * n]);
                if v == f64::INFINITY {
                    return f64::INFINITY;
                }
                total += v;
            }
            total
        },
        move |xs: &[f64], tau: f64| {
            let mut out = Vec::with_capacity(xs.len());
            for (idx, f) in terms.iter().enumerate() {
                let prox = f.prox_fn().expect("checked prox-capable above");
                out.extend(prox(&xs[idx * n..(idx + 1) * n], tau));
            }
            out
        },
    );

    let blocks = k;
    let diagonal = FunctionObject::from_prox(
        move |xs: &[f64]| {
            let first = &xs[0..n];
            for idx in 1..blocks {
                if xs[idx * n..(idx + 1) * n] != *first {
                    return f64::INFINITY;
                }
            }
            0.0
        },
        move |xs: &[f64], _tau: f64| {
            let mut mean = vec![0.0; n];
            for idx in 0..blocks {
                for (m, v) in mean.iter_mut().zip(&xs[idx * n..(idx + 1) * n]) {
                    *m += v;
                }
            }
            for m in mean.iter_mut() {
                *m /= blocks as f64;
            }
            let mut out = Vec::with_capacity(xs.len());
            for _ in 0..blocks {
                out.extend_from_slice(&mean);
            }
            out
        },
    );

    let mut x0_prod = Vec::with_capacity(k * n);
    for _ in 0..k {
        x0_prod.extend_from_slice(x0);
    }

    let inner = douglas_rachford(&x0_prod, &separable, &diagonal, params)?;
    Ok(SolveResult {
        solution: inner.solution[0..n].to_vec(),
        trace: inner.trace,
        iterations: inner.iterations,
        stop_reason: inner.stop_reason,
    })
}
