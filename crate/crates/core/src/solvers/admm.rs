use crate::error::Result;
use crate::function::FunctionObject;
use crate::harness::IterationLog;
use crate::operator::LinearOperator;
use crate::params::{SolveResult, SolverParams, StopReason};

use super::{require_prox, require_prox_l};

/// ADMM (scaled dual form) for `min f1(x) + f2(L x)`.
///
/// `f1` must provide the prox composed with the linear map
/// ([`FunctionObject::from_prox_l`]):
///
/// ```text
///     proxL_{tau f1}(z) = argmin_x  tau*f1(x) + 0.5*||L x - z||^2
/// ```
///
/// and `f2` an ordinary prox. With `w` the scaled dual variable, each
/// iteration runs
///
/// ```text
///     x <- proxL_{gamma f1}(v - w)
///     s = L x
///     v <- prox_{gamma f2}(s + w)
///     w <- w + s - v
/// ```
///
/// Passing `l = None` uses the identity map, which reduces the scheme to
/// plain two-operator ADMM. The trace records `f1(x_k) + f2(L x_k)`.
pub fn admm(
    x0: &[f64],
    f1: &FunctionObject,
    f2: &FunctionObject,
    l: Option<&LinearOperator>,
    params: &SolverParams,
) -> Result<SolveResult> {
    params.validate()?;
    let prox1 = require_prox_l(f1, "admm")?;
    let prox2 = require_prox(f2, "admm")?;
    let identity = LinearOperator::identity();
    let l = l.unwrap_or(&identity);

    let gamma = params.gamma;
    let mut log = IterationLog::new("admm", params);
    let mut x = x0.to_vec();
    let mut v = l.forward(x0);
    let mut w = vec![0.0; v.len()];
    let mut stop_reason = StopReason::MaxIterations;

    for _ in 0..params.maxit {
        let target: Vec<f64> = v.iter().zip(&w).map(|(vi, wi)| vi - wi).collect();
        x = prox1(&target, gamma);
        let s = l.forward(&x);
        let sw: Vec<f64> = s.iter().zip(&w).map(|(si, wi)| si + wi).collect();
        v = prox2(&sw, gamma);
        for ((wi, si), vi) in w.iter_mut().zip(&s).zip(&v) {
            *wi += si - vi;
        }
        if log.record(f1.eval(&x) + f2.eval(&s)) {
            stop_reason = StopReason::Tolerance;
            break;
        }
    }

    Ok(log.finish(x, stop_reason))
}
