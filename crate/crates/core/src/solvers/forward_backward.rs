use crate::error::{Error, Result};
use crate::function::FunctionObject;
use crate::harness::IterationLog;
use crate::params::{FbMethod, SolveResult, SolverParams, StopReason};

use super::{require_grad, require_lipschitz, require_prox, EDGE};

/// Forward-backward splitting for `min f1(x) + f2(x)` with `f1`
/// prox-capable and `f2` differentiable with a `beta`-Lipschitz gradient.
///
/// Each iteration takes a gradient step on `f2` and a proximal step on
/// `f1`:
///
/// ```text
///     x <- x + lambda * ( prox_{gamma f1}( x - gamma grad f2(x) ) - x )
/// ```
///
/// for [`FbMethod::Ista`] (relaxation `lambda` in `(0, 1]`), or the
/// accelerated variant for [`FbMethod::Fista`], which applies the proximal
/// gradient step at an extrapolated point and updates the momentum sequence
/// `t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2` (the relaxation is not used).
///
/// The step size must satisfy `gamma` in `(0, 2/beta)`; the endpoints are
/// rejected with a small safety margin. The trace records
/// `f1(x_k) + f2(x_k)` at each iterate.
pub fn forward_backward(
    x0: &[f64],
    f1: &FunctionObject,
    f2: &FunctionObject,
    params: &SolverParams,
) -> Result<SolveResult> {
    params.validate()?;
    let prox1 = require_prox(f1, "forward_backward")?;
    let grad2 = require_grad(f2, "forward_backward")?;
    let beta = require_lipschitz(f2, "forward_backward")?;

    let gamma = params.gamma;
    if gamma < EDGE || gamma > 2.0 / beta - EDGE {
        return Err(Error::InvalidArgument(format!(
            "forward_backward: gamma must lie in (0, 2/beta) = (0, {}), got {}",
            2.0 / beta,
            gamma
        )));
    }
    if params.method == FbMethod::Ista && (params.lambda < EDGE || params.lambda > 1.0) {
        return Err(Error::InvalidArgument(format!(
            "forward_backward: ISTA relaxation lambda must lie in (0, 1], got {}",
            params.lambda
        )));
    }

    let mut log = IterationLog::new("forward_backward", params);
    let mut x = x0.to_vec();
    let mut stop_reason = StopReason::MaxIterations;

    match params.method {
        FbMethod::Ista => {
            let lambda = params.lambda;
            for _ in 0..params.maxit {
                let g = grad2(&x);
                let z: Vec<f64> = x.iter().zip(&g).map(|(xi, gi)| xi - gamma * gi).collect();
                let p = prox1(&z, gamma);
                for (xi, pi) in x.iter_mut().zip(&p) {
                    *xi += lambda * (pi - *xi);
                }
                if log.record(f1.eval(&x) + f2.eval(&x)) {
                    stop_reason = StopReason::Tolerance;
                    break;
                }
            }
        }
        FbMethod::Fista => {
            // u is the extrapolated point the proximal gradient step is
            // applied at; x holds the previous iterate.
            let mut u = x.clone();
            let mut t = 1.0_f64;
            for _ in 0..params.maxit {
                let g = grad2(&u);
                let z: Vec<f64> = u.iter().zip(&g).map(|(ui, gi)| ui - gamma * gi).collect();
                let p = prox1(&z, gamma);
                let t_next = 0.5 * (1.0 + (1.0 + 4.0 * t * t).sqrt());
                let mu = (t - 1.0) / t_next;
                u = p
                    .iter()
                    .zip(&x)
                    .map(|(pi, xi)| pi + mu * (pi - xi))
                    .collect();
                x = p;
                t = t_next;
                if log.record(f1.eval(&x) + f2.eval(&x)) {
                    stop_reason = StopReason::Tolerance;
                    break;
                }
            }
        }
    }

    Ok(log.finish(x, stop_reason))
}
