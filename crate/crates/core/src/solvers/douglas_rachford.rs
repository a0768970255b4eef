use crate::error::{Error, Result};
use crate::function::FunctionObject;
use crate::harness::IterationLog;
use crate::params::{SolveResult, SolverParams, StopReason};

use super::{require_prox, EDGE};

/// Douglas-Rachford splitting for `min f1(x) + f2(x)` where both terms are
/// prox-capable (neither needs to be smooth).
///
/// The iteration maintains an auxiliary point `y`:
///
/// ```text
///     x <- prox_{gamma f2}(y)
///     y <- y + lambda * ( prox_{gamma f1}(2x - y) - x )
/// ```
///
/// with relaxation `lambda` in `(0, 2)` and any `gamma > 0`. The `x`
/// sequence converges to a minimizer; the returned solution is the last
/// `x`. The trace records `f1(x_k) + f2(x_k)` — note `x_k` is always the
/// output of `prox_{gamma f2}`, so when `f2` is an indicator the iterates
/// are feasible for it by construction.
pub fn douglas_rachford(
    x0: &[f64],
    f1: &FunctionObject,
    f2: &FunctionObject,
    params: &SolverParams,
) -> Result<SolveResult> {
    params.validate()?;
    let prox1 = require_prox(f1, "douglas_rachford")?;
    let prox2 = require_prox(f2, "douglas_rachford")?;
    if params.lambda < EDGE || params.lambda > 2.0 - EDGE {
        return Err(Error::InvalidArgument(format!(
            "douglas_rachford: relaxation lambda must lie in (0, 2), got {}",
            params.lambda
        )));
    }

    let gamma = params.gamma;
    let lambda = params.lambda;
    let mut log = IterationLog::new("douglas_rachford", params);
    let mut y = x0.to_vec();
    let mut x = x0.to_vec();
    let mut stop_reason = StopReason::MaxIterations;

    for _ in 0..params.maxit {
        x = prox2(&y, gamma);
        let reflected: Vec<f64> = x.iter().zip(&y).map(|(xi, yi)| 2.0 * xi - yi).collect();
        let r = prox1(&reflected, gamma);
        for ((yi, ri), xi) in y.iter_mut().zip(&r).zip(&x) {
            *yi += lambda * (ri - xi);
        }
        if log.record(f1.eval(&x) + f2.eval(&x)) {
            stop_reason = StopReason::Tolerance;
            break;
        }
    }

    Ok(log.finish(x, stop_reason))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::norm2;
    use crate::prox::prox_l1;
    use crate::proj::proj_b2;
    use approx::assert_abs_diff_eq;

    fn l1_half() -> FunctionObject {
        FunctionObject::from_prox(
            |x: &[f64]| 0.5 * x.iter().map(|v| v.abs()).sum::<f64>(),
            |x: &[f64], tau: f64| prox_l1(x, 0.5 * tau, None).unwrap(),
        )
    }

    fn quad_to_two() -> FunctionObject {
        FunctionObject::from_prox(
            |x: &[f64]| 0.5 * x.iter().map(|v| (v - 2.0) * (v - 2.0)).sum::<f64>(),
            // prox of 0.5*||x - 2||^2 with weight tau: (v + 2*tau) / (1 + tau).
            |x: &[f64], tau: f64| x.iter().map(|v| (v + 2.0 * tau) / (1.0 + tau)).collect(),
        )
    }

    #[test]
    fn solves_the_scalar_lasso_without_gradients() {
        let params = SolverParams {
            tol: 0.0,
            maxit: 2000,
            ..Default::default()
        };
        let r = douglas_rachford(&[0.0], &l1_half(), &quad_to_two(), &params).unwrap();
        assert_abs_diff_eq!(r.solution[0], 1.5, epsilon = 1e-8);
    }

    #[test]
    fn handles_an_indicator_term() {
        // min ||x||_1 over the ball ||x - c|| <= 0.5 with c = (2, 0):
        // the solution slides toward the origin along the first axis, to
        // (1.5, 0).
        let center = vec![2.0, 0.0];
        let c2 = center.clone();
        let f1 = FunctionObject::from_prox(
            |x: &[f64]| x.iter().map(|v| v.abs()).sum::<f64>(),
            |x: &[f64], tau: f64| prox_l1(x, tau, None).unwrap(),
        );
        let f2 = FunctionObject::from_prox(
            move |x: &[f64]| {
                let d: Vec<f64> = x.iter().zip(&center).map(|(a, b)| a - b).collect();
                if norm2(&d) <= 0.5 + 1e-9 {
                    0.0
                } else {
                    f64::INFINITY
                }
            },
            move |x: &[f64], _tau: f64| proj_b2(x, 0.5, &c2, None).unwrap(),
        );
        let params = SolverParams {
            tol: 0.0,
            maxit: 500,
            ..Default::default()
        };
        let r = douglas_rachford(&[0.0, 0.0], &f1, &f2, &params).unwrap();
        assert_abs_diff_eq!(r.solution[0], 1.5, epsilon = 1e-6);
        assert_abs_diff_eq!(r.solution[1], 0.0, epsilon = 1e-6);
        // Every trace entry is finite: x is feasible at every iteration.
        assert!(r.trace.iter().all(|v| v.is_finite()));
    }

    #[test]
    fn relaxation_range_is_enforced() {
        let params = SolverParams {
            lambda: 2.0,
            ..Default::default()
        };
        assert!(douglas_rachford(&[0.0], &l1_half(), &quad_to_two(), &params).is_err());
        let params = SolverParams {
            lambda: 0.0,
            ..Default::default()
        };
        assert!(douglas_rachford(&[0.0], &l1_half(), &quad_to_two(), &params).is_err());
    }

    #[test]
    fn missing_prox_is_reported() {
        let smooth = FunctionObject::from_grad(
            |x: &[f64]| 0.5 * x[0] * x[0],
            |x: &[f64]| vec![x[0]],
        );
        assert!(matches!(
            douglas_rachford(&[0.0], &l1_half(), &smooth, &SolverParams::default()),
            Err(Error::MissingCapability { .. })
        ));
    }

    #[test]
    fn under_relaxed_run_still_converges() {
        let params = SolverParams {
            lambda: 0.5,
            tol: 0.0,
            maxit: 5000,
            ..Default::default()
        };
        let r = douglas_rachford(&[5.0], &l1_half(), &quad_to_two(), &params).unwrap();
        assert_abs_diff_eq!(r.solution[0], 1.5, epsilon = 1e-8);
    }
}
