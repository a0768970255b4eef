//! First-order splitting solvers.
//!
//! All solvers share the same shape: they take a starting point, the terms
//! of the objective as [`FunctionObject`]s, and a [`SolverParams`], and
//! return a [`SolveResult`](crate::SolveResult) carrying the final iterate,
//! the per-iteration objective trace, and why the run stopped. Missing
//! capabilities (a gradient where only a prox was supplied, and so on) are
//! reported as [`Error::MissingCapability`] before any iteration runs.

mod admm;
mod douglas_rachford;
mod forward_backward;
mod sum;

pub use admm::admm;
pub use douglas_rachford::douglas_rachford;
pub use forward_backward::forward_backward;
pub use sum::solve_sum;

use crate::error::{Error, Result};
use crate::function::{FunctionObject, GradFn, ProxFn};

/// Margin used when validating open-interval parameter ranges, e.g.
/// `lambda` in `(0, 2)` is accepted as `[EDGE, 2 - EDGE]`.
pub(crate) const EDGE: f64 = 1e-12;

pub(crate) fn require_prox<'f>(f: &'f FunctionObject, what: &'static str) -> Result<&'f ProxFn> {
    f.prox_fn().ok_or(Error::MissingCapability {
        what,
        capability: "proximity operator",
    })
}

pub(crate) fn require_grad<'f>(f: &'f FunctionObject, what: &'static str) -> Result<&'f GradFn> {
    f.grad_fn().ok_or(Error::MissingCapability {
        what,
        capability: "gradient",
    })
}

pub(crate) fn require_prox_l<'f>(f: &'f FunctionObject, what: &'static str) -> Result<&'f ProxFn> {
    f.prox_l_fn().ok_or(Error::MissingCapability {
        what,
        capability: "prox composed with the linear map",
    })
}

pub(crate) fn require_lipschitz(f: &FunctionObject, what: &'static str) -> Result<f64> {
    match f.lipschitz() {
        Some(beta) if beta > 0.0 && beta.is_finite() => Ok(beta),
        Some(beta) => Err(Error::InvalidArgument(format!(
            "{what}: Lipschitz constant must be positive and finite, got {beta}"
        ))),
        None => Err(Error::MissingCapability {
            what,
            capability: "Lipschitz constant for the gradient",
        }),
    }
}
