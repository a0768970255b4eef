//! Proximal splitting toolbox.
//!
//! Building blocks for solving composite convex problems of the form
//!
//! ```text
//!     minimize  f1(x) + f2(x) + ... + fK(x)
//! ```
//!
//! where each term is convex but possibly nonsmooth. Every term is described
//! by a [`FunctionObject`] that carries whichever capabilities it supports:
//! an evaluation map, a gradient, a proximity operator, or a proximity
//! operator composed with a linear map. Solvers ask for the capabilities
//! they need and fail with a descriptive error when one is missing.
//!
//! What's in the box:
//!
//! * [`prox`] — proximity operators for the usual regularizers: `l1` (with
//!   optional tight-frame analysis operator), squared `l2` distance, `linf`,
//!   group `l12` and `l1inf` mixed norms, isotropic total variation, and the
//!   nuclear norm.
//! * [`proj`] — projections onto `l1` and `l2` balls.
//! * [`solvers`] — forward-backward (ISTA/FISTA), Douglas-Rachford, ADMM,
//!   and a product-space reduction that minimizes a sum of K prox-capable
//!   terms with a single Douglas-Rachford run.
//!
//! Vectors are plain `&[f64]` / `Vec<f64>`; images are flat row-major
//! buffers with explicit `(rows, cols)` arguments. All randomized helpers
//! take explicit seeds so runs are reproducible.
//!
//! # Example
//!
//! Solve the scalar lasso `min_x 0.5*(x - 2)^2 + 0.5*|x|`:
//!
//! ```
//! use proxkit::{forward_backward, FunctionObject, SolverParams};
//!
//! let f1 = FunctionObject::from_prox(
//!     |x: &[f64]| 0.5 * x[0].abs(),
//!     |x: &[f64], tau: f64| proxkit::prox_l1(x, 0.5 * tau, None).unwrap(),
//! );
//! let f2 = FunctionObject::from_grad(
//!     |x: &[f64]| 0.5 * (x[0] - 2.0).powi(2),
//!     |x: &[f64]| vec![x[0] - 2.0],
//! )
//! .with_lipschitz(1.0);
//!
//! let params = SolverParams { tol: 1e-12, maxit: 500, ..Default::default() };
//! let result = forward_backward(&[0.0], &f1, &f2, &params).unwrap();
//! assert!((result.solution[0] - 1.5).abs() < 1e-6);
//! ```

mod error;
mod function;
mod harness;
pub mod linalg;
mod operator;
mod params;
pub mod proj;
pub mod prox;
pub mod solvers;

pub use error::{Error, Result};
pub use function::{evaluate_objective, FunctionObject, ProblemSpec};
pub use operator::{check_adjoint, AdjointReport, LinearOperator};
pub use params::{should_stop, FbMethod, SolveResult, SolverParams, StopReason, Verbosity};
pub use proj::{proj_b1, proj_b2};
pub use prox::{
    norm_l12, norm_l1inf, nuclear_norm, prox_l1, prox_l12, prox_l1inf, prox_l2_sq, prox_linf,
    prox_nuclear, prox_tv, tv_norm, GroupPartition, TvParams,
};
pub use solvers::{admm, douglas_rachford, forward_backward, solve_sum};
