use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{dot, norm2};

/// Matrix-free linear map `x -> A x`.
pub type OpFn = dyn Fn(&[f64]) -> Vec<f64> + Send + Sync;

/// A linear operator given by its forward and adjoint actions.
///
/// The operator is matrix-free: it stores closures, not a matrix, so it can
/// wrap FFTs, masks, frames, or anything else linear. `nu` is the frame
/// constant when the operator is a tight frame, i.e. `A A^T = nu * I`. Tight
/// frames admit closed-form proximity operators for compositions `f(A x)`,
/// which is why several operators in [`prox`](crate::prox) and
/// [`proj`](crate::proj) accept one.
#[derive(Clone)]
pub struct LinearOperator {
    forward: Arc<OpFn>,
    adjoint: Arc<OpFn>,
    nu: Option<f64>,
    tight: bool,
}

impl LinearOperator {
    /// A general operator with no tight-frame claim.
    pub fn new(
        forward: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
        adjoint: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        LinearOperator {
            forward: Arc::new(forward),
            adjoint: Arc::new(adjoint),
            nu: None,
            tight: false,
        }
    }

    /// An operator satisfying `A A^T = nu * I`.
    pub fn tight_frame(
        forward: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
        adjoint: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
        nu: f64,
    ) -> Self {
        LinearOperator {
            forward: Arc::new(forward),
            adjoint: Arc::new(adjoint),
            nu: Some(nu),
            tight: true,
        }
    }

    /// The identity map (a tight frame with `nu = 1`).
    pub fn identity() -> Self {
        LinearOperator::tight_frame(|x| x.to_vec(), |x| x.to_vec(), 1.0)
    }

    /// `x -> c * x` (a tight frame with `nu = c^2`).
    pub fn scaled_identity(c: f64) -> Self {
        LinearOperator::tight_frame(
            move |x: &[f64]| x.iter().map(|v| c * v).collect(),
            move |x: &[f64]| x.iter().map(|v| c * v).collect(),
            c * c,
        )
    }

    /// Componentwise scaling by `weights` (self-adjoint, generally not tight).
    pub fn diagonal(weights: Vec<f64>) -> Self {
        let w1 = weights.clone();
        let w2 = weights;
        LinearOperator::new(
            move |x: &[f64]| x.iter().zip(&w1).map(|(v, w)| v * w).collect(),
            move |x: &[f64]| x.iter().zip(&w2).map(|(v, w)| v * w).collect(),
        )
    }

    /// Apply the forward map.
    pub fn forward(&self, x: &[f64]) -> Vec<f64> {
        (self.forward)(x)
    }

    /// Apply the adjoint map.
    pub fn adjoint(&self, y: &[f64]) -> Vec<f64> {
        (self.adjoint)(y)
    }

    /// Frame constant, if the operator was declared tight.
    pub fn nu(&self) -> Option<f64> {
        self.nu
    }

    pub fn is_tight(&self) -> bool {
        self.tight
    }
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearOperator")
            .field("tight", &self.tight)
            .field("nu", &self.nu)
            .finish()
    }
}

/// Result of [`check_adjoint`].
#[derive(Clone, Copy, Debug)]
pub struct AdjointReport {
    /// Largest relative discrepancy `|<A x, y> - <x, A^T y>| / (||x|| ||y||)`
    /// seen over all trials.
    pub max_rel_discrepancy: f64,
    pub trials: usize,
}

/// Randomized test that `adjoint` really is the adjoint of `forward`.
///
/// Draws `trials` pairs `(x, y)` with components uniform in `[-1, 1)` from a
/// seeded generator and measures `|<A x, y> - <x, A^T y>|` relative to
/// `||x|| * ||y||`. A correctly paired operator scores at rounding level
/// (1e-12 is a comfortable bound); a genuinely mismatched pair scores large.
///
/// The operator carries no dimensions, so the caller supplies the input and
/// output lengths.
pub fn check_adjoint(
    op: &LinearOperator,
    dim_in: usize,
    dim_out: usize,
    trials: usize,
    seed: u64,
) -> AdjointReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let x: Vec<f64> = (0..dim_in).map(|_| rng.random_range(-1.0..1.0)).collect();
        let y: Vec<f64> = (0..dim_out).map(|_| rng.random_range(-1.0..1.0)).collect();
        let ax = op.forward(&x);
        let aty = op.adjoint(&y);
        let gap = (dot(&ax, &y) - dot(&x, &aty)).abs();
        let scale = (norm2(&x) * norm2(&y)).max(f64::MIN_POSITIVE);
        worst = worst.max(gap / scale);
    }
    AdjointReport {
        max_rel_discrepancy: worst,
        trials,
    }
}
