use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Evaluation map `x -> f(x)`. May return `f64::INFINITY` for indicator
/// functions evaluated outside their set.
pub type EvalFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// Gradient map `x -> grad f(x)`.
pub type GradFn = dyn Fn(&[f64]) -> Vec<f64> + Send + Sync;

/// Proximity map `(x, tau) -> argmin_y 0.5*||x - y||^2 + tau*f(y)`.
pub type ProxFn = dyn Fn(&[f64], f64) -> Vec<f64> + Send + Sync;

/// A convex term of a composite objective, described by whatever capability
/// maps it supports.
///
/// Every object carries an evaluation map. Constructors require at least one
/// additional capability (gradient, prox, or prox of `f(L x)` for a linear
/// map `L`), so a `FunctionObject` is always usable by at least one solver.
/// Optional extras are attached with the `with_*` builders.
///
/// The closures are stored behind `Arc`, so cloning a `FunctionObject` is
/// cheap and shares the underlying maps.
#[derive(Clone)]
pub struct FunctionObject {
    eval: Arc<EvalFn>,
    grad: Option<Arc<GradFn>>,
    prox: Option<Arc<ProxFn>>,
    prox_l: Option<Arc<ProxFn>>,
    lipschitz: Option<f64>,
}

impl FunctionObject {
    /// A term with a proximity operator, e.g. a nonsmooth regularizer or an
    /// indicator function.
    pub fn from_prox(
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        prox: impl Fn(&[f64], f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        FunctionObject {
            eval: Arc::new(eval),
            grad: None,
            prox: Some(Arc::new(prox)),
            prox_l: None,
            lipschitz: None,
        }
    }

    /// A smooth term with a gradient. Attach the gradient's Lipschitz
    /// constant with [`with_lipschitz`](Self::with_lipschitz) if a solver
    /// needs it for step-size validation.
    pub fn from_grad(
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        grad: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        FunctionObject {
            eval: Arc::new(eval),
            grad: Some(Arc::new(grad)),
            prox: None,
            prox_l: None,
            lipschitz: None,
        }
    }

    /// A term whose prox is only available composed with a linear map, i.e.
    /// `(z, tau) -> argmin_x tau*f(x) + 0.5*||L x - z||^2`. This is the form
    /// [`admm`](crate::solvers::admm) needs for its first block.
    pub fn from_prox_l(
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        prox_l: impl Fn(&[f64], f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        FunctionObject {
            eval: Arc::new(eval),
            grad: None,
            prox: None,
            prox_l: Some(Arc::new(prox_l)),
            lipschitz: None,
        }
    }

    /// Attach a gradient map.
    pub fn with_grad(mut self, grad: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static) -> Self {
        self.grad = Some(Arc::new(grad));
        self
    }

    /// Attach a proximity map.
    pub fn with_prox(
        mut self,
        prox: impl Fn(&[f64], f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        self.prox = Some(Arc::new(prox));
        self
    }

    /// Attach a prox-of-`f(Lx)` map (see [`from_prox_l`](Self::from_prox_l)).
    pub fn with_prox_l(
        mut self,
        prox_l: impl Fn(&[f64], f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        self.prox_l = Some(Arc::new(prox_l));
        self
    }

    /// Attach a Lipschitz constant for the gradient.
    pub fn with_lipschitz(mut self, beta: f64) -> Self {
        self.lipschitz = Some(beta);
        self
    }

    /// Evaluate the function. Indicators return `f64::INFINITY` outside
    /// their set.
    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }

    /// The gradient map, if one was provided.
    pub fn grad_fn(&self) -> Option<&GradFn> {
        self.grad.as_deref()
    }

    /// The proximity map, if one was provided.
    pub fn prox_fn(&self) -> Option<&ProxFn> {
        self.prox.as_deref()
    }

    /// The prox-of-`f(Lx)` map, if one was provided.
    pub fn prox_l_fn(&self) -> Option<&ProxFn> {
        self.prox_l.as_deref()
    }

    /// Lipschitz constant of the gradient, if known.
    pub fn lipschitz(&self) -> Option<f64> {
        self.lipschitz
    }

    pub fn has_grad(&self) -> bool {
        self.grad.is_some()
    }

    pub fn has_prox(&self) -> bool {
        self.prox.is_some()
    }
}

impl fmt::Debug for FunctionObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionObject")
            .field("grad", &self.grad.is_some())
            .field("prox", &self.prox.is_some())
            .field("prox_l", &self.prox_l.is_some())
            .field("lipschitz", &self.lipschitz)
            .finish()
    }
}

/// A composite problem: minimize the sum of `functions` over vectors of
/// length `dimension`.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    functions: Vec<FunctionObject>,
    dimension: usize,
}

impl ProblemSpec {
    /// Build a problem from at least one term.
    pub fn new(functions: Vec<FunctionObject>, dimension: usize) -> Result<Self> {
        if functions.is_empty() {
            return Err(Error::InvalidArgument(
                "a problem needs at least one function".into(),
            ));
        }
        if dimension == 0 {
            return Err(Error::InvalidArgument(
                "problem dimension must be positive".into(),
            ));
        }
        Ok(ProblemSpec {
            functions,
            dimension,
        })
    }

    pub fn functions(&self) -> &[FunctionObject] {
        &self.functions
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

/// Sum of all terms of `problem` at `x`.
///
/// Returns `f64::INFINITY` as soon as any term evaluates to `+inf` (an
/// indicator violated at `x`); the remaining terms are not evaluated, so the
/// sum can never degrade to `inf - inf = NaN`.
pub fn evaluate_objective(problem: &ProblemSpec, x: &[f64]) -> Result<f64> {
    if x.len() != problem.dimension() {
        return Err(Error::DimensionMismatch {
            expected: problem.dimension(),
            got: x.len(),
        });
    }
    let mut total = 0.0;
    for f in problem.functions() {
        let v = f.eval(x);
        if v == f64::INFINITY {
            return Ok(f64::INFINITY);
        }
        total += v;
    }
    Ok(total)
}
