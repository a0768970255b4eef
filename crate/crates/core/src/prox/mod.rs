//! Proximity operators.
//!
//! Each function computes `prox_{tau f}(x) = argmin_y 0.5*||x - y||^2 +
//! tau*f(y)` for its particular `f`. All of them are exact closed forms
//! except [`prox_tv`], which runs an inner accelerated dual iteration, and
//! [`prox_nuclear`], which is exact up to the SVD it computes.

mod nuclear;
mod tv;

pub use nuclear::{nuclear_norm, prox_nuclear};
pub use tv::{prox_tv, tv_norm, TvParams};

use crate::error::{Error, Result};
use crate::linalg::norm2;
use crate::operator::LinearOperator;
use crate::proj::proj_b1;

/// Componentwise soft threshold `sign(v) * max(|v| - t, 0)`.
fn soft_threshold(x: &[f64], t: f64) -> Vec<f64> {
    x.iter()
        .map(|&v| v.signum() * (v.abs() - t).max(0.0))
        .collect()
}

fn require_tight(a: &LinearOperator, what: &str) -> Result<f64> {
    match (a.is_tight(), a.nu()) {
        (true, Some(nu)) if nu > 0.0 => Ok(nu),
        _ => Err(Error::NotTight(format!(
            "{what} through an operator needs a tight frame with a positive frame constant"
        ))),
    }
}

/// Prox of `tau * ||Psi x||_1`.
///
/// Without `psi` this is the soft threshold with level `tau`. With a tight
/// frame `Psi` (`Psi Psi^T = nu I`) the composition has the closed form
///
/// ```text
///     x + (1/nu) * Psi^T ( soft(Psi x, tau*nu) - Psi x )
/// ```
///
/// reducing to the plain threshold when `Psi = I`. Non-tight operators are
/// rejected.
pub fn prox_l1(x: &[f64], tau: f64, psi: Option<&LinearOperator>) -> Result<Vec<f64>> {
    assert!(tau >= 0.0, "prox_l1: tau must be nonnegative");
    match psi {
        None => Ok(soft_threshold(x, tau)),
        Some(a) => {
            let nu = require_tight(a, "prox of the l1 norm")?;
            let ax = a.forward(x);
            let shrunk = soft_threshold(&ax, tau * nu);
            let diff: Vec<f64> = shrunk.iter().zip(&ax).map(|(s, v)| s - v).collect();
            let corr = a.adjoint(&diff);
            Ok(x.iter().zip(&corr).map(|(v, c)| v + c / nu).collect())
        }
    }
}

/// Prox of `tau * ||A x - y||_2^2` (note: squared, so this is smooth).
///
/// Without `a` the minimizer is the weighted average `(x + 2*tau*y) /
/// (1 + 2*tau)`. With a tight frame the same average is formed in frame
/// space and mapped back:
///
/// ```text
///     x + (1/nu) * A^T ( (A x + 2*tau*nu*y) / (1 + 2*tau*nu) - A x )
/// ```
pub fn prox_l2_sq(x: &[f64], tau: f64, y: &[f64], a: Option<&LinearOperator>) -> Result<Vec<f64>> {
    assert!(tau >= 0.0, "prox_l2_sq: tau must be nonnegative");
    match a {
        None => {
            if y.len() != x.len() {
                return Err(Error::DimensionMismatch {
                    expected: x.len(),
                    got: y.len(),
                });
            }
            let denom = 1.0 + 2.0 * tau;
            Ok(x.iter()
                .zip(y)
                .map(|(v, c)| (v + 2.0 * tau * c) / denom)
                .collect())
        }
        Some(op) => {
            let nu = require_tight(op, "prox of the squared l2 distance")?;
            let ax = op.forward(x);
            if y.len() != ax.len() {
                return Err(Error::DimensionMismatch {
                    expected: ax.len(),
                    got: y.len(),
                });
            }
            let denom = 1.0 + 2.0 * tau * nu;
            let diff: Vec<f64> = ax
                .iter()
                .zip(y)
                .map(|(v, c)| (v + 2.0 * tau * nu * c) / denom - v)
                .collect();
            let corr = op.adjoint(&diff);
            Ok(x.iter().zip(&corr).map(|(v, c)| v + c / nu).collect())
        }
    }
}

/// Prox of `tau * ||x||_inf`, via the Moreau decomposition: the conjugate of
/// the `linf` norm is the indicator of the unit `l1` ball, so
///
/// ```text
///     prox_{tau*||.||_inf}(x) = x - proj_b1(x, tau).
/// ```
///
/// `tau = 0` returns `x` unchanged.
pub fn prox_linf(x: &[f64], tau: f64) -> Vec<f64> {
    assert!(tau >= 0.0, "prox_linf: tau must be nonnegative");
    if tau == 0.0 {
        return x.to_vec();
    }
    // proj_b1 cannot fail here: tau > 0.
    let p = proj_b1(x, tau).expect("l1 projection with positive radius");
    x.iter().zip(&p).map(|(v, q)| v - q).collect()
}

/// A partition of `{0, .., dimension-1}` into disjoint nonempty groups, as
/// used by the mixed-norm proximity operators.
#[derive(Clone, Debug)]
pub struct GroupPartition {
    groups: Vec<Vec<usize>>,
    dimension: usize,
}

impl GroupPartition {
    /// Validate that `groups` cover `0..dimension` exactly once.
    pub fn new(groups: Vec<Vec<usize>>, dimension: usize) -> Result<Self> {
        let mut seen = vec![false; dimension];
        for (g, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(Error::InvalidPartition(format!("group {g} is empty")));
            }
            for &i in group {
                if i >= dimension {
                    return Err(Error::InvalidPartition(format!(
                        "group {g} contains index {i}, but the dimension is {dimension}"
                    )));
                }
                if seen[i] {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} appears in more than one group"
                    )));
                }
                seen[i] = true;
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!(
                "index {i} is not covered by any group"
            )));
        }
        Ok(GroupPartition { groups, dimension })
    }

    /// The trivial partition `{0}, {1}, .., {n-1}`, under which the mixed
    /// norms collapse to the plain `l1` norm.
    pub fn singletons(n: usize) -> Self {
        GroupPartition {
            groups: (0..n).map(|i| vec![i]).collect(),
            dimension: n,
        }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

fn check_partition_dim(x: &[f64], g: &GroupPartition) -> Result<()> {
    if x.len() != g.dimension() {
        return Err(Error::DimensionMismatch {
            expected: g.dimension(),
            got: x.len(),
        });
    }
    Ok(())
}

/// Prox of the group lasso penalty `tau * sum_g ||x_g||_2`.
///
/// Each group shrinks toward zero as a block:
/// `x_g <- max(1 - tau/||x_g||, 0) * x_g`, with a zero group staying zero.
pub fn prox_l12(x: &[f64], tau: f64, g: &GroupPartition) -> Result<Vec<f64>> {
    assert!(tau >= 0.0, "prox_l12: tau must be nonnegative");
    check_partition_dim(x, g)?;
    let mut out = x.to_vec();
    for group in g.groups() {
        let n = group.iter().map(|&i| x[i] * x[i]).sum::<f64>().sqrt();
        let factor = if n > 0.0 { (1.0 - tau / n).max(0.0) } else { 0.0 };
        for &i in group {
            out[i] = factor * x[i];
        }
    }
    Ok(out)
}

/// Prox of the mixed penalty `tau * sum_g ||x_g||_inf`: the `linf` prox of
/// [`prox_linf`] applied group by group.
pub fn prox_l1inf(x: &[f64], tau: f64, g: &GroupPartition) -> Result<Vec<f64>> {
    assert!(tau >= 0.0, "prox_l1inf: tau must be nonnegative");
    check_partition_dim(x, g)?;
    let mut out = x.to_vec();
    for group in g.groups() {
        let block: Vec<f64> = group.iter().map(|&i| x[i]).collect();
        let shrunk = prox_linf(&block, tau);
        for (&i, v) in group.iter().zip(shrunk) {
            out[i] = v;
        }
    }
    Ok(out)
}

/// `l2` norm of one group (helper for evaluating mixed norms in objectives).
pub(crate) fn group_norm2(x: &[f64], group: &[usize]) -> f64 {
    norm2(&group.iter().map(|&i| x[i]).collect::<Vec<f64>>())
}

/// Value of the group lasso penalty `sum_g ||x_g||_2`.
pub fn norm_l12(x: &[f64], g: &GroupPartition) -> Result<f64> {
    check_partition_dim(x, g)?;
    Ok(g.groups().iter().map(|gr| group_norm2(x, gr)).sum())
}

/// Value of the mixed penalty `sum_g ||x_g||_inf`.
pub fn norm_l1inf(x: &[f64], g: &GroupPartition) -> Result<f64> {
    check_partition_dim(x, g)?;
    Ok(g
        .groups()
        .iter()
        .map(|gr| gr.iter().fold(0.0_f64, |m, &i| m.max(x[i].abs())))
        .sum())
}
