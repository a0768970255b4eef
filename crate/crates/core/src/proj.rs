//! Euclidean projections onto norm balls.

use crate::error::{Error, Result};
use crate::linalg::{norm1, norm2};
use crate::operator::LinearOperator;

/// Projection onto the `l1` ball `{ v : ||v||_1 <= epsilon }`.
///
/// Runs in `O(n log n)`: sort the magnitudes, locate the largest prefix
/// whose soft threshold stays active, then shrink every component by the
/// resulting threshold. Points already inside the ball are returned
/// unchanged (the projection is exact there, no shrinkage).
pub fn proj_b1(x: &[f64], epsilon: f64) -> Result<Vec<f64>> {
    if !(epsilon > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "l1-ball radius must be positive, got {epsilon}"
        )));
    }
    if norm1(x) <= epsilon {
        return Ok(x.to_vec());
    }

    // Magnitudes in decreasing order; NaN-free input is assumed (convex
    // optimization over real vectors), so total_cmp is just tie-safe.
    let mut u: Vec<f64> = x.iter().map(|v| v.abs()).collect();
    u.sort_unstable_by(|a, b| b.total_cmp(a));

    // The projection is soft(x, theta) with theta chosen so the result has
    // l1 norm exactly epsilon: theta = (sum of the k largest magnitudes
    // - epsilon) / k for the largest k where that candidate still lies
    // below the k-th magnitude.
    let mut prefix = 0.0;
    let mut theta = 0.0;
    for (k, &uk) in u.iter().enumerate() {
        prefix += uk;
        let candidate = (prefix - epsilon) / (k + 1) as f64;
        if uk > candidate {
            theta = candidate;
        }
    }

    Ok(x.iter()
        .map(|&v| v.signum() * (v.abs() - theta).max(0.0))
        .collect())
}

/// Projection onto the `l2` ball `{ v : ||A v - y||_2 <= epsilon }`.
///
/// With `a = None` the constraint is `||v - y|| <= epsilon` and the
/// projection moves `v` radially toward the center `y`. With a tight frame
/// `A` (`A A^T = nu I`) the projection has the closed form
///
/// ```text
///     v + (1/nu) * A^T ((epsilon / ||r|| - 1) * r),   r = A v - y
/// ```
///
/// applied only when `||r|| > epsilon`. A non-tight operator has no such
/// formula and is rejected with [`Error::NotTight`].
///
/// `epsilon = 0` is allowed: the "ball" collapses to the affine set
/// `A v = y`.
pub fn proj_b2(x: &[f64], epsilon: f64, y: &[f64], a: Option<&LinearOperator>) -> Result<Vec<f64>> {
    if !(epsilon >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "l2-ball radius must be nonnegative, got {epsilon}"
        )));
    }
    match a {
        None => {
            if y.len() != x.len() {
                return Err(Error::DimensionMismatch {
                    expected: x.len(),
                    got: y.len(),
                });
            }
            let r: Vec<f64> = x.iter().zip(y).map(|(v, c)| v - c).collect();
            let n = norm2(&r);
            if n <= epsilon {
                return Ok(x.to_vec());
            }
            let scale = epsilon / n;
            Ok(y.iter().zip(&r).map(|(c, d)| c + scale * d).collect())
        }
        Some(op) => {
            let nu = match (op.is_tight(), op.nu()) {
                (true, Some(nu)) if nu > 0.0 => nu,
                _ => {
                    return Err(Error::NotTight(
                        "l2-ball projection through an operator needs a tight frame \
                         with a positive frame constant"
                            .into(),
                    ))
                }
            };
            let ax = op.forward(x);
            if y.len() != ax.len() {
                return Err(Error::DimensionMismatch {
                    expected: ax.len(),
                    got: y.len(),
                });
            }
            let r: Vec<f64> = ax.iter().zip(y).map(|(v, c)| v - c).collect();
            let n = norm2(&r);
            if n <= epsilon {
                return Ok(x.to_vec());
            }
            let scale = epsilon / n - 1.0;
            let scaled: Vec<f64> = r.iter().map(|v| scale * v).collect();
            let corr = op.adjoint(&scaled);
            Ok(x.iter().zip(&corr).map(|(v, c)| v + c / nu).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn b1_leaves_interior_points_alone() {
        let x = [0.2, -0.3, 0.1];
        assert_eq!(proj_b1(&x, 1.0).unwrap(), x.to_vec());
    }

    #[test]
    fn b1_known_projections() {
        // Threshold lands between the two magnitudes: only the larger survives.
        let p = proj_b1(&[2.0, 1.0], 1.0).unwrap();
        assert_abs_diff_eq!(p[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p[1], 0.0, epsilon = 1e-12);

        // Symmetric input splits the budget evenly.
        let p = proj_b1(&[1.0, 1.0], 1.0).unwrap();
        assert_abs_diff_eq!(p[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(p[1], 0.5, epsilon = 1e-12);

        // Signs are preserved.
        let p = proj_b1(&[-2.0, 1.0], 1.0).unwrap();
        assert_abs_diff_eq!(p[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn b1_result_lands_on_the_sphere() {
        let p = proj_b1(&[3.0, -1.0, 0.5, 2.0], 2.0).unwrap();
        assert_abs_diff_eq!(norm1(&p), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn b1_rejects_nonpositive_radius() {
        assert!(proj_b1(&[1.0], 0.0).is_err());
        assert!(proj_b1(&[1.0], -1.0).is_err());
    }

    #[test]
    fn b2_radial_case() {
        // Center 0, radius 1: [3, 4] maps to [0.6, 0.8].
        let p = proj_b2(&[3.0, 4.0], 1.0, &[0.0, 0.0], None).unwrap();
        assert_abs_diff_eq!(p[0], 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(p[1], 0.8, epsilon = 1e-12);

        // Shifted center.
        let p = proj_b2(&[2.0, 0.0], 1.0, &[0.0, 0.0], None).unwrap();
        assert_abs_diff_eq!(p[0], 1.0, epsilon = 1e-12);

        // Inside: unchanged.
        let x = [0.1, 0.2];
        assert_eq!(proj_b2(&x, 1.0, &[0.0, 0.0], None).unwrap(), x.to_vec());
    }

    #[test]
    fn b2_zero_radius_returns_center() {
        let p = proj_b2(&[5.0, -2.0], 0.0, &[1.0, 1.0], None).unwrap();
        assert_abs_diff_eq!(p[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn b2_through_tight_frame() {
        // A = 2I, nu = 4. Constraint ||2v|| <= 2 is the unit ball, so [3, 4]
        // projects to [0.6, 0.8].
        let a = LinearOperator::scaled_identity(2.0);
        let p = proj_b2(&[3.0, 4.0], 2.0, &[0.0, 0.0], Some(&a)).unwrap();
        assert_abs_diff_eq!(p[0], 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(p[1], 0.8, epsilon = 1e-12);

        // Feasibility is exact on the boundary: ||A p - y|| = epsilon.
        let ap = a.forward(&p);
        assert_abs_diff_eq!(norm2(&ap), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn b2_rejects_non_tight_operator() {
        let a = LinearOperator::diagonal(vec![1.0, 2.0]);
        match proj_b2(&[1.0, 1.0], 1.0, &[0.0, 0.0], Some(&a)) {
            Err(Error::NotTight(_)) => {}
            other => panic!("expected NotTight, got {other:?}"),
        }
    }

    #[test]
    fn b2_rejects_negative_radius_and_bad_shapes() {
        assert!(proj_b2(&[1.0], -0.5, &[0.0], None).is_err());
        assert!(proj_b2(&[1.0, 2.0], 1.0, &[0.0], None).is_err());
    }
}
