//! Property-based checks of the operator laws: firm nonexpansiveness,
//! Moreau decompositions, projection idempotence and feasibility, and
//! invariance under group reordering.

use proptest::prelude::*;
use proxkit::{
    linalg::{dist2, dot, norm1, norm2},
    prox_l1, prox_l12, prox_l1inf, prox_l2_sq, prox_linf, prox_tv, proj_b1, proj_b2,
    tv_norm, GroupPartition, LinearOperator, TvParams,
};

fn vec_strategy(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0..10.0_f64, len)
}

/// Firm nonexpansiveness: ||P x - P y||^2 <= <P x - P y, x - y>. Every
/// proximity operator and projection satisfies it exactly; the slack
/// absorbs rounding.
fn assert_firmly_nonexpansive(px: &[f64], py: &[f64], x: &[f64], y: &[f64]) {
    let d: Vec<f64> = px.iter().zip(py).map(|(a, b)| a - b).collect();
    let lhs = dot(&d, &d);
    let rhs: f64 = d
        .iter()
        .zip(x.iter().zip(y))
        .map(|(di, (xi, yi))| di * (xi - yi))
        .sum();
    assert!(
        lhs <= rhs + 1e-9,
        "firm nonexpansiveness violated: {lhs} > {rhs}"
    );
}

proptest! {
    #[test]
    fn prox_l1_is_firmly_nonexpansive(
        x in vec_strategy(6),
        y in vec_strategy(6),
        tau in 0.01..3.0_f64,
    ) {
        let px = prox_l1(&x, tau, None).unwrap();
        let py = prox_l1(&y, tau, None).unwrap();
        assert_firmly_nonexpansive(&px, &py, &x, &y);
    }

    #[test]
    fn prox_linf_is_firmly_nonexpansive(
        x in vec_strategy(5),
        y in vec_strategy(5),
        tau in 0.01..3.0_f64,
    ) {
        let px = prox_linf(&x, tau);
        let py = prox_linf(&y, tau);
        assert_firmly_nonexpansive(&px, &py, &x, &y);
    }

    #[test]
    fn prox_l12_is_firmly_nonexpansive(
        x in vec_strategy(6),
        y in vec_strategy(6),
        tau in 0.01..3.0_f64,
    ) {
        let g = GroupPartition::new(vec![vec![0, 1, 2], vec![3], vec![4, 5]], 6).unwrap();
        let px = prox_l12(&x, tau, &g).unwrap();
        let py = prox_l12(&y, tau, &g).unwrap();
        assert_firmly_nonexpansive(&px, &py, &x, &y);
    }

    #[test]
    fn proj_b1_is_firmly_nonexpansive(
        x in vec_strategy(5),
        y in vec_strategy(5),
        eps in 0.1..5.0_f64,
    ) {
        let px = proj_b1(&x, eps).unwrap();
        let py = proj_b1(&y, eps).unwrap();
        assert_firmly_nonexpansive(&px, &py, &x, &y);
    }

    /// The l1 prox and the linf-ball projection split x exactly:
    /// soft(x, tau) + clamp(x, [-tau, tau]) = x.
    #[test]
    fn l1_moreau_decomposition(x in vec_strategy(7), tau in 0.01..3.0_f64) {
        let p = prox_l1(&x, tau, None).unwrap();
        for (xi, pi) in x.iter().zip(&p) {
            let clamped = xi.clamp(-tau, tau);
            prop_assert!((pi + clamped - xi).abs() <= 1e-12);
        }
    }

    /// The linf prox and the l1-ball projection split x exactly.
    #[test]
    fn linf_moreau_decomposition(x in vec_strategy(6), tau in 0.01..3.0_f64) {
        let p = prox_linf(&x, tau);
        let q = proj_b1(&x, tau).unwrap();
        for i in 0..x.len() {
            prop_assert!((p[i] + q[i] - x[i]).abs() <= 1e-12);
        }
    }

    #[test]
    fn proj_b1_is_idempotent_and_feasible(x in vec_strategy(6), eps in 0.1..5.0_f64) {
        let p = proj_b1(&x, eps).unwrap();
        prop_assert!(norm1(&p) <= eps * (1.0 + 1e-12));
        let pp = proj_b1(&p, eps).unwrap();
        prop_assert!(dist2(&p, &pp) <= 1e-10);
    }

    #[test]
    fn proj_b2_is_idempotent_feasible_nonexpansive(
        x in vec_strategy(5),
        y in vec_strategy(5),
        center in vec_strategy(5),
        eps in 0.1..5.0_f64,
    ) {
        let px = proj_b2(&x, eps, &center, None).unwrap();
        let d: Vec<f64> = px.iter().zip(&center).map(|(a, b)| a - b).collect();
        prop_assert!(norm2(&d) <= eps * (1.0 + 1e-12));
        let ppx = proj_b2(&px, eps, &center, None).unwrap();
        prop_assert!(dist2(&px, &ppx) <= 1e-10);
        let py = proj_b2(&y, eps, &center, None).unwrap();
        prop_assert!(dist2(&px, &py) <= dist2(&x, &y) + 1e-9);
    }

    #[test]
    fn proj_b2_through_tight_frame_is_feasible(
        x in vec_strategy(4),
        eps in 0.1..5.0_f64,
    ) {
        let a = LinearOperator::scaled_identity(2.0);
        let center = vec![0.5; 4];
        let p = proj_b2(&x, eps, &center, Some(&a)).unwrap();
        let ap = a.forward(&p);
        let d: Vec<f64> = ap.iter().zip(&center).map(|(v, c)| v - c).collect();
        prop_assert!(norm2(&d) <= eps * (1.0 + 1e-9));
        // Idempotent there too.
        let pp = proj_b2(&p, eps, &center, Some(&a)).unwrap();
        prop_assert!(dist2(&p, &pp) <= 1e-9);
    }

    /// Reordering the groups of a partition cannot change a separable
    /// group prox.
    #[test]
    fn group_proxes_ignore_group_order(x in vec_strategy(6), tau in 0.01..3.0_f64) {
        let g1 = GroupPartition::new(vec![vec![0, 1], vec![2, 3, 4], vec![5]], 6).unwrap();
        let g2 = GroupPartition::new(vec![vec![5], vec![2, 3, 4], vec![0, 1]], 6).unwrap();
        let a = prox_l12(&x, tau, &g1).unwrap();
        let b = prox_l12(&x, tau, &g2).unwrap();
        prop_assert!(dist2(&a, &b) == 0.0);
        let a = prox_l1inf(&x, tau, &g1).unwrap();
        let b = prox_l1inf(&x, tau, &g2).unwrap();
        prop_assert!(dist2(&a, &b) == 0.0);
    }

    /// prox_l2_sq moves its input strictly toward the anchor y and never
    /// overshoots it.
    #[test]
    fn prox_l2_sq_contracts_toward_anchor(
        x in vec_strategy(5),
        y in vec_strategy(5),
        tau in 0.01..5.0_f64,
    ) {
        let p = prox_l2_sq(&x, tau, &y, None).unwrap();
        prop_assert!(dist2(&p, &y) <= dist2(&x, &y) + 1e-12);
        for i in 0..x.len() {
            // Componentwise, p lies between x and y.
            let lo = x[i].min(y[i]) - 1e-12;
            let hi = x[i].max(y[i]) + 1e-12;
            prop_assert!(p[i] >= lo && p[i] <= hi);
        }
    }

    /// The TV prox can only decrease total variation.
    #[test]
    fn prox_tv_decreases_tv(img in vec_strategy(12), tau in 0.01..2.0_f64) {
        let params = TvParams { maxit: 300, tol: 0.0, ..Default::default() };
        let p = prox_tv(&img, 3, 4, tau, &params);
        prop_assert!(tv_norm(&p, 3, 4) <= tv_norm(&img, 3, 4) + 1e-8);
    }
}
