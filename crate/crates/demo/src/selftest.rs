//! Quick deterministic checks of the numeric plumbing, meant for a fast
//! "is this build sane" signal rather than full test coverage.

use proxkit::{
    check_adjoint, douglas_rachford, forward_backward, prox_l1, prox_nuclear, prox_tv, proj_b1,
    FunctionObject, LinearOperator, SolverParams, TvParams,
};

use crate::compute_snr;

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Run all self-checks, printing one line per check. Returns the number of
/// failures (0 means a healthy build).
pub fn run_selftest() -> usize {
    let mut failures = 0;
    let mut check = |name: &str, ok: bool| {
        println!("check {name:<32} {}", if ok { "ok" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    let soft = prox_l1(&[3.0, -1.0, 0.5], 1.0, None).unwrap();
    check("soft threshold", close(&soft, &[2.0, 0.0, 0.0], 1e-12));

    let p = proj_b1(&[2.0, 1.0], 1.0).unwrap();
    check("l1-ball projection", close(&p, &[1.0, 0.0], 1e-12));

    let tvp = prox_tv(
        &[2.0, 0.0],
        1,
        2,
        0.5,
        &TvParams {
            maxit: 2000,
            tol: 0.0,
            ..Default::default()
        },
    );
    check("tv prox on a 1x2 image", close(&tvp, &[1.5, 0.5], 1e-5));

    let nuc = prox_nuclear(&[3.0, 0.0, 0.0, 1.0], 2, 2, 2.0);
    check(
        "nuclear prox on a diagonal",
        close(&nuc, &[1.0, 0.0, 0.0, 0.0], 1e-10),
    );

    let report = check_adjoint(&LinearOperator::scaled_identity(3.0), 6, 6, 25, 123);
    check("adjoint pairing", report.max_rel_discrepancy <= 1e-12);

    let f1 = FunctionObject::from_prox(
        |x: &[f64]| 0.5 * x.iter().map(|v| v.abs()).sum::<f64>(),
        |x: &[f64], tau: f64| prox_l1(x, 0.5 * tau, None).unwrap(),
    );
    let f2 = FunctionObject::from_grad(
        |x: &[f64]| 0.5 * x.iter().map(|v| (v - 2.0) * (v - 2.0)).sum::<f64>(),
        |x: &[f64]| x.iter().map(|v| v - 2.0).collect(),
    )
    .with_lipschitz(1.0)
    .with_prox(|x: &[f64], tau: f64| {
        x.iter().map(|v| (v + 2.0 * tau) / (1.0 + tau)).collect()
    });
    let params = SolverParams {
        tol: 0.0,
        maxit: 300,
        ..Default::default()
    };
    let fb = forward_backward(&[0.0], &f1, &f2, &params).unwrap();
    check("forward-backward on a lasso", (fb.solution[0] - 1.5).abs() <= 1e-6);
    let dr = douglas_rachford(&[0.0], &f1, &f2, &params).unwrap();
    check("douglas-rachford on a lasso", (dr.solution[0] - 1.5).abs() <= 1e-6);

    let snr = compute_snr(&[0.0, 2.0, 0.0, 2.0], &[0.1, 2.1, 0.1, 2.1]).unwrap();
    check("snr arithmetic", (snr - 20.0).abs() <= 1e-9);

    if failures == 0 {
        println!("all checks passed");
    } else {
        println!("{failures} check(s) FAILED");
    }
    failures
}
