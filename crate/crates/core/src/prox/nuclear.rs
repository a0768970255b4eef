//! Nuclear norm (sum of singular values): value and proximity operator.
//!
//! The prox soft-thresholds the singular values: if `A = U diag(s) V^T`,
//! then `prox_{tau*||.||_*}(A) = U diag(max(s - tau, 0)) V^T`. The SVD is
//! computed with one-sided Jacobi rotations — plenty accurate and fast at
//! the matrix sizes this crate targets, with no linear-algebra dependency.

/// Result of the internal SVD: singular values with matching left/right
/// singular vectors stored as columns. When the input was wide it is
/// factored transposed, and `transposed` records that.
struct ColumnSvd {
    u: Vec<Vec<f64>>,
    s: Vec<f64>,
    v: Vec<Vec<f64>>,
    transposed: bool,
}

/// One-sided Jacobi: orthogonalize the columns of the (tall) working matrix
/// by pairwise rotations, accumulating the rotations into `v`. On return
/// the column norms are the singular values and the normalized columns are
/// the left singular vectors.
fn svd_columns(mat: &[f64], rows: usize, cols: usize) -> ColumnSvd {
    let transposed = rows < cols;
    let (m, n) = if transposed { (cols, rows) } else { (rows, cols) };

    // Working copy, column-major: a[j][i] is entry (i, j) of the tall matrix.
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            (0..m)
                .map(|i| {
                    if transposed {
                        mat[j * cols + i]
                    } else {
                        mat[i * cols + j]
                    }
                })
                .collect()
        })
        .collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    const MAX_SWEEPS: usize = 60;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = a[p].iter().map(|x| x * x).sum();
                let beta: f64 = a[q].iter().map(|x| x * x).sum();
                let gamma: f64 = a[p].iter().zip(&a[q]).map(|(x, y)| x * y).sum();
                if gamma.abs() <= 1e-15 * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                // Jacobi rotation zeroing the off-diagonal inner product.
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let ap = a[p][i];
                    let aq = a[q][i];
                    a[p][i] = c * ap - s * aq;
                    a[q][i] = s * ap + c * aq;
                }
                for i in 0..n {
                    let vp = v[p][i];
                    let vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut s: Vec<f64> = a.iter().map(|col| col.iter().map(|x| x * x).sum::<f64>().sqrt()).collect();
    let mut u: Vec<Vec<f64>> = a
        .iter()
        .zip(&s)
        .map(|(col, &sj)| {
            if sj > 0.0 {
                col.iter().map(|x| x / sj).collect()
            } else {
                vec![0.0; m]
            }
        })
        .collect();

    // Sort singular triples in decreasing order — callers get a canonical
    // factorization.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[j].total_cmp(&s[i]));
    s = order.iter().map(|&i| s[i]).collect();
    u = order.iter().map(|&i| u[i].clone()).collect();
    let v = order.iter().map(|&i| v[i].clone()).collect();

    ColumnSvd { u, s, v, transposed }
}

/// Nuclear norm: the sum of the singular values of a `rows x cols`
/// row-major matrix.
pub fn nuclear_norm(mat: &[f64], rows: usize, cols: usize) -> f64 {
    assert_eq!(mat.len(), rows * cols, "nuclear_norm: shape mismatch");
    svd_columns(mat, rows, cols).s.iter().sum()
}

/// Prox of `tau * ||.||_*`: soft-threshold the singular values and
/// reassemble. Singular vectors are untouched, so the result has the same
/// row/column spaces with small singular directions removed.
pub fn prox_nuclear(mat: &[f64], rows: usize, cols: usize, tau: f64) -> Vec<f64> {
    assert_eq!(mat.len(), rows * cols, "prox_nuclear: shape mismatch");
    assert!(tau >= 0.0, "prox_nuclear: tau must be nonnegative");
    let svd = svd_columns(mat, rows, cols);
    let mut out = vec![0.0; rows * cols];
    for (k, &sk) in svd.s.iter().enumerate() {
        let shrunk = (sk - tau).max(0.0);
        if shrunk == 0.0 {
            continue;
        }
        // Tall factorization: A = sum_k s_k u_k v_k^T. If the input was
        // factored transposed, the roles of u and v swap back here.
        let (left, right) = if svd.transposed {
            (&svd.v[k], &svd.u[k])
        } else {
            (&svd.u[k], &svd.v[k])
        };
        for i in 0..rows {
            for j in 0..cols {
                out[i * cols + j] += shrunk * left[i] * right[j];
            }
        }
    }
    out
}
