use proxkit::Error;

use crate::Result;

/// Signal-to-noise ratio of an estimate against a reference image, in dB:
///
/// ```text
///     snr = 10 * log10( ||ref - mean(ref)||^2 / ||ref - est||^2 )
/// ```
///
/// A perfect estimate has infinite SNR; that case returns
/// `f64::INFINITY` rather than an error. Mismatched lengths are rejected.
pub fn compute_snr(reference: &[f64], estimate: &[f64]) -> Result<f64> {
    if reference.len() != estimate.len() {
        return Err(Error::DimensionMismatch {
            expected: reference.len(),
            got: estimate.len(),
        }
        .into());
    }
    let mean = reference.iter().sum::<f64>() / reference.len() as f64;
    let signal: f64 = reference.iter().map(|v| (v - mean) * (v - mean)).sum();
    let noise: f64 = reference
        .iter()
        .zip(estimate)
        .map(|(r, e)| (r - e) * (r - e))
        .sum();
    if noise == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (signal / noise).log10())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn constant_offset_error() {
        // Signal energy 4, error energy 0.04: exactly 20 dB.
        let reference = [0.0, 2.0, 0.0, 2.0];
        let estimate = [0.1, 2.1, 0.1, 2.1];
        let snr = compute_snr(&reference, &estimate).unwrap();
        assert_abs_diff_eq!(snr, 20.0, epsilon = 1e-9);
    }

    #[test]
    fn equal_energies_give_zero_db() {
        let reference = [0.0, 1.0, 0.0, 1.0];
        let estimate = [0.5, 0.5, 0.5, 0.5];
        let snr = compute_snr(&reference, &estimate).unwrap();
        assert_abs_diff_eq!(snr, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn perfect_estimate_is_infinite() {
        let reference = [0.3, 0.7, 0.1];
        assert_eq!(compute_snr(&reference, &reference).unwrap(), f64::INFINITY);
    }

    #[test]
    fn better_estimates_score_higher() {
        let reference: Vec<f64> = (0..50).map(|i| (i % 5) as f64 / 4.0).collect();
        let rough: Vec<f64> = reference.iter().map(|v| v + 0.2).collect();
        let fine: Vec<f64> = reference.iter().map(|v| v + 0.02).collect();
        let a = compute_snr(&reference, &rough).unwrap();
        let b = compute_snr(&reference, &fine).unwrap();
        assert!(b > a);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        assert!(compute_snr(&[1.0, 2.0], &[1.0]).is_err());
    }
}
