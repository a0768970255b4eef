use std::path::PathBuf;

use crate::{DemoError, Result};

/// Settings for one inpainting run.
///
/// Defaults reproduce the stock experiment: a 64x64 phantom, half the
/// pixels kept, noise level 20/255, and data weight 10 for Problem II.
#[derive(Clone, Debug)]
pub struct DemoConfig {
    pub rows: usize,
    pub cols: usize,
    /// Probability that a pixel survives the mask.
    pub p: f64,
    /// Standard deviation of the Gaussian noise added to kept pixels.
    pub sigma: f64,
    /// Data-fidelity weight in Problem II.
    pub lambda: f64,
    /// Outer iteration cap for every solver run.
    pub maxit: usize,
    /// Relative-variation stopping tolerance for every solver run.
    pub tol: f64,
    pub seed: u64,
    /// Directory the PGM/CSV/summary files are written into.
    pub outdir: PathBuf,
    /// 0 = silent, 1 = per-solve summaries, 2 = per-iteration objectives.
    pub verbose: u8,
}

impl Default for DemoConfig {
    fn default() -> Self {
        DemoConfig {
            rows: 64,
            cols: 64,
            p: 0.5,
            sigma: 20.0 / 255.0,
            lambda: 10.0,
            maxit: 100,
            tol: 1e-5,
            seed: 42,
            outdir: PathBuf::from("out"),
            verbose: 0,
        }
    }
}

impl DemoConfig {
    /// Reject configurations the pipeline cannot run.
    pub fn validate(&self) -> Result<()> {
        if self.rows < 8 || self.cols < 8 {
            return Err(DemoError::Config(format!(
                "image must be at least 8x8, got {}x{}",
                self.rows, self.cols
            )));
        }
        if !(self.p > 0.0 && self.p <= 1.0) {
            return Err(DemoError::Config(format!(
                "keep probability p must lie in (0, 1], got {}",
                self.p
            )));
        }
        if !(self.sigma >= 0.0) || !self.sigma.is_finite() {
            return Err(DemoError::Config(format!(
                "noise level sigma must be nonnegative, got {}",
                self.sigma
            )));
        }
        if !(self.lambda > 0.0) || !self.lambda.is_finite() {
            return Err(DemoError::Config(format!(
                "data weight lambda must be positive, got {}",
                self.lambda
            )));
        }
        if self.maxit == 0 {
            return Err(DemoError::Config("maxit must be at least 1".into()));
        }
        if !(self.tol >= 0.0) {
            return Err(DemoError::Config(format!(
                "tol must be nonnegative, got {}",
                self.tol
            )));
        }
        if self.verbose > 2 {
            return Err(DemoError::Config(format!(
                "verbose must be 0, 1, or 2, got {}",
                self.verbose
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        assert!(DemoConfig::default().validate().is_ok());
    }

    #[test]
    fn out_of_range_values_are_rejected() {
        let mut cfg = DemoConfig::default();
        cfg.rows = 4;
        assert!(cfg.validate().is_err());

        let mut cfg = DemoConfig::default();
        cfg.p = 0.0;
        assert!(cfg.validate().is_err());
        cfg.p = 1.5;
        assert!(cfg.validate().is_err());

        let mut cfg = DemoConfig::default();
        cfg.sigma = -0.1;
        assert!(cfg.validate().is_err());

        let mut cfg = DemoConfig::default();
        cfg.lambda = 0.0;
        assert!(cfg.validate().is_err());

        let mut cfg = DemoConfig::default();
        cfg.verbose = 3;
        assert!(cfg.validate().is_err());
    }
}
