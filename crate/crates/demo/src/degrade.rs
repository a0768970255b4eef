use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

/// A masked, noisy observation of a ground-truth image.
#[derive(Clone, Debug)]
pub struct DegradedInstance {
    /// The clean image the observation was made from.
    pub original: Vec<f64>,
    /// `true` where the pixel was observed.
    pub mask: Vec<bool>,
    /// `mask .* (original + noise)`; dropped pixels are zero.
    pub observed: Vec<f64>,
}

impl DegradedInstance {
    /// Number of observed pixels.
    pub fn kept(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }
}

/// Degrade an image: add Gaussian noise with standard deviation `sigma`,
/// then keep each pixel independently with probability `p` (dropped pixels
/// read as zero). One seeded generator drives first the noise pass and
/// then the mask pass, so the instance is a pure function of
/// `(img, p, sigma, seed)`.
pub fn degrade(img: &[f64], p: f64, sigma: f64, seed: u64) -> DegradedInstance {
    assert!((0.0..=1.0).contains(&p), "keep probability out of range");
    assert!(sigma >= 0.0, "noise level must be nonnegative");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, sigma).expect("valid normal distribution");
    let noisy: Vec<f64> = img.iter().map(|&v| v + normal.sample(&mut rng)).collect();
    let mask: Vec<bool> = (0..img.len()).map(|_| rng.random_bool(p)).collect();
    let observed: Vec<f64> = noisy
        .iter()
        .zip(&mask)
        .map(|(&v, &m)| if m { v } else { 0.0 })
        .collect();

    DegradedInstance {
        original: img.to_vec(),
        mask,
        observed,
    }
}
