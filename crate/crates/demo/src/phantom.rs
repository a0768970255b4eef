use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Build a piecewise-constant grayscale phantom in `[0, 1]`, row-major.
///
/// The image starts from a flat background, gets one fixed high-contrast
/// rectangle (so every phantom has edges and nonzero total variation), and
/// then a handful of seeded random rectangles of varying intensity. The
/// same `(rows, cols, seed)` always produces the same image.
///
/// Panics if the image is smaller than 8x8; the caller validates sizes.
pub fn make_phantom(rows: usize, cols: usize, seed: u64) -> Vec<f64> {
    assert!(rows >= 8 && cols >= 8, "phantom needs at least 8x8 pixels");

    let mut img = vec![0.15; rows * cols];
    let mut fill = |top: usize, left: usize, height: usize, width: usize, value: f64| {
        for i in top..(top + height).min(rows) {
            for j in left..(left + width).min(cols) {
                img[i * cols + j] = value;
            }
        }
    };

    // Deterministic anchor block in the upper-left quadrant.
    fill(rows / 8, cols / 8, rows / 4, cols / 4, 0.85);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let height = rng.random_range(rows / 8..=rows / 2);
        let width = rng.random_range(cols / 8..=cols / 2);
        let top = rng.random_range(0..rows - height);
        let left = rng.random_range(0..cols - width);
        let value = rng.random_range(0.0..1.0);
        fill(top, left, height, width, value);
    }

    for v in img.iter_mut() {
        *v = v.clamp(0.0, 1.0);
    }
    img
}

#[cfg(test)]
mod tests {
    use super::*;
    use proxkit::tv_norm;
    use std::collections::BTreeSet;

    #[test]
    fn phantom_is_deterministic() {
        let a = make_phantom(32, 48, 7);
        let b = make_phantom(32, 48, 7);
        assert_eq!(a, b);
        let c = make_phantom(32, 48, 8);
        assert_ne!(a, c);
    }

    #[test]
    fn phantom_stays_in_unit_range() {
        let img = make_phantom(64, 64, 42);
        assert!(img.iter().all(|&v| (0.0..=1.0).contains(&v)));
    }

    #[test]
    fn phantom_is_piecewise_constant_with_edges() {
        let img = make_phantom(64, 64, 42);
        // A handful of rectangles means a handful of gray levels...
        let levels: BTreeSet<u64> = img.iter().map(|v| v.to_bits()).collect();
        assert!(levels.len() <= 7, "expected few gray levels, got {}", levels.len());
        // ...and the anchor rectangle guarantees edges.
        assert!(tv_norm(&img, 64, 64) > 1.0);
    }
}
