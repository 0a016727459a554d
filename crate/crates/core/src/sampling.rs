//! Seeded random sampling helpers.
//!
//! Every stochastic routine in the crate draws from a [`ChaCha8Rng`] built
//! here, so a seed fully determines its output. Work split into chunks gets
//! one derived stream per chunk index, which keeps parallel runs identical to
//! sequential ones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::Point;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// splitmix64 finalizer; derives independent stream seeds from `(seed, index)`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn uniform_point<R: Rng + ?Sized>(rng: &mut R, half_width: f64) -> Point {
    Point::new(
        rng.gen_range(-half_width..=half_width),
        rng.gen_range(-half_width..=half_width),
        rng.gen_range(-half_width..=half_width),
    )
}

/// Log-uniform sample in `[lo, hi]`, both positive.
pub fn log_uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..=hi.ln())).exp()
}

/// Uniform direction on the Euclidean unit sphere in ℝ³.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> Point {
    loop {
        let p = uniform_point(rng, 1.0);
        let n = (p.x * p.x + p.y * p.y + p.z * p.z).sqrt();
        if n > 1e-3 && n <= 1.0 {
            return Point::new(p.x / n, p.y / n, p.z / n);
        }
    }
}

/// Split `total` samples into chunks of at most `chunk` items.
pub(crate) fn chunks(total: usize, chunk: usize) -> Vec<(u64, usize)> {
    let chunk = chunk.max(1);
    let mut out = Vec::with_capacity(total / chunk + 1);
    let mut left = total;
    let mut index = 0u64;
    while left > 0 {
        let n = left.min(chunk);
        out.push((index, n));
        left -= n;
        index += 1;
    }
    out
}
