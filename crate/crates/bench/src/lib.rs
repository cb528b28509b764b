//! Seeded inputs shared by the benchmarks.

use meltdown_core::int_pow;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6d65_6c74;

/// `count` positive values spread over `10^lo_exp .. 10^hi_exp`, one decade
/// chosen uniformly per value.
pub fn positive_samples(count: usize, lo_exp: i32, hi_exp: i32) -> Vec<f64> {
    assert!(lo_exp < hi_exp, "empty exponent range");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| {
            let mantissa: f64 = rng.random_range(1.0..10.0);
            let k = rng.random_range(lo_exp..hi_exp);
            let scale = int_pow(10.0, k.unsigned_abs()).expect("decade fits");
            if k < 0 {
                mantissa / scale
            } else {
                mantissa * scale
            }
        })
        .collect()
}

/// `count` reals uniform in `lo..hi`.
pub fn uniform_samples(count: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    (0..count).map(|_| rng.random_range(lo..hi)).collect()
}
