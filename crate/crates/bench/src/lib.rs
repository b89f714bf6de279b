//! Shared parameter sets for the criterion benchmarks.

use fibsum_core::scalar::{rat, GaussianRational};

/// `(label, n, r, w)` combinations benchmarked across upper limits.
pub fn weight_cases() -> Vec<(&'static str, u32, u32, GaussianRational)> {
    vec![
        ("w1_r0", 1, 0, GaussianRational::from_int(1)),
        ("w1_r3", 1, 3, GaussianRational::from_int(1)),
        ("half_r1", 1, 1, GaussianRational::from_rational(rat(1, 2))),
        ("sq_w1", 2, 0, GaussianRational::from_int(1)),
    ]
}

/// Upper limits spanning the regimes where direct summation is cheap,
/// comparable, and hopeless.
pub const K_POINTS: [i64; 3] = [100, 2_000, 20_000];
