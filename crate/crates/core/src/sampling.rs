//! Seeded random points for numeric spot checks.
//!
//! All sampling goes through [`SampleRng`], a ChaCha8 stream seeded from a
//! `u64`. ChaCha output and `rand`'s uniform float conversion are both
//! platform independent, so a seed names the same point set everywhere.

use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::to_f64;

pub struct SampleRng(ChaCha8Rng);

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.0.gen_range(lo..hi)
    }

    pub fn int(&mut self, lo: i64, hi_inclusive: i64) -> i64 {
        self.0.gen_range(lo..=hi_inclusive)
    }

    /// Uniform in the square `[-r, r] x [-r, r]`.
    pub fn complex_in_box(&mut self, r: f64) -> Complex64 {
        Complex64::new(self.uniform(-r, r), self.uniform(-r, r))
    }

    /// Nonzero point in the annulus `lo <= |z| <= hi`.
    pub fn complex_in_annulus(&mut self, lo: f64, hi: f64) -> Complex64 {
        let r = self.uniform(lo, hi);
        let theta = self.uniform(0.0, std::f64::consts::TAU);
        Complex64::from_polar(r, theta)
    }

    /// An `s`-point whose coordinates keep `|2 + T_q s_q|` and
    /// `|2 - T_q s_q|` at least `margin`, away from the poles and from the
    /// singularity of the bilinear map.
    pub fn s_point(&mut self, steps: &[f64], r: f64, margin: f64) -> Vec<Complex64> {
        steps
            .iter()
            .map(|&t| loop {
                let s = self.complex_in_box(r / t);
                let ts = s * t;
                if (ts + 2.0).norm() >= margin && (ts - 2.0).norm() >= margin {
                    break s;
                }
            })
            .collect()
    }

    pub fn inner(&mut self) -> &mut ChaCha8Rng {
        &mut self.0
    }
}

/// `|a - b| <= tol * max(|a|, |b|)`.
pub fn rel_close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm())
}

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn rel_diff(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

pub fn steps_f64(steps: &[BigRational]) -> Vec<f64> {
    steps.iter().map(to_f64).collect()
}
