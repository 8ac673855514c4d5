//! Uniform sphere points addressed by (seed, index).
//!
//! Point k uses words 4k..4k+4 of a ChaCha8 stream, so any chunking of the index range
//! reproduces the same points.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sphere::UnitVec;

/// Points handed to one worker at a time.
pub const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereSampler {
    seed: u64,
}

impl SphereSampler {
    pub fn new(seed: u64) -> Self {
        SphereSampler { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Points `start .. start + count`.
    pub fn points(&self, start: u64, count: u64) -> impl Iterator<Item = UnitVec> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_word_pos(start as u128 * 4);
        (0..count).map(move |_| {
            let u1: f64 = rng.random();
            let u2: f64 = rng.random();
            point_from_uniforms(u1, u2)
        })
    }

    pub fn point(&self, index: u64) -> UnitVec {
        self.points(index, 1).next().expect("one point")
    }
}

/// z = 2u₁ − 1, φ = 2πu₂.
pub fn point_from_uniforms(u1: f64, u2: f64) -> UnitVec {
    let z = 2.0 * u1 - 1.0;
    let phi = 2.0 * PI * u2;
    let rho = (1.0 - z * z).max(0.0).sqrt();
    UnitVec::from_vector(nalgebra::Vector3::new(rho * phi.cos(), rho * phi.sin(), z)).expect("non-zero")
}
