//! Seeded random sampling of exact-rational test data.
//!
//! Coordinates are drawn from `{-K, ..., K} / q` with `q` in `{1, 2, 3}`, which
//! keeps every sum, meet and scaled value small and exact.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{ratio, Rational};
use crate::space::{Family, RationalVector, SpaceSpec};

pub const DEFAULT_RANGE: i64 = 10;

/// Deterministic sampler; the same seed always yields the same stream.
pub struct Sampler {
    rng: ChaCha8Rng,
    range: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), range: DEFAULT_RANGE }
    }

    pub fn with_range(seed: u64, range: i64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), range }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rational(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=3);
        ratio(self.rng.gen_range(-self.range..=self.range), q)
    }

    pub fn nonneg_rational(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=3);
        ratio(self.rng.gen_range(0..=self.range), q)
    }

    /// Strictly positive scalar.
    pub fn positive_rational(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=3);
        ratio(self.rng.gen_range(1..=self.range), q)
    }

    /// Small integer, handy for scalars and indices.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Random vector; roughly one coordinate in four is zero so supports vary.
    pub fn vector(&mut self, dim: usize) -> RationalVector {
        RationalVector::new(
            (0..dim)
                .map(|_| if self.rng.gen_bool(0.25) { Rational::from_integer(0.into()) } else { self.rational() })
                .collect(),
        )
    }

    /// Random element of the positive cone of `s`.
    pub fn positive_vector(&mut self, s: &SpaceSpec) -> RationalVector {
        let v = self.vector(s.dimension());
        match s.family() {
            Family::Pointwise => v.coord_abs(),
            Family::Lex => s.abs(&v).expect("dimension matches"),
        }
    }

    /// Random vector whose nonzero coordinates lie inside `support` (1-based).
    pub fn vector_in_support(&mut self, dim: usize, support: &[usize]) -> RationalVector {
        let mut coords = vec![Rational::from_integer(0.into()); dim];
        for &i in support {
            if self.rng.gen_bool(0.8) {
                coords[i - 1] = self.rational();
            }
        }
        RationalVector::new(coords)
    }
}
