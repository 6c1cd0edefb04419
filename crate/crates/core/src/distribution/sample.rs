//! Seeded rational sample points.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::arith::rational::Rational;

const PRIMES: [i64; 25] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Attempts allowed before a computation gives up with `NonGenericPoint`.
pub const RESAMPLE_BUDGET: usize = 20;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn below(&mut self, n: u32) -> u32 {
        self.rng.next_u32() % n
    }

    /// Each coordinate is a/p with a in [2, 97] and p prime.
    pub fn point(&mut self, n: usize) -> Vec<Rational> {
        (0..n)
            .map(|_| {
                let a = 2 + self.below(96) as i64;
                let p = PRIMES[self.below(PRIMES.len() as u32) as usize];
                Rational::new(a, p)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = Sampler::new(7).point(5);
        let b = Sampler::new(7).point(5);
        assert_eq!(a, b);
        assert_ne!(a, Sampler::new(8).point(5));
        for x in a {
            assert!(x > Rational::zero());
        }
    }
}
