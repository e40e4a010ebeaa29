//! Deterministic 64-bit linear congruential generator.
//!
//! `state ← state · 6364136223846793005 + 1442695040888963407 (mod 2^64)`,
//! with outputs taken from the high 32 bits. The constants are Knuth's MMIX
//! parameters; the stream depends only on the seed, so sampled fixtures are
//! reproducible in any language.

pub const MULTIPLIER: u64 = 6364136223846793005;
pub const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        let mut rng = Lcg64 { state: seed };
        // one warm-up step so that seed 0 does not start with the bare increment
        rng.step();
        rng
    }

    fn step(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    pub fn next_u32(&mut self) -> u32 {
        (self.step() >> 32) as u32
    }

    /// Uniform in `0..bound`; `bound` must be nonzero. Uses rejection to avoid modulo bias.
    pub fn below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0);
        let zone = u32::MAX - (u32::MAX % bound);
        loop {
            let x = self.next_u32();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Uniform over `[-m, m] \ {0}`.
    pub fn nonzero_in(&mut self, m: u32) -> i64 {
        let k = self.below(2 * m) as i64;
        if k < m as i64 {
            k - m as i64
        } else {
            k - m as i64 + 1
        }
    }

    /// Uniform over `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u32) as i64
    }
}
