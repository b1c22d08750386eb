//! Fixed, named pseudo-random generator for reproducible corpora.
//!
//! Corpus generation must be byte-stable across builds and platforms, so the
//! generator is pinned here rather than taken from an external crate. The
//! identifier recorded in output headers is [`GENERATOR_ID`].
//!
//! Stream splitting: the stream for item `i` under seed `s` is a SplitMix64
//! generator whose initial state is `mix(s) ^ mix(GOLDEN * (i + 1))`, where
//! `mix` is the SplitMix64 output function. Draws within a stream are plain
//! SplitMix64 steps; bounded draws use rejection sampling on the top zone of
//! the 64-bit range, so they are exactly uniform.

/// Name recorded in corpus headers.
pub const GENERATOR_ID: &str = "splitmix64/v1";

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 stepper.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// The per-item stream described in the module docs.
    pub fn stream(seed: u64, item: u64) -> SplitMix64 {
        SplitMix64 { state: mix(seed) ^ mix(GOLDEN.wrapping_mul(item.wrapping_add(1))) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform draw in `0..bound` (rejection sampling, exactly uniform).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    pub fn next_bool(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}
