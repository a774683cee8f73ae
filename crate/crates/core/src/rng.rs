//! Splittable, counter-based random number generation.
//!
//! Every randomized operation in this crate takes an explicit RNG handle.
//! A [`SplitRng`] is keyed by a 64-bit seed and a stream counter; children
//! derived with [`SplitRng::split`] or [`SplitRng::stream`] are statistically
//! independent and reproducible, which makes parallel ensembles (one stream
//! per grid point or chain) deterministic regardless of scheduling.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// SplitMix64 finalizer; used to decorrelate derived seeds.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// A counter-based splittable RNG with a 64-bit seed.
#[derive(Debug, Clone)]
pub struct SplitRng {
    seed: u64,
    inner: ChaCha12Rng,
    children: u64,
}

impl SplitRng {
    /// Root generator for a run.
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha12Rng::seed_from_u64(seed),
            children: 0,
        }
    }

    /// The independent stream `idx` under `seed`. Streams with distinct
    /// indices never overlap; the same `(seed, idx)` always yields the same
    /// sequence.
    pub fn stream(seed: u64, idx: u64) -> Self {
        let child_seed = mix64(seed ^ mix64(idx.wrapping_add(1)));
        Self::new(child_seed)
    }

    /// Derive the next child stream from this generator.
    pub fn split(&mut self) -> Self {
        self.children += 1;
        Self::stream(mix64(self.seed).wrapping_add(self.children), self.children)
    }

    /// Seed this generator was created with.
    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for SplitRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }
    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }
    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}
