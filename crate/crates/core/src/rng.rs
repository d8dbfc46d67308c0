//! Seeded, splittable random streams.
//!
//! A stream is a ChaCha8 keystream: the 64-bit seed expands into the key and
//! the stream id selects the ChaCha stream (nonce). Any `(seed, stream_id)`
//! pair can therefore be opened independently, in any order, on any thread.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Single-owner random stream.
#[derive(Debug, Clone)]
pub struct RandomStream(ChaCha8Rng);

/// Opens stream `stream_id` under `seed`.
pub fn make_rng_stream(seed: u64, stream_id: u64) -> RandomStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    RandomStream(rng)
}

/// Mixes a seed with a sequence of labels into a new seed (SplitMix64
/// finalizer applied per label).
pub fn derive_seed(seed: u64, labels: &[u64]) -> u64 {
    labels.iter().fold(mix64(seed), |acc, &l| mix64(acc ^ mix64(l.wrapping_add(0x9E37_79B9_7F4A_7C15))))
}

fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RngCore for RandomStream {
    #[inline]
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    #[inline]
    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    #[inline]
    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.0.fill_bytes(dst)
    }
}
