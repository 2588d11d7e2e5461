//! Seeding helpers.
//!
//! All randomness in the crate flows through ChaCha8 streams created here, so
//! results are reproducible bit for bit from a `u64` seed. Child seeds for
//! replications are derived with a SplitMix64 mix, which keeps replication
//! outputs independent of execution order and of the worker-pool size.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator for one seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent child seed, e.g. per replication index or per grid
/// point. `derive_seed(s, i) != s` even at `i = 0`; the mix is bijective in
/// the xor of its inputs.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    // SplitMix64 finalizer over base xor golden-ratio-spread index.
    let mut z = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
