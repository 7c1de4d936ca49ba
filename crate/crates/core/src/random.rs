//! Seeded pseudo-random rationals keyed by basis elements.
//!
//! A value depends only on `(seed, key)`, where the key is hashed from its
//! printed form, so random moulds are total rules that can be evaluated on
//! any word or forest in any order and still agree across runs.

use core::fmt::{self, Write};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Rational;

struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn bytes(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
}

impl Write for Fnv {
    fn write_str(&mut self, s: &str) -> fmt::Result {
        self.bytes(s.as_bytes());
        Ok(())
    }
}

/// A generator seeded from `seed` and the printed form of `key`.
pub fn keyed_rng<K: fmt::Display + ?Sized>(seed: u64, key: &K) -> ChaCha8Rng {
    let mut h = Fnv::new();
    h.bytes(&seed.to_le_bytes());
    let _ = write!(h, "{}", key);
    ChaCha8Rng::seed_from_u64(h.0)
}

/// A small rational `n/d` with `-6 ≤ n ≤ 6`, `1 ≤ d ≤ 5`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n: i64 = rng.random_range(-6..=6);
    let d: i64 = rng.random_range(1..=5);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A rational in `[-1, 1]` with denominator at most 5.
pub fn unit_rational<R: Rng>(rng: &mut R) -> Rational {
    let d: i64 = rng.random_range(1..=5);
    let n: i64 = rng.random_range(-d..=d);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn keyed_small_rational<K: fmt::Display + ?Sized>(seed: u64, key: &K) -> Rational {
    small_rational(&mut keyed_rng(seed, key))
}

pub fn keyed_unit_rational<K: fmt::Display + ?Sized>(seed: u64, key: &K) -> Rational {
    unit_rational(&mut keyed_rng(seed, key))
}
