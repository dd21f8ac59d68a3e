//! Prime fields GF(p) for odd primes p ≡ 3 (mod 4).
//!
//! The congruence restriction makes x² + 1 irreducible over GF(p), which is
//! what lets the Gaussian-integer extension in [`crate::gaussian`] form a
//! field. Elements are stored as canonical `u32` residues in `[0, p)`;
//! all arithmetic widens to `u64` internally, which is exact for the
//! supported moduli (p < 2¹⁵).

use crate::error::{Error, Result};

/// Exclusive upper bound on supported moduli. Keeping p below 2¹⁵ means
/// every intermediate product fits comfortably in 64 bits, including the
/// accumulated dot products inside the transforms.
pub const MAX_MODULUS: u32 = 1 << 15;

/// A prime field GF(p) with p ≡ 3 (mod 4).
///
/// This is a lightweight context object: elements are plain `u32` residues
/// and all operations go through the field. Copying it is free.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Validates the modulus and constructs the field.
    ///
    /// Rejects composites, p = 2, p ≡ 1 (mod 4) and anything above
    /// [`MAX_MODULUS`], each with its own error so the caller can tell
    /// exactly which requirement failed.
    pub fn new(p: u32) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p % 4 != 3 {
            // Covers p = 2 as well: x² + 1 = (x + 1)² there.
            return Err(Error::NotThreeModFour(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    /// True if `v` is a canonical residue of this field.
    pub fn contains(self, v: u32) -> bool {
        v < self.p
    }

    pub fn reduce_u64(self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    /// Reduces a possibly negative value into `[0, p)`.
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        debug_assert!(self.contains(a) && self.contains(b));
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        debug_assert!(self.contains(a) && self.contains(b));
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u32) -> u32 {
        debug_assert!(self.contains(a));
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        debug_assert!(self.contains(a) && self.contains(b));
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Binary exponentiation; `pow(0, 0) = 1` by convention.
    pub fn pow(self, base: u32, mut exp: u64) -> u32 {
        debug_assert!(self.contains(base));
        let mut acc: u64 = 1;
        let mut b = base as u64;
        let p = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// Multiplicative inverse via Fermat: a^(p-2). Exact for every nonzero
    /// residue; zero is rejected.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }
}

/// Deterministic trial-division primality test. The modulus cap keeps the
/// worst case at ~181 divisions, so nothing fancier is warranted.
fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while d as u64 * d as u64 <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
