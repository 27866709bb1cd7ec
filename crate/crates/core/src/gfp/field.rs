use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field GF(p), `2 <= p < 2^16`.
///
/// Elements are residues stored as `u32` in `[0, p)`. Products fit in `u64`
/// without overflow, so every operation reduces exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldPrime(u32);

impl FieldPrime {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..(1 << 16)).contains(&p) {
            return Err(Error::InvalidPrime(p));
        }
        let mut d = 2u32;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::InvalidPrime(p));
            }
            d += 1;
        }
        Ok(FieldPrime(p))
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// `a + b*c`
    #[inline]
    pub fn mul_add(self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in GF({})", self.0);
        self.pow(a, self.0 as u64 - 2)
    }

    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    /// `(-1)^k` as a residue.
    #[inline]
    pub fn sign(self, k: usize) -> u32 {
        if k.is_multiple_of(2) {
            1 % self.0
        } else {
            self.0 - 1
        }
    }
}

impl TryFrom<u32> for FieldPrime {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        FieldPrime::new(p)
    }
}

impl From<FieldPrime> for u32 {
    fn from(f: FieldPrime) -> u32 {
        f.0
    }
}
