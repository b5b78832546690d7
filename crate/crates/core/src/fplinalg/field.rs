use crate::error::{Error, Result};

/// The primes the library is tuned for. Any prime below 256 works.
pub const SUPPORTED_PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 23];

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Arithmetic in `F_p` for a prime `p < 256`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Fp> {
        if !is_prime(p) || p > 251 {
            return Err(Error::UnsupportedPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.p) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.p - b as u32) % self.p) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        ((self.p - a as u32) % self.p) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a as u32 * b as u32 % self.p) as u8
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut base = a as u32 % self.p;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc as u8
    }

    pub fn inv(self, a: u8) -> u8 {
        assert!(a as u32 % self.p != 0, "inverse of zero");
        self.pow(a, (self.p - 2) as u64)
    }

    #[inline]
    pub fn from_i64(self, a: i64) -> u8 {
        a.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn from_u64(self, a: u64) -> u8 {
        (a % self.p as u64) as u8
    }
}
