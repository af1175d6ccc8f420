use num::{BigInt, Integer, ToPrimitive};

use super::{FieldDescriptor, GroundField};
use crate::error::{Error, Result};
use crate::Field;

/// The prime field `F_p` for a word-sized prime `p`. Elements are residues
/// in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::InvalidField(format!("{p} is not prime")))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }

    #[inline]
    fn small(&self) -> bool {
        self.p <= u32::MAX as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (s, overflow) = a.overflowing_add(*b);
        if overflow || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a.wrapping_sub(*b).wrapping_add(self.p)
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.small() {
            a * b % self.p
        } else {
            ((*a as u128 * *b as u128) % self.p as u128) as u64
        }
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(s0))
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n as i128)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn dot<'a, I>(&self, pairs: I) -> u64
    where
        I: IntoIterator<Item = (&'a u64, &'a u64)>,
    {
        // Products of residues below 2^32 fit in 64 bits, so up to 2^64 of
        // them can be summed in a u128 before reducing.
        let mut acc: u128 = 0;
        if self.small() {
            for (a, b) in pairs {
                acc += (*a * *b) as u128;
            }
        } else {
            for (a, b) in pairs {
                acc += (*a as u128 * *b as u128) % self.p as u128;
            }
        }
        (acc % self.p as u128) as u64
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl GroundField for PrimeField {
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField { p: self.p }
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in a word")
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n == b {
            return true;
        }
        if n.is_multiple_of(b) {
            return false;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
