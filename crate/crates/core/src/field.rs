//! Prime-field arithmetic on machine words.
//!
//! Elements are `u64` values reduced modulo `p` with `2 <= p < 2^31`, so
//! products fit in `u64` without overflow and every operation is exact.

use core::fmt;
use rand_core::RngCore;

/// A prime field `F_p` with `2 <= p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Construction errors for [`PrimeField`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    /// The modulus is out of the supported range `2..2^31`.
    OutOfRange(u64),
    /// The modulus is composite.
    NotPrime(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::OutOfRange(p) => write!(f, "modulus {p} outside supported range 2..2^31"),
            FieldError::NotPrime(p) => write!(f, "modulus {p} is not prime"),
        }
    }
}

impl core::error::Error for FieldError {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// Checks the range and primality of `p` (trial division is instant at
    /// this size) and returns the field.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..1u64 << 31).contains(&p) {
            return Err(FieldError::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `0..p`.
    pub fn from_i64(&self, x: i64) -> u64 {
        let m = self.p as i64;
        ((x % m + m) % m) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Panics on zero input: callers always invert pivots already known to be
    /// nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "gcd(a, p) must be 1 in a field");
        self.from_i64(t0)
    }

    /// Uniform element of `0..p` by rejection sampling, so the distribution
    /// is exact and identical across platforms for a given RNG stream.
    pub fn uniform<R: RngCore>(&self, rng: &mut R) -> u64 {
        let zone = (u64::MAX / self.p) * self.p;
        loop {
            let x = rng.next_u64();
            if x < zone {
                return x % self.p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(1), Err(FieldError::OutOfRange(1)));
        assert_eq!(PrimeField::new(1 << 31), Err(FieldError::OutOfRange(1 << 31)));
        assert_eq!(PrimeField::new(32004), Err(FieldError::NotPrime(32004)));
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn field_axioms_spot_checks() {
        for p in [2u64, 3, 5, 32003] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p.min(50) {
                assert_eq!(f.mul(a, f.inv(a)), 1, "a * a^-1 = 1 in F_{p}");
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
            assert_eq!(f.from_i64(-1), p - 1);
        }
    }

    #[test]
    fn uniform_is_deterministic_and_in_range() {
        let f = PrimeField::new(32003).unwrap();
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let x = f.uniform(&mut a);
            assert_eq!(x, f.uniform(&mut b));
            assert!(x < 32003);
        }
    }
}
