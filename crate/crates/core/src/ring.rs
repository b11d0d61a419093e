//! Coefficient domains: the integers and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime modulus. Only constructible through a primality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub const TWO: Prime = Prime(2);

    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// `Some(l)` with `l >= 1` when `n = p^l`.
    pub fn log_of_power(self, n: u64) -> Option<u32> {
        if n < self.0 {
            return None;
        }
        let mut n = n;
        let mut l = 0;
        while n.is_multiple_of(self.0) {
            n /= self.0;
            l += 1;
        }
        (n == 1).then_some(l)
    }

    pub fn divides(self, n: u64) -> bool {
        n.is_multiple_of(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Coefficient domain of a [`Poly`](crate::Poly).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RingRepr", into = "RingRepr")]
pub enum Ring {
    Integers,
    PrimeField(Prime),
}

impl Ring {
    pub fn fp(p: u64) -> Result<Ring> {
        Ok(Ring::PrimeField(Prime::new(p)?))
    }

    pub fn f2() -> Ring {
        Ring::PrimeField(Prime::TWO)
    }

    pub fn prime(self) -> Option<Prime> {
        match self {
            Ring::Integers => None,
            Ring::PrimeField(p) => Some(p),
        }
    }

    pub fn modulus(self) -> Option<u64> {
        self.prime().map(Prime::get)
    }

    /// Canonical representative of `c` in this ring.
    pub fn reduce(self, c: BigInt) -> BigInt {
        match self {
            Ring::Integers => c,
            Ring::PrimeField(p) => c.mod_floor(&BigInt::from(p.get())),
        }
    }

    pub(crate) fn check_same(self, other: Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "ring")]
enum RingRepr {
    Z,
    Fp { p: u64 },
}

impl TryFrom<RingRepr> for Ring {
    type Error = Error;

    fn try_from(r: RingRepr) -> Result<Self> {
        match r {
            RingRepr::Z => Ok(Ring::Integers),
            RingRepr::Fp { p } => Ring::fp(p),
        }
    }
}

impl From<Ring> for RingRepr {
    fn from(r: Ring) -> Self {
        match r {
            Ring::Integers => RingRepr::Z,
            Ring::PrimeField(p) => RingRepr::Fp { p: p.get() },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn large_primes() {
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(18_446_744_073_709_551_555));
        // strong pseudoprime to the first nine prime bases
        assert!(!is_prime(3_825_123_056_546_413_051));
    }

    #[test]
    fn prime_powers() {
        let p3 = Prime::new(3).unwrap();
        assert_eq!(p3.log_of_power(9), Some(2));
        assert_eq!(p3.log_of_power(3), Some(1));
        assert_eq!(p3.log_of_power(1), None);
        assert_eq!(p3.log_of_power(6), None);
        assert_eq!(Prime::TWO.log_of_power(64), Some(6));
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(Ring::fp(9), Err(Error::NotPrime(9)));
        assert_eq!(Ring::fp(1), Err(Error::NotPrime(1)));
        assert!(Ring::fp(13).is_ok());
    }

    #[test]
    fn ring_json() {
        let z = serde_json::to_string(&Ring::Integers).unwrap();
        assert_eq!(z, r#"{"ring":"Z"}"#);
        let f5 = serde_json::to_string(&Ring::fp(5).unwrap()).unwrap();
        assert_eq!(f5, r#"{"ring":"Fp","p":5}"#);
        let back: Ring = serde_json::from_str(&f5).unwrap();
        assert_eq!(back, Ring::fp(5).unwrap());
        assert!(serde_json::from_str::<Ring>(r#"{"ring":"Fp","p":4}"#).is_err());
    }

    #[test]
    fn reduce_is_nonnegative() {
        let f5 = Ring::fp(5).unwrap();
        assert_eq!(f5.reduce(BigInt::from(-2)), BigInt::from(3));
        assert_eq!(Ring::Integers.reduce(BigInt::from(-2)), BigInt::from(-2));
    }
}
