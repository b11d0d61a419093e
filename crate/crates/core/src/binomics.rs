//! Exact binomial coefficients, base-`p` digits and Lucas' theorem.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Result;
use crate::ring::Prime;

/// `C(n, m)` exactly; zero outside `0 <= m <= n`.
pub fn binomial(n: u64, m: i64) -> BigInt {
    if m < 0 || m as u64 > n {
        return BigInt::zero();
    }
    let m = (m as u64).min(n - m as u64);
    let mut acc = BigUint::one();
    // acc = C(n - m + i, i) after step i, so every division is exact.
    for i in 1..=m {
        acc *= n - m + i;
        acc /= i;
    }
    BigInt::from(acc)
}

/// Base-`p` expansion, least significant digit first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicDigits {
    p: Prime,
    digits: Vec<u64>,
}

impl PadicDigits {
    pub fn new(n: u64, p: Prime) -> Self {
        let mut digits = Vec::new();
        let mut n = n;
        while n > 0 {
            digits.push(n % p.get());
            n /= p.get();
        }
        PadicDigits { p, digits }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Digit at position `i`, zero past the top.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * self.p.get() as u128 + d as u128)
    }

    pub fn weight(&self) -> u64 {
        self.digits.iter().sum()
    }
}

pub fn digits_base_p(n: u64, p: u64) -> Result<PadicDigits> {
    Ok(PadicDigits::new(n, Prime::new(p)?))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// `C(a, b) mod p` for single digits `a, b < p`.
fn digit_binomial(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..b {
        num = mul_mod(num, (a - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    // every factor is below p, hence invertible
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

/// `C(n, m) mod p` as the digitwise product of small binomials.
pub fn binomial_mod_p_lucas(n: u64, m: u64, p: u64) -> Result<u64> {
    let p = Prime::new(p)?;
    let (nd, md) = (PadicDigits::new(n, p), PadicDigits::new(m, p));
    let len = nd.digits.len().max(md.digits.len());
    let mut acc = 1 % p.get();
    for i in 0..len {
        acc = mul_mod(acc, digit_binomial(nd.digit(i), md.digit(i), p.get()), p.get());
        if acc == 0 {
            break;
        }
    }
    Ok(acc)
}

/// Some base-`p` digit of `m` exceeds the matching digit of `n`.
pub fn divisibility_by_digit_dominance(n: u64, m: u64, p: u64) -> Result<bool> {
    let p = Prime::new(p)?;
    let (nd, md) = (PadicDigits::new(n, p), PadicDigits::new(m, p));
    let len = nd.digits.len().max(md.digits.len());
    Ok((0..len).any(|i| md.digit(i) > nd.digit(i)))
}

/// Sum of the base-`p` digits of `n`.
pub fn weight_base_p(n: u64, p: u64) -> Result<u64> {
    Ok(PadicDigits::new(n, Prime::new(p)?).weight())
}
