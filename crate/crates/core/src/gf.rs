//! Word-sized polynomial arithmetic over `F_p`, used by the irreducibility test,
//! the factorisation of `x^m - 1` and codeword enumeration.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Prime, Ring};

/// Dense polynomial over `F_p` with `u64` coefficients, ascending, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut acc, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

impl FpPoly {
    pub fn new(p: Prime, coeffs: Vec<u64>) -> Self {
        let p = p.get();
        let mut poly = FpPoly {
            p,
            c: coeffs.into_iter().map(|x| x % p).collect(),
        };
        poly.trim();
        poly
    }

    fn raw(p: u64, c: Vec<u64>) -> Self {
        let mut poly = FpPoly { p, c };
        poly.trim();
        poly
    }

    pub fn zero(p: Prime) -> Self {
        FpPoly {
            p: p.get(),
            c: Vec::new(),
        }
    }

    pub fn one(p: Prime) -> Self {
        Self::new(p, vec![1])
    }

    /// The monomial `x`.
    pub fn x(p: Prime) -> Self {
        Self::new(p, vec![0, 1])
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(p: Prime, m: usize) -> Self {
        let mut c = vec![0; m + 1];
        c[0] = p.get() - 1;
        c[m] = 1;
        Self::new(p, c)
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn prime(&self) -> Prime {
        Prime::new(self.p).expect("constructed from a Prime")
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.c.last() == Some(&1)
    }

    pub fn from_poly(poly: &Poly) -> Result<Self> {
        let p = poly.ring().prime().ok_or_else(|| {
            Error::domain(format!("expected a polynomial over F_p, got one over {}", poly.ring()))
        })?;
        let c = poly
            .coeffs()
            .iter()
            .map(|x| x.to_u64().expect("reduced coefficient fits in u64"))
            .collect();
        Ok(FpPoly::raw(p.get(), c))
    }

    pub fn to_poly(&self) -> Poly {
        let ring = Ring::PrimeField(self.prime());
        Poly::new(ring, self.c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.c.len().max(o.c.len());
        let c = (0..len)
            .map(|i| (self.coeff(i) + o.coeff(i)) % self.p)
            .collect();
        FpPoly::raw(self.p, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let len = self.c.len().max(o.c.len());
        let c = (0..len)
            .map(|i| (self.coeff(i) + self.p - o.coeff(i)) % self.p)
            .collect();
        FpPoly::raw(self.p, c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::raw(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        FpPoly::raw(p, out)
    }

    pub fn scale(&self, s: u64) -> Self {
        FpPoly::raw(self.p, self.c.iter().map(|&a| mul_mod(a, s, self.p)).collect())
    }

    /// Scales to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.c.last() {
            None | Some(1) => self.clone(),
            Some(&lead) => self.scale(inv_mod(lead, self.p)),
        }
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let p = self.p;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (FpPoly::raw(p, Vec::new()), self.clone());
        }
        let inv = inv_mod(d.c[dd], p);
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = mul_mod(r[i + dd], inv, p);
            q[i] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &dc) in d.c.iter().enumerate() {
                r[i + j] = (r[i + j] + p - mul_mod(coef, dc, p)) % p;
            }
        }
        r.truncate(dd);
        (FpPoly::raw(p, q), FpPoly::raw(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mul_mod(a, i as u64 % self.p, self.p))
            .collect();
        FpPoly::raw(self.p, c)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = FpPoly::raw(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Coefficient vector reversed at the actual degree.
    pub fn reciprocal(&self) -> Self {
        FpPoly::raw(self.p, self.c.iter().rev().copied().collect())
    }

    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.c.iter().eq(self.c.iter().rev())
    }

    /// `g(x)` with `g(x)^p = self`, assuming `self' = 0`.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.c.iter().step_by(p).copied().collect();
        FpPoly::raw(self.p, c)
    }
}

/// Prime divisors of `n`.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `x^(p^d) mod f`, by `d` successive `p`-th powers.
fn frobenius_power(f: &FpPoly, d: usize) -> FpPoly {
    let p = f.p;
    let mut h = FpPoly::raw(p, vec![0, 1]).rem(f);
    for _ in 0..d {
        h = h.pow_mod(p, f);
    }
    h
}

/// Rabin's test. `f` must have degree at least 1.
pub fn is_irreducible_rabin(f: &FpPoly) -> bool {
    let n = f.degree().expect("nonzero polynomial");
    assert!(n >= 1, "irreducibility needs degree >= 1");
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let x = FpPoly::raw(f.p, vec![0, 1]);
    if frobenius_power(&f, n) != x.rem(&f) {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|q| {
        let h = frobenius_power(&f, n / q as usize);
        h.sub(&x).gcd(&f).is_one()
    })
}

/// Every monic polynomial of degree `d`, in lexicographic order of the lower
/// coefficients (constant term varying fastest).
pub fn monic_polys_of_degree(p: Prime, d: usize) -> impl Iterator<Item = FpPoly> {
    let pv = p.get();
    let total = (pv as u128).pow(d as u32);
    (0..total).map(move |mut idx| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push((idx % pv as u128) as u64);
            idx /= pv as u128;
        }
        c.push(1);
        FpPoly::raw(pv, c)
    })
}

/// Irreducibility by trial division against every monic polynomial of degree
/// at most `deg/2`.
pub fn is_irreducible_trial(f: &FpPoly) -> bool {
    let n = f.degree().expect("nonzero polynomial");
    assert!(n >= 1, "irreducibility needs degree >= 1");
    (1..=n / 2).all(|d| monic_polys_of_degree(f.prime(), d).all(|g| !g.divides(f)))
}

/// Square-free decomposition: pairs `(g, e)` with `f = lc * Π g^e`, each `g`
/// square-free and the `g` pairwise coprime.
fn square_free(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = f.derivative();
    let mut c = f.gcd(&d);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root();
        for (g, e) in square_free(&root) {
            out.push((g, e * f.p as u32));
        }
    }
    out
}

/// Distinct-degree split of a square-free monic polynomial.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = FpPoly::raw(f.p, vec![0, 1]);
    let mut h = x.rem(&g);
    let mut i = 1;
    while g.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(f.p, &g);
        let d = g.gcd(&h.sub(&x));
        if !d.is_one() {
            g = g.div_rem(&d).0;
            h = h.rem(&g);
            out.push((d, i));
        }
        i += 1;
    }
    if g.degree().unwrap_or(0) > 0 {
        let deg = g.degree().unwrap();
        out.push((g, deg));
    }
    out
}

/// Cantor-Zassenhaus split of a product of distinct degree-`d` irreducibles.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let p = f.p;
    loop {
        let a = FpPoly::raw(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let candidate = if p == 2 {
            // trace a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p, f);
                norm = norm.mul(&t).rem(f);
            }
            norm.pow_mod((p - 1) / 2, f).sub(&FpPoly::raw(p, vec![1]))
        };
        let g = f.gcd(&candidate);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_rem(&g).0, d, rng));
            return out;
        }
    }
}

/// Complete factorisation of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by degree then coefficients. The leading coefficient
/// is dropped.
pub fn factor(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for (sq, e) in square_free(f) {
        for (part, d) in distinct_degree(&sq) {
            for irr in equal_degree(&part, d, &mut rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.c.cmp(&b.0.c)));
    out
}
