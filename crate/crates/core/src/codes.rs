//! Cyclic codes of length `m` over `F_p` from divisors of `x^m - 1`, and
//! their reversibility read off the generator.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{factor, FpPoly};
use crate::poly::Poly;
use crate::ring::{Prime, Ring};

pub const MAX_CODE_PRIME: u64 = 13;
pub const MAX_CODE_LENGTH: usize = 32;
/// Largest number of monic divisors [`monic_divisors`] will list.
pub const MAX_DIVISORS: u128 = 4096;
/// Largest code size `p^dimension` [`verify_reversibility_by_enumeration`] will walk.
pub const MAX_CODEWORDS: u128 = 1_000_000;

fn check_scale(p: Prime, m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::domain("code length must be at least 1"));
    }
    if p.get() > MAX_CODE_PRIME || m > MAX_CODE_LENGTH {
        return Err(Error::Capacity(format!(
            "x^m - 1 is factored only for p <= {MAX_CODE_PRIME} and m <= {MAX_CODE_LENGTH}, got p = {p}, m = {m}"
        )));
    }
    Ok(())
}

/// Monic irreducible factors of `x^m - 1` over `F_p` with multiplicities,
/// sorted by degree then coefficients.
pub fn factor_xm_minus_1(p: Prime, m: usize) -> Result<Vec<(Poly, u32)>> {
    check_scale(p, m)?;
    let f = FpPoly::x_pow_minus_one(p, m);
    Ok(factor(&f)
        .into_iter()
        .map(|(g, e)| (g.to_poly(), e))
        .collect())
}

fn divisors_fp(p: Prime, m: usize) -> Result<Vec<FpPoly>> {
    check_scale(p, m)?;
    let factors = factor(&FpPoly::x_pow_minus_one(p, m));
    let count: u128 = factors.iter().map(|(_, e)| *e as u128 + 1).product();
    if count > MAX_DIVISORS {
        return Err(Error::Capacity(format!(
            "x^{m} - 1 over F_{p} has {count} monic divisors, above the cap of {MAX_DIVISORS}"
        )));
    }
    let mut out = vec![FpPoly::one(p)];
    for (g, e) in &factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = acc.mul(g);
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(out)
}

/// Every monic divisor of `x^m - 1` over `F_p`, sorted by degree then
/// coefficients.
pub fn monic_divisors(p: Prime, m: usize) -> Result<Vec<Poly>> {
    Ok(divisors_fp(p, m)?.iter().map(FpPoly::to_poly).collect())
}

/// The self-reciprocal monic divisors of `x^m - 1`. Each generates a
/// reversible cyclic code of length `m`; over `F_2` these are all of them.
pub fn self_reciprocal_divisors(p: Prime, m: usize) -> Result<Vec<Poly>> {
    Ok(divisors_fp(p, m)?
        .iter()
        .filter(|d| d.is_self_reciprocal())
        .map(FpPoly::to_poly)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    pub p: Prime,
    pub m: usize,
    pub generator: Poly,
    pub dimension: usize,
    /// Reversibility from the monic reciprocal: `g*(x) = g(0) g(x)`.
    pub reversible: bool,
    /// The generator is a palindrome, `g* = g`. Implies `reversible`; the
    /// converse fails for odd `p` when `g* = -g`, e.g. `g = x - 1`.
    pub self_reciprocal: bool,
}

/// Whether the monic `g` with `g(0) != 0` equals its monic reciprocal
/// `g*(x) / g(0)`, the form in which reversibility of the generated cyclic
/// code is decided.
pub fn monic_reciprocal_equal(g: &FpPoly) -> bool {
    let c0 = g.coeff(0);
    c0 != 0 && g.reciprocal() == g.scale(c0)
}

/// Checks that `generator` is a monic divisor of `x^m - 1` over `F_p` and
/// decides reversibility from it.
pub fn build_cyclic_code(p: Prime, m: usize, generator: Poly) -> Result<CyclicCode> {
    if m == 0 {
        return Err(Error::domain("code length must be at least 1"));
    }
    let ring = Ring::PrimeField(p);
    let generator = match generator.ring() {
        Ring::Integers => generator.cast(ring),
        r => {
            ring.check_same(r)?;
            generator
        }
    };
    if !generator.is_monic() {
        return Err(Error::domain(format!("generator {generator} is not monic")));
    }
    let g = FpPoly::from_poly(&generator)?;
    if !g.divides(&FpPoly::x_pow_minus_one(p, m)) {
        return Err(Error::domain(format!(
            "generator {generator} does not divide x^{m} - 1 over F_{p}"
        )));
    }
    let degree = generator.degree().expect("monic");
    Ok(CyclicCode {
        p,
        m,
        dimension: m - degree,
        reversible: monic_reciprocal_equal(&g),
        self_reciprocal: generator.is_self_reciprocal(),
        generator,
    })
}

/// Walks every codeword `u * g` with `deg u < dimension` and checks that its
/// length-`m` reversal is again a multiple of `g`.
pub fn verify_reversibility_by_enumeration(code: &CyclicCode) -> Result<bool> {
    let p = code.p.get();
    let size = (p as u128)
        .checked_pow(code.dimension as u32)
        .filter(|&s| s <= MAX_CODEWORDS)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "{p}^{} codewords exceed the enumeration cap of {MAX_CODEWORDS}",
                code.dimension
            ))
        })?;
    let g = FpPoly::from_poly(&code.generator)?;
    let (m, dim) = (code.m, code.dimension);
    let closed = (0..size as u64).into_par_iter().all(|idx| {
        let mut u = Vec::with_capacity(dim);
        let mut rest = idx;
        for _ in 0..dim {
            u.push(rest % p);
            rest /= p;
        }
        let c = FpPoly::new(code.p, u).mul(&g);
        let mut word = c.coeffs().to_vec();
        word.resize(m, 0);
        word.reverse();
        g.divides(&FpPoly::new(code.p, word))
    });
    Ok(closed)
}

/// Machine-readable summary of a code. `enumeration_checked` is true when the
/// codewords were walked and agreed with `reversible`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub p: u64,
    pub m: usize,
    pub generator: Vec<String>,
    pub dimension: usize,
    pub reversible: bool,
    pub self_reciprocal: bool,
    pub enumeration_checked: bool,
}

impl CodeReport {
    pub fn new(code: &CyclicCode, enumerated: Option<bool>) -> Self {
        CodeReport {
            p: code.p.get(),
            m: code.m,
            generator: code.generator.coeff_strings(),
            dimension: code.dimension,
            reversible: code.reversible,
            self_reciprocal: code.self_reciprocal,
            enumeration_checked: enumerated == Some(code.reversible),
        }
    }
}
