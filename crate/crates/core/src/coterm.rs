//! Coterm polynomials in `R[x]/(x^m - 1)` and their construction from the
//! self-reciprocal family members.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::binomics::weight_base_p;
use crate::error::{Error, Result};
use crate::family::{f_char2, f_family, g_family, gstar_family};
use crate::poly::Poly;
use crate::ring::{Prime, Ring};

/// The ambient ring `R[x]/(x^m - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CotermContext {
    m: usize,
    ring: Ring,
}

impl CotermContext {
    pub fn new(m: usize, ring: Ring) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("coterm modulus length must be at least 1"));
        }
        Ok(CotermContext { m, ring })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
}

/// `a_i = a_{m-i}` for `1 <= i <= m/2`; the constant term is free.
pub fn is_coterm(a: &Poly, ctx: &CotermContext) -> Result<bool> {
    ctx.ring.check_same(a.ring())?;
    if a.degree().is_some_and(|d| d >= ctx.m) {
        return Err(Error::domain(format!(
            "degree {} is not below the modulus length {}",
            a.degree().unwrap(),
            ctx.m
        )));
    }
    Ok((1..=ctx.m / 2).all(|i| a.coeff(i) == a.coeff(ctx.m - i)))
}

/// Drops the leading term of a self-reciprocal polynomial of degree `m >= 1`,
/// giving a coterm polynomial modulo `x^m - 1`.
pub fn coterm_from_self_reciprocal(a: &Poly) -> Result<(Poly, CotermContext)> {
    if !a.is_self_reciprocal() {
        return Err(Error::domain(format!("{a} is not self-reciprocal")));
    }
    let m = a.degree().expect("self-reciprocal implies nonzero");
    if m == 0 {
        return Err(Error::domain("a constant has no leading term to remove"));
    }
    let mut coeffs = a.coeffs().to_vec();
    coeffs.pop();
    Ok((Poly::new(a.ring(), coeffs), CotermContext::new(m, a.ring())?))
}

/// The coterm constructions, one per statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CotermTheorem {
    /// `f_{n,0} - 2x^{n/2}` over Z, even `n >= 4`.
    T5_1,
    /// `f_{n,2} - 2n x^{n/2-1}` over Z, even `n >= 6`.
    T5_2,
    /// `g_{n,0} - 2x^{n/2}` over Z, even `n >= 4`.
    T5_3,
    /// `f_{n,1} - (n+1) x^{(n-1)/2}` over Z, odd `n > 3`.
    T5_4,
    /// `g*_{n,1} - (n+1) x^{(n-1)/2}` over Z, odd `n > 3`.
    T5_5,
    /// `f_{n,0} - 2x^{n/2}` over odd `F_p`, even `n >= 4`; constant 2 when `w_p(n) = 2`.
    T5_7,
    /// `f_{n,2} - 2n x^{n/2-1}` over odd `F_p`, even `n >= 6`, `p ∤ n`; constant 2 when `n = p^l + 1`.
    T5_8,
    /// `f_{n,1} - (n+1) x^{(n-1)/2}` over odd `F_p`, odd `n > 3`, `p ∤ n+1`; constant 1 when `n = p^l`.
    T5_9,
    /// `f_{n,1} - x^{n/2}` over `F_2`, even `n >= 4`; constant 1 when `n = 2^l`.
    #[serde(rename = "CHAR2")]
    Char2,
}

impl CotermTheorem {
    pub const ALL: [CotermTheorem; 9] = [
        CotermTheorem::T5_1,
        CotermTheorem::T5_2,
        CotermTheorem::T5_3,
        CotermTheorem::T5_4,
        CotermTheorem::T5_5,
        CotermTheorem::T5_7,
        CotermTheorem::T5_8,
        CotermTheorem::T5_9,
        CotermTheorem::Char2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CotermTheorem::T5_1 => "T5_1",
            CotermTheorem::T5_2 => "T5_2",
            CotermTheorem::T5_3 => "T5_3",
            CotermTheorem::T5_4 => "T5_4",
            CotermTheorem::T5_5 => "T5_5",
            CotermTheorem::T5_7 => "T5_7",
            CotermTheorem::T5_8 => "T5_8",
            CotermTheorem::T5_9 => "T5_9",
            CotermTheorem::Char2 => "CHAR2",
        }
    }

    /// The fixed `k` of the construction.
    pub fn k(self) -> i64 {
        match self {
            CotermTheorem::T5_1 | CotermTheorem::T5_3 | CotermTheorem::T5_7 => 0,
            CotermTheorem::T5_2 | CotermTheorem::T5_8 => 2,
            _ => 1,
        }
    }

    /// Whether the construction lives over the integers.
    pub fn over_integers(self) -> bool {
        matches!(
            self,
            CotermTheorem::T5_1
                | CotermTheorem::T5_2
                | CotermTheorem::T5_3
                | CotermTheorem::T5_4
                | CotermTheorem::T5_5
        )
    }
}

impl fmt::Display for CotermTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CotermTheorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut norm = s.trim().to_ascii_uppercase().replace('.', "_");
        if norm.starts_with(|c: char| c.is_ascii_digit()) {
            norm.insert(0, 'T');
        }
        if norm == "C2" {
            norm = "CHAR2".into();
        }
        CotermTheorem::ALL
            .into_iter()
            .find(|t| t.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown coterm construction {s:?}")))
    }
}

/// Output of [`coterm_construct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotermConstruction {
    pub theorem: CotermTheorem,
    pub n: u64,
    pub k: i64,
    pub poly: Poly,
    pub ctx: CotermContext,
    /// The polynomial collapsed to the constant named by the accompanying remark.
    pub degenerate: bool,
}

fn hyp(theorem: CotermTheorem, cond: bool, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::hypothesis(theorem.name(), reason))
    }
}

fn odd_prime(theorem: CotermTheorem, ring: Ring) -> Result<Prime> {
    match ring.prime() {
        Some(p) if p.is_odd() => Ok(p),
        _ => Err(Error::hypothesis(theorem.name(), "ring must be F_p with p odd")),
    }
}

/// Builds the coterm polynomial of `theorem` at `(n, k)` over `ring`, after
/// checking the statement's hypotheses.
///
/// The ambient length `m` is the degree of the parent polynomial, i.e. the
/// exponent of the removed term. When the accompanying remark's exceptional
/// case applies the result is flagged `degenerate` and is checked to be the
/// remark's constant.
pub fn coterm_construct(
    theorem: CotermTheorem,
    n: u64,
    k: i64,
    ring: Ring,
) -> Result<CotermConstruction> {
    use CotermTheorem::*;
    hyp(
        theorem,
        k == theorem.k(),
        &format!("k must be {}", theorem.k()),
    )?;
    if theorem.over_integers() {
        hyp(theorem, ring == Ring::Integers, "ring must be Z")?;
    }
    let even = n.is_multiple_of(2);
    let (parent, removed, exponent, degenerate_constant) = match theorem {
        T5_1 | T5_3 => {
            hyp(theorem, even && n >= 4, "n must be even and >= 4")?;
            let parent = if theorem == T5_1 {
                f_family(n, 0, ring)?
            } else {
                g_family(n, 0, ring)?
            };
            (parent, BigInt::from(2), n / 2, None)
        }
        T5_2 => {
            hyp(theorem, even && n >= 6, "n must be even and >= 6")?;
            (f_family(n, 2, ring)?, BigInt::from(2 * n), n / 2 - 1, None)
        }
        T5_4 | T5_5 => {
            hyp(theorem, !even && n > 3, "n must be odd and > 3")?;
            let parent = if theorem == T5_4 {
                f_family(n, 1, ring)?
            } else {
                gstar_family(n, 1, ring)?
            };
            (parent, BigInt::from(n + 1), (n - 1) / 2, None)
        }
        T5_7 => {
            let p = odd_prime(theorem, ring)?;
            hyp(theorem, even && n >= 4, "n must be even and >= 4")?;
            let degenerate = weight_base_p(n, p.get())? == 2;
            (f_family(n, 0, ring)?, BigInt::from(2), n / 2, degenerate.then_some(2))
        }
        T5_8 => {
            let p = odd_prime(theorem, ring)?;
            hyp(theorem, even && n >= 6, "n must be even and >= 6")?;
            hyp(theorem, !p.divides(n), "n must not be a multiple of 2p")?;
            let degenerate = p.log_of_power(n - 1).is_some();
            (
                f_family(n, 2, ring)?,
                BigInt::from(2 * n),
                n / 2 - 1,
                degenerate.then_some(2),
            )
        }
        T5_9 => {
            let p = odd_prime(theorem, ring)?;
            hyp(theorem, !even && n > 3, "n must be odd and > 3")?;
            hyp(theorem, !p.divides(n + 1), "n + 1 must not be a multiple of 2p")?;
            let degenerate = p.log_of_power(n).is_some();
            (
                f_family(n, 1, ring)?,
                BigInt::from(n + 1),
                (n - 1) / 2,
                degenerate.then_some(1),
            )
        }
        Char2 => {
            hyp(theorem, ring == Ring::f2(), "ring must be F_2")?;
            hyp(theorem, even && n >= 4, "n must be even and >= 4")?;
            let degenerate = Prime::TWO.log_of_power(n).is_some();
            (f_char2(n)?, BigInt::from(1), n / 2, degenerate.then_some(1))
        }
    };
    let exponent = exponent as usize;
    if parent.degree() != Some(exponent) || parent.coeff(exponent) != ring.reduce(removed.clone())
    {
        return Err(Error::Invariant(format!(
            "{theorem}: parent {parent} does not have leading term {removed} x^{exponent}"
        )));
    }
    let poly = parent.sub(&Poly::monomial(ring, removed, exponent))?;
    let ctx = CotermContext::new(exponent, ring)?;
    if let Some(c) = degenerate_constant {
        if poly != Poly::constant(ring, c) {
            return Err(Error::Invariant(format!(
                "{theorem} at n = {n}: expected the constant {c}, got {poly}"
            )));
        }
    }
    Ok(CotermConstruction {
        theorem,
        n,
        k,
        poly,
        ctx,
        degenerate: degenerate_constant.is_some(),
    })
}
