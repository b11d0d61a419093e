//! Executable forms of the self-reciprocity classification theorems, the
//! corollaries about irreducible self-reciprocal members, and a
//! definition-based oracle to check them against.

mod scan;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec};
use crate::gf::{is_irreducible_rabin, is_irreducible_trial, FpPoly};
use crate::poly::Poly;
use crate::ring::Ring;

pub use scan::{scan, summarize, ScanSummary, Verdict};

/// Largest degree accepted by [`is_irreducible`].
pub const MAX_IRREDUCIBILITY_DEGREE: usize = 1024;
/// Largest number of candidate divisors [`is_irreducible_by_trial_division`] will try.
pub const MAX_TRIAL_DIVISORS: u128 = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// `f_{n,k}` over Z, `n > 1` even: self-reciprocal iff `k ∈ {0, 2}`.
    T2_1,
    /// `g_{n,k}`, `h_{n,k}` over Z, `n > 1` even: iff `k = 0`.
    T2_3,
    /// `f_{n,k}` over Z, `n > 1` odd: iff `k = 1`, or `n = 3` and `k = 3`.
    T2_4,
    /// `g*_{n,k}`, `h*_{n,k}` over Z, `n > 1` odd: iff `k = 1`.
    T2_7,
    /// `f_{n,k}` over odd `F_p`, `n > 1` even.
    T3_1,
    /// `f_{n,k}` over odd `F_p`, `n` odd.
    T3_4,
    /// `f_{n,1}` over `F_2`, `n > 1`: iff `n` even.
    T4_1,
    C3_2,
    C3_3,
    C3_5,
    C4_2,
    /// Irreducible self-reciprocal polynomials of degree `>= 2` have even degree.
    L1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T2_1,
        TheoremId::T2_3,
        TheoremId::T2_4,
        TheoremId::T2_7,
        TheoremId::T3_1,
        TheoremId::T3_4,
        TheoremId::T4_1,
        TheoremId::C3_2,
        TheoremId::C3_3,
        TheoremId::C3_5,
        TheoremId::C4_2,
        TheoremId::L1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T2_1 => "T2_1",
            TheoremId::T2_3 => "T2_3",
            TheoremId::T2_4 => "T2_4",
            TheoremId::T2_7 => "T2_7",
            TheoremId::T3_1 => "T3_1",
            TheoremId::T3_4 => "T3_4",
            TheoremId::T4_1 => "T4_1",
            TheoremId::C3_2 => "C3_2",
            TheoremId::C3_3 => "C3_3",
            TheoremId::C3_5 => "C3_5",
            TheoremId::C4_2 => "C4_2",
            TheoremId::L1 => "L1",
        }
    }

    /// Corollary-style statements: "no member is irreducible and self-reciprocal"
    /// rather than an exact self-reciprocity classification.
    pub fn is_corollary(self) -> bool {
        matches!(
            self,
            TheoremId::C3_2 | TheoremId::C3_3 | TheoremId::C3_5 | TheoremId::C4_2 | TheoremId::L1
        )
    }

    /// Families a scan of this statement ranges over.
    pub fn families(self) -> &'static [Family] {
        use Family::*;
        match self {
            TheoremId::T2_3 => &[G, H],
            TheoremId::T2_7 => &[GStar, HStar],
            TheoremId::T4_1 | TheoremId::C4_2 => &[Char2],
            TheoremId::L1 => &[F, G, H, GStar, HStar, Kind1, Kind2, Kind3, Char2],
            _ => &[F],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts `T2_1`, `t2.1`, `2.1`, `c3.2`, `l1`, ...
    fn from_str(s: &str) -> Result<Self> {
        let mut norm = s.trim().to_ascii_uppercase().replace('.', "_");
        if norm.starts_with(|c: char| c.is_ascii_digit()) {
            norm.insert(0, 'T');
        }
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}")))
    }
}

fn fail(theorem: TheoremId, reason: impl Into<String>) -> Error {
    Error::hypothesis(theorem.name(), reason)
}

fn require_family(theorem: TheoremId, spec: &FamilySpec) -> Result<()> {
    if theorem.families().contains(&spec.family) {
        Ok(())
    } else {
        Err(fail(
            theorem,
            format!("family {} is not covered", spec.family),
        ))
    }
}

fn require_integers(theorem: TheoremId, spec: &FamilySpec) -> Result<()> {
    if spec.ring == Ring::Integers {
        Ok(())
    } else {
        Err(fail(theorem, "ring must be Z"))
    }
}

fn require_odd_field(theorem: TheoremId, spec: &FamilySpec) -> Result<u64> {
    match spec.ring.prime() {
        Some(p) if p.is_odd() => {
            if spec.k < 0 || spec.k as u64 >= p.get() {
                return Err(fail(theorem, format!("k must lie in [0, {}]", p.get() - 1)));
            }
            Ok(p.get())
        }
        _ => Err(fail(theorem, "ring must be F_p with p odd")),
    }
}

fn require(theorem: TheoremId, cond: bool, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(theorem, reason))
    }
}

/// Checks that `spec` lies inside the statement's hypothesis range.
pub fn check_hypothesis(theorem: TheoremId, spec: &FamilySpec) -> Result<()> {
    use TheoremId::*;
    require_family(theorem, spec)?;
    spec.validate()
        .map_err(|e| fail(theorem, format!("spec not constructible: {e}")))?;
    let n = spec.n;
    match theorem {
        T2_1 | T2_3 => {
            require_integers(theorem, spec)?;
            require(theorem, n > 1 && n.is_multiple_of(2), "n must be even and > 1")
        }
        T2_4 | T2_7 => {
            require_integers(theorem, spec)?;
            require(theorem, n > 1 && n % 2 == 1, "n must be odd and > 1")
        }
        T3_1 => {
            require_odd_field(theorem, spec)?;
            require(theorem, n > 1 && n.is_multiple_of(2), "n must be even and > 1")
        }
        T3_4 => {
            require_odd_field(theorem, spec)?;
            require(theorem, n % 2 == 1, "n must be odd")
        }
        T4_1 => require(theorem, n > 1, "n must be > 1"),
        C3_2 => {
            require_odd_field(theorem, spec)?;
            require(theorem, spec.k == 0, "k must be 0")?;
            require(theorem, n > 2 && n % 4 == 2, "n must be > 2 with n = 2 mod 4")
        }
        C3_3 => {
            let p = require_odd_field(theorem, spec)?;
            require(theorem, spec.k == 2, "k must be 2")?;
            require(theorem, n > 0 && n.is_multiple_of(4), "n must be positive with n = 0 mod 4")?;
            require(theorem, !n.is_multiple_of(p), "n must not be a multiple of 2p")
        }
        C3_5 => {
            let p = require_odd_field(theorem, spec)?;
            require(theorem, spec.k == 1, "k must be 1")?;
            require(theorem, n % 4 == 3, "n must be 3 mod 4")?;
            require(theorem, !(n + 1).is_multiple_of(p), "n + 1 must not be a multiple of 2p")
        }
        C4_2 => require(theorem, n > 2 && n % 4 == 2, "n must be > 2 with n = 2 mod 4"),
        L1 => require(
            theorem,
            spec.ring.prime().is_some(),
            "ring must be a prime field",
        ),
    }
}

/// The statement's side conditions evaluated on `spec`.
///
/// For the exact classifications this is the predicted self-reciprocity; for
/// corollaries it is the (always true) claim that the member is not an
/// irreducible self-reciprocal polynomial of the forbidden shape.
pub fn predicate(theorem: TheoremId, spec: &FamilySpec) -> Result<bool> {
    use TheoremId::*;
    check_hypothesis(theorem, spec)?;
    let (n, k) = (spec.n, spec.k);
    Ok(match theorem {
        T2_1 => k == 0 || k == 2,
        T2_3 => k == 0,
        T2_4 => k == 1 || (n == 3 && k == 3),
        T2_7 => k == 1,
        T3_1 => {
            // n = 2lp with n even and p odd is p | n
            let p = spec.ring.prime().expect("checked");
            k == 0 || (k == 2 && !p.divides(n))
        }
        T3_4 => {
            let p = spec.ring.prime().expect("checked");
            n == 1
                || (k == 0 && p.log_of_power(n).is_some())
                || (n == 3 && k == 3 && p.get() > 3)
                || (k == 1 && !p.divides(n + 1))
        }
        T4_1 => n % 2 == 0,
        C3_2 | C3_3 | C3_5 | C4_2 | L1 => true,
    })
}

/// Builds the polynomial and applies the palindrome definition.
pub fn oracle_self_reciprocal(spec: &FamilySpec) -> Result<bool> {
    Ok(spec.build()?.is_self_reciprocal())
}

/// Whether `a` (over `F_p`, degree `>= 1`) has no nontrivial factorisation.
pub fn is_irreducible(a: &Poly) -> Result<bool> {
    let f = irreducibility_input(a)?;
    if f.degree().unwrap() > MAX_IRREDUCIBILITY_DEGREE {
        return Err(Error::Capacity(format!(
            "irreducibility test limited to degree {MAX_IRREDUCIBILITY_DEGREE}"
        )));
    }
    Ok(is_irreducible_rabin(&f))
}

/// Trial division by all monic polynomials of degree at most `deg/2`.
pub fn is_irreducible_by_trial_division(a: &Poly) -> Result<bool> {
    let f = irreducibility_input(a)?;
    let p = f.prime().get() as u128;
    let half = (f.degree().unwrap() / 2) as u32;
    let candidates = p.checked_pow(half).unwrap_or(u128::MAX);
    if candidates > MAX_TRIAL_DIVISORS {
        return Err(Error::Capacity(format!(
            "trial division would try {p}^{half} candidates"
        )));
    }
    Ok(is_irreducible_trial(&f))
}

fn irreducibility_input(a: &Poly) -> Result<FpPoly> {
    if a.ring().prime().is_none() {
        return Err(Error::domain("irreducibility is decided over F_p only"));
    }
    match a.degree() {
        Some(d) if d >= 1 => FpPoly::from_poly(a),
        _ => Err(Error::domain("irreducibility needs degree >= 1")),
    }
}

/// Evaluates a corollary on `spec`: true when the member is *not* a
/// counterexample.
///
/// For `C3_2`, `C3_3`, `C3_5` and `C4_2` a counterexample is an irreducible
/// self-reciprocal member of degree `>= 2`; for `L1` it is one of odd degree.
pub fn check_corollary(corollary: TheoremId, spec: &FamilySpec) -> Result<bool> {
    if !corollary.is_corollary() {
        return Err(Error::domain(format!("{corollary} is not a corollary")));
    }
    check_hypothesis(corollary, spec)?;
    let f = spec.build()?;
    let deg = match f.degree() {
        Some(d) if d >= 2 => d,
        _ => return Ok(true),
    };
    if corollary == TheoremId::L1 && deg % 2 == 0 {
        return Ok(true);
    }
    if !f.is_self_reciprocal() {
        return Ok(true);
    }
    Ok(!is_irreducible(&f)?)
}

/// What the definition says for `spec` under `theorem`.
pub fn observe(theorem: TheoremId, spec: &FamilySpec) -> Result<bool> {
    if theorem.is_corollary() {
        check_corollary(theorem, spec)
    } else {
        check_hypothesis(theorem, spec)?;
        oracle_self_reciprocal(spec)
    }
}

/// Statements whose hypotheses contain `spec`.
pub fn applicable_theorems(spec: &FamilySpec) -> Vec<TheoremId> {
    TheoremId::ALL
        .into_iter()
        .filter(|&t| check_hypothesis(t, spec).is_ok())
        .collect()
}
