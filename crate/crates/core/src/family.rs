//! The reversed Dickson polynomials `D_{n,k}(a, x)` and the integer families
//! derived from them: `f_{n,k}`, the end-swapped variants `g, h, g*, h*`, the
//! classical kind-1/2/3 specialisations and the characteristic-2 reduction.
//!
//! Every family is built over the integers and then reduced into the target
//! ring, so a statement over `F_p` is always about the reduction of the integer
//! polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binomics::binomial;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Prime, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `D_{n,k}(a, x)`.
    #[serde(rename = "D", alias = "dickson")]
    Dickson,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "gstar")]
    GStar,
    #[serde(rename = "hstar")]
    HStar,
    #[serde(rename = "f_kind1", alias = "kind1")]
    Kind1,
    #[serde(rename = "f_kind2", alias = "kind2")]
    Kind2,
    #[serde(rename = "f_kind3", alias = "kind3")]
    Kind3,
    #[serde(rename = "f_char2", alias = "fchar2")]
    Char2,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Dickson,
        Family::F,
        Family::G,
        Family::H,
        Family::GStar,
        Family::HStar,
        Family::Kind1,
        Family::Kind2,
        Family::Kind3,
        Family::Char2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dickson => "D",
            Family::F => "f",
            Family::G => "g",
            Family::H => "h",
            Family::GStar => "gstar",
            Family::HStar => "hstar",
            Family::Kind1 => "f_kind1",
            Family::Kind2 => "f_kind2",
            Family::Kind3 => "f_kind3",
            Family::Char2 => "f_char2",
        }
    }

    /// Whether `k` is a free parameter of the family.
    pub fn uses_k(self) -> bool {
        !matches!(self, Family::Kind1 | Family::Kind2 | Family::Kind3 | Family::Char2)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "d" | "dickson" => Family::Dickson,
            "f" => Family::F,
            "g" => Family::G,
            "h" => Family::H,
            "gstar" | "g*" => Family::GStar,
            "hstar" | "h*" => Family::HStar,
            "kind1" | "f_kind1" => Family::Kind1,
            "kind2" | "f_kind2" => Family::Kind2,
            "kind3" | "f_kind3" => Family::Kind3,
            "fchar2" | "f_char2" | "char2" => Family::Char2,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// The classical specialisations of `f_{n,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    First,
    Second,
    Third,
}

fn check_k(ring: Ring, k: i64) -> Result<()> {
    if let Some(p) = ring.modulus() {
        if k < 0 || k as u64 >= p {
            return Err(Error::domain(format!(
                "over F_{p} the parameter k must lie in [0, {}], got {k}",
                p - 1
            )));
        }
    }
    Ok(())
}

fn require_parity(name: &str, n: u64, even: bool) -> Result<()> {
    if n <= 1 || n.is_multiple_of(2) != even {
        let parity = if even { "even" } else { "odd" };
        return Err(Error::domain(format!(
            "{name} needs {parity} n > 1, got n = {n}"
        )));
    }
    Ok(())
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

/// Coefficient `(n - k i)/(n - i) * C(n - i, i)` of `(-x)^i a^{n-2i}` in
/// `D_{n,k}(a, x)`, computed as an exact quotient.
pub fn dickson_coefficient(n: u64, k: i64, i: u64) -> Result<BigInt> {
    if n == 0 || 2 * i > n {
        return Err(Error::domain(format!(
            "coefficient index i = {i} out of range for n = {n}"
        )));
    }
    let num = (big(n) - big(k) * big(i)) * binomial(n - i, i as i64);
    let (q, r) = num.div_rem(&big(n - i));
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "D_{{{n},{k}}} coefficient at i = {i} is not integral"
        )));
    }
    Ok(q)
}

/// `D_{n,k}(a, x)` as a polynomial in `x`; `D_{0,k} = 2 - k`.
pub fn reversed_dickson(n: u64, k: i64, a: &BigInt, ring: Ring) -> Result<Poly> {
    check_k(ring, k)?;
    if n == 0 {
        return Ok(Poly::constant(ring, 2 - k));
    }
    let coeffs = (0..=n / 2)
        .map(|i| {
            let c = dickson_coefficient(n, k, i)? * a.pow((n - 2 * i) as u32);
            Ok(if i % 2 == 1 { -c } else { c })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(ring, coeffs))
}

/// `f_{n,k}` in summation form: `k Σ C(n-1,2j+1)(x^j - x^{j+1}) + 2 Σ C(n,2j) x^j`.
pub fn f_family(n: u64, k: i64, ring: Ring) -> Result<Poly> {
    check_k(ring, k)?;
    if n == 0 {
        return Ok(Poly::constant(ring, 2 - k));
    }
    let top = (n / 2) as usize;
    let mut coeffs = vec![BigInt::zero(); top + 2];
    let k = big(k);
    for j in 0..=top {
        let odd = &k * binomial(n - 1, 2 * j as i64 + 1);
        coeffs[j] += &odd + 2 * binomial(n, 2 * j as i64);
        coeffs[j + 1] -= odd;
    }
    Ok(Poly::new(ring, coeffs))
}

/// Coefficient of `x^j` for `1 <= j` below the top degree, shared by `f` and
/// its end-swapped variants.
pub fn middle_coefficient(n: u64, k: i64, j: u64) -> BigInt {
    let j = j as i64;
    big(k) * (binomial(n - 1, 2 * j + 1) - binomial(n - 1, 2 * j - 1)) + 2 * binomial(n, 2 * j)
}

/// End coefficient `k(n-1) + 2`.
fn end_low(n: u64, k: i64) -> BigInt {
    big(k) * big(n - 1) + 2
}

/// End coefficient `-k(n-1) + 2n`.
fn end_high_odd(n: u64, k: i64) -> BigInt {
    -big(k) * big(n - 1) + 2 * big(n)
}

fn with_ends(n: u64, k: i64, top: u64, low: BigInt, high: BigInt, ring: Ring) -> Poly {
    let mut coeffs = Vec::with_capacity(top as usize + 1);
    coeffs.push(low);
    coeffs.extend((1..top).map(|j| middle_coefficient(n, k, j)));
    coeffs.push(high);
    Poly::new(ring, coeffs)
}

/// `f_{n,k}` for even `n > 1` from its closed coefficients:
/// `k(n-1)+2`, the middle terms, and `(2-k) x^{n/2}`.
pub fn f_expanded_even(n: u64, k: i64, ring: Ring) -> Result<Poly> {
    require_parity("f_expanded_even", n, true)?;
    check_k(ring, k)?;
    Ok(with_ends(n, k, n / 2, end_low(n, k), big(2 - k), ring))
}

/// `f_{n,k}` for odd `n > 1`: ends `k(n-1)+2` and `-k(n-1)+2n`.
pub fn f_expanded_odd(n: u64, k: i64, ring: Ring) -> Result<Poly> {
    require_parity("f_expanded_odd", n, false)?;
    check_k(ring, k)?;
    Ok(with_ends(n, k, (n - 1) / 2, end_low(n, k), end_high_odd(n, k), ring))
}

/// Both ends replaced by `2 - k`.
pub fn g_family(n: u64, k: i64, ring: Ring) -> Result<Poly> {
    require_parity("g", n, true)?;
    check_k(ring, k)?;
    Ok(with_ends(n, k, n / 2, big(2 - k), big(2 - k), ring))
}

/// Both ends replaced by `k(n-1) + 2`.
pub fn h_family(n: u64, k: i64, ring: Ring) -> Result<Poly> {
    require_parity("h", n, true)?;
    check_k(ring, k)?;
    Ok(with_ends(n, k, n / 2, end_low(n, k), end_low(n, k), ring))
}

/// Both ends replaced by `-k(n-1) + 2n`.
pub fn gstar_family(n: u64, k: i64, ring: Ring) -> Result<Poly> {
    require_parity("gstar", n, false)?;
    check_k(ring, k)?;
    let e = end_high_odd(n, k);
    Ok(with_ends(n, k, (n - 1) / 2, e.clone(), e, ring))
}

/// Both ends replaced by `k(n-1) + 2`.
pub fn hstar_family(n: u64, k: i64, ring: Ring) -> Result<Poly> {
    require_parity("hstar", n, false)?;
    check_k(ring, k)?;
    let e = end_low(n, k);
    Ok(with_ends(n, k, (n - 1) / 2, e.clone(), e, ring))
}

/// `Σ C(n,2j) x^j` for the first kind, `Σ C(n,2j+1) x^j` for the second and third.
pub fn f_kind(n: u64, kind: Kind) -> Poly {
    let offset = match kind {
        Kind::First => 0,
        Kind::Second | Kind::Third => 1,
    };
    let coeffs = (0..=n / 2)
        .map(|j| binomial(n, 2 * j as i64 + offset))
        .collect();
    Poly::new(Ring::Integers, coeffs)
}

/// `f_{n,1}` reduced into `F_2`.
pub fn f_char2(n: u64) -> Result<Poly> {
    if n == 0 {
        return Err(Error::domain("f_char2 needs n >= 1"));
    }
    f_family(n, 1, Ring::f2())
}

/// Checks `2^n D_{n,k}(1, x) = f_{n,k}(1 - 4x)` coefficientwise over the integers.
pub fn check_dickson_f_identity(n: u64, k: i64) -> Result<bool> {
    if n == 0 {
        return Err(Error::domain("the D/f identity is stated for n >= 1"));
    }
    let lhs = reversed_dickson(n, k, &BigInt::one(), Ring::Integers)?.scale(&(BigInt::one() << n));
    let rhs = f_family(n, k, Ring::Integers)?.compose_linear(&big(1), &big(-4));
    Ok(lhs == rhs)
}

/// A fully specified member of one of the families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilySpecRepr", into = "FamilySpecRepr")]
pub struct FamilySpec {
    pub family: Family,
    pub n: u64,
    pub k: i64,
    /// Only meaningful for [`Family::Dickson`]; defaults to 1.
    pub a: Option<BigInt>,
    pub ring: Ring,
}

impl FamilySpec {
    pub fn new(family: Family, n: u64, k: i64, ring: Ring) -> Self {
        FamilySpec {
            family,
            n,
            k,
            a: None,
            ring,
        }
    }

    pub fn with_a(mut self, a: BigInt) -> Self {
        self.a = Some(a);
        self
    }

    pub fn prime(&self) -> Option<Prime> {
        self.ring.prime()
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            Family::G | Family::H => require_parity(self.family.name(), self.n, true)?,
            Family::GStar | Family::HStar => require_parity(self.family.name(), self.n, false)?,
            Family::Char2 => {
                if self.ring != Ring::f2() || self.k != 1 {
                    return Err(Error::domain("f_char2 requires ring F_2 and k = 1"));
                }
                if self.n == 0 {
                    return Err(Error::domain("f_char2 needs n >= 1"));
                }
            }
            _ => {}
        }
        if self.a.is_some() && self.family != Family::Dickson {
            return Err(Error::domain("parameter a only applies to family D"));
        }
        if self.family.uses_k() {
            check_k(self.ring, self.k)?;
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Poly> {
        self.validate()?;
        let (n, k, ring) = (self.n, self.k, self.ring);
        match self.family {
            Family::Dickson => {
                let a = self.a.clone().unwrap_or_else(BigInt::one);
                reversed_dickson(n, k, &a, ring)
            }
            Family::F => f_family(n, k, ring),
            Family::G => g_family(n, k, ring),
            Family::H => h_family(n, k, ring),
            Family::GStar => gstar_family(n, k, ring),
            Family::HStar => hstar_family(n, k, ring),
            Family::Kind1 => Ok(f_kind(n, Kind::First).cast(ring)),
            Family::Kind2 => Ok(f_kind(n, Kind::Second).cast(ring)),
            Family::Kind3 => Ok(f_kind(n, Kind::Third).cast(ring)),
            Family::Char2 => f_char2(n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}", self.family, self.n)?;
        if self.family.uses_k() {
            write!(f, ", k={}", self.k)?;
        }
        if let Some(a) = &self.a {
            write!(f, ", a={a}")?;
        }
        write!(f, ") over {}", self.ring)
    }
}

#[derive(Serialize, Deserialize)]
struct FamilySpecRepr {
    family: Family,
    n: u64,
    k: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    ring: Ring,
}

impl TryFrom<FamilySpecRepr> for FamilySpec {
    type Error = Error;

    fn try_from(r: FamilySpecRepr) -> Result<Self> {
        let a = r
            .a
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("parameter a {s:?}: {e}")))
            })
            .transpose()?;
        Ok(FamilySpec {
            family: r.family,
            n: r.n,
            k: r.k,
            a,
            ring: r.ring,
        })
    }
}

impl From<FamilySpec> for FamilySpecRepr {
    fn from(s: FamilySpec) -> Self {
        FamilySpecRepr {
            family: s.family,
            n: s.n,
            k: s.k,
            a: s.a.map(|a| a.to_string()),
            ring: s.ring,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Ring = Ring::Integers;

    fn z(c: &[i64]) -> Poly {
        Poly::from_i64s(Z, c)
    }

    fn f2(c: &[i64]) -> Poly {
        Poly::from_i64s(Ring::f2(), c)
    }

    #[test]
    fn dickson_examples() {
        let one = BigInt::one();
        for k in -3..6 {
            assert_eq!(reversed_dickson(0, k, &one, Z).unwrap(), z(&[2 - k]));
            // a^2 - (2-k) x at a = 3
            assert_eq!(
                reversed_dickson(2, k, &big(3), Z).unwrap(),
                z(&[9, -(2 - k)])
            );
        }
        assert_eq!(reversed_dickson(4, 0, &one, Z).unwrap(), z(&[1, -4, 2]));
    }

    #[test]
    fn dickson_coefficient_range() {
        assert!(dickson_coefficient(0, 1, 0).is_err());
        assert!(dickson_coefficient(4, 1, 3).is_err());
        assert_eq!(dickson_coefficient(4, 0, 1).unwrap(), big(4));
    }

    #[test]
    fn f_examples() {
        for k in -5..=6 {
            assert_eq!(f_family(0, k, Z).unwrap(), z(&[2 - k]));
            assert_eq!(f_family(1, k, Z).unwrap(), z(&[2]));
        }
        assert_eq!(f_family(3, 3, Z).unwrap(), z(&[8]));
        assert_eq!(f_family(4, 0, Z).unwrap(), z(&[2, 12, 2]));
        assert_eq!(f_family(4, 2, Z).unwrap(), z(&[8, 8]));
        assert_eq!(f_family(5, 1, Z).unwrap(), z(&[6, 20, 6]));
        assert_eq!(f_family(5, 3, Z).unwrap(), z(&[14, 20, -2]));
        assert_eq!(f_family(2, 0, Z).unwrap(), z(&[2, 2]));
    }

    #[test]
    fn f_rejects_k_outside_field() {
        let f5 = Ring::fp(5).unwrap();
        assert!(f_family(4, 5, f5).is_err());
        assert!(f_family(4, -1, f5).is_err());
        assert!(f_family(4, 4, f5).is_ok());
    }

    #[test]
    fn expanded_forms() {
        assert_eq!(f_expanded_even(4, 0, Z).unwrap(), z(&[2, 12, 2]));
        for k in -5..=6 {
            assert_eq!(f_expanded_odd(3, k, Z).unwrap(), z(&[2 * k + 2, 6 - 2 * k]));
        }
        assert_eq!(f_expanded_odd(5, 1, Z).unwrap(), z(&[6, 20, 6]));
        assert!(f_expanded_even(5, 0, Z).is_err());
        assert!(f_expanded_odd(4, 0, Z).is_err());
        assert!(f_expanded_odd(1, 0, Z).is_err());
    }

    #[test]
    fn end_swapped_families() {
        assert_eq!(g_family(4, 0, Z).unwrap(), z(&[2, 12, 2]));
        assert_eq!(h_family(4, 1, Z).unwrap(), z(&[5, 10, 5]));
        let g62 = g_family(6, 2, Z).unwrap();
        assert_eq!(g62, z(&[0, 40, 12]));
        assert!(!g62.is_self_reciprocal());
        for k in -5..=6 {
            assert_eq!(
                hstar_family(5, k, Z).unwrap(),
                z(&[4 * k + 2, 20, 4 * k + 2])
            );
        }
        assert_eq!(gstar_family(5, 1, Z).unwrap(), z(&[6, 20, 6]));
        assert_eq!(gstar_family(7, 0, Z).unwrap(), z(&[14, 42, 70, 14]));
        assert!(g_family(5, 0, Z).is_err());
        assert!(hstar_family(4, 0, Z).is_err());
        assert!(g_family(0, 0, Z).is_err());
    }

    #[test]
    fn kinds() {
        assert_eq!(f_kind(4, Kind::First), z(&[1, 6, 1]));
        assert_eq!(f_kind(4, Kind::Second), z(&[4, 4]));
        assert_eq!(f_kind(4, Kind::Third), z(&[4, 4]));
        assert_eq!(f_kind(0, Kind::First), z(&[1]));
    }

    #[test]
    fn characteristic_two() {
        assert_eq!(f_char2(2).unwrap(), f2(&[1, 1]));
        assert_eq!(f_char2(4).unwrap(), f2(&[1, 0, 1]));
        assert!(f_char2(3).unwrap().is_zero());
        assert!(f_char2(0).is_err());
    }

    #[test]
    fn identity_examples() {
        for k in -3..=6 {
            assert!(check_dickson_f_identity(1, k).unwrap());
            assert!(check_dickson_f_identity(2, k).unwrap());
        }
        assert!(check_dickson_f_identity(4, 0).unwrap());
        assert!(check_dickson_f_identity(0, 0).is_err());
    }

    #[test]
    fn spec_validation() {
        let f2r = Ring::f2();
        assert!(FamilySpec::new(Family::G, 5, 0, Z).build().is_err());
        assert!(FamilySpec::new(Family::GStar, 6, 0, Z).build().is_err());
        assert!(FamilySpec::new(Family::Char2, 4, 1, Z).build().is_err());
        assert!(FamilySpec::new(Family::Char2, 4, 0, f2r).build().is_err());
        assert_eq!(
            FamilySpec::new(Family::Char2, 4, 1, f2r).build().unwrap(),
            f2(&[1, 0, 1])
        );
        assert!(FamilySpec::new(Family::F, 4, 0, Z)
            .with_a(big(2))
            .build()
            .is_err());
        let d = FamilySpec::new(Family::Dickson, 2, 0, Z).with_a(big(3));
        assert_eq!(d.build().unwrap(), z(&[9, -2]));
        // kind families ignore k
        assert_eq!(
            FamilySpec::new(Family::Kind1, 4, 99, Z).build().unwrap(),
            z(&[1, 6, 1])
        );
    }

    #[test]
    fn spec_json() {
        let s = FamilySpec::new(Family::F, 5, 1, Z);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"family":"f","n":5,"k":1,"ring":{"ring":"Z"}}"#);
        assert_eq!(serde_json::from_str::<FamilySpec>(&j).unwrap(), s);
        let d: FamilySpec = serde_json::from_str(
            r#"{"family":"D","n":4,"k":0,"a":"-7","ring":{"ring":"Fp","p":11}}"#,
        )
        .unwrap();
        assert_eq!(d.a, Some(big(-7)));
        assert_eq!(d.ring, Ring::fp(11).unwrap());
    }

    #[test]
    fn family_names_parse() {
        for fam in Family::ALL {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert_eq!("dickson".parse::<Family>().unwrap(), Family::Dickson);
        assert_eq!("fchar2".parse::<Family>().unwrap(), Family::Char2);
        assert!("q".parse::<Family>().is_err());
    }
}
