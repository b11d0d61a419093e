//! Dense univariate polynomials over [`Ring`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Prime, Ring};

/// Polynomial with exact coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are always trimmed, so
/// the zero polynomial is the empty vector and has no degree. Over a prime field
/// every coefficient lies in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct Poly {
    ring: Ring,
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// Builds a polynomial, reducing every coefficient into `ring` and trimming.
    pub fn new(ring: Ring, coeffs: Vec<BigInt>) -> Self {
        let mut poly = Poly {
            ring,
            coeffs: coeffs.into_iter().map(|c| ring.reduce(c)).collect(),
        };
        poly.trim();
        poly
    }

    pub fn from_i64s(ring: Ring, coeffs: &[i64]) -> Self {
        Self::new(ring, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(ring: Ring) -> Self {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: impl Into<BigInt>) -> Self {
        Self::new(ring, vec![c.into()])
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, 1)
    }

    /// `c * x^deg`.
    pub fn monomial(ring: Ring, c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::new(ring, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(other.ring)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Poly::new(self.ring, coeffs))
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.ring, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.check_same(other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.ring));
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Poly::new(self.ring, out))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.ring, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation at `v`, reduced into the ring.
    pub fn evaluate(&self, v: &BigInt) -> BigInt {
        let acc = self
            .coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| self.ring.reduce(acc * v + c));
        self.ring.reduce(acc)
    }

    /// `self(c0 + c1*x)`, expanded.
    pub fn compose_linear(&self, c0: &BigInt, c1: &BigInt) -> Poly {
        let lin = Poly::new(self.ring, vec![c0.clone(), c1.clone()]);
        let mut acc = Poly::zero(self.ring);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(&lin)
                .expect("same ring")
                .add(&Poly::constant(self.ring, c.clone()))
                .expect("same ring");
        }
        acc
    }

    /// `x^deg * f(1/x)`: the coefficient vector reversed at the actual degree.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::domain("the zero polynomial has no reciprocal"));
        }
        Ok(Poly::new(
            self.ring,
            self.coeffs.iter().rev().cloned().collect(),
        ))
    }

    /// `a_i = a_{n-i}` for every `i`, at the trimmed degree `n`.
    ///
    /// Nonzero constants are self-reciprocal; the zero polynomial is not.
    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficientwise reduction of an integer polynomial into `F_p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Poly> {
        let prime = Prime::new(p)?;
        if self.ring != Ring::Integers {
            return Err(Error::domain(format!(
                "reduce_mod_p expects a polynomial over Z, got one over {}",
                self.ring
            )));
        }
        Ok(Poly::new(Ring::PrimeField(prime), self.coeffs.clone()))
    }

    /// Same coefficients, reinterpreted in `ring` (reduced on the way in).
    pub fn cast(&self, ring: Ring) -> Poly {
        Poly::new(ring, self.coeffs.clone())
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Canonical JSON form: `{"ring": {...}, "coeffs": ["c0", "c1", ...]}`.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    ring: Ring,
    coeffs: Vec<String>,
}

impl TryFrom<PolyRepr> for Poly {
    type Error = Error;

    fn try_from(r: PolyRepr) -> Result<Self> {
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(r.ring, coeffs))
    }
}

impl From<Poly> for PolyRepr {
    fn from(p: Poly) -> Self {
        PolyRepr {
            ring: p.ring,
            coeffs: p.coeff_strings(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(c: &[i64]) -> Poly {
        Poly::from_i64s(Ring::Integers, c)
    }

    fn fp(p: u64, c: &[i64]) -> Poly {
        Poly::from_i64s(Ring::fp(p).unwrap(), c)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(z(&[1, 1]).add(&z(&[])).unwrap(), z(&[1, 1]));
        assert_eq!(z(&[1, 1]).mul(&z(&[1, -1])).unwrap(), z(&[1, 0, -1]));
        assert_eq!(fp(5, &[1, 3]).scale(&big(2)), fp(5, &[2, 1]));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let err = z(&[1]).add(&fp(5, &[1])).unwrap_err();
        assert!(matches!(err, Error::RingMismatch { .. }));
        assert!(z(&[1]).mul(&fp(5, &[1])).is_err());
    }

    #[test]
    fn trimming() {
        let p = z(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(z(&[0, 0]).degree(), None);
        assert!(z(&[0]).is_zero());
        // 5x^2 vanishes mod 5
        assert_eq!(fp(5, &[1, 1, 5]).degree(), Some(1));
    }

    #[test]
    fn evaluation() {
        let f = z(&[2, 12, 2]);
        assert_eq!(f.evaluate(&big(0)), big(2));
        assert_eq!(f.evaluate(&big(1)), big(16));
        assert_eq!(z(&[0, 0, 1]).evaluate(&big(-1)), big(1));
        assert_eq!(fp(7, &[2, 12, 2]).evaluate(&big(1)), big(2));
    }

    #[test]
    fn linear_composition() {
        assert_eq!(
            z(&[0, 0, 1]).compose_linear(&big(1), &big(-4)),
            z(&[1, -8, 16])
        );
        assert_eq!(
            z(&[2, 12, 2]).compose_linear(&big(1), &big(-4)),
            z(&[16, -64, 32])
        );
        let p = z(&[3, -1, 4, 1, 5]);
        assert_eq!(p.compose_linear(&big(0), &big(1)), p);
    }

    #[test]
    fn reciprocals() {
        assert_eq!(z(&[14, 20, -2]).reciprocal().unwrap(), z(&[-2, 20, 14]));
        assert_eq!(z(&[7]).reciprocal().unwrap(), z(&[7]));
        assert_eq!(z(&[2, 2]).reciprocal().unwrap(), z(&[2, 2]));
        assert_eq!(z(&[0, 3]).reciprocal().unwrap(), z(&[3]));
        assert!(z(&[]).reciprocal().is_err());
    }

    #[test]
    fn self_reciprocity() {
        assert!(z(&[8]).is_self_reciprocal());
        assert!(z(&[6, 20, 6]).is_self_reciprocal());
        assert!(!z(&[14, 20, -2]).is_self_reciprocal());
        assert!(!z(&[]).is_self_reciprocal());
        assert!(!z(&[0, 4]).is_self_reciprocal());
        assert!(!z(&[0, 1, 0]).is_self_reciprocal());
    }

    #[test]
    fn reduction() {
        assert_eq!(z(&[2, 12, 2]).reduce_mod_p(3).unwrap(), fp(3, &[2, 0, 2]));
        assert_eq!(z(&[]).reduce_mod_p(7).unwrap(), fp(7, &[]));
        assert_eq!(z(&[8]).reduce_mod_p(5).unwrap(), fp(5, &[3]));
        assert_eq!(z(&[8]).reduce_mod_p(6), Err(Error::NotPrime(6)));
        assert!(fp(5, &[1]).reduce_mod_p(5).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(z(&[14, 20, -2]).to_string(), "14 + 20x - 2x^2");
        assert_eq!(z(&[0, -1, 0, 1]).to_string(), "-x + x^3");
        assert_eq!(z(&[]).to_string(), "0");
    }

    #[test]
    fn json_form() {
        let p = fp(5, &[2, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"ring":{"ring":"Fp","p":5},"coeffs":["2","1"]}"#);
        assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), p);
        let huge = r#"{"ring":{"ring":"Z"},"coeffs":["-123456789012345678901234567890"]}"#;
        let q: Poly = serde_json::from_str(huge).unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), huge);
        assert!(serde_json::from_str::<Poly>(r#"{"ring":{"ring":"Z"},"coeffs":["x"]}"#).is_err());
    }

    fn small_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-20i64..20, 0..7)
    }

    proptest! {
        #[test]
        fn double_reciprocal(c in small_poly()) {
            let a = z(&c);
            prop_assume!(!a.is_zero());
            let rr = a.reciprocal().unwrap().reciprocal().unwrap();
            if !a.coeff(0).is_zero() {
                prop_assert_eq!(rr, a);
            } else {
                let mut lhs: Vec<_> = rr.coeffs().iter().filter(|c| !c.is_zero()).cloned().collect();
                let mut rhs: Vec<_> = a.coeffs().iter().filter(|c| !c.is_zero()).cloned().collect();
                lhs.sort();
                rhs.sort();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn self_reciprocal_is_palindrome(c in small_poly()) {
            let a = z(&c);
            let expect = match a.degree() {
                None => false,
                Some(n) => (0..=n).all(|i| a.coeff(i) == a.coeff(n - i)),
            };
            prop_assert_eq!(a.is_self_reciprocal(), expect);
            if !a.is_zero() {
                prop_assert_eq!(a.is_self_reciprocal(), a.reciprocal().unwrap() == a);
            }
        }

        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly(), v in -5i64..5) {
            let (a, b, c) = (z(&a), z(&b), z(&c));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            let v = big(v);
            prop_assert_eq!(a.mul(&b).unwrap().evaluate(&v), a.evaluate(&v) * b.evaluate(&v));
        }

        #[test]
        fn reduction_is_a_homomorphism(
            a in small_poly(),
            b in small_poly(),
            p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
        ) {
            let (a, b) = (z(&a), z(&b));
            let r = |x: &Poly| x.reduce_mod_p(p).unwrap();
            prop_assert_eq!(r(&a.add(&b).unwrap()), r(&a).add(&r(&b)).unwrap());
            prop_assert_eq!(r(&a.mul(&b).unwrap()), r(&a).mul(&r(&b)).unwrap());
        }

        #[test]
        fn json_round_trip(c in small_poly(), p in prop::sample::select(vec![0u64, 2, 3, 13])) {
            let ring = if p == 0 { Ring::Integers } else { Ring::fp(p).unwrap() };
            let a = Poly::from_i64s(ring, &c);
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), a);
        }
    }
}
