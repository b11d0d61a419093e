use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_hypothesis, observe, predicate, TheoremId};
use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec};
use crate::ring::{Prime, Ring};

/// Outcome of checking one statement on one family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "VerdictRepr", into = "VerdictRepr")]
pub struct Verdict {
    pub theorem: TheoremId,
    pub spec: FamilySpec,
    pub predicted: bool,
    pub observed: bool,
    pub note: Option<String>,
}

impl Verdict {
    pub fn matches(&self) -> bool {
        self.predicted == self.observed
    }

    /// Evaluates `theorem` on `spec`. Fails only if `spec` is outside the hypothesis.
    ///
    /// An oracle failure is recorded as a mismatch whose note carries the error.
    pub fn evaluate(theorem: TheoremId, spec: FamilySpec) -> Result<Verdict> {
        let predicted = predicate(theorem, &spec)?;
        let (observed, note) = match observe(theorem, &spec) {
            Ok(obs) => (obs, None),
            Err(e) => (!predicted, Some(format!("oracle failed: {e}"))),
        };
        let note = note.or_else(|| {
            (predicted != observed).then(|| {
                let poly = spec
                    .build()
                    .map(|p| p.to_string())
                    .unwrap_or_else(|e| e.to_string());
                let what = if theorem.is_corollary() {
                    "no counterexample"
                } else {
                    "self-reciprocal"
                };
                format!("{spec} = {poly}: {what} observed {observed}, predicted {predicted}")
            })
        });
        Ok(Verdict {
            theorem,
            spec,
            predicted,
            observed,
            note,
        })
    }
}

/// Flat record: `{"theorem":"T3_1","family":"f","n":6,"k":2,"p":3,"predicted":false,...}`.
#[derive(Serialize, Deserialize)]
struct VerdictRepr {
    theorem: TheoremId,
    family: Family,
    n: u64,
    k: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    predicted: bool,
    observed: bool,
    #[serde(rename = "match")]
    matched: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl From<Verdict> for VerdictRepr {
    fn from(v: Verdict) -> Self {
        VerdictRepr {
            theorem: v.theorem,
            family: v.spec.family,
            n: v.spec.n,
            k: v.spec.k,
            p: v.spec.ring.modulus(),
            predicted: v.predicted,
            observed: v.observed,
            matched: v.predicted == v.observed,
            note: v.note,
        }
    }
}

impl TryFrom<VerdictRepr> for Verdict {
    type Error = Error;

    fn try_from(r: VerdictRepr) -> Result<Self> {
        let ring = match r.p {
            None => Ring::Integers,
            Some(p) => Ring::fp(p)?,
        };
        if r.matched != (r.predicted == r.observed) {
            return Err(Error::Parse("inconsistent match flag".into()));
        }
        Ok(Verdict {
            theorem: r.theorem,
            spec: FamilySpec::new(r.family, r.n, r.k, ring),
            predicted: r.predicted,
            observed: r.observed,
            note: r.note,
        })
    }
}

fn rings_for(theorem: TheoremId, primes: &[Prime]) -> Vec<Ring> {
    use TheoremId::*;
    match theorem {
        T2_1 | T2_3 | T2_4 | T2_7 => vec![Ring::Integers],
        T4_1 | C4_2 => vec![Ring::f2()],
        L1 => primes.iter().map(|&p| Ring::PrimeField(p)).collect(),
        T3_1 | T3_4 | C3_2 | C3_3 | C3_5 => primes
            .iter()
            .filter(|p| p.is_odd())
            .map(|&p| Ring::PrimeField(p))
            .collect(),
    }
}

/// Every in-hypothesis member of the grid, ordered by `n`, then `k`, then `p`,
/// then family.
pub(crate) fn candidates(
    theorem: TheoremId,
    n_range: RangeInclusive<u64>,
    k_range: RangeInclusive<i64>,
    primes: &[Prime],
) -> Vec<FamilySpec> {
    let mut primes = primes.to_vec();
    primes.sort();
    primes.dedup();
    let rings = rings_for(theorem, &primes);
    let mut out = Vec::new();
    for n in n_range {
        for k in k_range.clone() {
            for &ring in &rings {
                for &family in theorem.families() {
                    // parameter-free families appear once per n, recorded with k = 1
                    let spec = if family.uses_k() {
                        FamilySpec::new(family, n, k, ring)
                    } else if k == *k_range.start() {
                        FamilySpec::new(family, n, 1, ring)
                    } else {
                        continue;
                    };
                    if check_hypothesis(theorem, &spec).is_ok() {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

/// Checks `theorem` on every in-hypothesis member of the grid.
///
/// Members are evaluated in parallel; the result is in the deterministic grid
/// order of [`candidates`]. Mismatches are data: they carry a note and are
/// never turned into errors.
pub fn scan(
    theorem: TheoremId,
    n_range: RangeInclusive<u64>,
    k_range: RangeInclusive<i64>,
    primes: &[Prime],
) -> Vec<Verdict> {
    candidates(theorem, n_range, k_range, primes)
        .into_par_iter()
        .map(|spec| Verdict::evaluate(theorem, spec).expect("candidate is in hypothesis"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub theorem: TheoremId,
    pub checked: usize,
    pub matched: usize,
    pub mismatched: usize,
    /// Distinct `n` values with at least one mismatch.
    pub mismatch_n: Vec<u64>,
}

pub fn summarize(theorem: TheoremId, verdicts: &[Verdict]) -> ScanSummary {
    let mismatched: Vec<&Verdict> = verdicts.iter().filter(|v| !v.matches()).collect();
    let mismatch_n: BTreeSet<u64> = mismatched.iter().map(|v| v.spec.n).collect();
    ScanSummary {
        theorem,
        checked: verdicts.len(),
        matched: verdicts.len() - mismatched.len(),
        mismatched: mismatched.len(),
        mismatch_n: mismatch_n.into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes(ps: &[u64]) -> Vec<Prime> {
        ps.iter().map(|&p| Prime::new(p).unwrap()).collect()
    }

    #[test]
    fn grid_order_and_filtering() {
        let c = candidates(TheoremId::T3_1, 1..=4, -1..=3, &primes(&[5, 3, 2]));
        let keys: Vec<_> = c.iter().map(|s| (s.n, s.k, s.ring.modulus().unwrap())).collect();
        assert_eq!(
            keys,
            vec![
                (2, 0, 3), (2, 0, 5), (2, 1, 3), (2, 1, 5), (2, 2, 3), (2, 2, 5), (2, 3, 5),
                (4, 0, 3), (4, 0, 5), (4, 1, 3), (4, 1, 5), (4, 2, 3), (4, 2, 5), (4, 3, 5),
            ]
        );
    }

    #[test]
    fn char2_candidates_ignore_k() {
        let c = candidates(TheoremId::T4_1, 0..=5, -5..=6, &[]);
        let ns: Vec<_> = c.iter().map(|s| s.n).collect();
        assert_eq!(ns, vec![2, 3, 4, 5]);
        assert!(c.iter().all(|s| s.k == 1 && s.ring == Ring::f2()));
    }

    #[test]
    fn small_t2_1_scan_matches() {
        let v = scan(TheoremId::T2_1, 0..=20, -5..=6, &[]);
        assert_eq!(v.len(), 10 * 12);
        assert!(v.iter().all(Verdict::matches));
    }

    #[test]
    fn t2_3_at_n4_is_reported() {
        let v = scan(TheoremId::T2_3, 4..=4, -5..=6, &[]);
        let s = summarize(TheoremId::T2_3, &v);
        assert_eq!(s.mismatch_n, vec![4]);
        assert!(v.iter().filter(|v| !v.matches()).all(|v| v.note.is_some()));
    }

    #[test]
    fn verdict_json() {
        let spec = FamilySpec::new(Family::F, 6, 2, Ring::fp(3).unwrap());
        let v = Verdict::evaluate(TheoremId::T3_1, spec).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"theorem":"T3_1","family":"f","n":6,"k":2,"p":3,"predicted":false,"observed":false,"match":true}"#
        );
        assert_eq!(serde_json::from_str::<Verdict>(&s).unwrap(), v);
    }
}
