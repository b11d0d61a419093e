//! Reversed Dickson polynomials and their self-reciprocal relatives over the
//! integers and prime fields, coterm polynomials, and reversible cyclic codes.

pub mod binomics;
pub mod classifier;
pub mod codes;
pub mod coterm;
pub mod error;
pub mod family;
pub mod gf;
pub mod poly;
pub mod ring;

pub use classifier::{ScanSummary, TheoremId, Verdict};
pub use codes::{CodeReport, CyclicCode};
pub use coterm::{CotermConstruction, CotermContext, CotermTheorem};
pub use error::{Error, Result};
pub use family::{Family, FamilySpec, Kind};
pub use gf::FpPoly;
pub use num_bigint::BigInt;
pub use poly::Poly;
pub use ring::{Prime, Ring};
