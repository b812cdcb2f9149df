//! Skew polynomial rings F[x;θ] over small finite fields and the
//! 1-generator skew quasi-cyclic codes built from them.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`]: table-backed GF(q), q ≤ 256, with the Frobenius automorphism θ;
//! * [`poly`]: the ring F[x;θ], division on both sides, gcrd/gcld/lclm/lcrm;
//! * [`factorization`]: centrality of x^s − 1 and enumeration of its divisors;
//! * [`similarity`]: similar polynomials and witness search;
//! * [`code`]: skew QC codes as left submodules of (F[x;θ]/(x^s − 1))^l;
//! * [`distance`]: exact weight enumerators and sampled distance bounds;
//! * [`search`]: search campaigns, code-table verification, record export.

pub mod code;
pub mod distance;
pub mod error;
pub mod factorization;
pub mod field;
pub mod linalg;
pub mod notation;
pub mod poly;
pub mod search;
pub mod similarity;
pub mod tables;

pub use code::{CodeSpec, CodeStructure, Codeword};
pub use distance::{DistanceReport, WeightEnumerator};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use linalg::Matrix;
pub use poly::{CommonMultiple, DivisionResult, ExtendedGcd, Side, SkewPoly};
