//! Similarity of skew polynomials.
//!
//! `a` is right similar to `b` when some `u` has `gcld(u, b) = 1` and
//! `u·a = lcrm[u, b]`. The left orientation swaps the roles: `gcrd(u, b) = 1`
//! and `lclm[u, b] = a·u`. Both are decided by exhaustive search over
//! `u` with `deg u < deg b`, guarded by a budget.
//!
//! During the search `u·a = lcrm[u, b]` is tested as "b left-divides u·a":
//! when `gcld(u, b) = 1` the lcrm has degree `deg u + deg b = deg(u·a)`, and
//! `u·a` is already a right multiple of `u`, so lying in `bR` forces it to
//! generate `uR ∩ bR`. Witnesses returned are re-checked against the lcrm.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::{gcld, gcrd, lclm, lcrm, SkewPoly};

/// Default cap on the number of candidate `u` a search may test.
pub const DEFAULT_SIMILARITY_BUDGET: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityWitness {
    pub u: SkewPoly,
    /// `u·a` for right similarity, `a·u` for left similarity.
    pub lhs: SkewPoly,
    /// Whether the coprimality condition was confirmed.
    pub rhs_check: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimilarityOutcome {
    Similar(SimilarityWitness),
    NotSimilar,
    /// The candidate space exceeded the budget.
    Unknown,
}

impl SimilarityOutcome {
    pub fn is_similar(&self) -> bool {
        matches!(self, SimilarityOutcome::Similar(_))
    }

    pub fn witness(&self) -> Option<&SimilarityWitness> {
        match self {
            SimilarityOutcome::Similar(w) => Some(w),
            _ => None,
        }
    }
}

fn check_pair(a: &SkewPoly, b: &SkewPoly) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !a.is_monic() || !b.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(())
}

/// Nonzero polynomial with base-q digits of `idx` as coefficients.
fn candidate(field: &Field, len: usize, mut idx: u64) -> SkewPoly {
    let q = field.q() as u64;
    let coeffs = (0..len)
        .map(|_| {
            let d = idx % q;
            idx /= q;
            Elem(d as u8)
        })
        .collect();
    SkewPoly::from_coeffs(field, coeffs)
}

fn search<F>(a: &SkewPoly, b: &SkewPoly, budget: u128, test: F) -> Result<SimilarityOutcome>
where
    F: Fn(&SkewPoly) -> Option<SimilarityWitness> + Sync,
{
    check_pair(a, b)?;
    if a.degree() != b.degree() {
        return Ok(SimilarityOutcome::NotSimilar);
    }
    let db = b.degree().unwrap();
    let field = a.field();
    let Some(space) = (field.q() as u128).checked_pow(db as u32) else {
        return Ok(SimilarityOutcome::Unknown);
    };
    if space - 1 > budget {
        return Ok(SimilarityOutcome::Unknown);
    }
    // base-q index order puts u = 1 first, then the other constants
    let found = (1..space as usize)
        .into_par_iter()
        .with_min_len(256)
        .map(|idx| candidate(field, db, idx as u64))
        .find_map_first(|u| test(&u));
    Ok(found.map_or(SimilarityOutcome::NotSimilar, SimilarityOutcome::Similar))
}

/// Right similarity with the default budget.
pub fn are_similar(a: &SkewPoly, b: &SkewPoly) -> Result<SimilarityOutcome> {
    are_similar_with_budget(a, b, DEFAULT_SIMILARITY_BUDGET)
}

pub fn are_similar_with_budget(
    a: &SkewPoly,
    b: &SkewPoly,
    budget: u128,
) -> Result<SimilarityOutcome> {
    search(a, b, budget, |u| {
        let ua = u * a;
        if !ua.is_left_divisible_by(b).ok()? {
            return None;
        }
        if !gcld(u, b).ok()?.d.is_one() {
            return None;
        }
        Some(SimilarityWitness {
            u: u.clone(),
            lhs: ua,
            rhs_check: true,
        })
    })
}

/// Left similarity with the default budget.
pub fn are_left_similar(a: &SkewPoly, b: &SkewPoly) -> Result<SimilarityOutcome> {
    are_left_similar_with_budget(a, b, DEFAULT_SIMILARITY_BUDGET)
}

pub fn are_left_similar_with_budget(
    a: &SkewPoly,
    b: &SkewPoly,
    budget: u128,
) -> Result<SimilarityOutcome> {
    search(a, b, budget, |u| {
        let au = a * u;
        if !au.is_right_divisible_by(b).ok()? {
            return None;
        }
        if !gcrd(u, b).ok()?.d.is_one() {
            return None;
        }
        Some(SimilarityWitness {
            u: u.clone(),
            lhs: au,
            rhs_check: true,
        })
    })
}

/// Checks a right-similarity witness directly against the definition.
pub fn verify_right_witness(a: &SkewPoly, b: &SkewPoly, u: &SkewPoly) -> bool {
    if u.is_zero() {
        return false;
    }
    let Ok(g) = gcld(u, b) else { return false };
    let Ok(m) = lcrm(u, b) else { return false };
    g.d.is_one() && (u * a).monic_right() == m.multiple
}

/// Checks a left-similarity witness: `gcrd(u, b) = 1`, `lclm[u, b] = a·u`.
pub fn verify_left_witness(a: &SkewPoly, b: &SkewPoly, u: &SkewPoly) -> bool {
    if u.is_zero() {
        return false;
    }
    let Ok(g) = gcrd(u, b) else { return false };
    let Ok(m) = lclm(u, b) else { return false };
    g.d.is_one() && (a * u).monic() == m.multiple
}

/// Whether `x - alpha` and `x - beta` are similar: true exactly when
/// `alpha / beta` is a (p^t - 1)-th power in the field.
pub fn linear_similar(field: &Field, alpha: Elem, beta: Elem) -> Result<bool> {
    let inv = field.inv(beta)?;
    let ratio = field.mul(alpha, inv);
    let Some(log) = field.log(ratio) else {
        return Ok(false);
    };
    let step = (field.p() as usize).pow(field.t());
    Ok(log % (step - 1) == 0)
}

/// From a right-similarity witness `u` (`m = u·a = lcrm[u, b]`), recovers `c`
/// with `m = b·c` and checks that `c` witnesses the left similarity
/// `gcrd(c, a) = 1`, `lclm[c, a] = b·c`. Returns false for a witness that
/// fails its own conditions.
pub fn right_similar_implies_left(
    a: &SkewPoly,
    b: &SkewPoly,
    witness: &SimilarityWitness,
) -> Result<bool> {
    check_pair(a, b)?;
    if !verify_right_witness(a, b, &witness.u) {
        return Ok(false);
    }
    let m = &witness.u * a;
    let div = m.left_divide(b)?;
    if !div.remainder.is_zero() {
        return Ok(false);
    }
    let c = div.quotient;
    Ok(gcrd(&c, a)?.d.is_one() && lclm(&c, a)?.multiple == m.monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(f: &Field, c: Elem) -> SkewPoly {
        SkewPoly::from_coeffs(f, vec![f.neg(c), Elem::ONE])
    }

    #[test]
    fn worked_linear_example() {
        let f = Field::gf4();
        let one = lin(&f, Elem::ONE);
        let xa = lin(&f, f.gen_pow(1));
        let out = are_similar(&one, &xa).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.u.to_coeff_string(), "a^2");
        assert!(verify_right_witness(&one, &xa, &w.u));
        assert!(right_similar_implies_left(&one, &xa, w).unwrap());
    }

    #[test]
    fn identity_witness() {
        let f = Field::gf4();
        let a = SkewPoly::parse(&f, "a01").unwrap();
        let w = are_similar(&a, &a).unwrap().witness().unwrap().clone();
        assert!(w.u.is_one());
        assert!(right_similar_implies_left(&a, &a, &w).unwrap());
    }

    #[test]
    fn x_is_not_similar_to_x_minus_1() {
        let f = Field::gf4();
        let x = SkewPoly::x(&f);
        assert_eq!(
            are_similar(&lin(&f, Elem::ONE), &x).unwrap(),
            SimilarityOutcome::NotSimilar
        );
        assert!(linear_similar(&f, Elem::ONE, Elem::ZERO).is_err());
    }

    #[test]
    fn degree_mismatch_and_errors() {
        let f = Field::gf4();
        let a = SkewPoly::parse(&f, "11").unwrap();
        let b = SkewPoly::parse(&f, "101").unwrap();
        assert_eq!(are_similar(&a, &b).unwrap(), SimilarityOutcome::NotSimilar);
        assert!(matches!(
            are_similar(&SkewPoly::parse(&f, "1a").unwrap(), &a),
            Err(Error::NotMonic)
        ));
        assert!(are_similar(&SkewPoly::zero(&f), &a).is_err());
        let big = SkewPoly::x_pow_minus_one(&f, 20);
        assert_eq!(
            are_similar_with_budget(&big, &big, 1000).unwrap(),
            SimilarityOutcome::Unknown
        );
    }

    #[test]
    fn fast_path_agrees_with_search() {
        for f in [Field::gf4(), Field::new(3, 1, 2).unwrap()] {
            for alpha in f.elements().filter(|e| !e.is_zero()) {
                for beta in f.elements().filter(|e| !e.is_zero()) {
                    let fast = linear_similar(&f, alpha, beta).unwrap();
                    let slow = are_similar(&lin(&f, alpha), &lin(&f, beta))
                        .unwrap()
                        .is_similar();
                    assert_eq!(fast, slow, "{alpha:?} {beta:?}");
                }
            }
        }
    }

    #[test]
    fn gf9_has_non_similar_linear_pairs() {
        let f = Field::new(3, 1, 2).unwrap();
        let g = f.generator();
        assert!(!linear_similar(&f, g, Elem::ONE).unwrap());
        assert!(linear_similar(&f, f.mul(g, g), Elem::ONE).unwrap());
        let squares: Vec<Elem> = f
            .elements()
            .filter(|e| !e.is_zero())
            .map(|e| f.mul(e, e))
            .collect();
        for e in f.elements().filter(|e| !e.is_zero()) {
            assert_eq!(
                linear_similar(&f, e, Elem::ONE).unwrap(),
                squares.contains(&e)
            );
        }
    }

    #[test]
    fn corrupted_witness_is_rejected() {
        let f = Field::gf4();
        let a = lin(&f, Elem::ONE);
        let b = lin(&f, f.gen_pow(1));
        // b·u has b as a common left divisor with b
        let good = are_similar(&a, &b).unwrap().witness().unwrap().clone();
        let bad_u = &b * &good.u;
        let bad = SimilarityWitness {
            lhs: &bad_u * &a,
            u: bad_u,
            rhs_check: false,
        };
        assert!(!right_similar_implies_left(&a, &b, &bad).unwrap());
    }

    #[test]
    fn left_orientation() {
        let f = Field::gf4();
        let one = lin(&f, Elem::ONE);
        let xa = lin(&f, f.gen_pow(1));
        let out = are_left_similar(&one, &xa).unwrap();
        let w = out.witness().unwrap();
        assert!(verify_left_witness(&one, &xa, &w.u));
    }
}
