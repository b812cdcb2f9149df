//! Centrality of x^s − 1 and its divisors in F[x;θ].
//!
//! x^s − 1 is central exactly when the automorphism order m divides s. Its
//! right and left divisors then coincide, and a factorization x^s − 1 = h·g
//! also gives x^s − 1 = g·h. Factorizations are far from unique: over GF(4),
//! x^2 − 1 = (x − 1)(x − 1) = (x − a)(x − a^2).

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::SkewPoly;

/// Default cap on the number of candidates a divisor enumeration may test.
pub const DEFAULT_DIVISOR_BUDGET: u128 = 1 << 30;

/// `x^s - 1` together with whether it generates a two-sided ideal.
#[derive(Debug, Clone)]
pub struct CentralModulus {
    pub s: usize,
    pub poly: SkewPoly,
    pub central: bool,
}

impl CentralModulus {
    pub fn new(field: &Field, s: usize) -> CentralModulus {
        let poly = SkewPoly::x_pow_minus_one(field, s);
        let central = is_central(&poly);
        CentralModulus { s, poly, central }
    }
}

/// Monic right divisors of `x^s - 1` of one degree, in canonical order.
#[derive(Debug, Clone)]
pub struct DivisorSet {
    pub s: usize,
    pub degree: usize,
    pub divisors: Vec<SkewPoly>,
}

/// Whether `f` lies in the center of F[x;θ]. Checking against `x` and a
/// primitive constant suffices: together they generate the ring.
pub fn is_central(f: &SkewPoly) -> bool {
    let field = f.field();
    let x = SkewPoly::x(field);
    let c = SkewPoly::constant(field, field.generator());
    &x * f == f * &x && &c * f == f * &c
}

fn monic_from_index(field: &Field, degree: usize, mut idx: u64) -> SkewPoly {
    let q = field.q() as u64;
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        coeffs.push(Elem((idx % q) as u8));
        idx /= q;
    }
    coeffs.push(Elem::ONE);
    SkewPoly::from_coeffs(field, coeffs)
}

/// Number of monic polynomials of the given degree, or `None` on overflow.
fn monic_count(field: &Field, degree: usize) -> Option<u128> {
    (field.q() as u128).checked_pow(degree as u32)
}

/// All monic `g` of the given degree with `x^s - 1 = u·g` for some `u`.
///
/// Brute force over the q^degree monic candidates, split across threads;
/// fails with [`Error::BudgetExceeded`] when q^degree > `budget`.
pub fn right_divisors(field: &Field, s: usize, degree: usize, budget: u128) -> Result<DivisorSet> {
    if s == 0 || !s.is_multiple_of(field.m() as usize) {
        return Err(Error::NotCentral { s, m: field.m() });
    }
    if degree > s {
        return Ok(DivisorSet {
            s,
            degree,
            divisors: Vec::new(),
        });
    }
    let required = monic_count(field, degree).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let target = SkewPoly::x_pow_minus_one(field, s);
    let mut divisors: Vec<SkewPoly> = (0..required as usize)
        .into_par_iter()
        .with_min_len(1024)
        .map(|idx| monic_from_index(field, degree, idx as u64))
        .filter(|g| {
            target
                .right_divide(g)
                .map(|d| d.remainder.is_zero())
                .unwrap_or(false)
        })
        .collect();
    divisors.sort();
    Ok(DivisorSet {
        s,
        degree,
        divisors,
    })
}

/// Whether the ordered product of `factors` equals `target`.
pub fn verify_factorization(factors: &[SkewPoly], target: &SkewPoly) -> bool {
    let Some(first) = factors.first() else {
        return target.is_one();
    };
    let mut acc = SkewPoly::one(first.field());
    for f in factors {
        match acc.skew_mul(f) {
            Ok(p) => acc = p,
            Err(_) => return false,
        }
    }
    acc.checked_sub(target)
        .map(|d| d.is_zero())
        .unwrap_or(false)
}

/// Whether `g·h = h·g`.
pub fn commuting_factor_check(g: &SkewPoly, h: &SkewPoly) -> bool {
    match (g.skew_mul(h), h.skew_mul(g)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// The cofactor `h` with `x^s - 1 = h·g`, if `g` is a right divisor.
pub fn cofactor(g: &SkewPoly, s: usize) -> Result<Option<SkewPoly>> {
    let target = SkewPoly::x_pow_minus_one(g.field(), s);
    let d = target.right_divide(g)?;
    Ok(d.remainder.is_zero().then_some(d.quotient))
}

/// Right divisors of `x^s - 1` of the given degree that are products of
/// linear factors, built by peeling one linear right factor at a time off
/// the cofactor. Cheap seeding for searches; not claimed to be complete.
pub fn linear_factor_chains(
    field: &Field,
    s: usize,
    degree: usize,
    limit: usize,
) -> Result<Vec<SkewPoly>> {
    if s == 0 || !s.is_multiple_of(field.m() as usize) {
        return Err(Error::NotCentral { s, m: field.m() });
    }
    let target = SkewPoly::x_pow_minus_one(field, s);
    let linears: Vec<SkewPoly> = field
        .elements()
        .map(|c| SkewPoly::from_coeffs(field, vec![field.neg(c), Elem::ONE]))
        .collect();
    let mut layer: BTreeSet<SkewPoly> = BTreeSet::from([SkewPoly::one(field)]);
    for _ in 0..degree.min(s) {
        let mut next = BTreeSet::new();
        'outer: for p in &layer {
            let cof = target.right_divide(p)?.quotient;
            for lin in &linears {
                let d = cof.right_divide(lin)?;
                if d.remainder.is_zero() {
                    next.insert(lin * p);
                    if next.len() >= limit {
                        break 'outer;
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, s: &str) -> SkewPoly {
        SkewPoly::parse(f, s).unwrap()
    }

    #[test]
    fn centrality_matches_divisibility_of_s() {
        let f = Field::gf4();
        for s in 2..=12 {
            assert_eq!(CentralModulus::new(&f, s).central, s % 2 == 0, "s={s}");
        }
        for e in f.fixed_subfield() {
            assert!(is_central(&SkewPoly::constant(&f, e)));
        }
        assert!(!is_central(&SkewPoly::constant(&f, f.gen_pow(1))));
    }

    #[test]
    fn odd_modulus_fails_to_commute() {
        let f = Field::gf4();
        let x3 = SkewPoly::x_pow_minus_one(&f, 3);
        let a = SkewPoly::constant(&f, f.gen_pow(1));
        assert_ne!(&x3 * &a, &a * &x3);
    }

    #[test]
    fn linear_divisors_of_x2_minus_1() {
        let f = Field::gf4();
        let set = right_divisors(&f, 2, 1, DEFAULT_DIVISOR_BUDGET).unwrap();
        let strings: Vec<String> = set.divisors.iter().map(|d| d.to_coeff_string()).collect();
        assert_eq!(strings, ["11", "a1", "a^21"]);
        assert_eq!(
            right_divisors(&f, 2, 0, 1).unwrap().divisors,
            vec![SkewPoly::one(&f)]
        );
        assert_eq!(
            right_divisors(&f, 2, 2, 16).unwrap().divisors,
            vec![SkewPoly::x_pow_minus_one(&f, 2)]
        );
    }

    #[test]
    fn enumeration_errors() {
        let f = Field::gf4();
        assert!(matches!(
            right_divisors(&f, 3, 1, 100),
            Err(Error::NotCentral { .. })
        ));
        assert!(matches!(
            right_divisors(&f, 12, 6, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn factorizations_of_x4_minus_1() {
        let f = Field::gf4();
        let x4 = SkewPoly::x_pow_minus_one(&f, 4);
        let x2 = SkewPoly::x_pow_minus_one(&f, 2);
        let (x1, xa, xa2) = (p(&f, "11"), p(&f, "a1"), p(&f, "a^21"));
        assert!(verify_factorization(&[x1.clone(), x1.clone()], &x2));
        assert!(verify_factorization(&[xa.clone(), xa2.clone()], &x2));
        assert!(verify_factorization(
            &[x1.clone(), x1.clone(), x1.clone(), x1.clone()],
            &x4
        ));
        assert!(verify_factorization(
            &[xa.clone(), xa2.clone(), xa.clone(), xa2.clone()],
            &x4
        ));
        assert!(verify_factorization(
            &[xa.clone(), xa.clone(), xa2.clone(), xa2.clone()],
            &x4
        ));
        assert!(verify_factorization(
            &[xa.clone(), xa2.clone(), x1.clone(), x1.clone()],
            &x4
        ));
    }

    #[test]
    fn factor_order_matters() {
        let f = Field::gf4();
        let x2 = SkewPoly::x_pow_minus_one(&f, 2);
        let xa = p(&f, "a1");
        let xa2 = p(&f, "a^21");
        // factors of a central polynomial commute, so both orders work here
        assert!(verify_factorization(&[xa2.clone(), xa.clone()], &x2));
        assert!(!verify_factorization(&[xa.clone(), xa.clone()], &x2));
        // away from the center the order is significant
        let ax = p(&f, "0a");
        let prod = &xa * &ax;
        assert!(verify_factorization(&[xa.clone(), ax.clone()], &prod));
        assert!(!verify_factorization(&[ax.clone(), xa.clone()], &prod));
        assert!(!commuting_factor_check(&xa, &ax));
        assert!(commuting_factor_check(&xa, &xa));
    }

    #[test]
    fn chains_are_divisors() {
        let f = Field::gf4();
        let x8 = SkewPoly::x_pow_minus_one(&f, 8);
        for deg in 1..=4 {
            let chains = linear_factor_chains(&f, 8, deg, 10_000).unwrap();
            assert!(!chains.is_empty());
            for c in &chains {
                assert_eq!(c.degree(), Some(deg));
                assert!(x8.is_right_divisible_by(c).unwrap());
            }
        }
    }

    #[test]
    fn divisors_commute_with_cofactors() {
        let f = Field::gf4();
        for s in [2usize, 4, 6, 8] {
            for deg in 0..=s.min(5) {
                for g in right_divisors(&f, s, deg, DEFAULT_DIVISOR_BUDGET)
                    .unwrap()
                    .divisors
                {
                    let h = cofactor(&g, s).unwrap().unwrap();
                    assert!(commuting_factor_check(&g, &h));
                    let xs1 = SkewPoly::x_pow_minus_one(&f, s);
                    assert!(xs1.is_left_divisible_by(&g).unwrap());
                }
            }
        }
    }
}
