//! Coefficient-string notation for polynomials.
//!
//! A polynomial is written as its coefficient tokens in increasing powers of
//! x, so over GF(4) `a001aa^21` is `x^6 + a^2 x^5 + a x^4 + x^3 + a`.
//! Whitespace between tokens is ignored.
//!
//! Token grammar (`s` is the field's generator symbol, `a` for GF(4) and
//! `g` otherwise):
//!
//! ```text
//! token    := "0" | "1" | s | s "^" exponent
//! exponent := "{" digits "}" | digits
//! ```
//!
//! An unbraced exponent is read greedily, one digit at a time, while its
//! value stays below q-1. Over GF(4) that makes `a^21` the two tokens `a^2`
//! and `1`.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::SkewPoly;

pub(crate) fn parse_tokens(field: &Field, text: &str) -> Result<Vec<Elem>> {
    let chars: Vec<char> = text.chars().collect();
    let order = field.q() - 1;
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match c {
            '0' => {
                out.push(Elem::ZERO);
                i += 1;
            }
            '1' => {
                out.push(Elem::ONE);
                i += 1;
            }
            c if c == field.symbol() => {
                i += 1;
                if chars.get(i) != Some(&'^') {
                    out.push(field.gen_pow(1));
                    continue;
                }
                i += 1;
                let exp = if chars.get(i) == Some(&'{') {
                    let close = chars[i..].iter().position(|&c| c == '}').ok_or_else(|| {
                        Error::Parse(format!("unclosed exponent brace in {text:?}"))
                    })?;
                    let body: String = chars[i + 1..i + close].iter().collect();
                    i += close + 1;
                    body.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad exponent {body:?} in {text:?}")))?
                } else {
                    let first = chars
                        .get(i)
                        .and_then(|c| c.to_digit(10))
                        .ok_or_else(|| Error::Parse(format!("dangling '^' in {text:?}")))?;
                    let mut value = first as u64;
                    i += 1;
                    while let Some(d) = chars.get(i).and_then(|c| c.to_digit(10)) {
                        let next = value * 10 + d as u64;
                        if next >= order as u64 {
                            break;
                        }
                        value = next;
                        i += 1;
                    }
                    value
                };
                out.push(field.gen_pow((exp % order as u64) as i64));
            }
            other => {
                return Err(Error::Parse(format!(
                    "invalid character {other:?} in {text:?}"
                )));
            }
        }
    }
    Ok(out)
}

/// Parses a coefficient string into a polynomial.
pub fn parse_coeffs(field: &Field, text: &str) -> Result<SkewPoly> {
    let elems = parse_tokens(field, text)?;
    if elems.is_empty() {
        return Err(Error::Parse("empty coefficient string".into()));
    }
    Ok(SkewPoly::from_coeffs(field, elems))
}

/// Coefficient string of a polynomial; the zero polynomial prints as `0`.
pub fn format_coeffs(poly: &SkewPoly) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let f = poly.field();
    poly.coeffs().iter().map(|&c| f.format_elem(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn worked_example() {
        let f = Field::gf4();
        let p = parse_coeffs(&f, "a001aa^21").unwrap();
        let a = f.gen_pow(1);
        let a2 = f.gen_pow(2);
        assert_eq!(
            p.coeffs(),
            &[a, Elem::ZERO, Elem::ZERO, Elem::ONE, a, a2, Elem::ONE]
        );
        assert_eq!(p.to_string(), "x^6 + a^2x^5 + ax^4 + x^3 + a");
    }

    #[test]
    fn simple_strings() {
        let f = Field::gf4();
        assert_eq!(parse_coeffs(&f, "1").unwrap(), SkewPoly::one(&f));
        let g = parse_coeffs(&f, "10001").unwrap();
        assert_eq!(g.degree(), Some(4));
        assert_eq!(g.to_string(), "x^4 + 1");
        let spaced = parse_coeffs(&f, "a^2 a^2 0 0 a^2 a").unwrap();
        assert_eq!(format_coeffs(&spaced), "a^2a^200a^2a");
    }

    #[test]
    fn parse_errors() {
        let f = Field::gf4();
        assert!(matches!(parse_coeffs(&f, "a0b"), Err(Error::Parse(_))));
        assert!(matches!(parse_coeffs(&f, "a^"), Err(Error::Parse(_))));
        assert!(matches!(parse_coeffs(&f, "1a^x"), Err(Error::Parse(_))));
        assert!(matches!(parse_coeffs(&f, "2"), Err(Error::Parse(_))));
        assert!(matches!(parse_coeffs(&f, ""), Err(Error::Parse(_))));
    }

    #[test]
    fn generic_field_tokens() {
        let f = Field::new(2, 2, 2).unwrap();
        let p = parse_coeffs(&f, "g^{12}g^14g1").unwrap();
        assert_eq!(
            p.coeffs(),
            &[f.gen_pow(12), f.gen_pow(14), f.gen_pow(1), Elem::ONE]
        );
        assert_eq!(format_coeffs(&p), "g^{12}g^{14}g1");
        // unbraced: "g^12" reads as g^12 because 12 < 15
        let p = parse_coeffs(&f, "g^12").unwrap();
        assert_eq!(p.coeffs(), &[f.gen_pow(12)]);
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(coeffs in proptest::collection::vec(0usize..4, 1..31)) {
            let f = Field::gf4();
            let poly = SkewPoly::from_coeffs(&f, coeffs.iter().map(|&i| f.elem(i).unwrap()).collect());
            let text = format_coeffs(&poly);
            let back = parse_coeffs(&f, &text).unwrap();
            prop_assert_eq!(&back, &poly);
            prop_assert_eq!(format_coeffs(&back), text);
        }
    }
}
