//! The skew polynomial ring F[x;θ].
//!
//! Multiplication follows `(a x^i)(b x^j) = a θ^i(b) x^(i+j)`, so constants
//! commute past `x` only after being twisted by θ. The ring has no zero
//! divisors and admits division with remainder on either side, which gives
//! Euclidean algorithms for greatest common right/left divisors and least
//! common left/right multiples.
//!
//! Naming follows the usual conventions:
//!
//! * `d` is a *right divisor* of `f` when `f = u·d` (f is a left multiple of d);
//! * `gcrd`/`lclm` work with right divisors and left multiples,
//!   `gcld`/`lcrm` with left divisors and right multiples.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::notation;

/// A polynomial in F[x;θ], stored densely with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

/// Which side a division, divisor, or multiple refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

/// Quotient and remainder of a division.
///
/// Right: `g = quotient·f + remainder`; left: `g = f·quotient + remainder`,
/// with `deg remainder < deg f` in both cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: SkewPoly,
    pub remainder: SkewPoly,
    pub side: Side,
}

/// Monic gcd `d` with Bezout cofactors.
///
/// Right (gcrd): `a·f + b·g = d`. Left (gcld): `f·a + g·b = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedGcd {
    pub d: SkewPoly,
    pub a: SkewPoly,
    pub b: SkewPoly,
    pub side: Side,
}

/// Monic least common multiple with the cofactors that exhibit it.
///
/// Left (lclm): `multiple = u·f = v·g`. Right (lcrm): `multiple = f·u = g·v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonMultiple {
    pub multiple: SkewPoly,
    pub u: SkewPoly,
    pub v: SkewPoly,
    pub side: Side,
}

impl SkewPoly {
    pub fn zero(field: &Field) -> SkewPoly {
        SkewPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> SkewPoly {
        SkewPoly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> SkewPoly {
        SkewPoly::from_coeffs(field, vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(field: &Field, c: Elem, k: usize) -> SkewPoly {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        SkewPoly::from_coeffs(field, coeffs)
    }

    pub fn x(field: &Field) -> SkewPoly {
        SkewPoly::monomial(field, Elem::ONE, 1)
    }

    /// `x^s - 1`.
    pub fn x_pow_minus_one(field: &Field, s: usize) -> SkewPoly {
        let mut coeffs = vec![Elem::ZERO; s + 1];
        coeffs[s] = Elem::ONE;
        coeffs[0] = field.add(coeffs[0], field.neg(Elem::ONE));
        SkewPoly::from_coeffs(field, coeffs)
    }

    /// Builds a polynomial from coefficients in increasing degree order.
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Elem>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Parses the coefficient-string notation (see [`crate::notation`]).
    pub fn parse(field: &Field, text: &str) -> Result<SkewPoly> {
        notation::parse_coeffs(field, text)
    }

    /// Uniformly random polynomial with `len` coefficients (degree < len).
    pub fn random<R: Rng + ?Sized>(field: &Field, len: usize, rng: &mut R) -> SkewPoly {
        let q = field.q();
        let coeffs = (0..len).map(|_| Elem(rng.gen_range(0..q) as u8)).collect();
        SkewPoly::from_coeffs(field, coeffs)
    }

    /// Random monic polynomial of exactly the given degree.
    pub fn random_monic<R: Rng + ?Sized>(field: &Field, degree: usize, rng: &mut R) -> SkewPoly {
        let q = field.q();
        let mut coeffs: Vec<Elem> = (0..degree)
            .map(|_| Elem(rng.gen_range(0..q) as u8))
            .collect();
        coeffs.push(Elem::ONE);
        SkewPoly::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Degree, or `None` for the zero polynomial (deg 0 = -∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem::ONE)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Coefficient string (`a001aa^21` style).
    pub fn to_coeff_string(&self) -> String {
        notation::format_coeffs(self)
    }

    fn check_field(&self, other: &SkewPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(SkewPoly::from_coeffs(f, coeffs))
    }

    pub fn checked_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(SkewPoly::from_coeffs(f, coeffs))
    }

    /// Twisted product `self · other`.
    pub fn skew_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SkewPoly::zero(&self.field));
        }
        let f = &self.field;
        let q = f.q();
        let mul = f.mul_table();
        let add = f.add_table();
        let mut out = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let th = f.theta_table(i as i64);
            let row = &mul[a.index() * q..(a.index() + 1) * q];
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = row[th[b.index()] as usize];
                out[i + j] = add[out[i + j] as usize * q + term as usize];
            }
        }
        Ok(SkewPoly::from_coeffs(
            f,
            out.into_iter().map(Elem).collect(),
        ))
    }

    /// `c · self` (constant on the left).
    pub fn scale_left(&self, c: Elem) -> SkewPoly {
        let f = &self.field;
        SkewPoly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// `self · c` (constant on the right): coefficient i becomes `a_i θ^i(c)`.
    pub fn scale_right(&self, c: Elem) -> SkewPoly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| f.mul(a, f.theta(c, i as i64)))
            .collect();
        SkewPoly::from_coeffs(f, coeffs)
    }

    /// `x^k · self`: twist every coefficient by θ^k and shift up by k.
    pub fn monomial_shift_mul(&self, k: usize) -> SkewPoly {
        if self.is_zero() {
            return self.clone();
        }
        let f = &self.field;
        let th = f.theta_table(k as i64);
        let mut coeffs = vec![Elem::ZERO; k];
        coeffs.extend(self.coeffs.iter().map(|c| Elem(th[c.index()])));
        SkewPoly {
            field: f.clone(),
            coeffs,
        }
    }

    /// Apply θ^k to every coefficient.
    pub fn twist(&self, k: i64) -> SkewPoly {
        let f = &self.field;
        SkewPoly {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.theta(c, k)).collect(),
        }
    }

    /// Monic associate under left scaling: `lead⁻¹ · self`. This is the
    /// normal form for generators of left ideals (gcrd, lclm).
    pub fn monic(&self) -> SkewPoly {
        match self.leading() {
            None => self.clone(),
            Some(lead) => self.scale_left(self.field.inv_nonzero(lead)),
        }
    }

    /// Monic associate under right scaling: `self · c` with
    /// `c = θ^(-deg)(lead⁻¹)`. Normal form for right ideals (gcld, lcrm).
    pub fn monic_right(&self) -> SkewPoly {
        match (self.leading(), self.degree()) {
            (Some(lead), Some(d)) => {
                let f = &self.field;
                self.scale_right(f.theta(f.inv_nonzero(lead), -(d as i64)))
            }
            _ => self.clone(),
        }
    }

    /// Right division: `self = q·divisor + r`, `deg r < deg divisor`.
    pub fn right_divide(&self, divisor: &SkewPoly) -> Result<DivisionResult> {
        self.check_field(divisor)?;
        let df = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_f = divisor.coeffs[df];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len().saturating_sub(df)];
        while rem.len() > df {
            let dg = rem.len() - 1;
            let lead = rem[dg];
            if !lead.is_zero() {
                let e = dg - df;
                // (c x^e)(F x^df) = c θ^e(F) x^dg
                let c = f.mul(lead, f.inv_nonzero(f.theta(lead_f, e as i64)));
                quot[e] = c;
                let th = f.theta_table(e as i64);
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    let term = f.mul(c, Elem(th[b.index()]));
                    rem[e + j] = f.sub(rem[e + j], term);
                }
            }
            rem.pop();
        }
        Ok(DivisionResult {
            quotient: SkewPoly::from_coeffs(f, quot),
            remainder: SkewPoly::from_coeffs(f, rem),
            side: Side::Right,
        })
    }

    /// Left division: `self = divisor·q + r`, `deg r < deg divisor`.
    pub fn left_divide(&self, divisor: &SkewPoly) -> Result<DivisionResult> {
        self.check_field(divisor)?;
        let df = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv_nonzero(divisor.coeffs[df]);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len().saturating_sub(df)];
        while rem.len() > df {
            let dg = rem.len() - 1;
            let lead = rem[dg];
            if !lead.is_zero() {
                let e = dg - df;
                // (F x^df)(c x^e) = F θ^df(c) x^dg
                let c = f.theta(f.mul(lead_inv, lead), -(df as i64));
                quot[e] = c;
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    let term = f.mul(b, f.theta(c, j as i64));
                    rem[e + j] = f.sub(rem[e + j], term);
                }
            }
            rem.pop();
        }
        Ok(DivisionResult {
            quotient: SkewPoly::from_coeffs(f, quot),
            remainder: SkewPoly::from_coeffs(f, rem),
            side: Side::Left,
        })
    }

    /// True when `divisor` is a right divisor of `self` (`self = u·divisor`).
    pub fn is_right_divisible_by(&self, divisor: &SkewPoly) -> Result<bool> {
        Ok(self.right_divide(divisor)?.remainder.is_zero())
    }

    /// True when `divisor` is a left divisor of `self` (`self = divisor·u`).
    pub fn is_left_divisible_by(&self, divisor: &SkewPoly) -> Result<bool> {
        Ok(self.left_divide(divisor)?.remainder.is_zero())
    }

    /// Remainder modulo the central polynomial `x^s - 1`: x^i folds onto
    /// x^(i mod s). Only meaningful when m | s.
    pub fn reduce_mod_xs1(&self, s: usize) -> SkewPoly {
        if self.coeffs.len() <= s {
            return self.clone();
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; s];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % s] = f.add(out[i % s], c);
        }
        SkewPoly::from_coeffs(f, out)
    }

    fn canonical_key(&self) -> String {
        self.to_coeff_string()
    }
}

/// Euclid on remainders of right divisions; the Bezout cofactors act on the
/// left. Returns the final nonzero remainder with its cofactors and the
/// cofactors of the vanishing combination (which yield the lclm).
struct EuclidRun {
    d: SkewPoly,
    a: SkewPoly,
    b: SkewPoly,
    zero_a: SkewPoly,
    zero_b: SkewPoly,
}

fn euclid(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<EuclidRun> {
    f.check_field(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let field = f.field.clone();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut a0, mut a1) = (SkewPoly::one(&field), SkewPoly::zero(&field));
    let (mut b0, mut b1) = (SkewPoly::zero(&field), SkewPoly::one(&field));
    while !r1.is_zero() {
        let (q, r) = match side {
            Side::Right => {
                let dr = r0.right_divide(&r1)?;
                (dr.quotient, dr.remainder)
            }
            Side::Left => {
                let dr = r0.left_divide(&r1)?;
                (dr.quotient, dr.remainder)
            }
        };
        let (a2, b2) = match side {
            Side::Right => (&a0 - &(&q * &a1), &b0 - &(&q * &b1)),
            Side::Left => (&a0 - &(&a1 * &q), &b0 - &(&b1 * &q)),
        };
        r0 = std::mem::replace(&mut r1, r);
        a0 = std::mem::replace(&mut a1, a2);
        b0 = std::mem::replace(&mut b1, b2);
    }
    Ok(EuclidRun {
        d: r0,
        a: a0,
        b: b0,
        zero_a: a1,
        zero_b: b1,
    })
}

/// Greatest common right divisor with `a·f + b·g = d`, `d` monic.
pub fn gcrd(f: &SkewPoly, g: &SkewPoly) -> Result<ExtendedGcd> {
    let run = euclid(f, g, Side::Right)?;
    let c = run
        .d
        .field
        .inv_nonzero(run.d.leading().expect("nonzero gcd"));
    Ok(ExtendedGcd {
        d: run.d.scale_left(c),
        a: run.a.scale_left(c),
        b: run.b.scale_left(c),
        side: Side::Right,
    })
}

/// Greatest common left divisor with `f·a + g·b = d`, `d` monic.
pub fn gcld(f: &SkewPoly, g: &SkewPoly) -> Result<ExtendedGcd> {
    let run = euclid(f, g, Side::Left)?;
    let field = run.d.field.clone();
    let deg = run.d.degree().expect("nonzero gcd") as i64;
    let c = field.theta(field.inv_nonzero(run.d.leading().unwrap()), -deg);
    Ok(ExtendedGcd {
        d: run.d.scale_right(c),
        a: run.a.scale_right(c),
        b: run.b.scale_right(c),
        side: Side::Left,
    })
}

/// gcld of a list of polynomials, folded pairwise. Zero entries are skipped.
pub fn gcld_many<'a, I>(polys: I) -> Result<SkewPoly>
where
    I: IntoIterator<Item = &'a SkewPoly>,
{
    let mut acc: Option<SkewPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.monic_right(),
            Some(d) => gcld(&d, p)?.d,
        });
    }
    acc.ok_or(Error::BothZero)
}

/// Least common left multiple `m = u·f = v·g`, found as the minimal-degree
/// nontrivial solution of the linear system in the coefficients of u and v.
pub fn lclm(f: &SkewPoly, g: &SkewPoly) -> Result<CommonMultiple> {
    common_multiple_linear(f, g, Side::Left)
}

/// Least common right multiple `m = f·u = g·v` (linear-algebra construction).
pub fn lcrm(f: &SkewPoly, g: &SkewPoly) -> Result<CommonMultiple> {
    common_multiple_linear(f, g, Side::Right)
}

fn common_multiple_linear(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<CommonMultiple> {
    f.check_field(g)?;
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    let field = f.field.clone();
    for total in df.max(dg)..=df + dg {
        let nu = total - df + 1;
        let nv = total - dg + 1;
        // Column j < nu is u_j, column nu + j is v_j. Row e is the x^e
        // coefficient of u·f - v·g (left) or f·u - g·v (right).
        //
        // For the right side, the x^e coefficient of f·u is
        // Σ f_i θ^i(u_j) over i + j = e, which is only θ-semilinear in u_j.
        // Applying θ^(-e) and solving for w_j = θ^(-j)(u_j) makes it linear:
        // θ^(-e)(f_i) · w_j.
        let mut m = Matrix::zeros(&field, total + 1, nu + nv);
        for e in 0..=total {
            for j in 0..nu {
                if e < j || e - j > df {
                    continue;
                }
                let i = e - j;
                let c = match side {
                    Side::Left => field.theta(f.coeff(i), j as i64),
                    Side::Right => field.theta(f.coeff(i), -(e as i64)),
                };
                m.set(e, j, c);
            }
            for j in 0..nv {
                if e < j || e - j > dg {
                    continue;
                }
                let i = e - j;
                let c = match side {
                    Side::Left => field.theta(g.coeff(i), j as i64),
                    Side::Right => field.theta(g.coeff(i), -(e as i64)),
                };
                m.set(e, nu + j, field.neg(c));
            }
        }
        let kernel = m.nullspace();
        let Some(sol) = kernel.first() else { continue };
        let unpack = |range: std::ops::Range<usize>| -> SkewPoly {
            let coeffs = range
                .enumerate()
                .map(|(j, col)| match side {
                    Side::Left => sol[col],
                    Side::Right => field.theta(sol[col], j as i64),
                })
                .collect();
            SkewPoly::from_coeffs(&field, coeffs)
        };
        let u = unpack(0..nu);
        let v = unpack(nu..nu + nv);
        return Ok(match side {
            Side::Left => {
                let multiple = &u * f;
                let c = field.inv_nonzero(multiple.leading().expect("nonzero multiple"));
                CommonMultiple {
                    multiple: multiple.scale_left(c),
                    u: u.scale_left(c),
                    v: v.scale_left(c),
                    side,
                }
            }
            Side::Right => {
                let multiple = f * &u;
                let deg = multiple.degree().unwrap() as i64;
                let c = field.theta(field.inv_nonzero(multiple.leading().unwrap()), -deg);
                CommonMultiple {
                    multiple: multiple.scale_right(c),
                    u: u.scale_right(c),
                    v: v.scale_right(c),
                    side,
                }
            }
        });
    }
    Err(Error::Inconsistent(
        "no common multiple up to deg f + deg g".into(),
    ))
}

/// lclm from the vanishing Bezout combination of the right-division Euclid
/// chain; an independent route used to cross-check [`lclm`].
pub fn lclm_euclid(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let run = euclid(f, g, Side::Right)?;
    // zero_a·f + zero_b·g = 0, so zero_a·f = -zero_b·g is a common left multiple.
    let m = &run.zero_a * f;
    debug_assert!((&m + &(&run.zero_b * g)).is_zero());
    Ok(m.monic())
}

/// lcrm from the left-division Euclid chain.
pub fn lcrm_euclid(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let run = euclid(f, g, Side::Left)?;
    let m = f * &run.zero_a;
    debug_assert!((&m + &(g * &run.zero_b)).is_zero());
    Ok(m.monic_right())
}

impl PartialOrd for SkewPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lexicographic on coefficient strings.
impl Ord for SkewPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl std::hash::Hash for SkewPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&SkewPoly> for &SkewPoly {
            type Output = SkewPoly;
            fn $method(self, rhs: &SkewPoly) -> SkewPoly {
                self.$checked(rhs)
                    .expect("operands belong to different fields")
            }
        }
        impl $trait<SkewPoly> for SkewPoly {
            type Output = SkewPoly;
            fn $method(self, rhs: SkewPoly) -> SkewPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, skew_mul);

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let f = &self.field;
        SkewPoly {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }
}

/// Algebraic form, highest degree first: `x^6 + a^2x^5 + ax^4 + x^3 + a`.
impl fmt::Display for SkewPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let f = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let coef = if c == Elem::ONE && i > 0 {
                String::new()
            } else {
                f.format_elem(c)
            };
            match i {
                0 => write!(out, "{coef}")?,
                1 => write!(out, "{coef}x")?,
                _ => write!(out, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "SkewPoly({})", self.to_coeff_string())
    }
}
