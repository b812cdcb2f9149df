//! Table-backed arithmetic for small finite fields GF(p^n), n = t·m, q ≤ 256.
//!
//! Elements are stored as their polynomial-basis index: the element
//! `c_0 + c_1 z + … + c_{n-1} z^{n-1}` (with `z` a root of the defining
//! modulus) has index `c_0 + c_1 p + … + c_{n-1} p^{n-1}`. Index 0 is zero
//! and index 1 is one.
//!
//! The defining modulus is the least monic irreducible polynomial of degree
//! n over GF(p), where polynomials are ordered by the same base-p integer
//! encoding of their non-leading coefficients. For GF(4) this is
//! `z^2 + z + 1`, so the element with index 2 is a primitive element `a`
//! with `a^2 = a + 1` (index 3).
//!
//! The automorphism θ is the Frobenius power `e ↦ e^(p^t)`; it has order m
//! and fixes the subfield GF(p^t).
//!
//! Textual tokens: GF(4) elements print as `0`, `1`, `a`, `a^2`. Other
//! fields print nonzero elements as powers of their least primitive element
//! `g`: `1`, `g`, `g^2`, …, with braces (`g^{12}`) once the exponent needs
//! more than one digit.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Field element, stored as its polynomial-basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub(crate) u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    p: u32,
    t: u32,
    m: u32,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    /// log[e] for e != 0, relative to `generator`.
    log: Vec<u8>,
    exp: Vec<u8>,
    /// theta_pow[k][e] = θ^k(e) for 0 <= k < m.
    theta_pow: Vec<Vec<u8>>,
    symbol: char,
}

/// A finite field GF(p^(t·m)) together with its automorphism θ(e) = e^(p^t).
///
/// Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.t == other.0.t && self.0.m == other.0.m)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}) [p={}, t={}, m={}]",
            self.0.q, self.0.p, self.0.t, self.0.m
        )
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Dense polynomials over GF(p) used only while building the tables.
/// Coefficients are in increasing degree order.
mod prime_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = r[r.len() - 1] * lead_inv % p;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        (1..p)
            .find(|x| a * x % p == 1)
            .expect("nonzero residue mod prime")
    }

    /// All monic polynomials of the given degree, in base-p order of the
    /// non-leading coefficients.
    pub fn monic_of_degree(deg: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
        let count = (p as usize).pow(deg as u32);
        (0..count).map(move |mut idx| {
            let mut v = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                v.push((idx % p as usize) as u32);
                idx /= p as usize;
            }
            v.push(1);
            v
        })
    }

    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let n = f.len() - 1;
        (1..=n / 2).all(|d| monic_of_degree(d, p).all(|g| !rem(f, &g, p).is_empty()))
    }
}

impl Field {
    /// Builds GF(p^(t·m)) with θ(e) = e^(p^t).
    pub fn new(p: u32, t: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 || m == 0 {
            return Err(Error::InvalidFieldShape { t, m });
        }
        let n = t.checked_mul(m).ok_or(Error::FieldTooLarge)?;
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= 256)
            .ok_or(Error::FieldTooLarge)? as usize;
        let n = n as usize;

        let modulus = prime_poly::monic_of_degree(n, p)
            .find(|f| prime_poly::is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");

        let digits = |mut e: usize| -> Vec<u32> {
            let mut v = vec![0u32; n];
            for d in v.iter_mut() {
                *d = (e % p as usize) as u32;
                e /= p as usize;
            }
            v
        };
        let undigits = |v: &[u32]| -> usize {
            v.iter()
                .rev()
                .fold(0usize, |acc, &d| acc * p as usize + d as usize)
        };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum) as u8;

                let mut prod = vec![0u32; 2 * n];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = prime_poly::rem(&prod, &modulus, p);
                r.resize(n, 0);
                mul[a * q + b] = undigits(&r) as u8;
            }
        }

        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8;
            }
        }

        let order = |e: usize| -> usize {
            let mut x = e;
            let mut k = 1;
            while x != 1 {
                x = mul[x * q + e] as usize;
                k += 1;
            }
            k
        };
        let generator = if q == 2 {
            1
        } else {
            (2..q).find(|&e| order(e) == q - 1).unwrap()
        };
        let mut exp = vec![0u8; q - 1];
        let mut log = vec![0u8; q];
        let mut x = 1usize;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = x as u8;
            log[x] = k as u8;
            x = mul[x * q + generator] as usize;
        }

        let frob_exp = (p as usize).pow(t);
        let pow = |e: usize, k: usize| -> usize {
            let mut acc = 1usize;
            for _ in 0..k {
                acc = mul[acc * q + e] as usize;
            }
            acc
        };
        let theta: Vec<u8> = (0..q)
            .map(|e| if e == 0 { 0 } else { pow(e, frob_exp) as u8 })
            .collect();
        let mut theta_pow = vec![(0..q as u32).map(|e| e as u8).collect::<Vec<u8>>()];
        for k in 1..m as usize {
            let prev = &theta_pow[k - 1];
            theta_pow.push(prev.iter().map(|&e| theta[e as usize]).collect());
        }

        let symbol = if q == 4 { 'a' } else { 'g' };
        Ok(Field(Arc::new(Tables {
            p,
            t,
            m,
            q,
            modulus: modulus.iter().map(|&c| c as u8).collect(),
            add,
            mul,
            neg,
            inv,
            log,
            exp,
            theta_pow,
            symbol,
        })))
    }

    /// GF(4) with θ(z) = z^2 and fixed field GF(2).
    pub fn gf4() -> Field {
        Field::new(2, 1, 2).expect("GF(4) is a valid field")
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn t(&self) -> u32 {
        self.0.t
    }

    /// Order of θ.
    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> usize {
        self.0.q
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.0.t * self.0.m
    }

    /// Coefficients of the defining modulus over GF(p), lowest degree first.
    pub fn modulus(&self) -> &[u8] {
        &self.0.modulus
    }

    pub fn elem(&self, index: usize) -> Result<Elem> {
        if index < self.0.q {
            Ok(Elem(index as u8))
        } else {
            Err(Error::ElementOutOfRange { index, q: self.0.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(|i| Elem(i as u8))
    }

    /// Primitive element used for the `g^k` / `a^k` notation.
    pub fn generator(&self) -> Elem {
        if self.0.q == 2 {
            Elem::ONE
        } else {
            Elem(self.0.exp[1])
        }
    }

    /// `generator()^k`, with k taken modulo q-1.
    pub fn gen_pow(&self, k: i64) -> Elem {
        let ord = (self.0.q - 1) as i64;
        Elem(self.0.exp[k.rem_euclid(ord) as usize])
    }

    /// Discrete log relative to `generator()`; `None` for zero.
    pub fn log(&self, e: Elem) -> Option<usize> {
        (!e.is_zero()).then(|| self.0.log[e.index()] as usize)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.add[a.index() * self.0.q + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.mul[a.index() * self.0.q + b.index()])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(Elem(self.0.inv[a.index()]))
        }
    }

    /// Inverse of an element the caller knows to be nonzero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero(), "inverse of zero");
        Elem(self.0.inv[a.index()])
    }

    /// θ^k(e). Negative k applies the inverse automorphism.
    #[inline]
    pub fn theta(&self, e: Elem, k: i64) -> Elem {
        let k = k.rem_euclid(self.0.m as i64) as usize;
        Elem(self.0.theta_pow[k][e.index()])
    }

    /// Lookup table for θ^k, indexed by element index.
    #[inline]
    pub(crate) fn theta_table(&self, k: i64) -> &[u8] {
        &self.0.theta_pow[k.rem_euclid(self.0.m as i64) as usize]
    }

    /// Raw multiplication table, row-major `q × q`.
    #[inline]
    pub(crate) fn mul_table(&self) -> &[u8] {
        &self.0.mul
    }

    #[inline]
    pub(crate) fn add_table(&self) -> &[u8] {
        &self.0.add
    }

    /// Elements fixed by θ.
    pub fn fixed_subfield(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.theta(e, 1) == e).collect()
    }

    /// Symbol used for the primitive element in element tokens.
    pub fn symbol(&self) -> char {
        self.0.symbol
    }

    /// Textual token for an element (`0`, `1`, `a`, `a^2`, `g^{12}`, …).
    pub fn format_elem(&self, e: Elem) -> String {
        match self.log(e) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(1) => self.0.symbol.to_string(),
            Some(k) if k < 10 => format!("{}^{}", self.0.symbol, k),
            Some(k) => format!("{}^{{{}}}", self.0.symbol, k),
        }
    }

    /// Parses a single element token; see [`crate::notation`] for strings of
    /// tokens.
    pub fn parse_elem(&self, token: &str) -> Result<Elem> {
        let elems = crate::notation::parse_tokens(self, token)?;
        match elems.as_slice() {
            [e] => Ok(*e),
            _ => Err(Error::Parse(format!(
                "expected a single element token, got {token:?}"
            ))),
        }
    }
}
