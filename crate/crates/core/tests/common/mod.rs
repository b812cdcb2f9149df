//! Independent reference implementations used as test oracles. They work on
//! raw coefficient vectors with the field's scalar operations only, so they
//! share no code with the polynomial routines under test.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewqc::code::{generator_matrix, CodeSpec};
use skewqc::{CodeStructure, Elem, Field, SkewPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf4() -> Field {
    Field::gf4()
}

pub fn p(f: &Field, s: &str) -> SkewPoly {
    SkewPoly::parse(f, s).unwrap()
}

fn trim(mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last().is_some_and(|e| e.is_zero()) {
        v.pop();
    }
    v
}

/// Product in F[x;σ] with σ = θ^sigma, term by term:
/// (a x^i)(b x^j) = a σ^i(b) x^(i+j).
pub fn naive_mul(f: &Field, a: &[Elem], b: &[Elem], sigma: i64) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let t = f.mul(x, f.theta(y, sigma * i as i64));
            out[i + j] = f.add(out[i + j], t);
        }
    }
    trim(out)
}

/// Solves the square system `m · v = rhs` by Gauss-Jordan elimination.
fn solve(f: &Field, mut m: Vec<Vec<Elem>>, mut rhs: Vec<Elem>) -> Vec<Elem> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("nonsingular system");
        m.swap(col, piv);
        rhs.swap(col, piv);
        let inv = f.inv(m[col][col]).unwrap();
        for c in 0..n {
            m[col][c] = f.mul(inv, m[col][c]);
        }
        rhs[col] = f.mul(inv, rhs[col]);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                for c in 0..n {
                    let t = f.mul(factor, m[col][c]);
                    m[r][c] = f.sub(m[r][c], t);
                }
                rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[col]));
            }
        }
    }
    rhs
}

/// Right division `g = q·d + r` in F[x;σ] by solving the linear system for
/// the quotient coefficients: the x^e coefficient of q·d is
/// Σ_j q_j σ^j(d_(e−j)), linear in q_j.
pub fn elim_right_divide(f: &Field, g: &[Elem], d: &[Elem], sigma: i64) -> (Vec<Elem>, Vec<Elem>) {
    let g = trim(g.to_vec());
    let d = trim(d.to_vec());
    assert!(!d.is_empty());
    if g.len() < d.len() {
        return (Vec::new(), g);
    }
    let dd = d.len() - 1;
    let nq = g.len() - dd;
    let mut m = vec![vec![Elem::ZERO; nq]; nq];
    let mut rhs = vec![Elem::ZERO; nq];
    for (row, e) in (dd..g.len()).enumerate() {
        for (j, cell) in m[row].iter_mut().enumerate() {
            if e >= j && e - j <= dd {
                *cell = f.theta(d[e - j], sigma * j as i64);
            }
        }
        rhs[row] = g[e];
    }
    let q = trim(solve(f, m, rhs));
    let qd = naive_mul(f, &q, &d, sigma);
    let len = g.len().max(qd.len());
    let r = (0..len)
        .map(|i| {
            f.sub(
                *g.get(i).unwrap_or(&Elem::ZERO),
                *qd.get(i).unwrap_or(&Elem::ZERO),
            )
        })
        .collect();
    (q, trim(r))
}

/// ψ(Σ a_i x^i) = Σ θ^(−i)(a_i) x^i, an anti-isomorphism F[x;θ] → F[x;θ^(−1)].
fn psi(f: &Field, a: &[Elem]) -> Vec<Elem> {
    a.iter()
        .enumerate()
        .map(|(i, &c)| f.theta(c, -(i as i64)))
        .collect()
}

fn psi_inv(f: &Field, a: &[Elem]) -> Vec<Elem> {
    a.iter()
        .enumerate()
        .map(|(i, &c)| f.theta(c, i as i64))
        .collect()
}

/// Left division `g = d·q + r` via ψ: it becomes right division in
/// F[x;θ^(−1)].
pub fn elim_left_divide(f: &Field, g: &[Elem], d: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let (q, r) = elim_right_divide(f, &psi(f, g), &psi(f, d), -1);
    (trim(psi_inv(f, &q)), trim(psi_inv(f, &r)))
}

pub fn poly(f: &Field, coeffs: Vec<Elem>) -> SkewPoly {
    SkewPoly::from_coeffs(f, coeffs)
}

pub fn random_poly(f: &Field, rng: &mut impl Rng, max_len: usize) -> SkewPoly {
    let len = rng.gen_range(0..=max_len);
    SkewPoly::random(f, len, rng)
}

pub fn random_nonzero(f: &Field, rng: &mut impl Rng, max_len: usize) -> SkewPoly {
    loop {
        let p = random_poly(f, rng, max_len);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Every codeword, by multiplying every message with the generator matrix
/// using scalar operations only.
pub fn all_codewords(st: &CodeStructure) -> Vec<Vec<Elem>> {
    let f = st.field();
    let q = f.q();
    let n = st.n();
    let rows = st.genmatrix.row_vecs();
    let total = q.pow(st.k as u32);
    (0..total)
        .map(|mut idx| {
            let mut c = vec![Elem::ZERO; n];
            for row in &rows {
                let coef = f.elem(idx % q).unwrap();
                idx /= q;
                for (x, &y) in c.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(coef, y));
                }
            }
            c
        })
        .collect()
}

pub fn weight(c: &[Elem]) -> usize {
    c.iter().filter(|e| !e.is_zero()).count()
}

/// Weight distribution by brute-force encoding.
pub fn naive_counts(st: &CodeStructure) -> Vec<u64> {
    let mut counts = vec![0u64; st.n() + 1];
    for c in all_codewords(st) {
        counts[weight(&c)] += 1;
    }
    counts
}

pub fn build(f: &Field, s: usize, gens: &[SkewPoly]) -> CodeStructure {
    generator_matrix(&CodeSpec::new(f, s, gens.to_vec()).unwrap()).unwrap()
}

pub fn random_code(f: &Field, rng: &mut impl Rng, s: usize, l: usize) -> CodeStructure {
    let gens: Vec<SkewPoly> = (0..l).map(|_| SkewPoly::random(f, s, rng)).collect();
    build(f, s, &gens)
}

pub fn random_elem(f: &Field, rng: &mut impl Rng) -> Elem {
    f.elem(rng.gen_range(0..f.q())).unwrap()
}
