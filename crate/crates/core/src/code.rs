//! 1-generator skew quasi-cyclic codes.
//!
//! A code of length n = s·l and index l is the left submodule of
//! R_s^l = (F[x;θ]/(x^s − 1))^l generated by one tuple (f_1, …, f_l),
//! i.e. the set of all r·(f_1, …, f_l) for r ∈ R_s. This requires m | s so
//! that x^s − 1 is central.
//!
//! Codewords use block layout: the s coefficients of c_0(x), then those of
//! c_1(x), and so on. [`interleave`] converts to the coordinate order
//! (c_{0,0}, c_{0,1}, …, c_{0,l-1}, c_{1,0}, …) used by the shift operator's
//! textbook presentation; weights and [n, k, d] do not depend on the choice.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::poly::{gcld_many, SkewPoly};

/// Shape and generator tuple of a 1-generator skew QC code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    field: Field,
    s: usize,
    generators: Vec<SkewPoly>,
}

impl CodeSpec {
    /// Generators are reduced modulo x^s − 1 on construction.
    pub fn new(field: &Field, s: usize, generators: Vec<SkewPoly>) -> Result<CodeSpec> {
        if s == 0 {
            return Err(Error::InvalidCode("block length s must be positive".into()));
        }
        if !s.is_multiple_of(field.m() as usize) {
            return Err(Error::NotCentral { s, m: field.m() });
        }
        if generators.is_empty() {
            return Err(Error::InvalidCode("index l must be at least 1".into()));
        }
        if generators.iter().any(|g| g.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let generators = generators.iter().map(|g| g.reduce_mod_xs1(s)).collect();
        Ok(CodeSpec {
            field: field.clone(),
            s,
            generators,
        })
    }

    /// The tuple (g, f_1·g, …, f_{l-1}·g).
    pub fn from_factor(field: &Field, s: usize, g: &SkewPoly, fs: &[SkewPoly]) -> Result<CodeSpec> {
        let mut gens = vec![g.clone()];
        for f in fs {
            gens.push(f.skew_mul(g)?);
        }
        CodeSpec::new(field, s, gens)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn l(&self) -> usize {
        self.generators.len()
    }

    pub fn n(&self) -> usize {
        self.s * self.generators.len()
    }

    pub fn generators(&self) -> &[SkewPoly] {
        &self.generators
    }

    pub fn modulus(&self) -> SkewPoly {
        SkewPoly::x_pow_minus_one(&self.field, self.s)
    }
}

/// A vector of n field elements in block layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword(pub Vec<Elem>);

impl Codeword {
    pub fn zero(n: usize) -> Codeword {
        Codeword(vec![Elem::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn symbols(&self) -> &[Elem] {
        &self.0
    }

    pub fn to_token_string(&self, field: &Field) -> String {
        self.0
            .iter()
            .map(|&e| field.format_elem(e))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Everything derived from a [`CodeSpec`].
#[derive(Debug, Clone)]
pub struct CodeStructure {
    pub spec: CodeSpec,
    /// Generator polynomial gcld(f_1, …, f_l, x^s − 1), monic.
    pub g: SkewPoly,
    /// Parity-check polynomial: x^s − 1 = h·g = g·h.
    pub h: SkewPoly,
    pub k: usize,
    /// k × n generator matrix in reduced row echelon form.
    pub genmatrix: Matrix,
}

impl CodeStructure {
    pub fn field(&self) -> &Field {
        self.spec.field()
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }
}

/// φ: split a block-layout vector into its l polynomials.
pub fn phi(c: &Codeword, spec: &CodeSpec) -> Result<Vec<SkewPoly>> {
    check_len(c, spec)?;
    Ok(c.0
        .chunks(spec.s)
        .map(|block| SkewPoly::from_coeffs(&spec.field, block.to_vec()))
        .collect())
}

/// φ⁻¹: concatenate the coefficient vectors of l polynomials of degree < s.
pub fn phi_inv(polys: &[SkewPoly], s: usize) -> Codeword {
    let mut out = Vec::with_capacity(polys.len() * s);
    for p in polys {
        let p = p.reduce_mod_xs1(s);
        out.extend((0..s).map(|i| p.coeff(i)));
    }
    Codeword(out)
}

fn check_len(c: &Codeword, spec: &CodeSpec) -> Result<()> {
    if c.len() != spec.n() {
        return Err(Error::LengthMismatch {
            expected: spec.n(),
            got: c.len(),
        });
    }
    Ok(())
}

/// Block layout → interleaved layout (coordinate i·l + j holds c_{i,j}).
pub fn interleave(c: &Codeword, s: usize, l: usize) -> Codeword {
    let mut out = vec![Elem::ZERO; s * l];
    for j in 0..l {
        for i in 0..s {
            out[i * l + j] = c.0[j * s + i];
        }
    }
    Codeword(out)
}

/// Interleaved layout → block layout.
pub fn deinterleave(c: &Codeword, s: usize, l: usize) -> Codeword {
    let mut out = vec![Elem::ZERO; s * l];
    for j in 0..l {
        for i in 0..s {
            out[j * s + i] = c.0[i * l + j];
        }
    }
    Codeword(out)
}

/// The skew cyclic shift: every block polynomial is multiplied by x in
/// F[x;θ]/(x^s − 1), i.e. rotated by one and twisted by θ.
pub fn skew_shift(c: &Codeword, spec: &CodeSpec) -> Result<Codeword> {
    check_len(c, spec)?;
    let f = &spec.field;
    let s = spec.s;
    let mut out = Vec::with_capacity(c.len());
    for block in c.0.chunks(s) {
        out.push(f.theta(block[s - 1], 1));
        out.extend(block[..s - 1].iter().map(|&e| f.theta(e, 1)));
    }
    Ok(Codeword(out))
}

/// gcld of the generators and x^s − 1.
pub fn generator_polynomial(spec: &CodeSpec) -> Result<SkewPoly> {
    let modulus = spec.modulus();
    gcld_many(spec.generators.iter().chain(std::iter::once(&modulus)))
}

/// Cofactor h with x^s − 1 = h·g, checked to satisfy g·h = x^s − 1 as well.
pub fn parity_check(spec: &CodeSpec) -> Result<SkewPoly> {
    let g = generator_polynomial(spec)?;
    parity_check_for(spec, &g)
}

fn parity_check_for(spec: &CodeSpec, g: &SkewPoly) -> Result<SkewPoly> {
    let modulus = spec.modulus();
    let div = modulus.right_divide(g)?;
    if !div.remainder.is_zero() {
        return Err(Error::Inconsistent(format!(
            "generator polynomial {g} does not divide x^{}-1",
            spec.s
        )));
    }
    let h = div.quotient;
    if g.skew_mul(&h)? != modulus {
        return Err(Error::Inconsistent("g·h differs from h·g".into()));
    }
    Ok(h)
}

/// The s × n matrix whose row i is φ⁻¹(x^i·(f_1, …, f_l)).
pub fn spanning_matrix(spec: &CodeSpec) -> Matrix {
    let s = spec.s;
    let rows = (0..s)
        .map(|i| {
            let shifted: Vec<SkewPoly> = spec
                .generators
                .iter()
                .map(|f| f.monomial_shift_mul(i))
                .collect();
            phi_inv(&shifted, s).0
        })
        .collect();
    Matrix::from_rows(&spec.field, spec.n(), rows)
}

/// Generator and parity-check polynomials, dimension, and reduced generator
/// matrix. Fails if the rank of the spanning set differs from s − deg g.
pub fn generator_matrix(spec: &CodeSpec) -> Result<CodeStructure> {
    let g = generator_polynomial(spec)?;
    let h = parity_check_for(spec, &g)?;
    let (genmatrix, pivots) = spanning_matrix(spec).row_reduced();
    let expected = spec.s - g.degree().expect("gcld is nonzero");
    if pivots.len() != expected || h.degree() != Some(expected) {
        return Err(Error::Inconsistent(format!(
            "rank {} of the spanning matrix, but s - deg g = {expected}",
            pivots.len()
        )));
    }
    Ok(CodeStructure {
        spec: spec.clone(),
        g,
        h,
        k: pivots.len(),
        genmatrix,
    })
}

/// message × generator matrix.
pub fn encode(message: &[Elem], structure: &CodeStructure) -> Result<Codeword> {
    if message.len() != structure.k {
        return Err(Error::LengthMismatch {
            expected: structure.k,
            got: message.len(),
        });
    }
    if structure.k == 0 {
        return Ok(Codeword::zero(structure.n()));
    }
    Ok(Codeword(structure.genmatrix.left_mul_vec(message)))
}

/// Whether `c` lies in the code (rank test against the spanning matrix).
pub fn codeword_membership(c: &Codeword, spec: &CodeSpec) -> bool {
    c.len() == spec.n() && spanning_matrix(spec).row_space_contains(&c.0)
}

/// Faster membership against an already reduced generator matrix.
pub fn in_row_space(c: &Codeword, structure: &CodeStructure) -> bool {
    c.len() == structure.n() && structure.genmatrix.row_space_contains(&c.0)
}

/// JSON form of a [`CodeStructure`]. Polynomials are coefficient strings;
/// matrix rows are space-separated element tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeStructureJson {
    pub p: u32,
    pub t: u32,
    pub m: u32,
    pub s: usize,
    pub l: usize,
    pub n: usize,
    pub k: usize,
    pub generators: Vec<String>,
    pub g: String,
    pub h: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_matrix: Option<Vec<String>>,
}

impl CodeStructure {
    pub fn to_json(&self, with_matrix: bool) -> CodeStructureJson {
        let f = self.field();
        CodeStructureJson {
            p: f.p(),
            t: f.t(),
            m: f.m(),
            s: self.spec.s(),
            l: self.spec.l(),
            n: self.n(),
            k: self.k,
            generators: self
                .spec
                .generators()
                .iter()
                .map(|g| g.to_coeff_string())
                .collect(),
            g: self.g.to_coeff_string(),
            h: self.h.to_coeff_string(),
            generator_matrix: with_matrix.then(|| {
                (0..self.genmatrix.rows())
                    .map(|r| Codeword(self.genmatrix.row(r).to_vec()).to_token_string(f))
                    .collect()
            }),
        }
    }

    /// Rebuilds the structure from its generators and checks the stored
    /// dimension and polynomials.
    pub fn from_json(json: &CodeStructureJson) -> Result<CodeStructure> {
        let field = Field::new(json.p, json.t, json.m)?;
        let gens = json
            .generators
            .iter()
            .map(|g| SkewPoly::parse(&field, g))
            .collect::<Result<Vec<_>>>()?;
        let spec = CodeSpec::new(&field, json.s, gens)?;
        let st = generator_matrix(&spec)?;
        if st.k != json.k || st.g.to_coeff_string() != json.g || st.h.to_coeff_string() != json.h {
            return Err(Error::Inconsistent(
                "stored code parameters do not match its generators".into(),
            ));
        }
        Ok(st)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(f: &Field, s: &str) -> SkewPoly {
        SkewPoly::parse(f, s).unwrap()
    }

    #[test]
    fn shift_example_and_period() {
        let f = Field::gf4();
        let a = f.gen_pow(1);
        let spec = CodeSpec::new(&f, 2, vec![SkewPoly::one(&f)]).unwrap();
        let c = Codeword(vec![a, Elem::ZERO]);
        assert_eq!(
            skew_shift(&c, &spec).unwrap(),
            Codeword(vec![Elem::ZERO, f.gen_pow(2)])
        );
        assert_eq!(
            skew_shift(&Codeword::zero(2), &spec).unwrap(),
            Codeword::zero(2)
        );
        assert!(matches!(
            skew_shift(&Codeword::zero(3), &spec),
            Err(Error::LengthMismatch { .. })
        ));

        let spec = CodeSpec::new(&f, 6, vec![SkewPoly::one(&f); 2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = Codeword(
            (0..12)
                .map(|_| f.elem(rng.gen_range(0..4)).unwrap())
                .collect(),
        );
        let mut d = c.clone();
        for _ in 0..6 {
            d = skew_shift(&d, &spec).unwrap();
        }
        assert_eq!(d, c);
    }

    #[test]
    fn shift_is_left_multiplication_by_x() {
        let f = Field::gf4();
        let spec = CodeSpec::new(&f, 8, vec![SkewPoly::one(&f); 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let c = Codeword(
                (0..24)
                    .map(|_| f.elem(rng.gen_range(0..4)).unwrap())
                    .collect(),
            );
            let polys = phi(&c, &spec).unwrap();
            assert_eq!(phi_inv(&polys, 8), c);
            let x = SkewPoly::x(&f);
            let shifted: Vec<SkewPoly> = polys.iter().map(|p| &x * p).collect();
            assert_eq!(phi_inv(&shifted, 8), skew_shift(&c, &spec).unwrap());
            assert_eq!(deinterleave(&interleave(&c, 8, 3), 8, 3), c);
        }
    }

    #[test]
    fn interleaved_shift_matches_textbook_formula() {
        let f = Field::gf4();
        let (s, l) = (4, 2);
        let spec = CodeSpec::new(&f, s, vec![SkewPoly::one(&f); l]).unwrap();
        let c = Codeword((0..8).map(|i| f.elem(i % 4).unwrap()).collect());
        let inter = interleave(&c, s, l);
        // T(c) = (θ(c_{s-1,0}), …, θ(c_{s-1,l-1}), θ(c_{0,0}), …)
        let mut expect = Vec::new();
        for i in 0..s {
            let src = (i + s - 1) % s;
            for j in 0..l {
                expect.push(f.theta(inter.0[src * l + j], 1));
            }
        }
        assert_eq!(interleave(&skew_shift(&c, &spec).unwrap(), s, l).0, expect);
    }

    #[test]
    fn trivial_generator_tuples() {
        let f = Field::gf4();
        let xs1 = SkewPoly::x_pow_minus_one(&f, 4);
        let unit = CodeSpec::new(&f, 4, vec![SkewPoly::one(&f), p(&f, "a1a")]).unwrap();
        let st = generator_matrix(&unit).unwrap();
        assert!(st.g.is_one());
        assert_eq!(st.h, xs1);
        assert_eq!(st.k, 4);

        let zero = CodeSpec::new(&f, 4, vec![SkewPoly::zero(&f); 2]).unwrap();
        let st = generator_matrix(&zero).unwrap();
        assert_eq!(st.g, xs1);
        assert!(st.h.is_one());
        assert_eq!(st.k, 0);
        assert_eq!(st.genmatrix.rows(), 0);
        assert_eq!(encode(&[], &st).unwrap(), Codeword::zero(8));
    }

    #[test]
    fn rejects_non_central_length() {
        let f = Field::gf4();
        assert!(matches!(
            CodeSpec::new(&f, 5, vec![SkewPoly::one(&f)]),
            Err(Error::NotCentral { .. })
        ));
        assert!(CodeSpec::new(&f, 4, vec![]).is_err());
    }

    #[test]
    fn random_codes_are_consistent() {
        let f = Field::gf4();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let s = 2 * rng.gen_range(1..6);
            let l = rng.gen_range(1..4);
            let gens: Vec<SkewPoly> = (0..l).map(|_| SkewPoly::random(&f, s, &mut rng)).collect();
            let spec = CodeSpec::new(&f, s, gens).unwrap();
            let st = generator_matrix(&spec).unwrap();
            let xs1 = spec.modulus();
            assert_eq!(&st.g * &st.h, xs1);
            assert_eq!(&st.h * &st.g, xs1);
            assert_eq!(st.k, st.h.degree().unwrap());
            for gi in spec.generators() {
                assert!((&st.h * gi).reduce_mod_xs1(s).is_zero());
            }
            if st.k == 0 {
                continue;
            }
            for _ in 0..5 {
                let msg: Vec<Elem> = (0..st.k)
                    .map(|_| f.elem(rng.gen_range(0..4)).unwrap())
                    .collect();
                let c = encode(&msg, &st).unwrap();
                assert!(codeword_membership(&c, &spec));
                assert!(codeword_membership(&skew_shift(&c, &spec).unwrap(), &spec));
            }
            for r in 0..st.k {
                let row = Codeword(st.genmatrix.row(r).to_vec());
                let mut e = vec![Elem::ZERO; st.k];
                e[r] = Elem::ONE;
                assert_eq!(encode(&e, &st).unwrap(), row);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let f = Field::gf4();
        let spec = CodeSpec::from_factor(&f, 4, &p(&f, "11"), &[p(&f, "a1")]).unwrap();
        let st = generator_matrix(&spec).unwrap();
        let json = st.to_json(true);
        let text = serde_json::to_string(&json).unwrap();
        let back: CodeStructureJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
        let rebuilt = CodeStructure::from_json(&back).unwrap();
        assert_eq!(rebuilt.genmatrix, st.genmatrix);
    }
}
