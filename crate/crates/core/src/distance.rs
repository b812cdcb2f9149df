//! Exact weight enumerators and minimum distances by exhaustive enumeration,
//! plus a seeded sampling mode that only yields an upper bound.
//!
//! Every nonzero scalar multiple of a codeword has the same weight, so the
//! exhaustive walk visits one representative per projective point: messages
//! whose first nonzero symbol is 1. For fields of characteristic 2 with
//! q ≤ 16 the walk is bitsliced: each message symbol contributes
//! log2(q) binary basis vectors (the row scaled by 1, z, z^2, …), codewords
//! are held as bit-planes of u64 words, and a binary Gray sequence visits
//! every message with one XOR per step. Weight is the popcount of the OR of
//! the planes. Other fields use a table-arithmetic odometer.
//!
//! The message space is cut into prefix blocks that run in parallel; partial
//! counts are merged by exact integer addition in block order, so results,
//! including the reported witness, do not depend on the thread count.

use std::time::{Duration, Instant};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{CodeStructure, Codeword};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Default enumeration budget: 2^30 codewords.
pub const DEFAULT_BUDGET: u128 = 1 << 30;
/// Budget for the extended verification tier: 2^32 codewords.
pub const EXTENDED_BUDGET: u128 = 1 << 32;

/// Low bits of the Gray walk that stay inside one parallel block.
const BLOCK_BITS: u32 = 20;
/// Trials per independently seeded stream in sampling mode.
const SAMPLE_CHUNK: u64 = 1 << 14;

/// `counts[i]` = number of codewords of Hamming weight i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    pub n: usize,
    pub k: usize,
    pub q: usize,
    pub counts: Vec<u64>,
}

impl WeightEnumerator {
    /// Total number of codewords counted; equals q^k for a complete run.
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Least positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// `weight\tcount` lines for the nonzero coefficients, with a header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("weight\tcount\n");
        for (w, &c) in self.counts.iter().enumerate() {
            if c > 0 {
                out.push_str(&format!("{w}\t{c}\n"));
            }
        }
        out
    }

    /// Generating polynomial in y, e.g. `1 + 3390y^24 + 4608y^25 + …`.
    pub fn to_polynomial_string(&self) -> String {
        let terms: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| match w {
                0 => c.to_string(),
                1 => format!("{c}y"),
                _ => format!("{c}y^{w}"),
            })
            .collect();
        terms.join(" + ")
    }
}

/// Result of a distance computation.
#[derive(Debug, Clone)]
pub struct DistanceReport {
    /// Minimum distance (exact) or least observed weight (sampled); `None`
    /// for a zero-dimensional code.
    pub d: Option<usize>,
    pub exact: bool,
    pub codewords_enumerated: u128,
    pub elapsed: Duration,
    /// A nonzero codeword of weight `d`.
    pub witness: Option<Codeword>,
}

/// Which enumeration kernel to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Bitsliced where supported, odometer otherwise.
    #[default]
    Auto,
    Bitsliced,
    Generic,
}

/// Codeword count q^k, saturating.
pub fn code_size(structure: &CodeStructure) -> u128 {
    (structure.field().q() as u128)
        .checked_pow(structure.k as u32)
        .unwrap_or(u128::MAX)
}

fn check_budget(structure: &CodeStructure, budget: u128) -> Result<()> {
    let required = code_size(structure);
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Bit-planes for one vector: plane b holds bit b of every symbol index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitPlanes {
    pub planes: usize,
    pub words: usize,
    /// Plane-major: word w of plane b at `b * words + w`.
    pub bits: Vec<u64>,
}

impl BitPlanes {
    pub fn from_symbols(field: &Field, symbols: &[Elem]) -> BitPlanes {
        let planes = plane_count(field).expect("bitsliced form needs characteristic 2");
        let words = symbols.len().div_ceil(64).max(1);
        let mut bits = vec![0u64; planes * words];
        for (i, e) in symbols.iter().enumerate() {
            for b in 0..planes {
                if e.index() >> b & 1 == 1 {
                    bits[b * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        BitPlanes {
            planes,
            words,
            bits,
        }
    }

    pub fn to_symbols(&self, n: usize) -> Vec<Elem> {
        (0..n)
            .map(|i| {
                let mut idx = 0u8;
                for b in 0..self.planes {
                    if self.bits[b * self.words + i / 64] >> (i % 64) & 1 == 1 {
                        idx |= 1 << b;
                    }
                }
                Elem(idx)
            })
            .collect()
    }

    pub fn xor_assign(&mut self, other: &BitPlanes) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn weight(&self) -> usize {
        (0..self.words)
            .map(|w| {
                (0..self.planes)
                    .fold(0u64, |acc, b| acc | self.bits[b * self.words + w])
                    .count_ones() as usize
            })
            .sum()
    }
}

fn plane_count(field: &Field) -> Option<usize> {
    (field.p() == 2).then(|| field.degree() as usize)
}

fn bitsliced_supported(structure: &CodeStructure) -> bool {
    matches!(plane_count(structure.field()), Some(1..=4)) && structure.n() <= 256
}

/// `c · row` for every row of the generator matrix and every element c.
fn scaled_rows(structure: &CodeStructure) -> Vec<Vec<Vec<Elem>>> {
    let f = structure.field();
    (0..structure.k)
        .map(|r| {
            let row = structure.genmatrix.row(r);
            f.elements()
                .map(|c| row.iter().map(|&x| f.mul(c, x)).collect())
                .collect()
        })
        .collect()
}

struct Partial {
    counts: Vec<u64>,
    best: usize,
    witness: Option<Vec<Elem>>,
    visited: u128,
}

impl Partial {
    fn new(n: usize) -> Partial {
        Partial {
            counts: vec![0; n + 1],
            best: usize::MAX,
            witness: None,
            visited: 0,
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        if other.best < self.best {
            self.best = other.best;
            self.witness = other.witness;
        }
        self.visited += other.visited;
        self
    }
}

/// One unit of parallel work: messages with leading position `lead` and a
/// fixed assignment `prefix` of the top binary digits of the free part.
#[derive(Clone, Copy)]
struct Block {
    lead: usize,
    prefix: u64,
    prefix_bits: u32,
    low_bits: u32,
}

fn blocks(k: usize, bits_per_symbol: u32) -> Vec<Block> {
    let mut out = Vec::new();
    for lead in 0..k {
        let free = bits_per_symbol * (k - 1 - lead) as u32;
        let low_bits = free.min(BLOCK_BITS);
        let prefix_bits = free - low_bits;
        for prefix in 0..(1u64 << prefix_bits) {
            out.push(Block {
                lead,
                prefix,
                prefix_bits,
                low_bits,
            });
        }
    }
    out
}

#[inline(always)]
fn xor_into<const R: usize, const W: usize>(acc: &mut [[u64; W]; R], v: &[[u64; W]; R]) {
    for b in 0..R {
        for w in 0..W {
            acc[b][w] ^= v[b][w];
        }
    }
}

#[inline(always)]
fn weight_of<const R: usize, const W: usize>(v: &[[u64; W]; R]) -> usize {
    let mut total = 0;
    for w in 0..W {
        let mut or = 0u64;
        for plane in v.iter() {
            or |= plane[w];
        }
        total += or.count_ones() as usize;
    }
    total
}

struct RawPartial<const R: usize, const W: usize> {
    partial: Partial,
    witness: Option<[[u64; W]; R]>,
}

fn gray_walk<const R: usize, const W: usize>(
    start: [[u64; W]; R],
    low: &[[[u64; W]; R]],
    n: usize,
) -> RawPartial<R, W> {
    let mut counts = vec![0u64; n + 1];
    let mut cur = start;
    let mut best = weight_of(&cur);
    let mut witness = cur;
    counts[best] += 1;
    let steps = 1u64 << low.len();
    for t in 1..steps {
        xor_into(&mut cur, &low[t.trailing_zeros() as usize]);
        let w = weight_of(&cur);
        counts[w] += 1;
        if w < best {
            best = w;
            witness = cur;
        }
    }
    RawPartial {
        partial: Partial {
            counts,
            best,
            witness: None,
            visited: steps as u128,
        },
        witness: Some(witness),
    }
}

impl<const R: usize, const W: usize> RawPartial<R, W> {
    fn into_partial(self, n: usize) -> Partial {
        let mut p = self.partial;
        if let Some(w) = self.witness {
            let bits: Vec<u64> = w.iter().flat_map(|plane| plane.iter().copied()).collect();
            p.witness = Some(
                BitPlanes {
                    planes: R,
                    words: W,
                    bits,
                }
                .to_symbols(n),
            );
        }
        p
    }
}

fn run_bitsliced_dispatch(structure: &CodeStructure) -> Partial {
    let r = plane_count(structure.field()).unwrap();
    let w = structure.n().div_ceil(64).max(1);
    macro_rules! go {
        ($($r:literal, $w:literal);*) => {
            match (r, w) {
                $(($r, $w) => run_bitsliced_typed::<$r, $w>(structure),)*
                _ => unreachable!("unsupported bitsliced shape"),
            }
        };
    }
    go!(1,1; 1,2; 1,3; 1,4; 2,1; 2,2; 2,3; 2,4; 3,1; 3,2; 3,3; 3,4; 4,1; 4,2; 4,3; 4,4)
}

fn run_bitsliced_typed<const R: usize, const W: usize>(structure: &CodeStructure) -> Partial {
    let n = structure.n();
    let f = structure.field();
    let k = structure.k;
    let to_planes = |symbols: &[Elem]| -> [[u64; W]; R] {
        let bp = BitPlanes::from_symbols(f, symbols);
        let mut out = [[0u64; W]; R];
        for (b, plane) in out.iter_mut().enumerate() {
            plane.copy_from_slice(&bp.bits[b * bp.words..(b + 1) * bp.words]);
        }
        out
    };
    let mut basis: Vec<[[u64; W]; R]> = Vec::with_capacity(k * R);
    for i in 0..k {
        let row = structure.genmatrix.row(i);
        for b in 0..R {
            let z = Elem(1 << b);
            let scaled: Vec<Elem> = row.iter().map(|&x| f.mul(z, x)).collect();
            basis.push(to_planes(&scaled));
        }
    }
    let partials: Vec<Partial> = blocks(k, R as u32)
        .par_iter()
        .map(|blk| {
            let free_rows = &basis[(blk.lead + 1) * R..];
            let total = free_rows.len();
            let mut start = basis[blk.lead * R];
            for bit in 0..blk.prefix_bits {
                if blk.prefix >> bit & 1 == 1 {
                    xor_into(
                        &mut start,
                        &free_rows[total - 1 - (blk.low_bits + bit) as usize],
                    );
                }
            }
            let low: Vec<[[u64; W]; R]> = (0..blk.low_bits as usize)
                .map(|bit| free_rows[total - 1 - bit])
                .collect();
            gray_walk::<R, W>(start, &low, n).into_partial(n)
        })
        .collect();
    partials.into_iter().fold(Partial::new(n), Partial::merge)
}

/// Odometer over messages with table arithmetic; works for every field.
fn run_generic(structure: &CodeStructure) -> Partial {
    let f = structure.field().clone();
    let n = structure.n();
    let k = structure.k;
    let q = f.q();
    let scaled = scaled_rows(structure);
    // parallel units: (lead, value of the next digit when there is one)
    let units: Vec<(usize, Option<usize>)> = (0..k)
        .flat_map(|lead| {
            if lead + 1 < k {
                (0..q).map(|v| (lead, Some(v))).collect::<Vec<_>>()
            } else {
                vec![(lead, None)]
            }
        })
        .collect();
    let partials: Vec<Partial> = units
        .par_iter()
        .map(|&(lead, fixed)| {
            let mut part = Partial::new(n);
            let mut cur: Vec<Elem> = scaled[lead][1].clone();
            let first_free = match fixed {
                Some(v) => {
                    for (x, &y) in cur.iter_mut().zip(&scaled[lead + 1][v]) {
                        *x = f.add(*x, y);
                    }
                    lead + 2
                }
                None => lead + 1,
            };
            let mut digits = vec![0usize; k.saturating_sub(first_free)];
            loop {
                let w = cur.iter().filter(|e| !e.is_zero()).count();
                part.counts[w] += 1;
                part.visited += 1;
                if w < part.best {
                    part.best = w;
                    part.witness = Some(cur.clone());
                }
                // advance the odometer; the last digit is least significant
                let mut pos = digits.len();
                loop {
                    if pos == 0 {
                        return part;
                    }
                    pos -= 1;
                    let row = first_free + pos;
                    let old = digits[pos];
                    let new = (old + 1) % q;
                    digits[pos] = new;
                    // cur += (new - old) · row
                    let delta = f.sub(Elem(new as u8), Elem(old as u8));
                    let add = &scaled[row][delta.index()];
                    for (x, &y) in cur.iter_mut().zip(add) {
                        *x = f.add(*x, y);
                    }
                    if new != 0 {
                        break;
                    }
                }
            }
        })
        .collect();
    partials.into_iter().fold(Partial::new(n), Partial::merge)
}

fn enumerate(
    structure: &CodeStructure,
    budget: u128,
    engine: Engine,
) -> Result<(WeightEnumerator, Partial)> {
    check_budget(structure, budget)?;
    let n = structure.n();
    let q = structure.field().q();
    let part = if structure.k == 0 {
        Partial::new(n)
    } else {
        match engine {
            Engine::Bitsliced if !bitsliced_supported(structure) => {
                return Err(Error::InvalidCode(
                    "bitsliced engine needs GF(2^r), r <= 4, n <= 256".into(),
                ))
            }
            Engine::Bitsliced => run_bitsliced_dispatch(structure),
            Engine::Auto if bitsliced_supported(structure) => run_bitsliced_dispatch(structure),
            _ => run_generic(structure),
        }
    };
    let mut counts: Vec<u64> = part.counts.iter().map(|&c| c * (q as u64 - 1)).collect();
    counts[0] += 1;
    Ok((
        WeightEnumerator {
            n,
            k: structure.k,
            q,
            counts,
        },
        part,
    ))
}

/// Exact weight enumerator; fails when q^k exceeds `budget`.
pub fn weight_enumerator(structure: &CodeStructure, budget: u128) -> Result<WeightEnumerator> {
    weight_enumerator_with(structure, budget, Engine::Auto)
}

pub fn weight_enumerator_with(
    structure: &CodeStructure,
    budget: u128,
    engine: Engine,
) -> Result<WeightEnumerator> {
    Ok(enumerate(structure, budget, engine)?.0)
}

/// Exact minimum distance with a minimum-weight witness.
pub fn min_distance(structure: &CodeStructure, budget: u128) -> Result<DistanceReport> {
    min_distance_with(structure, budget, Engine::Auto)
}

pub fn min_distance_with(
    structure: &CodeStructure,
    budget: u128,
    engine: Engine,
) -> Result<DistanceReport> {
    let start = Instant::now();
    let (_, part) = enumerate(structure, budget, engine)?;
    let d = (part.best != usize::MAX).then_some(part.best);
    Ok(DistanceReport {
        d,
        exact: true,
        codewords_enumerated: part.visited,
        elapsed: start.elapsed(),
        witness: part.witness.map(Codeword),
    })
}

/// Exact minimum distance that stops early using the information set of the
/// reduced generator matrix: a message of weight w yields a codeword of
/// weight at least w (the pivot coordinates repeat the message). Messages
/// are visited in order of increasing weight, and the walk stops as soon as
/// the best weight found cannot be beaten by any heavier message.
pub fn min_distance_early_exit(structure: &CodeStructure, budget: u128) -> Result<DistanceReport> {
    check_budget(structure, budget)?;
    let start = Instant::now();
    let f = structure.field().clone();
    let k = structure.k;
    let q = f.q();
    let scaled = scaled_rows(structure);
    let mut best = usize::MAX;
    let mut witness: Option<Vec<Elem>> = None;
    let mut visited = 0u128;

    // Recursive walk over supports of exactly `w` positions, first entry 1.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        f: &Field,
        scaled: &[Vec<Vec<Elem>>],
        q: usize,
        k: usize,
        from: usize,
        remaining: usize,
        cur: &mut Vec<Elem>,
        best: &mut usize,
        witness: &mut Option<Vec<Elem>>,
        visited: &mut u128,
    ) {
        if remaining == 0 {
            *visited += 1;
            let w = cur.iter().filter(|e| !e.is_zero()).count();
            if w < *best {
                *best = w;
                *witness = Some(cur.clone());
            }
            return;
        }
        for pos in from..=k - remaining {
            for c in 1..q {
                let saved = cur.clone();
                for (x, &y) in cur.iter_mut().zip(&scaled[pos][c]) {
                    *x = f.add(*x, y);
                }
                walk(
                    f,
                    scaled,
                    q,
                    k,
                    pos + 1,
                    remaining - 1,
                    cur,
                    best,
                    witness,
                    visited,
                );
                *cur = saved;
            }
        }
    }

    for w in 1..=k {
        for lead in 0..=k - w {
            let mut cur = scaled[lead][1].clone();
            walk(
                &f,
                &scaled,
                q,
                k,
                lead + 1,
                w - 1,
                &mut cur,
                &mut best,
                &mut witness,
                &mut visited,
            );
        }
        if best <= w + 1 {
            break;
        }
    }
    Ok(DistanceReport {
        d: (best != usize::MAX).then_some(best),
        exact: true,
        codewords_enumerated: visited,
        elapsed: start.elapsed(),
        witness: witness.map(Codeword),
    })
}

/// Upper bound on the minimum distance from `trials` random nonzero
/// messages. Deterministic for a fixed seed, whatever the thread count.
pub fn min_distance_sampled(structure: &CodeStructure, trials: u64, seed: u64) -> DistanceReport {
    let start = Instant::now();
    let n = structure.n();
    let k = structure.k;
    if k == 0 || trials == 0 {
        return DistanceReport {
            d: None,
            exact: false,
            codewords_enumerated: 0,
            elapsed: start.elapsed(),
            witness: None,
        };
    }
    let f = structure.field().clone();
    let q = f.q();
    let chunks = trials.div_ceil(SAMPLE_CHUNK);
    let bitsliced = bitsliced_supported(structure);
    let planes = plane_count(&f).unwrap_or(0);
    let basis: Vec<BitPlanes> = if bitsliced {
        (0..k)
            .flat_map(|i| {
                let row = structure.genmatrix.row(i).to_vec();
                let f = f.clone();
                (0..planes).map(move |b| {
                    let z = Elem(1 << b);
                    let scaled: Vec<Elem> = row.iter().map(|&x| f.mul(z, x)).collect();
                    BitPlanes::from_symbols(&f, &scaled)
                })
            })
            .collect()
    } else {
        Vec::new()
    };
    let scaled = if bitsliced {
        Vec::new()
    } else {
        scaled_rows(structure)
    };

    let results: Vec<(usize, Option<Vec<Elem>>)> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let count = SAMPLE_CHUNK.min(trials - chunk * SAMPLE_CHUNK);
            let mut best = usize::MAX;
            let mut best_cw: Option<Vec<Elem>> = None;
            let mut done = 0;
            let mut cw = basis.first().map(|b| BitPlanes {
                planes,
                words: b.words,
                bits: vec![0; b.bits.len()],
            });
            while done < count {
                if let Some(cw) = cw.as_mut() {
                    cw.bits.fill(0);
                    let mut any = false;
                    let mut word = 0u64;
                    let mut avail = 0;
                    for v in &basis {
                        if avail == 0 {
                            word = rng.next_u64();
                            avail = 64;
                        }
                        if word & 1 == 1 {
                            cw.xor_assign(v);
                            any = true;
                        }
                        word >>= 1;
                        avail -= 1;
                    }
                    if !any {
                        continue;
                    }
                    let w = cw.weight();
                    if w < best {
                        best = w;
                        best_cw = Some(cw.to_symbols(n));
                    }
                } else {
                    let msg: Vec<usize> = (0..k).map(|_| rng.gen_range(0..q)).collect();
                    if msg.iter().all(|&d| d == 0) {
                        continue;
                    }
                    let mut cur = vec![Elem::ZERO; n];
                    for (i, &d) in msg.iter().enumerate() {
                        for (x, &y) in cur.iter_mut().zip(&scaled[i][d]) {
                            *x = f.add(*x, y);
                        }
                    }
                    let w = cur.iter().filter(|e| !e.is_zero()).count();
                    if w < best {
                        best = w;
                        best_cw = Some(cur);
                    }
                }
                done += 1;
            }
            (best, best_cw)
        })
        .collect();

    let mut best = usize::MAX;
    let mut witness = None;
    for (b, cw) in results {
        if b < best {
            best = b;
            witness = cw;
        }
    }
    DistanceReport {
        d: (best != usize::MAX).then_some(best),
        exact: false,
        codewords_enumerated: trials as u128,
        elapsed: start.elapsed(),
        witness: witness.map(Codeword),
    }
}
