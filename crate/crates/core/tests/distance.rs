mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use skewqc::code::{encode, generator_matrix, in_row_space, CodeSpec};
use skewqc::distance::{
    code_size, min_distance, min_distance_early_exit, min_distance_sampled, weight_enumerator,
    weight_enumerator_with, BitPlanes, Engine,
};
use skewqc::factorization::linear_factor_chains;
use skewqc::{CodeStructure, Elem, Field, SkewPoly};

const BUDGET: u128 = 1 << 20;

/// Random codes with at most `max_size` codewords.
fn arb_code_over(fields: Vec<Field>, max_size: u128) -> impl Strategy<Value = CodeStructure> {
    (
        prop::sample::select(fields),
        1usize..=3,
        1usize..=3,
        any::<u64>(),
    )
        .prop_map(move |(f, half, l, seed)| {
            let s = f.m() as usize * half;
            let mut rng = rng(seed);
            // half of the cases use a degenerate tuple so that k < s is common
            let deg = rng.gen_range(0..s);
            match linear_factor_chains(&f, s, deg, 16)
                .ok()
                .filter(|c| !c.is_empty() && seed % 2 == 0)
            {
                Some(chains) => {
                    let g = chains[rng.gen_range(0..chains.len())].clone();
                    let fs: Vec<SkewPoly> =
                        (1..l).map(|_| SkewPoly::random(&f, s, &mut rng)).collect();
                    generator_matrix(&CodeSpec::from_factor(&f, s, &g, &fs).unwrap()).unwrap()
                }
                None => random_code(&f, &mut rng, s, l),
            }
        })
        .prop_filter("small enough to enumerate", move |st| {
            code_size(st) <= max_size
        })
}

fn small_fields() -> Vec<Field> {
    vec![
        gf4(),
        Field::new(3, 1, 2).unwrap(),
        Field::new(2, 1, 3).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn enumerator_matches_brute_force(st in arb_code_over(small_fields(), 1 << 14)) {
        let we = weight_enumerator(&st, BUDGET).unwrap();
        prop_assert_eq!(&we.counts, &naive_counts(&st));
        prop_assert_eq!(we.total(), (st.field().q() as u128).pow(st.k as u32));
        let generic = weight_enumerator_with(&st, BUDGET, Engine::Generic).unwrap();
        prop_assert_eq!(&generic.counts, &we.counts);
    }

    #[test]
    fn scalar_multiples_share_weights(st in arb_code_over(vec![gf4()], 1 << 16)) {
        // A_w counts every nonzero codeword together with its q - 1 multiples
        let we = weight_enumerator(&st, BUDGET).unwrap();
        for (w, &c) in we.counts.iter().enumerate().skip(1) {
            prop_assert_eq!(c % 3, 0, "A_{} = {}", w, c);
        }
    }

    #[test]
    fn witness_is_a_codeword_of_minimum_weight(st in arb_code_over(small_fields(), 1 << 16)) {
        let report = min_distance(&st, BUDGET).unwrap();
        prop_assert!(report.exact);
        prop_assert_eq!(report.d, weight_enumerator(&st, BUDGET).unwrap().min_distance());
        if let Some(w) = &report.witness {
            prop_assert_eq!(Some(w.weight()), report.d);
            prop_assert!(in_row_space(w, &st));
        } else {
            prop_assert_eq!(st.k, 0);
        }
    }

    #[test]
    fn early_exit_agrees(st in arb_code_over(vec![gf4()], 1 << 20)) {
        let full = min_distance(&st, BUDGET).unwrap();
        let early = min_distance_early_exit(&st, BUDGET).unwrap();
        prop_assert_eq!(early.d, full.d);
        prop_assert!(early.codewords_enumerated <= full.codewords_enumerated.max(1));
    }

    #[test]
    fn sampling_never_undercuts(st in arb_code_over(vec![gf4()], 1 << 20), seed in any::<u64>()) {
        let exact = min_distance(&st, BUDGET).unwrap();
        let sampled = min_distance_sampled(&st, 2000, seed);
        prop_assert!(!sampled.exact || sampled.d == exact.d);
        if let (Some(s), Some(e)) = (sampled.d, exact.d) {
            prop_assert!(s >= e);
        }
        if let Some(w) = &sampled.witness {
            prop_assert!(in_row_space(w, &st));
        }
    }

    #[test]
    fn bitplane_weight_matches_symbol_weight(len in 1usize..=250, seed in any::<u64>()) {
        let f = gf4();
        let mut rng = rng(seed);
        let v: Vec<Elem> = (0..len).map(|_| random_elem(&f, &mut rng)).collect();
        let bp = BitPlanes::from_symbols(&f, &v);
        prop_assert_eq!(bp.weight(), weight(&v));
        prop_assert_eq!(bp.to_symbols(len), v);
    }
}

#[test]
fn bitsliced_weights_match_symbol_weights_on_codewords() {
    // 10^5 codewords of a k = 12 code: bit-plane weight of every codeword and
    // of every sum equals the symbol weight
    let f = gf4();
    let mut r = rng(21);
    let g = p(&f, "a^2a^2aaa^21aa1a001");
    let st = generator_matrix(&CodeSpec::from_factor(&f, 24, &g, &[]).unwrap()).unwrap();
    assert_eq!(st.k, 12);
    let we = weight_enumerator(&st, 1 << 30).unwrap();
    assert_eq!(we.total(), 4u128.pow(12));
    let mut prev = BitPlanes::from_symbols(&f, &vec![Elem::ZERO; st.n()]);
    let mut prev_symbols = vec![Elem::ZERO; st.n()];
    for _ in 0..100_000 {
        let msg: Vec<Elem> = (0..st.k).map(|_| random_elem(&f, &mut r)).collect();
        let c = encode(&msg, &st).unwrap();
        assert!(we.counts[c.weight()] > 0);
        let mut bp = BitPlanes::from_symbols(&f, &c.0);
        assert_eq!(bp.weight(), c.weight());
        bp.xor_assign(&prev);
        let sum: Vec<Elem> =
            c.0.iter()
                .zip(&prev_symbols)
                .map(|(&a, &b)| f.add(a, b))
                .collect();
        assert_eq!(bp.weight(), weight(&sum));
        prev = BitPlanes::from_symbols(&f, &c.0);
        prev_symbols = c.0;
    }
}

#[test]
fn budget_is_enforced() {
    let f = gf4();
    let mut r = rng(4);
    let st = random_code(&f, &mut r, 12, 2);
    assert!(st.k > 5);
    assert!(weight_enumerator(&st, 1000).is_err());
    assert!(min_distance(&st, 1000).is_err());
}

#[test]
fn sampling_is_reproducible() {
    let f = gf4();
    let mut r = rng(6);
    let st = random_code(&f, &mut r, 20, 2);
    let a = min_distance_sampled(&st, 50_000, 9);
    let b = min_distance_sampled(&st, 50_000, 9);
    assert_eq!(a.d, b.d);
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.codewords_enumerated, 50_000);
}
