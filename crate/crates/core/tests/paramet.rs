use std::collections::BTreeSet;

use buchi_core::exactmath::Rational;
use buchi_core::paramet::{
    build_param_seq, gcd_split, lexicon_map, order_normalize, quadruple_from_free, reconstruct,
    skew_triple_relations, structural_constants, triple_from_seed, GapConstants, ParamSeq,
    QuadConstants, QUAD_FREE,
};
use buchi_core::tuples::{
    classify, enumerate_triples, pairs_from_tuple, search_chains, PairTuple, SearchConfig,
};
use buchi_core::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn chains(n: usize, d_max: u64) -> Vec<PairTuple> {
    search_chains(SearchConfig {
        n,
        d_max,
        shards: 4,
    })
    .unwrap()
}

fn sub_sequence(s: &ParamSeq, f: impl Fn(usize) -> (usize, usize)) -> ParamSeq {
    let e = s.entries();
    ParamSeq::new(
        3,
        (0..8)
            .map(|k| {
                let (a, b) = f(k);
                &e[a] * &e[b]
            })
            .collect(),
    )
    .unwrap()
}

fn check_triple_relations(r: &ParamSeq) {
    let gap = |i, j| {
        let (u, vw) = r.position_differences(i, j);
        GapConstants::new(Rational::from_integer(u), Rational::from_integer(vw))
    };
    let outer = Rational::from_integer(r.position_differences(0, 2).0);
    let rels = skew_triple_relations(&gap(0, 1), &gap(1, 2), &outer).unwrap();
    let q: Vec<Rational> = r
        .entries()
        .iter()
        .cloned()
        .map(Rational::from_integer)
        .collect();
    for rel in rels {
        assert!(rel.residual(&q).is_zero(), "{rel} fails on {r}");
    }
}

#[test]
fn quadruple_chains_round_trip() {
    let mut seen = BTreeSet::new();
    let found = chains(4, 3_000_000);
    assert!(!found.is_empty());
    for chain in &found {
        let ordered = order_normalize(chain).unwrap();
        for w in ordered.pairs().windows(2) {
            let g = gcd_split(&w[0], &w[1]).unwrap();
            assert_eq!(&g.v * &g.u_fwd, w[0].0);
            assert_eq!(&g.w * &g.u_bwd, w[0].1);
            assert!(w[0].0 <= w[1].0 && w[0].1 >= w[1].1);
        }
        let seq = build_param_seq(&ordered).unwrap();
        assert!(seq.is_positive());
        assert_eq!(reconstruct(&seq), ordered.pairs());
        let c = structural_constants(&seq).unwrap();
        let qc = QuadConstants::new(c.beta[0], c.beta[1], c.delta[0]).unwrap();
        seen.insert((qc.b1, qc.b2, qc.d));
        let free: [Integer; 8] = QUAD_FREE.map(|i| seq.entries()[i].clone());
        assert_eq!(
            quadruple_from_free(&free, qc).unwrap(),
            seq,
            "D = {}",
            chain.d()
        );
        check_triple_relations(&sub_sequence(&seq, |k| (k, k + 8)));
        check_triple_relations(&sub_sequence(&seq, |k| (2 * k, 2 * k + 1)));
    }
    println!("constant combinations in found quadruples: {seen:?}");
}

#[test]
fn triple_chains_round_trip() {
    for chain in chains(3, 200_000) {
        let ordered = order_normalize(&chain).unwrap();
        let seq = build_param_seq(&ordered).unwrap();
        assert_eq!(reconstruct(&seq), ordered.pairs());
        let beta = structural_constants(&seq).unwrap().beta[0];
        assert!(beta == 1 || beta == 2);
        check_triple_relations(&seq);
    }
}

#[test]
fn triples_reproduced_from_seeds() {
    for u in enumerate_triples(2_000) {
        let class = classify(&u);
        if class.trivial {
            continue;
        }
        let pairs = pairs_from_tuple(&u).unwrap();
        let seq = build_param_seq(&order_normalize(&pairs).unwrap()).unwrap();
        let beta = structural_constants(&seq).unwrap().beta[0];
        let e = seq.entries();
        let t = triple_from_seed(&e[1], &e[3], &e[4], &e[6], beta).unwrap();
        assert!(!t.degenerate);
        assert_eq!(t.seq, seq);
        assert_eq!(t.tuple, u);
    }
}

#[test]
fn d15120_quadruple() {
    let q = PairTuple::from_i64(&[(126, 120), (135, 112), (140, 108), (144, 105)]).unwrap();
    let seq = build_param_seq(&q).unwrap();
    let prefix = PairTuple::new(q.pairs()[..3].to_vec()).unwrap();
    assert_eq!(
        build_param_seq(&prefix).unwrap(),
        ParamSeq::from_i64(3, &[1, 5, 7, 4, 9, 3, 2, 2]).unwrap()
    );
    let c = structural_constants(&seq).unwrap();
    let qc = QuadConstants::new(c.beta[0], c.beta[1], c.delta[0]).unwrap();
    let free: [Integer; 8] = QUAD_FREE.map(|i| seq.entries()[i].clone());
    assert_eq!(quadruple_from_free(&free, qc).unwrap(), seq);
}

fn seed_strategy() -> impl Strategy<Value = (i64, i64, i64, i64, u32)> {
    (1i64..300, 1i64..300, 1u32..=2, any::<prop::sample::Index>()).prop_filter_map(
        "needs a divisor split",
        |(s4, s6, beta, pick)| {
            let target = s4 * s6 + beta as i64;
            let divs: Vec<i64> = (1..=target).filter(|d| target % d == 0).collect();
            let s1 = divs[pick.index(divs.len())];
            let s3 = target / s1;
            let b = beta as i64;
            ((s3 - s6) % b == 0 && (s1 + s4) % b == 0).then_some((s1, s3, s4, s6, beta))
        },
    )
}

proptest! {
    #[test]
    fn seeded_triples_are_valid((s1, s3, s4, s6, beta) in seed_strategy()) {
        let t = triple_from_seed(&s1.into(), &s3.into(), &s4.into(), &s6.into(), beta).unwrap();
        if !t.degenerate {
            prop_assert!(classify(&t.tuple).valid);
            let pairs = reconstruct(&t.seq);
            let d = &pairs[0].0 * &pairs[0].1;
            prop_assert!(pairs.iter().all(|(x, y)| x * y == d));
        }
    }

    #[test]
    fn reconstruct_products_agree(s in prop::collection::vec(1i64..50, 16)) {
        let seq = ParamSeq::from_i64(4, &s).unwrap();
        let total: Integer = s.iter().map(|&v| Integer::from(v)).product();
        for (x, y) in reconstruct(&seq) {
            prop_assert_eq!(x * y, total.clone());
        }
    }

    #[test]
    fn lexicon_pairs_differ_in_one_bit(i in 1usize..=5, j in 0usize..16) {
        let (a, b) = lexicon_map(i, j).unwrap();
        prop_assert_eq!(a ^ b, 1 << (i - 1));
        prop_assert_eq!(a & (1 << (i - 1)), 0);
        prop_assert!(b < 32);
    }
}

#[test]
fn all_ones_sequence() {
    let seq = ParamSeq::from_i64(3, &[1; 8]).unwrap();
    assert!(reconstruct(&seq)
        .iter()
        .all(|(x, y)| x.is_one() && y.is_one()));
}
