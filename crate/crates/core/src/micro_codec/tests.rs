use super::*;
use crate::cartesian::{build_cartesian, sample_with, shapes};
use crate::io::Persist;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn type_keys() {
    assert_eq!(MicroType::of(&shapes::left_path(1)).unwrap().to_string(), "100");
    let a = MicroType::of(&shapes::left_path(2)).unwrap();
    let b = MicroType::of(&shapes::right_path(2)).unwrap();
    assert_eq!(a.to_string(), "11000");
    assert_eq!(b.to_string(), "10100");
    assert_ne!(a, b);
    // same shape from different arrays
    assert_eq!(MicroType::of(&build_cartesian(&[5, 9, 7])).unwrap(), MicroType::of(&build_cartesian(&[1, 3, 2])).unwrap());
    assert!(MicroType::of(&shapes::left_path(64)).is_err());
    assert_eq!(MicroType::of(&shapes::left_path(63)).unwrap().shape(), shapes::left_path(63));
    assert!(MicroType::from_key(3, 0b011).is_err());
    assert!(MicroType::from_key(4, 0b0001).is_err());
}

#[test]
fn textbook_huffman() {
    let l = huffman_lengths(&[2, 1, 1]);
    assert_eq!(l, vec![1, 2, 2]);
    assert_eq!(huffman_lengths(&[7]), vec![1]);
    let codes = canonical_codes(&l);
    assert_eq!(codes, vec![0b0, 0b10, 0b11]);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let m = rng.random_range(1..60);
        let f: Vec<u64> = (0..m).map(|_| rng.random_range(1..1000)).collect();
        let l = huffman_lengths(&f);
        assert!(kraft_sum(&l) <= 1.0 + 1e-12);
        // prefix-freeness of the canonical assignment
        let c = canonical_codes(&l);
        for i in 0..m {
            for j in 0..m {
                if i != j && l[i] <= l[j] {
                    assert_ne!(c[j] >> (l[j] - l[i]), c[i], "{i} prefixes {j}");
                }
            }
        }
        // optimality against an exhaustive-free bound: never worse than any
        // complete code we can build by splitting, e.g. the balanced one
        let cost: u64 = f.iter().zip(&l).map(|(&f, &l)| f * l as u64).sum();
        let flat = crate::primitives::bits_for((m - 1) as u64).max(1) as u64;
        assert!(cost <= f.iter().sum::<u64>() * flat);
    }
}

/// Minimum prefix-code cost by brute force over all length vectors (small m).
fn brute_min_cost(f: &[u64]) -> u64 {
    fn go(f: &[u64], i: usize, lens: &mut Vec<u8>, best: &mut u64) {
        if i == f.len() {
            if kraft_sum(lens) <= 1.0 + 1e-12 {
                let c = f.iter().zip(lens.iter()).map(|(&f, &l)| f * l as u64).sum();
                *best = (*best).min(c);
            }
            return;
        }
        for l in 1..=f.len() as u8 {
            lens.push(l);
            go(f, i + 1, lens, best);
            lens.pop();
        }
    }
    let mut best = u64::MAX;
    go(f, 0, &mut Vec::new(), &mut best);
    best
}

#[test]
fn huffman_matches_brute_force_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let m = rng.random_range(2..=6);
        let f: Vec<u64> = (0..m).map(|_| rng.random_range(1..50)).collect();
        let l = huffman_lengths(&f);
        let cost: u64 = f.iter().zip(&l).map(|(&f, &l)| f * l as u64).sum();
        assert_eq!(cost, brute_min_cost(&f), "{f:?}");
    }
}

#[test]
fn entropy_code_roundtrips_and_is_prefix_free() {
    let max = 9;
    let mut codes = Vec::new();
    for n in 1..=max {
        for t in shapes::all_shapes(n) {
            let c = encode_micro_entropy(&t, max);
            assert_eq!(decode_micro_entropy(&c, max).unwrap(), t);
            assert!(c.len() <= 2 * n + 2);
            codes.push(c.to_string01());
        }
    }
    codes.sort();
    for w in codes.windows(2) {
        assert!(!w[1].starts_with(&w[0]), "{} prefixes {}", w[0], w[1]);
    }
    let lens: Vec<u8> = codes.iter().map(|c| c.len() as u8).collect();
    assert!(kraft_sum(&lens) <= 1.0);
}

fn sample_types(rng: &mut ChaCha8Rng, count: usize, max: usize) -> (Vec<MicroType>, Vec<u64>, Vec<MicroType>) {
    let seq: Vec<MicroType> = (0..count).map(|_| MicroType::of(&sample_with(rng.random_range(1..=max), rng)).unwrap()).collect();
    let mut types = seq.clone();
    types.sort();
    types.dedup();
    let freqs = types.iter().map(|t| seq.iter().filter(|s| *s == t).count() as u64).collect();
    (types, freqs, seq)
}

#[test]
fn codebooks_roundtrip_and_dominate() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let max = 7;
    let (types, freqs, seq) = sample_types(&mut rng, 3000, max);
    let mut payload = Vec::new();
    for mode in CodecMode::ALL {
        let book = Codebook::build(mode, types.clone(), &freqs, max).unwrap();
        let ids: Vec<usize> = seq.iter().map(|t| book.type_id(t).unwrap()).collect();
        let ta = TypeArray::new(&book, &ids).unwrap();
        for (k, &id) in ids.iter().enumerate() {
            assert_eq!(ta.type_id(&book, k), id);
            assert_eq!(book.decode_shape(&book.codeword(id)).unwrap(), types[id]);
        }
        let lens = book.code_lengths();
        assert!(kraft_sum(&lens) <= 1.0 + 1e-12, "{mode}");
        let expect: usize = ids.iter().map(|&i| book.code_len(i)).sum();
        assert_eq!(ta.total_payload_bits(), expect);
        if mode == CodecMode::Fixed {
            assert_eq!(expect, seq.iter().map(|t| 2 * t.nodes() + 1).sum::<usize>());
        }
        let mut w = crate::io::Writer::new();
        book.write_to(&mut w);
        let bytes = w.into_bytes();
        assert_eq!(Codebook::read_from(&mut crate::io::Reader::new(&bytes)).unwrap(), book);
        assert_eq!(TypeArray::from_bytes(&ta.to_bytes()).unwrap(), ta);
        payload.push(expect);
    }
    assert!(payload[2] <= payload[0] && payload[2] <= payload[1], "{payload:?}");
}

#[test]
fn single_type_codebook() {
    let t = MicroType::of(&shapes::balanced(3)).unwrap();
    let book = Codebook::build(CodecMode::Huffman, vec![t], &[10], 5).unwrap();
    assert_eq!(book.code_len(0), 1);
    assert_eq!(book.decode(1, 0), Some(0));
    assert_eq!(book.decode(1, 1), None);
}

#[test]
fn lookup_tables_match_direct_computation() {
    for n in 1..=7 {
        for t in shapes::all_shapes(n) {
            let tab = MicroTables::new(&t);
            let d = t.depths();
            let ld = t.left_depths();
            for u in 0..n {
                assert_eq!(tab.st(u), t.st(u));
                assert_eq!(tab.ls(u), t.ls(u));
                assert_eq!(tab.left_depth(u), ld[u] as usize);
                assert_eq!(tab.node_at_inorder(tab.inorder(u)), u);
                for v in 0..n {
                    assert_eq!(tab.lca(u, v), t.lca_by_climbing(&d, u, v));
                }
            }
        }
    }
}

#[test]
fn codec_names() {
    for m in CodecMode::ALL {
        assert_eq!(m.to_string().parse::<CodecMode>().unwrap(), m);
    }
    assert!("zaks".parse::<CodecMode>().is_err());
}

proptest! {
    #[test]
    fn huffman_never_worse_than_entropy_or_fixed(seed in any::<u64>(), count in 1usize..400) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (types, freqs, seq) = sample_types(&mut rng, count, 9);
        let cost = |mode| {
            let b = Codebook::build(mode, types.clone(), &freqs, 9).unwrap();
            seq.iter().map(|t| b.code_len(b.type_id(t).unwrap())).sum::<usize>()
        };
        let h = cost(CodecMode::Huffman);
        prop_assert!(h <= cost(CodecMode::Entropy));
        prop_assert!(h <= cost(CodecMode::Fixed));
    }
}

