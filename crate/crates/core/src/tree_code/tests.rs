use super::*;
use crate::cartesian::{self, build_cartesian, log2_inverse_probability, model_entropy, sample_random_bst, sample_with, shapes, BinaryTree};
use crate::primitives::RawBits;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIG2: [u32; 20] = [20, 11, 19, 8, 6, 18, 14, 16, 4, 3, 12, 10, 9, 7, 13, 5, 17, 15, 1, 2];

fn clg(x: f64) -> usize {
    // guard against lg values that are integers up to rounding
    (x - 1e-9).ceil().max(0.0) as usize
}

fn check_code(t: &BinaryTree) {
    let n = t.len();
    let code = encode_hybrid(t);
    assert_eq!(&decode(&code).unwrap(), t);
    assert_eq!(TreeCode::from_bytes(&code.to_bytes()).unwrap(), code);
    let h = log2_inverse_probability(t);
    let ac = encode_subtree_size(t);
    assert!(ac.len() <= clg(h) + 2, "n={n} ac={} H={h}", ac.len());
    assert_eq!(&decode_subtree_size(&ac, n), t);
    let lgn = clg((n.max(1) as f64).log2());
    let envelope = 2 * lgn + (clg(h) + 4).min(2 * n + 2);
    assert!(code.bit_len() <= envelope, "n={n} len={} envelope={envelope}", code.bit_len());
}

#[test]
fn zaks_examples() {
    assert_eq!(encode_zaks(&shapes::left_path(1)).to_string01(), "100");
    assert_eq!(encode_zaks(&shapes::left_path(2)).to_string01(), "11000");
    let b = encode_zaks(&shapes::balanced(3));
    assert_eq!(b.to_string01(), "1100100");
    assert_eq!(decode_zaks(&"1100100".parse().unwrap()).unwrap(), shapes::balanced(3));
    assert_eq!(encode_zaks(&BinaryTree::empty()).to_string01(), "0");
    assert!(decode_zaks(&"110".parse().unwrap()).is_err());
    assert!(decode_zaks(&"1000".parse().unwrap()).is_err());
}

#[test]
fn subtree_size_examples() {
    let fig = build_cartesian(&FIG2);
    let ac = encode_subtree_size(&fig);
    assert!(ac.len() <= 31, "{}", ac.len());
    assert!(encode_subtree_size(&shapes::left_path(1)).is_empty());
    let lp = shapes::left_path(3);
    assert_eq!(lp.left_sizes(), vec![2, 1, 0]);
    assert!(encode_subtree_size(&lp).len() <= 5);

    let code = encode_hybrid(&fig);
    assert!(!code.uses_zaks());
    let path = shapes::right_path(64);
    assert!(encode_hybrid(&path).uses_zaks());
    let one = encode_hybrid(&shapes::left_path(1));
    assert!(one.bit_len() <= one.header_len() + 3);
    assert_eq!(decode(&one).unwrap().len(), 1);
    let empty = encode_hybrid(&BinaryTree::empty());
    assert!(decode(&empty).unwrap().is_empty());
}

#[test]
fn gamma_roundtrip() {
    let mut b = RawBits::new();
    let xs = [1u64, 2, 3, 4, 7, 8, 1000, u64::MAX >> 1];
    for &x in &xs {
        write_gamma(&mut b, x);
    }
    let mut pos = 0;
    for &x in &xs {
        let before = pos;
        assert_eq!(read_gamma(&b, &mut pos).unwrap(), x);
        assert_eq!(pos - before, gamma_len(x));
    }
    let mut pos = 0;
    assert!(read_gamma(&"000".parse().unwrap(), &mut pos).is_err());
}

#[test]
fn exhaustive_small_trees() {
    for n in 0..=10 {
        for t in shapes::all_shapes(n) {
            check_code(&t);
        }
    }
}

#[test]
fn random_and_degenerate_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10_000 {
        let cap = if rng.random_bool(0.05) { 2000 } else { 100 };
        let n = rng.random_range(1..=cap);
        check_code(&sample_with(n, &mut rng));
    }
    for n in [1, 2, 3, 100, 1023, 1024, 1025, 5000] {
        check_code(&shapes::left_path(n));
        check_code(&shapes::right_path(n));
        check_code(&shapes::zigzag(n));
        check_code(&shapes::balanced(n));
        check_code(&shapes::caterpillar(n));
    }
}

#[test]
fn average_length_tracks_model_entropy() {
    let n = 100_000;
    let trials = 200;
    let mean: f64 = (0..trials).map(|s| encode_hybrid(&sample_random_bst(n, 1000 + s)).bit_len() as f64).sum::<f64>() / trials as f64;
    let rate = model_entropy(n) / n as f64;
    assert!((mean / n as f64 - rate).abs() <= 0.02, "{} vs {rate}", mean / n as f64);
}

#[test]
fn coder_inverts_random_streams() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let syms: Vec<(u64, u64)> = (0..100_000)
        .map(|_| {
            let s = rng.random_range(1..=1_000_000u64);
            (rng.random_range(0..s), s)
        })
        .collect();
    let mut enc = ArithEncoder::new();
    for &(x, s) in &syms {
        enc.encode(x, s);
    }
    let bits = enc.finish();
    let info: f64 = syms.iter().map(|&(_, s)| (s as f64).log2()).sum();
    assert!(bits.len() as f64 <= info + 2.0, "{} vs {info}", bits.len());
    let mut dec = ArithDecoder::new(&bits);
    for &(x, s) in &syms {
        assert_eq!(dec.decode(s), x);
    }
}

#[test]
fn coder_handles_extreme_symbols() {
    let mut enc = ArithEncoder::new();
    let syms = [(0, 2), (1, 2), (MAX_ALPHABET - 1, MAX_ALPHABET), (0, MAX_ALPHABET), (0, 3), (2, 3), (5, 7)];
    for &(x, s) in &syms {
        enc.encode(x, s);
    }
    let bits = enc.finish();
    let mut dec = ArithDecoder::new(&bits);
    for &(x, s) in &syms {
        assert_eq!(dec.decode(s), x);
    }
}

#[test]
fn corrupt_codes_are_rejected() {
    let t = build_cartesian(&FIG2);
    let code = encode_hybrid(&t);
    let bytes = code.to_bytes();
    assert!(TreeCode::from_bytes(&bytes[..bytes.len() - 1]).is_err());
    assert!(TreeCode::from_bytes(&[]).is_err());
    let mut extra = bytes.clone();
    extra.push(0);
    assert!(TreeCode::from_bytes(&extra).is_err());
    let mut long = code.bits().clone();
    long.push(false);
    assert!(decode_hybrid_bits(&long).is_err());
    // gamma header claiming an enormous tree
    let mut huge = RawBits::new();
    write_gamma(&mut huge, 1 << 40);
    huge.push(false);
    assert!(decode_hybrid_bits(&huge).is_err());
    let mut z = RawBits::new();
    write_gamma(&mut z, 4);
    z.push(true);
    z.push(true);
    assert!(decode_hybrid_bits(&z).is_err());
}

proptest! {
    #[test]
    fn arbitrary_left_size_trees_roundtrip(seed in any::<u64>(), n in 1usize..300) {
        let t = cartesian::sample_random_bst(n, seed);
        let code = encode_hybrid(&t);
        prop_assert_eq!(decode(&code).unwrap(), t);
    }
}
