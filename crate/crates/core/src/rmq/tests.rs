use super::*;
use crate::io::Persist;
use crate::micro_codec::CodecMode;
use crate::tree_cover::CoverParams;
use crate::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIG2: [u32; 20] = [20, 11, 19, 8, 6, 18, 14, 16, 4, 3, 12, 10, 9, 7, 13, 5, 17, 15, 1, 2];

fn naive<T: Ord>(a: &[T], i: usize, j: usize) -> usize {
    (i..=j).fold(i, |best, k| if a[k - 1] < a[best - 1] { k } else { best })
}

fn all_pairs_agree<T: Ord + Clone>(a: &[T], ix: &RmqIndex) {
    let n = a.len();
    for i in 1..=n {
        for j in i..=n {
            assert_eq!(ix.query(i, j).unwrap(), naive(a, i, j), "[{i}, {j}] n={n}");
        }
    }
}

#[test]
fn figure_two_queries() {
    for mode in CodecMode::ALL {
        let ix = RmqIndex::build(&FIG2, mode).unwrap();
        assert_eq!(ix.query(1, 20).unwrap(), 19);
        assert_eq!(ix.query(4, 8).unwrap(), 5);
        for i in 1..=20 {
            assert_eq!(ix.query(i, i).unwrap(), i);
        }
        all_pairs_agree(&FIG2, &ix);
    }
}

#[test]
fn single_element_and_errors() {
    let ix = RmqIndex::build(&[1], CodecMode::Entropy).unwrap();
    assert_eq!(ix.query(1, 1).unwrap(), 1);
    assert!(matches!(ix.query(0, 1), Err(Error::InvalidRange { .. })));
    assert!(matches!(ix.query(1, 2), Err(Error::InvalidRange { .. })));
    let ix = RmqIndex::build(&FIG2, CodecMode::Entropy).unwrap();
    assert!(ix.query(5, 4).is_err());
    assert!(ix.query(1, 21).is_err());
    let empty: [u32; 0] = [];
    assert!(matches!(RmqIndex::build(&empty, CodecMode::Fixed), Err(Error::Build(_))));
}

#[test]
fn oracle_examples() {
    for o in [OracleRmq::scan(&[3, 1, 2]), OracleRmq::sparse_table(&[3, 1, 2])] {
        assert_eq!(o.query(1, 3).unwrap(), 2);
        assert!(o.query(2, 1).is_err());
        assert!(o.query(1, 4).is_err());
    }
    for o in [OracleRmq::scan(&[2, 2, 2]), OracleRmq::sparse_table(&[2, 2, 2])] {
        assert_eq!(o.query(1, 3).unwrap(), 1);
        assert_eq!(o.query(2, 3).unwrap(), 2);
    }
}

#[test]
fn sparse_table_matches_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [1usize, 2, 3, 17, 64, 200, 512] {
        let a: Vec<u8> = (0..n).map(|_| rng.random_range(0..10)).collect();
        let (s, t) = (OracleRmq::scan(&a), OracleRmq::sparse_table(&a));
        for i in 1..=n {
            for j in i..=n {
                assert_eq!(s.query(i, j).unwrap(), t.query(i, j).unwrap());
                assert_eq!(s.query(i, j).unwrap(), naive(&a, i, j));
            }
        }
    }
}

#[test]
fn duplicates_resolve_to_leftmost() {
    let a = [5, 1, 3, 1, 1, 2, 5, 5, 0, 0];
    let ix = RmqIndex::build(&a, CodecMode::Huffman).unwrap();
    assert_eq!(ix.query(1, 5).unwrap(), 2);
    assert_eq!(ix.query(3, 8).unwrap(), 4);
    assert_eq!(ix.query(7, 8).unwrap(), 7);
    assert_eq!(ix.query(1, 10).unwrap(), 9);
    all_pairs_agree(&a, &ix);
}

fn adversarial(n: usize) -> Vec<Vec<i64>> {
    let n = n as i64;
    vec![
        (0..n).collect(),
        (0..n).rev().collect(),
        (0..n).map(|i| (i - n / 2).abs()).collect(),
        (0..n).map(|i| -(i - n / 2).abs()).collect(),
        vec![7; n as usize],
        (0..n).map(|i| (i * 7919) % 3).collect(),
    ]
}

#[test]
fn random_and_adversarial_arrays_all_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for round in 0..12 {
        let n = rng.random_range(1..=300);
        let mut a: Vec<u32> = (0..n as u32).collect();
        a.shuffle(&mut rng);
        let mode = CodecMode::ALL[round % 3];
        all_pairs_agree(&a, &RmqIndex::build(&a, mode).unwrap());
        let small = CoverParams { micro_b: 1 + round % 3, mini_b: 3 + round };
        all_pairs_agree(&a, &RmqIndex::build_with(&a, mode, small).unwrap());
    }
    for n in [1, 2, 5, 100, 257] {
        for a in adversarial(n) {
            for mode in CodecMode::ALL {
                all_pairs_agree(&a, &RmqIndex::build(&a, mode).unwrap());
            }
        }
    }
}

#[test]
fn persist_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let a: Vec<u64> = (0..5000).map(|_| rng.random()).collect();
    let ix = RmqIndex::build(&a, CodecMode::Entropy).unwrap();
    let back = RmqIndex::from_bytes(&ix.to_bytes()).unwrap();
    assert_eq!(back, ix);
    let o = OracleRmq::sparse_table(&a);
    for _ in 0..2000 {
        let i = rng.random_range(1..=5000);
        let j = rng.random_range(i..=5000);
        assert_eq!(back.query(i, j).unwrap(), o.query(i, j).unwrap());
    }
    assert!(RmqIndex::from_bytes(&ix.to_bytes()[1..]).is_err());
}

proptest! {
    #[test]
    fn answer_is_leftmost_minimum(a in proptest::collection::vec(0u8..6, 1..120), picks in proptest::collection::vec((0usize..120, 0usize..120), 1..40)) {
        let ix = RmqIndex::build(&a, CodecMode::Entropy).unwrap();
        let n = a.len();
        for (x, y) in picks {
            let (i, j) = ((x % n).min(y % n) + 1, (x % n).max(y % n) + 1);
            let k = ix.query(i, j).unwrap();
            prop_assert!(i <= k && k <= j);
            prop_assert!(a[i - 1..j].iter().all(|v| a[k - 1] <= *v));
            prop_assert!(a[i - 1..k - 1].iter().all(|v| a[k - 1] < *v));
        }
    }
}
