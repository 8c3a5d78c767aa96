//! Oracle-equivalence and decomposition checks run by `srmq verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use succinct_rmq::cartesian::build_cartesian;
use succinct_rmq::io::Persist;
use succinct_rmq::micro_codec::CodecMode;
use succinct_rmq::rmq::{OracleRmq, RmqIndex};
use succinct_rmq::tree_cover::{decompose_nested, CoverParams};

/// Arrays of length `n` with sorted, reversed, organ-pipe, constant and
/// few-distinct values.
pub fn adversarial(n: usize) -> Vec<(&'static str, Vec<i64>)> {
    let m = n as i64;
    vec![
        ("sorted", (0..m).collect()),
        ("reverse", (0..m).rev().collect()),
        ("organ-pipe", (0..m).map(|i| (i - m / 2).abs()).collect()),
        ("inverted-organ-pipe", (0..m).map(|i| -(i - m / 2).abs()).collect()),
        ("constant", vec![0; n]),
        ("few-distinct", (0..m).map(|i| (i * 7919 + 13) % 4).collect()),
    ]
}

pub struct CaseOutcome {
    pub queries: usize,
    pub failures: Vec<String>,
}

/// Checks one array: build, decomposition verifier, queries against an
/// oracle (all pairs when `n ≤ 512`, else `samples` random ranges), and a
/// serialization roundtrip.
pub fn check_array(a: &[i64], mode: CodecMode, params: CoverParams, samples: usize, rng: &mut ChaCha8Rng) -> CaseOutcome {
    let mut out = CaseOutcome { queries: 0, failures: Vec::new() };
    let n = a.len();
    let t = build_cartesian(a);
    let (mini, micro) = decompose_nested(&t, params);
    for (tier, d) in [("mini", &mini), ("micro", &micro)] {
        if let Err(e) = d.verify(&t) {
            out.failures.push(format!("{tier} decomposition: {e}"));
        }
    }
    let ix = match RmqIndex::build_with(a, mode, params) {
        Ok(ix) => ix,
        Err(e) => {
            out.failures.push(format!("build: {e}"));
            return out;
        }
    };
    let mut check = |i: usize, j: usize, want: usize| {
        out.queries += 1;
        match ix.query(i, j) {
            Ok(got) if got == want => {}
            Ok(got) => out.failures.push(format!("query({i}, {j}) = {got}, expected {want}")),
            Err(e) => out.failures.push(format!("query({i}, {j}): {e}")),
        }
    };
    if n <= 512 {
        let o = OracleRmq::scan(a);
        for i in 1..=n {
            for j in i..=n {
                check(i, j, o.query(i, j).unwrap());
            }
        }
    } else {
        let o = OracleRmq::sparse_table(a);
        for _ in 0..samples {
            let i = rng.random_range(1..=n);
            let j = rng.random_range(i..=n);
            check(i, j, o.query(i, j).unwrap());
        }
    }
    match RmqIndex::from_bytes(&ix.to_bytes()) {
        Ok(back) if back == ix => {}
        Ok(_) => out.failures.push("serialization roundtrip changed the index".into()),
        Err(e) => out.failures.push(format!("serialization roundtrip: {e}")),
    }
    out.failures.truncate(10);
    out
}

pub fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (case as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}
