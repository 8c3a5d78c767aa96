//! Array input: whitespace- or comma-separated numbers, or a seeded random permutation.

use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Parses numbers into keys whose order matches the input values. Integers
/// are kept as is; if any token is a decimal, everything is reduced to ranks.
pub fn parse_keys(text: &str) -> Result<Vec<i64>> {
    let tokens: Vec<&str> = text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    if let Ok(ints) = tokens.iter().map(|t| t.parse::<i64>()).collect::<std::result::Result<Vec<_>, _>>() {
        return Ok(ints);
    }
    let mut vals = Vec::with_capacity(tokens.len());
    for (k, t) in tokens.iter().enumerate() {
        let v: f64 = t.parse().with_context(|| format!("token {} ({t:?}) is not a number", k + 1))?;
        if v.is_nan() {
            bail!("token {} is NaN", k + 1);
        }
        vals.push(v);
    }
    let mut idx: Vec<usize> = (0..vals.len()).collect();
    idx.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
    // equal values share a rank so that ties still go to the leftmost
    let mut ranks = vec![0i64; vals.len()];
    for w in 0..idx.len() {
        ranks[idx[w]] = if w > 0 && vals[idx[w]] == vals[idx[w - 1]] { ranks[idx[w - 1]] } else { w as i64 };
    }
    Ok(ranks)
}

pub fn read_keys(path: &Path) -> Result<Vec<i64>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_keys(&text).with_context(|| format!("in {}", path.display()))
}

pub fn random_permutation(n: usize, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a: Vec<i64> = (0..n as i64).collect();
    a.shuffle(&mut rng);
    a
}

/// Either an input file or `--random n`; exactly one must be given.
pub fn load(input: Option<&Path>, random: Option<usize>, seed: u64) -> Result<Vec<i64>> {
    let a = match (input, random) {
        (Some(p), None) => read_keys(p)?,
        (None, Some(n)) => random_permutation(n, seed),
        (Some(_), Some(_)) => bail!("give either an input file or --random, not both"),
        (None, None) => bail!("no input: give a file or --random N"),
    };
    if a.is_empty() {
        bail!("input array is empty");
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_and_separators() {
        assert_eq!(parse_keys("3, 1 2\n-7,,5").unwrap(), vec![3, 1, 2, -7, 5]);
        assert!(parse_keys("").unwrap().is_empty());
    }

    #[test]
    fn decimals_become_ranks() {
        assert_eq!(parse_keys("0.5 -1 2.25 0.5").unwrap(), vec![1, 0, 3, 1]);
        assert!(parse_keys("1 x").is_err());
        assert!(parse_keys("1 NaN").is_err());
    }

    #[test]
    fn permutation_is_deterministic() {
        let a = random_permutation(50, 9);
        assert_eq!(a, random_permutation(50, 9));
        let mut s = a.clone();
        s.sort();
        assert_eq!(s, (0..50).collect::<Vec<_>>());
    }
}
