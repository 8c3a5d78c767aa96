//! Suffix array by prefix doubling, LCP array by Kasai's scan, and
//! longest-common-extension queries answered with a range-minimum index.

use succinct_rmq::rmq::RmqIndex;

/// 0-based starting positions of the suffixes in lexicographic order.
pub fn suffix_array(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = text.iter().map(|&c| c as usize).collect();
    let mut next = vec![0usize; n];
    let mut k = 1;
    while n > 1 {
        // suffixes shorter than 2k sort before longer ones with the same prefix
        let key = |i: usize, rank: &[usize]| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i, &rank));
        next[sa[0]] = 0;
        for w in 1..n {
            next[sa[w]] = next[sa[w - 1]] + usize::from(key(sa[w], &rank) != key(sa[w - 1], &rank));
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1]] == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

/// `lcp[r]` = longest common prefix of the suffixes of rank `r` and `r − 1`; `lcp[0] = 0`.
pub fn lcp_array(text: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut inv = vec![0usize; n];
    for (r, &p) in sa.iter().enumerate() {
        inv[p] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for p in 0..n {
        if inv[p] == 0 {
            h = 0;
            continue;
        }
        let q = sa[inv[p] - 1];
        while p + h < n && q + h < n && text[p + h] == text[q + h] {
            h += 1;
        }
        lcp[inv[p]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Longest common extension between text positions, from the LCP array alone.
pub struct Lce {
    n: usize,
    inv: Vec<usize>,
    lcp: Vec<usize>,
    index: RmqIndex,
}

impl Lce {
    /// `index` must be built over `lcp`.
    pub fn new(sa: &[usize], lcp: Vec<usize>, index: RmqIndex) -> Self {
        let mut inv = vec![0usize; sa.len()];
        for (r, &p) in sa.iter().enumerate() {
            inv[p] = r;
        }
        Self { n: sa.len(), inv, lcp, index }
    }

    /// Length of the longest common prefix of the suffixes at 1-based positions `i` and `j`.
    pub fn lce(&self, i: usize, j: usize) -> succinct_rmq::Result<usize> {
        for index in [i, j] {
            if index == 0 || index > self.n {
                return Err(succinct_rmq::Error::OutOfRange { index, len: self.n });
            }
        }
        if i == j {
            return Ok(self.n - i + 1);
        }
        // 1-based suffix ranks; the answer is the minimum over lcp[lo+1 ..= hi]
        let (a, b) = (self.inv[i - 1] + 1, self.inv[j - 1] + 1);
        let (lo, hi) = (a.min(b), a.max(b));
        Ok(self.lcp[self.index.query(lo + 1, hi)? - 1])
    }
}

pub fn naive_lce(text: &[u8], i: usize, j: usize) -> usize {
    text[i - 1..].iter().zip(&text[j - 1..]).take_while(|(x, y)| x == y).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use succinct_rmq::micro_codec::CodecMode;

    fn naive_sa(text: &[u8]) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..text.len()).collect();
        sa.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
        sa
    }

    #[test]
    fn small_texts() {
        let sa = suffix_array(b"aaaa");
        assert_eq!(sa, vec![3, 2, 1, 0]);
        assert_eq!(lcp_array(b"aaaa", &sa), vec![0, 1, 2, 3]);
        let sa = suffix_array(b"ab");
        assert_eq!(sa, vec![0, 1]);
        assert_eq!(lcp_array(b"ab", &sa), vec![0, 0]);
        assert_eq!(suffix_array(b"banana"), vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(lcp_array(b"banana", &suffix_array(b"banana")), vec![0, 1, 3, 0, 0, 2]);
        assert_eq!(suffix_array(b"x"), vec![0]);
    }

    #[test]
    fn random_texts_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.random_range(1..400);
            let sigma = rng.random_range(1..5u8);
            let text: Vec<u8> = (0..n).map(|_| b'a' + rng.random_range(0..sigma)).collect();
            let sa = suffix_array(&text);
            assert_eq!(sa, naive_sa(&text));
            let lcp = lcp_array(&text, &sa);
            for r in 1..n {
                assert_eq!(lcp[r], naive_lce(&text, sa[r] + 1, sa[r - 1] + 1));
            }
        }
    }

    #[test]
    fn lce_matches_character_comparison() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let text: Vec<u8> = (0..3000).map(|_| b"ab"[rng.random_range(0..2)]).collect();
        let sa = suffix_array(&text);
        let lcp = lcp_array(&text, &sa);
        let index = RmqIndex::build(&lcp, CodecMode::Entropy).unwrap();
        let lce = Lce::new(&sa, lcp, index);
        for _ in 0..1000 {
            let (i, j) = (rng.random_range(1..=3000), rng.random_range(1..=3000));
            assert_eq!(lce.lce(i, j).unwrap(), naive_lce(&text, i, j), "lce({i},{j})");
        }
        assert_eq!(lce.lce(3000, 3000).unwrap(), 1);
        assert!(lce.lce(0, 1).is_err());
    }
}
