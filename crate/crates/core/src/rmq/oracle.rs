use crate::cartesian::stable_ranks;
use crate::error::{Error, Result};

/// Reference answers by scanning a copy of the array, or from a sparse table.
///
/// Keys are replaced by their stable ranks, so the leftmost of equal minima wins.
#[derive(Clone, Debug)]
pub struct OracleRmq {
    ranks: Vec<u32>,
    /// table[j][i] = 0-based argmin of ranks[i .. i + 2^(j+1)]
    table: Option<Vec<Vec<u32>>>,
}

impl OracleRmq {
    pub fn scan<T: Ord>(a: &[T]) -> Self {
        Self {
            ranks: stable_ranks(a),
            table: None,
        }
    }

    pub fn sparse_table<T: Ord>(a: &[T]) -> Self {
        let ranks = stable_ranks(a);
        let n = ranks.len();
        let better = |x: u32, y: u32| if ranks[y as usize] < ranks[x as usize] { y } else { x };
        let mut table: Vec<Vec<u32>> = Vec::new();
        let mut span = 1;
        while 2 * span <= n {
            let next: Vec<u32> = match table.last() {
                None => (0..=n - 2).map(|i| better(i as u32, i as u32 + 1)).collect(),
                Some(prev) => (0..=n - 2 * span).map(|i| better(prev[i], prev[i + span])).collect(),
            };
            table.push(next);
            span *= 2;
        }
        Self { ranks, table: Some(table) }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// 1-based position of the leftmost minimum of `a[i..=j]`.
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.len();
        if i == 0 || i > j || j > n {
            return Err(Error::InvalidRange { i, j, len: n });
        }
        let (lo, hi) = (i - 1, j - 1);
        let r = &self.ranks;
        let best = match &self.table {
            None => (lo..=hi).min_by_key(|&k| r[k]).unwrap(),
            Some(_) if lo == hi => lo,
            Some(table) => {
                let level = (hi - lo + 1).ilog2() as usize;
                let x = table[level - 1][lo] as usize;
                let y = table[level - 1][hi + 1 - (1 << level)] as usize;
                if r[y] < r[x] { y } else { x }
            }
        };
        Ok(best + 1)
    }
}
