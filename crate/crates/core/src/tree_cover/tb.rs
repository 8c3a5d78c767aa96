//! LCA on the tree of micro-tree roots.
//!
//! The tree is binary, so the LCA of two nodes is the shallowest node between
//! them in inorder. Depths are kept in inorder; a sparse table over blocks of
//! `BLOCK` positions answers the middle part, and at most two partial blocks
//! are scanned.

use crate::error::{Error, Result};
use crate::io::{Reader, Writer};
use crate::primitives::IntVec;

const BLOCK: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MacroLca {
    /// inorder position of each node
    pos: IntVec,
    /// node at each inorder position
    at: IntVec,
    depth: IntVec,
    /// levels[j][b] = position of the shallowest node in blocks b .. b + 2^j
    levels: Vec<IntVec>,
}

impl MacroLca {
    /// `left`/`right` give children (`None` = absent); node 0 is the root.
    pub fn new(left: &[Option<usize>], right: &[Option<usize>]) -> Self {
        let k = left.len();
        let mut pos = vec![0u64; k];
        let mut at = Vec::with_capacity(k);
        let mut depth_in = Vec::with_capacity(k);
        // iterative inorder walk
        let mut stack: Vec<(usize, u64)> = Vec::new();
        let mut cur = (k > 0).then_some((0usize, 0u64));
        loop {
            while let Some((v, d)) = cur {
                stack.push((v, d));
                cur = left[v].map(|c| (c, d + 1));
            }
            let Some((v, d)) = stack.pop() else { break };
            pos[v] = at.len() as u64;
            at.push(v as u64);
            depth_in.push(d);
            cur = right[v].map(|c| (c, d + 1));
        }
        assert_eq!(at.len(), k, "macro tree is not connected");
        let nb = k.div_ceil(BLOCK);
        let mut level: Vec<u64> = (0..nb)
            .map(|b| {
                let lo = b * BLOCK;
                let hi = (lo + BLOCK).min(k);
                (lo..hi).min_by_key(|&i| depth_in[i]).unwrap() as u64
            })
            .collect();
        let mut levels = vec![IntVec::from_slice(&level)];
        let mut span = 1;
        while 2 * span <= nb {
            level = (0..=nb - 2 * span)
                .map(|b| {
                    let (x, y) = (level[b], level[b + span]);
                    if depth_in[y as usize] < depth_in[x as usize] { y } else { x }
                })
                .collect();
            levels.push(IntVec::from_slice(&level));
            span *= 2;
        }
        Self {
            pos: IntVec::from_slice(&pos),
            at: IntVec::from_slice(&at),
            depth: IntVec::from_slice(&depth_in),
            levels,
        }
    }

    pub fn len(&self) -> usize {
        self.at.len()
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos.get(v) as usize
    }

    #[inline]
    fn better(&self, a: usize, b: usize) -> usize {
        if self.depth.get(b) < self.depth.get(a) { b } else { a }
    }

    fn scan(&self, lo: usize, hi: usize) -> usize {
        (lo + 1..=hi).fold(lo, |m, i| self.better(m, i))
    }

    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut i, mut j) = (self.position(u), self.position(v));
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let (bi, bj) = (i / BLOCK, j / BLOCK);
        let best = if bi == bj {
            self.scan(i, j)
        } else {
            let mut m = self.better(self.scan(i, bi * BLOCK + BLOCK - 1), self.scan(bj * BLOCK, j));
            if bi + 1 < bj {
                let (lo, hi) = (bi + 1, bj - 1);
                let lev = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
                let t = &self.levels[lev];
                m = self.better(m, self.better(t.get(lo) as usize, t.get(hi + 1 - (1 << lev)) as usize));
            }
            m
        };
        self.at.get(best) as usize
    }

    pub fn size_bits(&self) -> usize {
        self.pos.size_bits() + self.at.size_bits() + self.depth.size_bits() + self.levels.iter().map(|l| l.size_bits()).sum::<usize>()
    }

    pub fn write_to(&self, w: &mut Writer) {
        self.pos.write_to(w);
        self.at.write_to(w);
        self.depth.write_to(w);
        w.put_u64(self.levels.len() as u64);
        for l in &self.levels {
            l.write_to(w);
        }
    }

    pub fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let pos = IntVec::read_from(r)?;
        let at = IntVec::read_from(r)?;
        let depth = IntVec::read_from(r)?;
        let nl = r.get_usize()?;
        if nl > 64 {
            return Err(Error::Format("too many sparse-table levels".into()));
        }
        let levels = (0..nl).map(|_| IntVec::read_from(r)).collect::<Result<Vec<_>>>()?;
        let k = at.len();
        let nb = k.div_ceil(BLOCK);
        let shape_ok = pos.len() == k
            && depth.len() == k
            && (k == 0 || levels.len() == (usize::BITS - nb.leading_zeros()) as usize)
            && levels.iter().enumerate().all(|(j, l)| l.len() == nb + 1 - (1 << j) && l.iter().all(|p| (p as usize) < k))
            && at.iter().all(|v| (v as usize) < k)
            && (0..k).all(|v| at.get(pos.get(v) as usize) == v as u64);
        if !shape_ok {
            return Err(Error::Format("inconsistent macro LCA structure".into()));
        }
        Ok(Self { pos, at, depth, levels })
    }
}
