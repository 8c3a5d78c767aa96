use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartesian::build_cartesian;
use crate::error::{Error, Result};
use crate::io::{Persist, Reader, Writer};
use crate::micro_codec::CodecMode;
use crate::tree_cover::{CoverParams, CoverSpace, TreeCover};

/// Range-minimum index that keeps only the tree cover of the Cartesian tree.
/// The input array is not retained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RmqIndex {
    cover: TreeCover,
}

const SHORT_CHECKS: usize = 512;
const LONG_CHECKS: usize = 16;

impl RmqIndex {
    /// Builds with parameters derived from the array length.
    pub fn build<T: Ord>(a: &[T], mode: CodecMode) -> Result<Self> {
        Self::build_with(a, mode, CoverParams::for_size(a.len()))
    }

    /// Builds, then spot-checks sampled ranges against the array.
    pub fn build_with<T: Ord>(a: &[T], mode: CodecMode, params: CoverParams) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::Build("cannot index an empty array".into()));
        }
        let tree = build_cartesian(a);
        let ix = Self {
            cover: TreeCover::build(&tree, params, mode)?,
        };
        ix.spot_check(a)?;
        Ok(ix)
    }

    fn spot_check<T: Ord>(&self, a: &[T]) -> Result<()> {
        let n = a.len();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let scan = |i: usize, j: usize| (i..=j).fold(i, |best, k| if a[k - 1] < a[best - 1] { k } else { best });
        for c in 0..SHORT_CHECKS + LONG_CHECKS {
            let i = rng.random_range(1..=n);
            let j = if c < SHORT_CHECKS { (i + rng.random_range(0..64)).min(n) } else { rng.random_range(i..=n) };
            let got = self.query(i, j)?;
            if got != scan(i, j) {
                return Err(Error::Build(format!("self-check failed on [{i}, {j}]: got {got}, expected {}", scan(i, j))));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.cover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cover.is_empty()
    }

    /// 1-based position of the leftmost minimum of `a[i..=j]`.
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.len();
        if i == 0 || i > j || j > n {
            return Err(Error::InvalidRange { i, j, len: n });
        }
        let c = &self.cover;
        let w = c.lca_loc(c.in_select0(i - 1), c.in_select0(j - 1));
        Ok(c.in_rank0(w) + 1)
    }

    pub fn cover(&self) -> &TreeCover {
        &self.cover
    }

    pub fn space(&self) -> CoverSpace {
        self.cover.space()
    }
}

impl Persist for RmqIndex {
    fn write_to(&self, w: &mut Writer) {
        w.section(b"RMQI", 1, |w| self.cover.write_to(w));
    }

    fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let mut s = r.section(b"RMQI", 1)?;
        let cover = TreeCover::read_from(&mut s)?;
        s.finish()?;
        Ok(Self { cover })
    }
}
