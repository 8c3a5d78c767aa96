//! Bit-level building blocks: bit vectors with rank/select, variable-cell
//! arrays and compressed piecewise-constant arrays.
//!
//! Logical positions in the public API are 1-based; offsets inside raw
//! payloads are 0-based.

mod bit_vec;
mod compressed;
mod int_vec;
mod pca;
mod raw_bits;
mod rrr;
mod select_index;
mod sparse;
mod vca;

pub use bit_vec::BitVec;
pub use compressed::CompressedBitVec;
pub use int_vec::IntVec;
pub use pca::PiecewiseConstantArray;
pub use raw_bits::{bits_for, RawBits};
pub use rrr::RrrVec;
pub use sparse::SparseVec;
pub use vca::VariableCellArray;

use crate::error::{check_index, Error, Result};

/// Bits used by a structure, split into stored content and lookup directories.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpaceBits {
    pub payload: usize,
    pub directory: usize,
}

impl SpaceBits {
    pub fn total(&self) -> usize {
        self.payload + self.directory
    }
}

impl std::ops::Add for SpaceBits {
    type Output = SpaceBits;
    fn add(self, o: SpaceBits) -> SpaceBits {
        SpaceBits {
            payload: self.payload + o.payload,
            directory: self.directory + o.directory,
        }
    }
}

/// Rank/select interface shared by the bit vectors.
///
/// The `*_at` methods are 0-based and unchecked; the remaining methods use the
/// 1-based conventions: `access(i)` for `1 <= i <= n`, `rank(bit, i)` counts
/// positions `1..=i` (with `rank(bit, 0) = 0`), and `select(bit, k)` returns
/// the position of the `k`-th occurrence.
pub trait RankSelect {
    fn len(&self) -> usize;
    fn count_ones(&self) -> usize;
    /// Bit at 0-based position `i0`.
    fn get_bit(&self, i0: usize) -> bool;
    /// Ones in positions `0..i0`.
    fn rank1_at(&self, i0: usize) -> usize;
    /// 0-based position of the `(k0 + 1)`-th occurrence of `bit`.
    fn select_at(&self, bit: bool, k0: usize) -> usize;
    fn space(&self) -> SpaceBits;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn count(&self, bit: bool) -> usize {
        if bit {
            self.count_ones()
        } else {
            self.len() - self.count_ones()
        }
    }

    fn access(&self, i: usize) -> Result<bool> {
        check_index(i, self.len())?;
        Ok(self.get_bit(i - 1))
    }

    fn rank(&self, bit: bool, i: usize) -> Result<usize> {
        if i > self.len() {
            return Err(Error::OutOfRange { index: i, len: self.len() });
        }
        let ones = self.rank1_at(i);
        Ok(if bit { ones } else { i - ones })
    }

    fn select(&self, bit: bool, k: usize) -> Result<usize> {
        let available = self.count(bit);
        if k == 0 || k > available {
            return Err(Error::NotFound {
                what: if bit { "1-bit" } else { "0-bit" },
                rank: k,
                available,
            });
        }
        Ok(self.select_at(bit, k - 1) + 1)
    }
}
