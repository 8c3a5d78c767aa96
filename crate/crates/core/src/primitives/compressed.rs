use super::raw_bits::RawBits;
use super::rrr::RrrVec;
use super::sparse::SparseVec;
use super::{RankSelect, SpaceBits};
use crate::error::{Error, Result};
use crate::io::{Persist, Reader, Writer};

/// Compressed bit vector: block-compressed (class/offset) storage, or an
/// Elias–Fano list of one-positions when that is smaller. The representation
/// is picked at construction by comparing total sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompressedBitVec {
    Blocks(RrrVec),
    Sparse(SparseVec),
}

impl CompressedBitVec {
    pub fn new(bits: &RawBits) -> Self {
        let rrr = RrrVec::new(bits);
        let ones = bits.count_ones();
        // Elias–Fano needs about m(lg(n/m) + 2) bits; only build it when it can win.
        let ef_estimate = if ones == 0 {
            0
        } else {
            ones * (super::bits_for((bits.len() / ones) as u64) + 2)
        };
        if ef_estimate < rrr.space().total() {
            let sparse = SparseVec::new(bits);
            if sparse.space().total() < rrr.space().total() {
                return CompressedBitVec::Sparse(sparse);
            }
        }
        CompressedBitVec::Blocks(rrr)
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self::new(&iter.into_iter().collect())
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self, CompressedBitVec::Sparse(_))
    }
}

impl RankSelect for CompressedBitVec {
    fn len(&self) -> usize {
        match self {
            Self::Blocks(v) => v.len(),
            Self::Sparse(v) => v.len(),
        }
    }

    fn count_ones(&self) -> usize {
        match self {
            Self::Blocks(v) => v.count_ones(),
            Self::Sparse(v) => v.count_ones(),
        }
    }

    #[inline]
    fn get_bit(&self, i0: usize) -> bool {
        match self {
            Self::Blocks(v) => v.get_bit(i0),
            Self::Sparse(v) => v.get_bit(i0),
        }
    }

    #[inline]
    fn rank1_at(&self, i0: usize) -> usize {
        match self {
            Self::Blocks(v) => v.rank1_at(i0),
            Self::Sparse(v) => v.rank1_at(i0),
        }
    }

    #[inline]
    fn select_at(&self, bit: bool, k0: usize) -> usize {
        match self {
            Self::Blocks(v) => v.select_at(bit, k0),
            Self::Sparse(v) => v.select_at(bit, k0),
        }
    }

    fn space(&self) -> SpaceBits {
        match self {
            Self::Blocks(v) => v.space(),
            Self::Sparse(v) => v.space(),
        }
    }
}

impl Persist for CompressedBitVec {
    fn write_to(&self, w: &mut Writer) {
        w.section(b"CBVC", 1, |w| match self {
            Self::Blocks(v) => {
                w.put_u8(0);
                v.write_fields(w);
            }
            Self::Sparse(v) => {
                w.put_u8(1);
                v.write_fields(w);
            }
        });
    }

    fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let mut s = r.section(b"CBVC", 1)?;
        let v = match s.get_u8()? {
            0 => Self::Blocks(RrrVec::read_fields(&mut s)?),
            1 => Self::Sparse(SparseVec::read_fields(&mut s)?),
            k => return Err(Error::Format(format!("unknown bit vector kind {k}"))),
        };
        s.finish()?;
        Ok(v)
    }
}
