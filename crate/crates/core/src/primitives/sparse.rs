//! Elias–Fano representation for very sparse bit vectors.
//!
//! `select1` is constant time. `rank` and `select0` binary-search one bucket
//! (at most `2^low_width` candidates), which is what keeps the payload at
//! roughly `m lg(n/m) + 2m` bits.

use super::bit_vec::BitVec;
use super::int_vec::IntVec;
use super::raw_bits::{bits_for, RawBits};
use super::{RankSelect, SpaceBits};
use crate::error::Result;
use crate::io::{Persist, Reader, Writer};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    len: usize,
    low_width: usize,
    lows: IntVec,
    high: BitVec,
}

impl SparseVec {
    pub fn new(bits: &RawBits) -> Self {
        let positions: Vec<usize> = bits.iter().enumerate().filter(|(_, b)| *b).map(|(i, _)| i).collect();
        Self::from_positions(bits.len(), &positions)
    }

    pub fn from_positions(len: usize, positions: &[usize]) -> Self {
        let m = positions.len();
        let low_width = if m == 0 || len <= m { 0 } else { bits_for((len / m) as u64) - 1 };
        let mut lows = IntVec::with_width(low_width);
        let mut high = RawBits::zeros(m + (len >> low_width) + 1);
        for (k, &p) in positions.iter().enumerate() {
            lows.push((p & super::raw_bits::low_mask(low_width) as usize) as u64);
            high.set((p >> low_width) + k, true);
        }
        Self {
            len,
            low_width,
            lows,
            high: BitVec::new(high),
        }
    }

    #[inline]
    fn position(&self, k0: usize) -> usize {
        let h = self.high.select_at(true, k0) - k0;
        (h << self.low_width) | self.lows.get(k0) as usize
    }

    pub(crate) fn write_fields(&self, w: &mut Writer) {
        w.put_u64(self.len as u64);
        w.put_u8(self.low_width as u8);
        self.lows.write_to(w);
        self.high.write_to(w);
    }

    pub(crate) fn read_fields(r: &mut Reader<'_>) -> Result<Self> {
        Ok(Self {
            len: r.get_usize()?,
            low_width: r.get_u8()? as usize,
            lows: IntVec::read_from(r)?,
            high: BitVec::read_from(r)?,
        })
    }
}

impl RankSelect for SparseVec {
    fn len(&self) -> usize {
        self.len
    }

    fn count_ones(&self) -> usize {
        self.lows.len()
    }

    fn get_bit(&self, i0: usize) -> bool {
        self.rank1_at(i0 + 1) > self.rank1_at(i0)
    }

    fn rank1_at(&self, i0: usize) -> usize {
        let m = self.lows.len();
        if m == 0 || i0 == 0 {
            return 0;
        }
        if i0 >= self.len {
            return m;
        }
        let hb = i0 >> self.low_width;
        let target = (i0 & super::raw_bits::low_mask(self.low_width) as usize) as u64;
        let mut lo = if hb == 0 { 0 } else { self.high.select_at(false, hb - 1) - (hb - 1) };
        let mut hi = self.high.select_at(false, hb) - hb;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.lows.get(mid) < target {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        lo
    }

    fn select_at(&self, bit: bool, k0: usize) -> usize {
        if bit {
            return self.position(k0);
        }
        // number of ones preceding the (k0+1)-th zero
        let (mut lo, mut hi) = (0usize, self.lows.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.position(mid) - mid <= k0 {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        k0 + lo
    }

    fn space(&self) -> SpaceBits {
        let h = self.high.space();
        SpaceBits {
            payload: self.lows.size_bits() + h.payload,
            directory: h.directory,
        }
    }
}
