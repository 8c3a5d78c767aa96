use super::int_vec::IntVec;
use super::raw_bits::RawBits;
use super::select_index::{select_in_word, Hint, SelectIndex, MAX_SPAN};
use super::{RankSelect, SpaceBits};
use crate::error::Result;
use crate::io::{Persist, Reader, Writer};
use crate::ops;

const WORDS_PER_SB: usize = 8;
const SB_BITS: usize = 64 * WORDS_PER_SB;

/// Plain bit vector with constant-time rank and select.
///
/// Rank uses one cumulative count per 512-bit superblock. Select uses sampled
/// directories for both bit values; groups of occurrences that are spread too
/// thin store their positions explicitly, so every query scans a bounded
/// number of superblocks and words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BitVec {
    bits: RawBits,
    ones: usize,
    sb_rank: IntVec,
    sel1: SelectIndex,
    sel0: SelectIndex,
}

impl BitVec {
    pub fn new(bits: RawBits) -> Self {
        let nsb = bits.len().div_ceil(SB_BITS);
        let mut cum = Vec::with_capacity(nsb + 1);
        let mut ones = 0usize;
        let mut pos1 = Vec::new();
        let mut pos0 = Vec::new();
        for sb in 0..nsb {
            cum.push(ones as u64);
            let end = ((sb + 1) * SB_BITS).min(bits.len());
            for i in sb * SB_BITS..end {
                if (bits.words()[i / 64] >> (i % 64)) & 1 == 1 {
                    ones += 1;
                    pos1.push(i);
                } else {
                    pos0.push(i);
                }
            }
        }
        cum.push(ones as u64);
        Self {
            sel1: SelectIndex::build(&pos1, SB_BITS),
            sel0: SelectIndex::build(&pos0, SB_BITS),
            sb_rank: IntVec::from_slice(&cum),
            ones,
            bits,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }

    pub fn raw(&self) -> &RawBits {
        &self.bits
    }

    #[inline]
    fn word_alpha(&self, k: usize, bit: bool) -> u64 {
        let w = self.bits.word(k);
        if bit {
            w
        } else {
            let valid = self.bits.len() - k * 64;
            !w & super::raw_bits::low_mask(valid.min(64))
        }
    }

    #[inline]
    fn cum(&self, sb: usize, bit: bool) -> usize {
        let ones = self.sb_rank.get(sb) as usize;
        if bit {
            ones
        } else {
            (sb * SB_BITS).min(self.bits.len()) - ones
        }
    }
}

impl RankSelect for BitVec {
    fn len(&self) -> usize {
        self.bits.len()
    }

    fn count_ones(&self) -> usize {
        self.ones
    }

    #[inline]
    fn get_bit(&self, i0: usize) -> bool {
        self.bits.get(i0)
    }

    #[inline]
    fn rank1_at(&self, i0: usize) -> usize {
        debug_assert!(i0 <= self.bits.len());
        if i0 == self.bits.len() {
            return self.ones;
        }
        let sb = i0 / SB_BITS;
        let mut acc = self.sb_rank.get(sb) as usize;
        let wk = i0 / 64;
        for k in sb * WORDS_PER_SB..wk {
            acc += self.bits.word(k).count_ones() as usize;
        }
        let off = i0 % 64;
        if off > 0 {
            acc += (self.bits.word(wk) & ((1u64 << off) - 1)).count_ones() as usize;
        }
        acc
    }

    fn select_at(&self, bit: bool, k0: usize) -> usize {
        let idx = if bit { &self.sel1 } else { &self.sel0 };
        let mut sb = match idx.hint(k0) {
            Hint::Exact(p) => return p,
            Hint::Superblock(sb) => sb,
        };
        let nsb = self.bits.len().div_ceil(SB_BITS);
        let mut steps = 0;
        while sb + 1 < nsb && self.cum(sb + 1, bit) <= k0 {
            sb += 1;
            steps += 1;
        }
        debug_assert!(steps <= MAX_SPAN + 1);
        let mut rem = k0 - self.cum(sb, bit);
        let wend = (sb + 1) * WORDS_PER_SB;
        for k in sb * WORDS_PER_SB..wend.min(self.bits.words().len()) {
            let w = self.word_alpha(k, bit);
            let c = w.count_ones() as usize;
            if rem < c {
                ops::tick(1);
                return k * 64 + select_in_word(w, rem as u32) as usize;
            }
            rem -= c;
        }
        unreachable!("select directory inconsistent")
    }

    fn space(&self) -> SpaceBits {
        SpaceBits {
            payload: self.bits.len(),
            directory: self.sb_rank.size_bits() + self.sel1.size_bits() + self.sel0.size_bits(),
        }
    }
}

impl Persist for BitVec {
    fn write_to(&self, w: &mut Writer) {
        w.section(b"BITV", 1, |w| {
            self.bits.write_to(w);
            w.put_u64(self.ones as u64);
            self.sb_rank.write_to(w);
            self.sel1.write_to(w);
            self.sel0.write_to(w);
        });
    }

    fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let mut s = r.section(b"BITV", 1)?;
        let v = Self {
            bits: RawBits::read_from(&mut s)?,
            ones: s.get_usize()?,
            sb_rank: IntVec::read_from(&mut s)?,
            sel1: SelectIndex::read_from(&mut s)?,
            sel0: SelectIndex::read_from(&mut s)?,
        };
        s.finish()?;
        Ok(v)
    }
}
