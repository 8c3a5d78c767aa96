//! Block-compressed bit vector: every 15-bit block is stored as its class
//! (popcount, 4 bits) and its offset among all blocks of that class
//! (`ceil(lg C(15, class))` bits). Superblocks of 32 blocks carry absolute
//! rank and offset-stream position.

use std::sync::OnceLock;

use super::int_vec::IntVec;
use super::raw_bits::RawBits;
use super::select_index::{select_in_word, Hint, SelectIndex};
use super::{RankSelect, SpaceBits};
use crate::error::Result;
use crate::io::{Reader, Writer};
use crate::ops;

pub(crate) const BLOCK: usize = 15;
const SB_BLOCKS: usize = 32;
const SB_BITS: usize = BLOCK * SB_BLOCKS;

struct Tables {
    offset_width: [usize; BLOCK + 1],
    class_start: [usize; BLOCK + 2],
    by_class: Vec<u16>,
    offset_of: Vec<u16>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut binom = [[0u64; BLOCK + 1]; BLOCK + 1];
        for n in 0..=BLOCK {
            binom[n][0] = 1;
            for k in 1..=n {
                binom[n][k] = binom[n - 1][k - 1] + if k < n { binom[n - 1][k] } else { 0 };
            }
        }
        let mut offset_width = [0usize; BLOCK + 1];
        let mut class_start = [0usize; BLOCK + 2];
        for c in 0..=BLOCK {
            let count = binom[BLOCK][c];
            offset_width[c] = super::raw_bits::bits_for(count - 1);
            class_start[c + 1] = class_start[c] + count as usize;
        }
        let mut by_class = vec![0u16; 1 << BLOCK];
        let mut offset_of = vec![0u16; 1 << BLOCK];
        let mut fill = class_start;
        for v in 0..(1u32 << BLOCK) {
            let c = v.count_ones() as usize;
            offset_of[v as usize] = (fill[c] - class_start[c]) as u16;
            by_class[fill[c]] = v as u16;
            fill[c] += 1;
        }
        Tables {
            offset_width,
            class_start,
            by_class,
            offset_of,
        }
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RrrVec {
    len: usize,
    ones: usize,
    classes: IntVec,
    offsets: RawBits,
    sb_rank: IntVec,
    sb_offset: IntVec,
    sel1: SelectIndex,
    sel0: SelectIndex,
}

impl RrrVec {
    pub fn new(bits: &RawBits) -> Self {
        let t = tables();
        let len = bits.len();
        let nblocks = len.div_ceil(BLOCK);
        let mut classes = IntVec::with_width(4);
        let mut offsets = RawBits::new();
        let mut sb_rank = Vec::new();
        let mut sb_offset = Vec::new();
        let mut ones = 0usize;
        for b in 0..nblocks {
            if b % SB_BLOCKS == 0 {
                sb_rank.push(ones as u64);
                sb_offset.push(offsets.len() as u64);
            }
            let width = BLOCK.min(len - b * BLOCK);
            let v = bits.get_int(b * BLOCK, width);
            let c = v.count_ones() as usize;
            ones += c;
            classes.push(c as u64);
            offsets.push_int(t.offset_of[v as usize] as u64, t.offset_width[c]);
        }
        sb_rank.push(ones as u64);
        let mut pos1 = Vec::with_capacity(ones);
        let mut pos0 = Vec::with_capacity(len - ones);
        for (i, b) in bits.iter().enumerate() {
            if b {
                pos1.push(i)
            } else {
                pos0.push(i)
            }
        }
        Self {
            len,
            ones,
            classes,
            offsets,
            sb_rank: IntVec::from_slice(&sb_rank),
            sb_offset: IntVec::from_slice(&sb_offset),
            sel1: SelectIndex::build(&pos1, SB_BITS),
            sel0: SelectIndex::build(&pos0, SB_BITS),
        }
    }

    #[inline]
    fn decode_block(&self, pos: usize, c: usize) -> u64 {
        let t = tables();
        let off = self.offsets.get_int(pos, t.offset_width[c]) as usize;
        ops::tick(1);
        t.by_class[t.class_start[c] + off] as u64
    }

    #[inline]
    fn cum(&self, sb: usize, bit: bool) -> usize {
        let ones = self.sb_rank.get(sb) as usize;
        if bit {
            ones
        } else {
            (sb * SB_BITS).min(self.len) - ones
        }
    }

    pub(crate) fn write_fields(&self, w: &mut Writer) {
        w.put_u64(self.len as u64);
        w.put_u64(self.ones as u64);
        self.classes.write_to(w);
        self.offsets.write_to(w);
        self.sb_rank.write_to(w);
        self.sb_offset.write_to(w);
        self.sel1.write_to(w);
        self.sel0.write_to(w);
    }

    pub(crate) fn read_fields(r: &mut Reader<'_>) -> Result<Self> {
        Ok(Self {
            len: r.get_usize()?,
            ones: r.get_usize()?,
            classes: IntVec::read_from(r)?,
            offsets: RawBits::read_from(r)?,
            sb_rank: IntVec::read_from(r)?,
            sb_offset: IntVec::read_from(r)?,
            sel1: SelectIndex::read_from(r)?,
            sel0: SelectIndex::read_from(r)?,
        })
    }
}

impl RankSelect for RrrVec {
    fn len(&self) -> usize {
        self.len
    }

    fn count_ones(&self) -> usize {
        self.ones
    }

    fn get_bit(&self, i0: usize) -> bool {
        let t = tables();
        let b = i0 / BLOCK;
        let sb = b / SB_BLOCKS;
        let mut pos = self.sb_offset.get(sb) as usize;
        for j in sb * SB_BLOCKS..b {
            pos += t.offset_width[self.classes.get(j) as usize];
        }
        let v = self.decode_block(pos, self.classes.get(b) as usize);
        (v >> (i0 % BLOCK)) & 1 == 1
    }

    fn rank1_at(&self, i0: usize) -> usize {
        debug_assert!(i0 <= self.len);
        if i0 == self.len {
            return self.ones;
        }
        let t = tables();
        let b = i0 / BLOCK;
        let sb = b / SB_BLOCKS;
        let mut acc = self.sb_rank.get(sb) as usize;
        let mut pos = self.sb_offset.get(sb) as usize;
        for j in sb * SB_BLOCKS..b {
            let c = self.classes.get(j) as usize;
            acc += c;
            pos += t.offset_width[c];
        }
        let r = i0 % BLOCK;
        if r > 0 {
            let v = self.decode_block(pos, self.classes.get(b) as usize);
            acc += (v & ((1 << r) - 1)).count_ones() as usize;
        }
        acc
    }

    fn select_at(&self, bit: bool, k0: usize) -> usize {
        let t = tables();
        let idx = if bit { &self.sel1 } else { &self.sel0 };
        let mut sb = match idx.hint(k0) {
            Hint::Exact(p) => return p,
            Hint::Superblock(sb) => sb,
        };
        let nsb = self.len.div_ceil(SB_BITS);
        while sb + 1 < nsb && self.cum(sb + 1, bit) <= k0 {
            sb += 1;
        }
        let mut rem = k0 - self.cum(sb, bit);
        let mut pos = self.sb_offset.get(sb) as usize;
        let nblocks = self.len.div_ceil(BLOCK);
        for j in sb * SB_BLOCKS..((sb + 1) * SB_BLOCKS).min(nblocks) {
            let c = self.classes.get(j) as usize;
            let count = if bit { c } else { BLOCK - c };
            if rem < count {
                let v = self.decode_block(pos, c);
                let w = if bit { v } else { !v & ((1 << BLOCK) - 1) };
                return j * BLOCK + select_in_word(w, rem as u32) as usize;
            }
            rem -= count;
            pos += t.offset_width[c];
        }
        unreachable!("select directory inconsistent")
    }

    fn space(&self) -> SpaceBits {
        SpaceBits {
            payload: self.classes.size_bits() + self.offsets.len(),
            directory: self.sb_rank.size_bits()
                + self.sb_offset.size_bits()
                + self.sel1.size_bits()
                + self.sel0.size_bits(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_bijective() {
        let t = tables();
        for v in 0..(1usize << BLOCK) {
            let c = (v as u32).count_ones() as usize;
            let off = t.offset_of[v] as usize;
            assert!(off < (1 << t.offset_width[c]).max(1));
            assert_eq!(t.by_class[t.class_start[c] + off] as usize, v);
        }
        assert_eq!(t.offset_width[0], 0);
        assert_eq!(t.offset_width[15], 0);
        assert_eq!(t.offset_width[7], 13);
    }
}
