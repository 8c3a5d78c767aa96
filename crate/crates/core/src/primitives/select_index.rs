use super::int_vec::IntVec;
use super::raw_bits::{bits_for, RawBits};
use crate::error::Result;
use crate::io::{Reader, Writer};

/// Occurrences per sampled group.
pub(crate) const GROUP: usize = 64;
/// A group spanning more superblocks than this keeps explicit positions.
pub(crate) const MAX_SPAN: usize = 32;

/// Where a select query has to continue.
pub(crate) enum Hint {
    /// Exact 0-based position.
    Exact(usize),
    /// Scan forward from this superblock; the answer lies at most `MAX_SPAN` superblocks ahead.
    Superblock(usize),
}

/// Sampled select directory (one per bit value), in the style of a dense/sparse darray.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SelectIndex {
    entries: IntVec,
    sparse: RawBits,
    explicit: IntVec,
}

impl SelectIndex {
    /// `positions` are the 0-based positions of all occurrences, increasing.
    pub fn build(positions: &[usize], superblock_bits: usize) -> Self {
        let ngroups = positions.len().div_ceil(GROUP);
        let mut entries = Vec::with_capacity(ngroups);
        let mut sparse = RawBits::new();
        let mut explicit = Vec::new();
        for g in 0..ngroups {
            let chunk = &positions[g * GROUP..((g + 1) * GROUP).min(positions.len())];
            let first_sb = chunk[0] / superblock_bits;
            let last_sb = chunk[chunk.len() - 1] / superblock_bits;
            if last_sb - first_sb > MAX_SPAN {
                sparse.push(true);
                entries.push(explicit.len() as u64);
                explicit.extend(chunk.iter().map(|&p| p as u64));
            } else {
                sparse.push(false);
                entries.push(first_sb as u64);
            }
        }
        let explicit = if explicit.is_empty() {
            IntVec::with_width(0)
        } else {
            let width = bits_for(*explicit.last().unwrap());
            let mut v = IntVec::with_width(width);
            explicit.into_iter().for_each(|x| v.push(x));
            v
        };
        Self {
            entries: IntVec::from_slice(&entries),
            sparse,
            explicit,
        }
    }

    #[inline]
    pub fn hint(&self, k0: usize) -> Hint {
        let g = k0 / GROUP;
        let e = self.entries.get(g) as usize;
        if self.sparse.get(g) {
            Hint::Exact(self.explicit.get(e + k0 % GROUP) as usize)
        } else {
            Hint::Superblock(e)
        }
    }

    pub fn size_bits(&self) -> usize {
        self.entries.size_bits() + self.sparse.len() + self.explicit.size_bits()
    }

    pub fn write_to(&self, w: &mut Writer) {
        self.entries.write_to(w);
        self.sparse.write_to(w);
        self.explicit.write_to(w);
    }

    pub fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        Ok(Self {
            entries: IntVec::read_from(r)?,
            sparse: RawBits::read_from(r)?,
            explicit: IntVec::read_from(r)?,
        })
    }
}

/// Position of the `r`-th (0-based) set bit of `w`.
#[inline]
pub(crate) fn select_in_word(mut w: u64, r: u32) -> u32 {
    debug_assert!(w.count_ones() > r);
    for _ in 0..r {
        w &= w - 1;
    }
    w.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn select_in_word_basic() {
        assert_eq!(select_in_word(0b1011_0100, 0), 2);
        assert_eq!(select_in_word(0b1011_0100, 2), 5);
        assert_eq!(select_in_word(1 << 63, 0), 63);
    }

    #[test]
    fn sparse_groups_store_positions() {
        let positions: Vec<usize> = (0..200).map(|k| k * 10_000).collect();
        let idx = SelectIndex::build(&positions, 512);
        for (k, &p) in positions.iter().enumerate() {
            match idx.hint(k) {
                Hint::Exact(q) => assert_eq!(q, p),
                Hint::Superblock(_) => panic!("expected explicit position"),
            }
        }
    }
}
