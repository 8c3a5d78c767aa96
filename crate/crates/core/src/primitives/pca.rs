use super::compressed::CompressedBitVec;
use super::int_vec::IntVec;
use super::raw_bits::RawBits;
use super::{RankSelect, SpaceBits};
use crate::error::{check_index, Error, Result};
use crate::io::{Persist, Reader, Writer};

/// Array stored as its run values plus a compressed bit vector marking run starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseConstantArray {
    values: IntVec,
    changes: CompressedBitVec,
}

impl PiecewiseConstantArray {
    pub fn new(a: &[u64]) -> Self {
        let mut changes = RawBits::new();
        let mut runs = Vec::new();
        for (i, &x) in a.iter().enumerate() {
            let start = i == 0 || a[i - 1] != x;
            changes.push(start);
            if start {
                runs.push(x);
            }
        }
        Self {
            values: IntVec::from_slice(&runs),
            changes: CompressedBitVec::new(&changes),
        }
    }

    pub fn len(&self) -> usize {
        self.changes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of runs (value changes, counting position 1).
    pub fn runs(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub(crate) fn get0(&self, i0: usize) -> u64 {
        self.values.get(self.changes.rank1_at(i0 + 1) - 1)
    }

    /// Value and run length at 0-based `i0`, sharing one rank.
    #[inline]
    pub(crate) fn get_with_runlen0(&self, i0: usize) -> (u64, usize) {
        let r = self.changes.rank1_at(i0 + 1);
        let start = self.changes.select_at(true, r - 1);
        (self.values.get(r - 1), i0 - start + 1)
    }

    pub fn access(&self, i: usize) -> Result<u64> {
        check_index(i, self.len())?;
        Ok(self.get0(i - 1))
    }

    /// Distance from the start of `i`'s run through `i`, inclusive.
    pub fn runlen(&self, i: usize) -> Result<usize> {
        check_index(i, self.len())?;
        Ok(self.get_with_runlen0(i - 1).1)
    }

    pub fn space(&self) -> SpaceBits {
        let c = self.changes.space();
        SpaceBits {
            payload: self.values.size_bits() + c.payload,
            directory: c.directory,
        }
    }
}

impl Persist for PiecewiseConstantArray {
    fn write_to(&self, w: &mut Writer) {
        w.section(b"PCAR", 1, |w| {
            self.values.write_to(w);
            self.changes.write_to(w);
        });
    }

    fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let mut s = r.section(b"PCAR", 1)?;
        let v = Self {
            values: IntVec::read_from(&mut s)?,
            changes: CompressedBitVec::read_from(&mut s)?,
        };
        s.finish()?;
        if v.changes.count_ones() != v.values.len() || (v.len() > 0 && !v.changes.get_bit(0)) {
            return Err(Error::Format("piecewise-constant array is inconsistent".into()));
        }
        Ok(v)
    }
}
