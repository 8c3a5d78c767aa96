use super::int_vec::IntVec;
use super::raw_bits::{bits_for, RawBits};
use super::SpaceBits;
use crate::error::{check_index, Error, Result};
use crate::io::{Persist, Reader, Writer};

/// Variable-length objects stored back to back, with a two-level start directory:
/// the absolute start of every `block`-th object plus each object's offset
/// inside its block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableCellArray {
    payload: RawBits,
    block: usize,
    block_start: IntVec,
    local_start: IntVec,
}

/// `ceil(lg^2(n + 2))`, never below 1.
pub(crate) fn default_block(total_bits: usize) -> usize {
    let lg = ((total_bits + 2) as f64).log2();
    ((lg * lg).ceil() as usize).max(1)
}

impl VariableCellArray {
    pub fn new<I>(cells: I, block: Option<usize>) -> Result<Self>
    where
        I: IntoIterator<Item = RawBits>,
    {
        let mut payload = RawBits::new();
        let mut starts = Vec::new();
        for c in cells {
            starts.push(payload.len());
            payload.extend_from(&c);
        }
        let block = block.unwrap_or_else(|| default_block(payload.len()));
        if block == 0 {
            return Err(Error::Param("block size must be positive".into()));
        }
        let mut block_start = Vec::with_capacity(starts.len().div_ceil(block));
        let mut local = Vec::with_capacity(starts.len());
        for (i, &s) in starts.iter().enumerate() {
            if i % block == 0 {
                block_start.push(s as u64);
            }
            local.push((s - block_start[i / block] as usize) as u64);
        }
        // sentinel: start of the (m+1)-th object
        block_start.push(payload.len() as u64);
        let mut bs = IntVec::with_width(bits_for(payload.len() as u64));
        block_start.into_iter().for_each(|x| bs.push(x));
        Ok(Self {
            payload,
            block,
            block_start: bs,
            local_start: IntVec::from_slice(&local),
        })
    }

    /// Objects of the given sizes, all bits zero.
    pub fn from_sizes(sizes: &[usize], block: Option<usize>) -> Result<Self> {
        Self::new(sizes.iter().map(|&s| RawBits::zeros(s)), block)
    }

    pub fn len(&self) -> usize {
        self.local_start.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn payload(&self) -> &RawBits {
        &self.payload
    }

    pub fn payload_bits(&self) -> usize {
        self.payload.len()
    }

    #[inline]
    fn start0(&self, k0: usize) -> usize {
        if k0 == self.len() {
            return self.payload.len();
        }
        (self.block_start.get(k0 / self.block) + self.local_start.get(k0)) as usize
    }

    /// 0-based bit offset of the `i`-th (1-based) object.
    pub fn start(&self, i: usize) -> Result<usize> {
        check_index(i, self.len())?;
        Ok(self.start0(i - 1))
    }

    /// `(start, length)` of the object with 0-based index `k0`.
    #[inline]
    pub fn cell(&self, k0: usize) -> (usize, usize) {
        let s = self.start0(k0);
        (s, self.start0(k0 + 1) - s)
    }

    pub fn cell_bits(&self, k0: usize) -> RawBits {
        let (s, len) = self.cell(k0);
        (s..s + len).map(|p| self.payload.get(p)).collect()
    }

    /// Object `k0` as a key (first bit least significant); objects must be at most 128 bits.
    #[inline]
    pub fn cell_key(&self, k0: usize) -> (usize, u128) {
        let (s, len) = self.cell(k0);
        (len, self.payload.get_u128(s, len))
    }

    pub fn space(&self) -> SpaceBits {
        SpaceBits {
            payload: self.payload.len(),
            directory: self.block_start.size_bits() + self.local_start.size_bits(),
        }
    }
}

impl Persist for VariableCellArray {
    fn write_to(&self, w: &mut Writer) {
        w.section(b"VCAR", 1, |w| {
            w.put_u64(self.block as u64);
            self.payload.write_to(w);
            self.block_start.write_to(w);
            self.local_start.write_to(w);
        });
    }

    fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let mut s = r.section(b"VCAR", 1)?;
        let v = Self {
            block: s.get_usize()?,
            payload: RawBits::read_from(&mut s)?,
            block_start: IntVec::read_from(&mut s)?,
            local_start: IntVec::read_from(&mut s)?,
        };
        s.finish()?;
        if v.block == 0 || v.block_start.len() != v.len().div_ceil(v.block) + 1 {
            return Err(Error::Format("variable-cell directory size mismatch".into()));
        }
        Ok(v)
    }
}
