use super::raw_bits::{bits_for, RawBits};
use crate::error::{Error, Result};
use crate::io::{Reader, Writer};

/// Fixed-width packed integer array.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntVec {
    bits: RawBits,
    width: usize,
    len: usize,
}

impl IntVec {
    pub fn with_width(width: usize) -> Self {
        assert!(width <= 64);
        Self {
            bits: RawBits::new(),
            width,
            len: 0,
        }
    }

    /// Packs `values` using the smallest width that holds the maximum.
    pub fn from_slice(values: &[u64]) -> Self {
        let width = bits_for(values.iter().copied().max().unwrap_or(0));
        let mut v = Self::with_width(width);
        for &x in values {
            v.push(x);
        }
        v
    }

    pub fn push(&mut self, x: u64) {
        debug_assert!(self.width == 64 || x >> self.width == 0, "{x} does not fit in {} bits", self.width);
        self.bits.push_int(x, self.width);
        self.len += 1;
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len, "index {i} >= {}", self.len);
        if self.width == 0 {
            crate::ops::tick(1);
            return 0;
        }
        self.bits.get_int(i * self.width, self.width)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn size_bits(&self) -> usize {
        self.len * self.width
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn write_to(&self, w: &mut Writer) {
        w.put_u8(self.width as u8);
        w.put_u64(self.len as u64);
        self.bits.write_to(w);
    }

    pub fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let width = r.get_u8()? as usize;
        let len = r.get_usize()?;
        let bits = RawBits::read_from(r)?;
        if width > 64 || bits.len() != len.checked_mul(width).ok_or_else(|| Error::Format("int vector too long".into()))? {
            return Err(Error::Format("int vector length mismatch".into()));
        }
        Ok(Self { bits, width, len })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_values() {
        let vals = [0u64, 5, 17, 1023, 3];
        let v = IntVec::from_slice(&vals);
        assert_eq!(v.width(), 10);
        assert_eq!(v.iter().collect::<Vec<_>>(), vals);
        let mut w = Writer::new();
        v.write_to(&mut w);
        let bytes = w.into_bytes();
        let back = IntVec::read_from(&mut Reader::new(&bytes)).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn zero_width() {
        let v = IntVec::from_slice(&[0, 0, 0]);
        assert_eq!(v.width(), 0);
        assert_eq!(v.get(2), 0);
        assert_eq!(v.size_bits(), 0);
    }
}
