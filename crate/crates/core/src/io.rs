//! Tagged, versioned, little-endian byte streams.
//!
//! Every persisted structure is written as a section:
//!
//! ```text
//! tag: [u8; 4] | version: u8 | length: u64 (LE) | payload: [u8; length]
//! ```
//!
//! Bit payloads are written as their bit length (u64) followed by
//! `ceil(len / 8)` bytes, least significant byte of each 64-bit word first,
//! padded with zero bits. See `FORMAT.md` at the repository root.

use crate::error::{Error, Result};

#[derive(Default, Debug)]
pub struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.buf
    }

    pub fn len(&self) -> usize {
        self.buf.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buf.is_empty()
    }

    pub fn put_u8(&mut self, v: u8) {
        self.buf.push(v);
    }

    pub fn put_u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    pub fn put_u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    pub fn put_bytes(&mut self, bytes: &[u8]) {
        self.buf.extend_from_slice(bytes);
    }

    /// Writes `len_bits` bits taken from `words` (LSB-first within each word).
    pub fn put_bits(&mut self, words: &[u64], len_bits: usize) {
        self.put_u64(len_bits as u64);
        let nbytes = len_bits.div_ceil(8);
        for (k, w) in words.iter().enumerate() {
            let bytes = w.to_le_bytes();
            let start = k * 8;
            if start >= nbytes {
                break;
            }
            let take = (nbytes - start).min(8);
            self.buf.extend_from_slice(&bytes[..take]);
        }
    }

    /// Writes a nested section produced by `body`.
    pub fn section(&mut self, tag: &[u8; 4], version: u8, body: impl FnOnce(&mut Writer)) {
        let mut inner = Writer::new();
        body(&mut inner);
        self.buf.extend_from_slice(tag);
        self.put_u8(version);
        self.put_u64(inner.buf.len() as u64);
        self.buf.extend_from_slice(&inner.buf);
    }
}

#[derive(Debug)]
pub struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    pub fn new(data: &'a [u8]) -> Self {
        Self { data, pos: 0 }
    }

    pub fn remaining(&self) -> usize {
        self.data.len() - self.pos
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.remaining() < n {
            return Err(Error::Format(format!(
                "unexpected end of stream: need {n} bytes, have {}",
                self.remaining()
            )));
        }
        let s = &self.data[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    pub fn get_u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    pub fn get_u32(&mut self) -> Result<u32> {
        let b = self.take(4)?;
        Ok(u32::from_le_bytes(b.try_into().unwrap()))
    }

    pub fn get_u64(&mut self) -> Result<u64> {
        let b = self.take(8)?;
        Ok(u64::from_le_bytes(b.try_into().unwrap()))
    }

    pub fn get_usize(&mut self) -> Result<usize> {
        usize::try_from(self.get_u64()?).map_err(|_| Error::Format("length overflow".into()))
    }

    pub fn get_bytes(&mut self, n: usize) -> Result<&'a [u8]> {
        self.take(n)
    }

    /// Reads a bit payload written by [`Writer::put_bits`], returning `(words, len_bits)`.
    pub fn get_bits(&mut self) -> Result<(Vec<u64>, usize)> {
        let len_bits = self.get_usize()?;
        let nbytes = len_bits.div_ceil(8);
        let bytes = self.take(nbytes)?;
        let mut words = vec![0u64; len_bits.div_ceil(64)];
        for (k, chunk) in bytes.chunks(8).enumerate() {
            let mut b = [0u8; 8];
            b[..chunk.len()].copy_from_slice(chunk);
            words[k] = u64::from_le_bytes(b);
        }
        if len_bits % 64 != 0 {
            if let Some(last) = words.last() {
                if last >> (len_bits % 64) != 0 {
                    return Err(Error::Format("non-zero padding bits".into()));
                }
            }
        }
        Ok((words, len_bits))
    }

    /// Opens the next section, checking its tag and version; returns a reader over its payload.
    pub fn section(&mut self, tag: &[u8; 4], version: u8) -> Result<Reader<'a>> {
        let t = self.take(4)?;
        if t != tag {
            return Err(Error::Format(format!(
                "expected section {:?}, found {:?}",
                String::from_utf8_lossy(tag),
                String::from_utf8_lossy(t)
            )));
        }
        let v = self.get_u8()?;
        if v != version {
            return Err(Error::Format(format!(
                "section {:?}: unsupported version {v}",
                String::from_utf8_lossy(tag)
            )));
        }
        let len = self.get_usize()?;
        Ok(Reader::new(self.take(len)?))
    }

    pub fn finish(&self) -> Result<()> {
        if self.remaining() != 0 {
            return Err(Error::Format(format!("{} trailing bytes", self.remaining())));
        }
        Ok(())
    }
}

/// Types that persist themselves as one tagged section.
pub trait Persist: Sized {
    fn write_to(&self, w: &mut Writer);
    fn read_from(r: &mut Reader<'_>) -> Result<Self>;

    fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::new();
        self.write_to(&mut w);
        w.into_bytes()
    }

    fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        let v = Self::read_from(&mut r)?;
        r.finish()?;
        Ok(v)
    }
}
