use crate::io::{Reader, Writer};
use crate::error::Result;
use crate::ops;

/// Growable bit buffer, bit `i` stored at word `i / 64`, position `i % 64`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawBits {
    words: Vec<u64>,
    len: usize,
}

#[inline]
pub(crate) fn low_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Number of bits needed to write `x` in binary (0 for 0).
#[inline]
pub fn bits_for(x: u64) -> usize {
    (64 - x.leading_zeros()) as usize
}

impl RawBits {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        if len % 64 != 0 {
            if let Some(w) = words.last_mut() {
                *w &= low_mask(len % 64);
            }
        }
        Self { words, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn push(&mut self, bit: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / 64] |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    /// Appends the low `width` bits of `value`, least significant first.
    pub fn push_int(&mut self, value: u64, width: usize) {
        debug_assert!(width <= 64);
        if width == 0 {
            return;
        }
        let value = value & low_mask(width);
        let off = self.len % 64;
        if off == 0 {
            self.words.push(value);
        } else {
            let last = self.words.len() - 1;
            self.words[last] |= value << off;
            if off + width > 64 {
                self.words.push(value >> (64 - off));
            }
        }
        self.len += width;
    }

    pub fn extend_from(&mut self, other: &RawBits) {
        let mut rest = other.len;
        for &w in &other.words {
            let take = rest.min(64);
            self.push_int(w, take);
            rest -= take;
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        ops::tick(1);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len);
        if bit {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Reads `width <= 64` bits starting at `pos` (bit `pos` lands in the least significant position).
    #[inline]
    pub fn get_int(&self, pos: usize, width: usize) -> u64 {
        debug_assert!(width <= 64 && pos + width <= self.len);
        if width == 0 {
            return 0;
        }
        ops::tick(1);
        let w = pos / 64;
        let off = pos % 64;
        let mut v = self.words[w] >> off;
        if off + width > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        v & low_mask(width)
    }

    /// Reads `len <= 128` bits starting at `pos` as a key, first bit least significant.
    pub fn get_u128(&self, pos: usize, len: usize) -> u128 {
        debug_assert!(len <= 128);
        let lo = self.get_int(pos, len.min(64)) as u128;
        if len > 64 {
            lo | (self.get_int(pos + 64, len - 64) as u128) << 64
        } else {
            lo
        }
    }

    #[inline]
    pub fn word(&self, k: usize) -> u64 {
        ops::tick(1);
        self.words[k]
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| (self.words[i / 64] >> (i % 64)) & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<bool> {
        self.iter().collect()
    }

    pub fn to_string01(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    pub fn write_to(&self, w: &mut Writer) {
        w.put_bits(&self.words, self.len);
    }

    pub fn read_from(r: &mut Reader<'_>) -> Result<Self> {
        let (words, len) = r.get_bits()?;
        Ok(Self { words, len })
    }
}

impl FromIterator<bool> for RawBits {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut b = RawBits::new();
        for x in iter {
            b.push(x);
        }
        b
    }
}

/// Parses a string of `0`/`1` characters (other characters are rejected).
impl std::str::FromStr for RawBits {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(crate::error::Error::Format(format!("bad bit character {other:?}"))),
            })
            .collect()
    }
}
