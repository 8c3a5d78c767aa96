//! Integer arithmetic coder over uniform models.
//!
//! Every symbol is coded as `x` out of `s` equally likely outcomes, with `s`
//! chosen by the caller per symbol. The state is a 62-bit interval; when it
//! straddles the midpoint closely, resolution is deferred through a pending
//! bit counter. Termination writes the shortest dyadic interval inside the
//! final range, so the output is prefix-free and the decoder reads zeros past
//! the end.

use crate::primitives::RawBits;

const PRECISION: u32 = 62;
const TOP: u64 = 1 << PRECISION;
const HALF: u64 = TOP >> 1;
const QUARTER: u64 = TOP >> 2;

/// Largest alphabet size a single symbol may use.
pub const MAX_ALPHABET: u64 = QUARTER;

#[inline]
fn split(range: u64, s: u64, x: u64) -> (u64, u64) {
    let (q, r) = (range / s, range % s);
    (x * q + x.min(r), q + u64::from(x < r))
}

#[derive(Clone, Debug)]
pub struct ArithEncoder {
    low: u64,
    high: u64,
    pending: u64,
    out: RawBits,
}

impl Default for ArithEncoder {
    fn default() -> Self {
        Self::new()
    }
}

impl ArithEncoder {
    pub fn new() -> Self {
        Self::with_output(RawBits::new())
    }

    /// Appends to `out` instead of starting a fresh buffer.
    pub fn with_output(out: RawBits) -> Self {
        Self {
            low: 0,
            high: TOP - 1,
            pending: 0,
            out,
        }
    }

    fn emit(&mut self, bit: bool) {
        self.out.push(bit);
        for _ in 0..self.pending {
            self.out.push(!bit);
        }
        self.pending = 0;
    }

    /// Codes `x` as one of `s` equally likely outcomes.
    pub fn encode(&mut self, x: u64, s: u64) {
        assert!(x < s && s <= MAX_ALPHABET, "symbol {x} outside alphabet {s}");
        if s == 1 {
            return;
        }
        let (off, size) = split(self.high - self.low + 1, s, x);
        self.low += off;
        self.high = self.low + size - 1;
        loop {
            if self.high < HALF {
                self.emit(false);
            } else if self.low >= HALF {
                self.emit(true);
                self.low -= HALF;
                self.high -= HALF;
            } else if self.low >= QUARTER && self.high < HALF + QUARTER {
                self.pending += 1;
                self.low -= QUARTER;
                self.high -= QUARTER;
            } else {
                break;
            }
            self.low <<= 1;
            self.high = (self.high << 1) | 1;
        }
    }

    pub fn finish(mut self) -> RawBits {
        // pending bits mean the window straddles a midpoint, which no empty suffix can name
        let first = u32::from(self.pending > 0);
        for k in first..=PRECISION {
            let unit = 1u64 << (PRECISION - k);
            let v = self.low.div_ceil(unit) * unit;
            if v + (unit - 1) <= self.high {
                for b in 0..k {
                    self.emit((v >> (PRECISION - 1 - b)) & 1 == 1);
                }
                return self.out;
            }
        }
        unreachable!("interval narrower than the coder precision")
    }
}

#[derive(Clone, Debug)]
pub struct ArithDecoder<'a> {
    bits: &'a RawBits,
    pos: usize,
    low: u64,
    high: u64,
    value: u64,
}

impl<'a> ArithDecoder<'a> {
    pub fn new(bits: &'a RawBits) -> Self {
        Self::at(bits, 0)
    }

    /// Decodes a stream starting at bit `start` of `bits`.
    pub fn at(bits: &'a RawBits, start: usize) -> Self {
        let mut d = Self {
            bits,
            pos: start,
            low: 0,
            high: TOP - 1,
            value: 0,
        };
        for _ in 0..PRECISION {
            d.value = (d.value << 1) | d.next_bit();
        }
        d
    }

    #[inline]
    fn next_bit(&mut self) -> u64 {
        let b = self.pos < self.bits.len() && self.bits.get(self.pos);
        self.pos += 1;
        u64::from(b)
    }

    pub fn decode(&mut self, s: u64) -> u64 {
        assert!((1..=MAX_ALPHABET).contains(&s), "alphabet size {s}");
        if s == 1 {
            return 0;
        }
        let range = self.high - self.low + 1;
        let (q, r) = (range / s, range % s);
        let off = self.value - self.low;
        let wide = r * (q + 1);
        let x = if off < wide { off / (q + 1) } else { r + (off - wide) / q };
        let (start, size) = split(range, s, x);
        self.low += start;
        self.high = self.low + size - 1;
        loop {
            let sub = if self.high < HALF {
                0
            } else if self.low >= HALF {
                HALF
            } else if self.low >= QUARTER && self.high < HALF + QUARTER {
                QUARTER
            } else {
                break;
            };
            self.low = (self.low - sub) << 1;
            self.high = ((self.high - sub) << 1) | 1;
            self.value = ((self.value - sub) << 1) | self.next_bit();
        }
        x
    }
}
