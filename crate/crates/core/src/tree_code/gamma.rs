use crate::error::{Error, Result};
use crate::primitives::{bits_for, RawBits};

/// Elias gamma code of `m ≥ 1`: `⌊lg m⌋` zeros, then `m` in binary.
pub fn write_gamma(out: &mut RawBits, m: u64) {
    assert!(m >= 1);
    let w = bits_for(m);
    for _ in 1..w {
        out.push(false);
    }
    for b in (0..w).rev() {
        out.push((m >> b) & 1 == 1);
    }
}

pub fn gamma_len(m: u64) -> usize {
    2 * bits_for(m) - 1
}

/// Reads a gamma code at `*pos`, advancing it.
pub fn read_gamma(bits: &RawBits, pos: &mut usize) -> Result<u64> {
    let mut zeros = 0;
    loop {
        if *pos >= bits.len() {
            return Err(Error::Decode("truncated gamma code".into()));
        }
        if bits.get(*pos) {
            break;
        }
        zeros += 1;
        *pos += 1;
        if zeros > 63 {
            return Err(Error::Decode("gamma code too long".into()));
        }
    }
    if *pos + zeros + 1 > bits.len() {
        return Err(Error::Decode("truncated gamma code".into()));
    }
    let mut m = 0u64;
    for _ in 0..=zeros {
        m = (m << 1) | u64::from(bits.get(*pos));
        *pos += 1;
    }
    Ok(m)
}
