use super::arith::{ArithDecoder, ArithEncoder};
use super::gamma::{read_gamma, write_gamma};
use super::zaks::{read_zaks, write_zaks};
use crate::cartesian::{BinaryTree, NONE};
use crate::error::{Error, Result};
use crate::primitives::RawBits;

/// Feeds the preorder left-subtree sizes to `enc`, each uniform over `0..st(v)`.
pub fn encode_left_sizes(enc: &mut ArithEncoder, t: &BinaryTree) {
    for v in 0..t.len() {
        enc.encode(t.ls(v) as u64, t.st(v) as u64);
    }
}

/// Inverse of [`encode_left_sizes`] for a tree of `n` nodes.
pub fn decode_left_sizes(dec: &mut ArithDecoder<'_>, n: usize) -> BinaryTree {
    let mut left = vec![NONE; n];
    let mut right = vec![NONE; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    if n > 0 {
        stack.push((0, n));
    }
    // preorder again: subtree sizes are known before each symbol is read
    while let Some((v, size)) = stack.pop() {
        let l = dec.decode(size as u64) as usize;
        let r = size - 1 - l;
        if r > 0 {
            right[v] = (v + 1 + l) as u32;
            stack.push((v + 1 + l, r));
        }
        if l > 0 {
            left[v] = (v + 1) as u32;
            stack.push((v + 1, l));
        }
    }
    BinaryTree::from_preorder_children(left, right)
}

/// Subtree-size code of `t` alone (the node count must be known to decode).
pub fn encode_subtree_size(t: &BinaryTree) -> RawBits {
    let mut enc = ArithEncoder::new();
    encode_left_sizes(&mut enc, t);
    enc.finish()
}

pub fn decode_subtree_size(bits: &RawBits, n: usize) -> BinaryTree {
    decode_left_sizes(&mut ArithDecoder::new(bits), n)
}

/// Self-contained tree encoding: gamma-coded `n + 1`, a selector bit, then
/// either the subtree-size code (selector 0) or the Zaks sequence without its
/// final, always-zero bit (selector 1), whichever is shorter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCode {
    n: usize,
    header_len: usize,
    zaks: bool,
    bits: RawBits,
}

impl TreeCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bit_len(&self) -> usize {
        self.bits.len()
    }

    /// Node-count header plus selector bit.
    pub fn header_len(&self) -> usize {
        self.header_len
    }

    pub fn uses_zaks(&self) -> bool {
        self.zaks
    }

    pub fn bits(&self) -> &RawBits {
        &self.bits
    }

    pub fn payload(&self) -> RawBits {
        let mut p = RawBits::new();
        for i in self.header_len..self.bits.len() {
            p.push(self.bits.get(i));
        }
        p
    }

    /// Byte form: LEB128 byte count, then the bits MSB-first, zero-padded.
    pub fn to_bytes(&self) -> Vec<u8> {
        let nbytes = self.bits.len().div_ceil(8);
        let mut out = Vec::with_capacity(nbytes + 10);
        let mut len = nbytes as u64;
        loop {
            let b = (len & 0x7f) as u8;
            len >>= 7;
            if len == 0 {
                out.push(b);
                break;
            }
            out.push(b | 0x80);
        }
        let mut cur = 0u8;
        for i in 0..self.bits.len() {
            cur |= u8::from(self.bits.get(i)) << (7 - i % 8);
            if i % 8 == 7 {
                out.push(cur);
                cur = 0;
            }
        }
        if self.bits.len() % 8 != 0 {
            out.push(cur);
        }
        out
    }

    /// Parses the byte form, rejecting anything [`TreeCode::to_bytes`] would not produce.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut len = 0u64;
        let mut at = 0;
        loop {
            let b = *bytes.get(at).ok_or_else(|| Error::Decode("truncated length prefix".into()))?;
            if at >= 9 {
                return Err(Error::Decode("length prefix too long".into()));
            }
            len |= u64::from(b & 0x7f) << (7 * at);
            at += 1;
            if b & 0x80 == 0 {
                break;
            }
        }
        let body = &bytes[at..];
        if body.len() as u64 != len {
            return Err(Error::Decode(format!("expected {len} payload bytes, found {}", body.len())));
        }
        let bits: RawBits = body.iter().flat_map(|&b| (0..8).rev().map(move |k| (b >> k) & 1 == 1)).collect();
        let t = decode_bits(&bits)?;
        let code = encode_hybrid(&t);
        let exact = code.bits.len();
        if exact.div_ceil(8) != body.len() || (0..exact).any(|i| code.bits.get(i) != bits.get(i)) || (exact..bits.len()).any(|i| bits.get(i)) {
            return Err(Error::Decode("non-canonical tree code".into()));
        }
        Ok(code)
    }
}

pub fn encode_hybrid(t: &BinaryTree) -> TreeCode {
    let n = t.len();
    let mut bits = RawBits::new();
    write_gamma(&mut bits, n as u64 + 1);
    let ac = encode_subtree_size(t);
    let zaks = ac.len() > 2 * n;
    bits.push(zaks);
    let header_len = bits.len();
    if zaks {
        let mut z = RawBits::new();
        write_zaks(&mut z, t);
        for i in 0..2 * n {
            bits.push(z.get(i));
        }
    } else {
        bits.extend_from(&ac);
    }
    TreeCode { n, header_len, zaks, bits }
}

/// Decodes a hybrid code, padding the body with zeros as needed.
fn decode_bits(bits: &RawBits) -> Result<BinaryTree> {
    let mut pos = 0;
    let n = (read_gamma(bits, &mut pos)? - 1) as usize;
    if pos >= bits.len() {
        return Err(Error::Decode("missing selector bit".into()));
    }
    let zaks = bits.get(pos);
    pos += 1;
    if !zaks {
        let mut body = RawBits::new();
        for i in pos..bits.len() {
            body.push(bits.get(i));
        }
        // every internal node costs at least one bit and at least (n-1)/2 nodes are internal
        if n > 4 * body.len() + 8 {
            return Err(Error::Decode(format!("node count {n} too large for {} body bits", body.len())));
        }
        return Ok(decode_subtree_size(&body, n));
    }
    if bits.len() < pos + 2 * n {
        return Err(Error::Decode("truncated Zaks body".into()));
    }
    let mut body = RawBits::new();
    for i in pos..pos + 2 * n {
        body.push(bits.get(i));
    }
    body.push(false);
    let mut p = 0;
    let t = read_zaks(&body, &mut p)?;
    if p != body.len() || t.len() != n {
        return Err(Error::Decode("Zaks body does not match node count".into()));
    }
    Ok(t)
}

/// Decodes a code produced by [`encode_hybrid`]; any other bit string is rejected.
pub fn decode(code: &TreeCode) -> Result<BinaryTree> {
    decode_hybrid_bits(&code.bits)
}

pub fn decode_hybrid_bits(bits: &RawBits) -> Result<BinaryTree> {
    let t = decode_bits(bits)?;
    if &encode_hybrid(&t).bits != bits {
        return Err(Error::Decode("bit string is not a valid tree code".into()));
    }
    Ok(t)
}
