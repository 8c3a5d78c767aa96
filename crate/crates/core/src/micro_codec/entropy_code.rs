//! Bounded-size entropy code for micro-tree shapes.
//!
//! One selector bit, then either the Zaks sequence (selector 1) or a single
//! arithmetic-coded stream (selector 0) holding the node count, uniform over
//! `1..=max_nodes`, followed by the preorder left-subtree sizes. The cheaper
//! branch is chosen. Both branches are prefix-free, so the whole code is.

use crate::cartesian::BinaryTree;
use crate::error::{Error, Result};
use crate::primitives::RawBits;
use crate::tree_code::{decode_left_sizes, encode_left_sizes, read_zaks_limited, write_zaks, ArithDecoder, ArithEncoder};

pub fn encode_micro_entropy(t: &BinaryTree, max_nodes: usize) -> RawBits {
    let n = t.len();
    assert!((1..=max_nodes).contains(&n), "micro tree size {n} outside 1..={max_nodes}");
    let mut enc = ArithEncoder::with_output(std::iter::once(false).collect());
    enc.encode(n as u64 - 1, max_nodes as u64);
    encode_left_sizes(&mut enc, t);
    let ac = enc.finish();
    if ac.len() <= 2 * n + 2 {
        return ac;
    }
    let mut z: RawBits = std::iter::once(true).collect();
    write_zaks(&mut z, t);
    z
}

pub fn decode_micro_entropy(bits: &RawBits, max_nodes: usize) -> Result<BinaryTree> {
    if bits.is_empty() {
        return Err(Error::Decode("empty micro code".into()));
    }
    if bits.get(0) {
        let mut pos = 1;
        let t = read_zaks_limited(bits, &mut pos, max_nodes)?;
        if pos != bits.len() || t.is_empty() {
            return Err(Error::Decode("malformed Zaks micro code".into()));
        }
        return Ok(t);
    }
    let mut dec = ArithDecoder::at(bits, 1);
    let n = dec.decode(max_nodes as u64) as usize + 1;
    Ok(decode_left_sizes(&mut dec, n))
}
