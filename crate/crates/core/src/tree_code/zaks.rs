use crate::cartesian::{BinaryTree, NONE};
use crate::error::{Error, Result};
use crate::primitives::RawBits;

/// Preorder walk writing 1 per node and 0 per empty child slot, left first.
pub fn write_zaks(out: &mut RawBits, t: &BinaryTree) {
    // preorder ids make the node sequence trivial; only the empty slots need the walk
    let mut stack = vec![t.root()];
    while let Some(slot) = stack.pop() {
        match slot {
            None => out.push(false),
            Some(v) => {
                out.push(true);
                stack.push(t.right(v));
                stack.push(t.left(v));
            }
        }
    }
}

/// Zaks sequence of `t`, `2n + 1` bits.
pub fn encode_zaks(t: &BinaryTree) -> RawBits {
    let mut out = RawBits::new();
    write_zaks(&mut out, t);
    out
}

/// Reads one Zaks sequence starting at `*pos`, advancing past it.
pub fn read_zaks(bits: &RawBits, pos: &mut usize) -> Result<BinaryTree> {
    read_zaks_limited(bits, pos, usize::MAX)
}

pub(crate) fn read_zaks_limited(bits: &RawBits, pos: &mut usize, max_nodes: usize) -> Result<BinaryTree> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    // slots waiting for a subtree: (parent, is_right); the root slot has no parent
    let mut stack: Vec<(u32, bool)> = vec![(NONE, false)];
    while let Some((p, is_right)) = stack.pop() {
        if *pos >= bits.len() {
            return Err(Error::Decode("truncated Zaks sequence".into()));
        }
        let bit = bits.get(*pos);
        *pos += 1;
        if !bit {
            continue;
        }
        let v = left.len() as u32;
        if left.len() >= max_nodes {
            return Err(Error::Decode("Zaks sequence exceeds node limit".into()));
        }
        left.push(NONE);
        right.push(NONE);
        if p != NONE {
            if is_right {
                right[p as usize] = v;
            } else {
                left[p as usize] = v;
            }
        }
        stack.push((v, true));
        stack.push((v, false));
    }
    Ok(BinaryTree::from_preorder_children(left, right))
}

/// Decodes a complete Zaks sequence; trailing bits are an error.
pub fn decode_zaks(bits: &RawBits) -> Result<BinaryTree> {
    let mut pos = 0;
    let t = read_zaks(bits, &mut pos)?;
    if pos != bits.len() {
        return Err(Error::Decode(format!("{} bits after Zaks sequence", bits.len() - pos)));
    }
    Ok(t)
}
