use std::fmt;

use crate::cartesian::BinaryTree;
use crate::error::{Error, Result};
use crate::ops;
use crate::primitives::RawBits;
use crate::tree_code::{read_zaks, write_zaks};

/// Largest micro tree (portal leaves included) whose Zaks key fits in 128 bits.
pub const MAX_MICRO_NODES: usize = 63;

/// Shape of a micro tree, keyed by its Zaks sequence (bit `i` of `bits` is
/// the `i`-th emitted bit).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MicroType {
    len: u8,
    bits: u128,
}

impl MicroType {
    pub fn of(t: &BinaryTree) -> Result<Self> {
        if t.len() > MAX_MICRO_NODES {
            return Err(Error::Build(format!("micro tree of {} nodes exceeds {MAX_MICRO_NODES}", t.len())));
        }
        let mut z = RawBits::new();
        write_zaks(&mut z, t);
        Ok(Self::from_bits(&z))
    }

    pub(crate) fn from_bits(z: &RawBits) -> Self {
        Self {
            len: z.len() as u8,
            bits: z.get_u128(0, z.len()),
        }
    }

    pub fn from_key(len: usize, bits: u128) -> Result<Self> {
        let t = Self { len: len as u8, bits };
        if len > 2 * MAX_MICRO_NODES + 1 || (len < 128 && bits >> len != 0) {
            return Err(Error::Decode("malformed micro type key".into()));
        }
        // must be exactly one complete Zaks sequence
        let z = t.to_bits();
        let mut pos = 0;
        read_zaks(&z, &mut pos)?;
        if pos != len {
            return Err(Error::Decode("micro type key has trailing bits".into()));
        }
        Ok(t)
    }

    pub fn key(&self) -> (usize, u128) {
        (self.len as usize, self.bits)
    }

    pub fn nodes(&self) -> usize {
        (self.len as usize - 1) / 2
    }

    pub fn to_bits(&self) -> RawBits {
        (0..self.len as usize).map(|i| (self.bits >> i) & 1 == 1).collect()
    }

    pub fn shape(&self) -> BinaryTree {
        let mut pos = 0;
        read_zaks(&self.to_bits(), &mut pos).expect("keys are valid Zaks sequences")
    }
}

impl fmt::Display for MicroType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bits().to_string01())
    }
}

/// Precomputed answers for one micro-tree shape. Nodes are 0-based local preorder ids.
#[derive(Clone, Debug)]
pub struct MicroTables {
    n: usize,
    st: Vec<u8>,
    ls: Vec<u8>,
    left_depth: Vec<u8>,
    pre_to_in: Vec<u8>,
    in_to_pre: Vec<u8>,
    lca: Vec<u8>,
}

impl MicroTables {
    pub fn new(t: &BinaryTree) -> Self {
        let n = t.len();
        assert!(n <= MAX_MICRO_NODES);
        let d = t.depths();
        let mut lca = vec![0u8; n * n];
        for u in 0..n {
            for v in 0..n {
                lca[u * n + v] = t.lca_by_climbing(&d, u, v) as u8;
            }
        }
        Self {
            n,
            st: (0..n).map(|v| t.st(v) as u8).collect(),
            ls: (0..n).map(|v| t.ls(v) as u8).collect(),
            left_depth: t.left_depths().into_iter().map(|x| x as u8).collect(),
            pre_to_in: (0..n).map(|v| t.inorder(v) as u8).collect(),
            in_to_pre: (0..n).map(|i| t.node_at_inorder(i) as u8).collect(),
            lca,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn st(&self, v: usize) -> usize {
        ops::tick(1);
        self.st[v] as usize
    }

    #[inline]
    pub fn ls(&self, v: usize) -> usize {
        ops::tick(1);
        self.ls[v] as usize
    }

    #[inline]
    pub fn left_depth(&self, v: usize) -> usize {
        ops::tick(1);
        self.left_depth[v] as usize
    }

    #[inline]
    pub fn inorder(&self, v: usize) -> usize {
        ops::tick(1);
        self.pre_to_in[v] as usize
    }

    #[inline]
    pub fn node_at_inorder(&self, i: usize) -> usize {
        ops::tick(1);
        self.in_to_pre[i] as usize
    }

    #[inline]
    pub fn lca(&self, u: usize, v: usize) -> usize {
        ops::tick(1);
        self.lca[u * self.n + v] as usize
    }

    pub fn size_bits(&self) -> usize {
        8 * (5 * self.n + self.n * self.n)
    }
}
