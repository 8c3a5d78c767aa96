//! Bottom-up packing of a binary tree into connected components.
//!
//! Nodes are visited children-first. Each node starts a component and
//! absorbs the still-open component of a child unless that component already
//! has two outgoing edges, or the edge to the child is cut. A component is
//! closed once it reaches `b` nodes, at the root, and above any cut edge.
//! Open components stay below `b` nodes, so closed ones have at most
//! `2b - 1`; each side of a component root carries at most one outgoing edge.

use crate::cartesian::{BinaryTree, NONE};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    b: usize,
    comp_of: Vec<u32>,
    roots: Vec<u32>,
    portals: Vec<[u32; 2]>,
}

impl Decomposition {
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Component of node `v`; components are numbered by the preorder of their roots.
    pub fn component_of(&self, v: usize) -> usize {
        self.comp_of[v] as usize
    }

    pub fn root(&self, c: usize) -> usize {
        self.roots[c] as usize
    }

    /// Root of the child component hanging off the left (`side = 0`) or
    /// right (`side = 1`) subtree of component `c`'s root.
    pub fn portal(&self, c: usize, side: usize) -> Option<usize> {
        let p = self.portals[c][side];
        (p != NONE).then_some(p as usize)
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.len()];
        for &c in &self.comp_of {
            s[c as usize] += 1;
        }
        s
    }

    /// Checks the partition properties directly from the tree, independently
    /// of how the partition was produced: every component is a connected
    /// subtree of at most `2b` nodes, with at most one outgoing edge into each
    /// subtree of its root, so contracting components yields a binary tree.
    pub fn verify(&self, t: &BinaryTree) -> Result<()> {
        let n = t.len();
        let bad = |m: String| Err(Error::Build(format!("decomposition: {m}")));
        if self.comp_of.len() != n {
            return bad("node count mismatch".into());
        }
        let k = self.roots.len();
        if self.comp_of.iter().any(|&c| c as usize >= k) {
            return bad("component id out of range".into());
        }
        let mut size = vec![0usize; k];
        let mut root_of = vec![usize::MAX; k];
        for v in 0..n {
            let c = self.comp_of[v] as usize;
            size[c] += 1;
            let top = t.parent(v).is_none_or(|p| self.comp_of[p] as usize != c);
            if top {
                if root_of[c] != usize::MAX {
                    return bad(format!("component {c} is not connected"));
                }
                root_of[c] = v;
            }
        }
        for c in 0..k {
            if size[c] == 0 {
                return bad(format!("component {c} is empty"));
            }
            if size[c] > 2 * self.b {
                return bad(format!("component {c} has {} > {} nodes", size[c], 2 * self.b));
            }
            if root_of[c] != self.roots[c] as usize {
                return bad(format!("component {c} root mismatch"));
            }
        }
        let mut out = vec![[0usize; 2]; k];
        for v in 0..n {
            let Some(p) = t.parent(v) else { continue };
            let c = self.comp_of[p] as usize;
            if self.comp_of[v] as usize == c {
                continue;
            }
            let r = root_of[c];
            let side = usize::from(v > r + t.ls(r));
            out[c][side] += 1;
            if self.portals[c][side] != v as u32 {
                return bad(format!("component {c} portal table disagrees with tree"));
            }
        }
        for c in 0..k {
            if out[c][0] > 1 || out[c][1] > 1 {
                return bad(format!("component {c} has {:?} outgoing edges per side", out[c]));
            }
            for side in 0..2 {
                if out[c][side] == 0 && self.portals[c][side] != NONE {
                    return bad(format!("component {c} lists a portal that does not exist"));
                }
            }
        }
        Ok(())
    }
}

/// Partitions `t` into components of at most `2b - 1` nodes.
pub fn decompose(t: &BinaryTree, b: usize) -> Decomposition {
    decompose_with(t, b, |_, _| false)
}

/// Like [`decompose`], but edges `(parent, child)` with `cut(parent, child)`
/// never lie inside a component.
pub fn decompose_with(t: &BinaryTree, b: usize, cut: impl Fn(usize, usize) -> bool) -> Decomposition {
    assert!(b >= 1);
    let n = t.len();
    let mut size = vec![0u32; n];
    let mut out = vec![0u8; n];
    let mut closed = vec![false; n];
    for v in (0..n).rev() {
        let mut s = 1u32;
        let mut o = 0u8;
        for c in [t.left(v), t.right(v)].into_iter().flatten() {
            if closed[c] || out[c] >= 2 || cut(v, c) {
                closed[c] = true;
                o += 1;
            } else {
                s += size[c];
                o += out[c];
            }
        }
        size[v] = s;
        out[v] = o;
        if s as usize >= b || t.parent(v).is_none_or(|p| cut(p, v)) {
            closed[v] = true;
        }
    }
    let mut comp_of = vec![0u32; n];
    let mut roots = Vec::new();
    for v in 0..n {
        if closed[v] {
            comp_of[v] = roots.len() as u32;
            roots.push(v as u32);
        } else {
            comp_of[v] = comp_of[t.parent(v).unwrap()];
        }
    }
    let mut portals = vec![[NONE; 2]; roots.len()];
    for &c in roots.iter().skip(1) {
        let p = t.parent(c as usize).unwrap();
        let pc = comp_of[p] as usize;
        let r = roots[pc] as usize;
        let side = usize::from(c as usize > r + t.ls(r));
        debug_assert_eq!(portals[pc][side], NONE);
        portals[pc][side] = c;
    }
    Decomposition {
        b,
        comp_of,
        roots,
        portals,
    }
}
