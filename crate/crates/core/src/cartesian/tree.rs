use crate::error::{Error, Result};

pub(crate) const NONE: u32 = u32::MAX;

/// Static binary tree without pointers: child and parent index arrays.
///
/// Node ids are 0-based preorder ranks, so node `0` is the root. Inorder
/// ranks, subtree sizes and parents are derived at construction.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BinaryTree {
    left: Vec<u32>,
    right: Vec<u32>,
    parent: Vec<u32>,
    st: Vec<u32>,
    inorder: Vec<u32>,
    by_inorder: Vec<u32>,
}

#[inline]
fn opt(x: u32) -> Option<usize> {
    (x != NONE).then_some(x as usize)
}

impl BinaryTree {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a tree from child arrays over arbitrary ids `0..n` (`None` = no child).
    ///
    /// Fails unless the arrays describe exactly one tree containing every id.
    pub fn from_children(left: &[Option<usize>], right: &[Option<usize>]) -> Result<Self> {
        let n = left.len();
        if right.len() != n {
            return Err(Error::Build("child arrays differ in length".into()));
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        if n >= NONE as usize {
            return Err(Error::Build("tree too large".into()));
        }
        let mut has_parent = vec![false; n];
        for c in left.iter().chain(right.iter()).flatten() {
            if *c >= n {
                return Err(Error::Build(format!("child id {c} out of range")));
            }
            if std::mem::replace(&mut has_parent[*c], true) {
                return Err(Error::Build(format!("node {c} has two parents")));
            }
        }
        let roots: Vec<usize> = (0..n).filter(|&v| !has_parent[v]).collect();
        if roots.len() != 1 {
            return Err(Error::Build(format!("expected exactly one root, found {}", roots.len())));
        }
        let l: Vec<u32> = left.iter().map(|c| c.map_or(NONE, |x| x as u32)).collect();
        let r: Vec<u32> = right.iter().map(|c| c.map_or(NONE, |x| x as u32)).collect();
        let t = Self::relabel(&l, &r, roots[0]);
        if t.len() != n {
            return Err(Error::Build("child arrays contain a cycle".into()));
        }
        Ok(t)
    }

    /// Relabels a tree given by child arrays (ids arbitrary, `NONE` = no child) into preorder ids.
    pub(crate) fn relabel(left: &[u32], right: &[u32], root: usize) -> Self {
        let n = left.len();
        let mut new_id = vec![NONE; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root as u32];
        while let Some(v) = stack.pop() {
            if new_id[v as usize] != NONE {
                continue;
            }
            new_id[v as usize] = order.len() as u32;
            order.push(v);
            if right[v as usize] != NONE {
                stack.push(right[v as usize]);
            }
            if left[v as usize] != NONE {
                stack.push(left[v as usize]);
            }
        }
        let map = |x: u32| if x == NONE { NONE } else { new_id[x as usize] };
        let l: Vec<u32> = order.iter().map(|&v| map(left[v as usize])).collect();
        let r: Vec<u32> = order.iter().map(|&v| map(right[v as usize])).collect();
        Self::from_preorder_children(l, r)
    }

    /// `left`/`right` already use preorder ids.
    pub(crate) fn from_preorder_children(left: Vec<u32>, right: Vec<u32>) -> Self {
        let n = left.len();
        let mut parent = vec![NONE; n];
        for v in 0..n {
            for c in [left[v], right[v]] {
                if c != NONE {
                    parent[c as usize] = v as u32;
                }
            }
        }
        // children have larger preorder ids, so a reverse sweep sees them first
        let mut st = vec![1u32; n];
        for v in (0..n).rev() {
            if parent[v] != NONE {
                st[parent[v] as usize] += st[v];
            }
        }
        // inorder(v) = preorder(v) + ls(v) - leftdepth(v), all 0-based
        let mut ld = vec![0u32; n];
        let mut inorder = vec![0u32; n];
        let mut by_inorder = vec![0u32; n];
        for v in 0..n {
            if parent[v] != NONE {
                let p = parent[v] as usize;
                ld[v] = ld[p] + u32::from(left[p] == v as u32);
            }
            let ls = if left[v] == NONE { 0 } else { st[left[v] as usize] };
            inorder[v] = v as u32 + ls - ld[v];
            by_inorder[inorder[v] as usize] = v as u32;
        }
        Self {
            left,
            right,
            parent,
            st,
            inorder,
            by_inorder,
        }
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        (!self.is_empty()).then_some(0)
    }

    #[inline]
    pub fn left(&self, v: usize) -> Option<usize> {
        opt(self.left[v])
    }

    #[inline]
    pub fn right(&self, v: usize) -> Option<usize> {
        opt(self.right[v])
    }

    #[inline]
    pub fn parent(&self, v: usize) -> Option<usize> {
        opt(self.parent[v])
    }

    /// Subtree size.
    #[inline]
    pub fn st(&self, v: usize) -> usize {
        self.st[v] as usize
    }

    /// Left subtree size.
    #[inline]
    pub fn ls(&self, v: usize) -> usize {
        self.left(v).map_or(0, |c| self.st(c))
    }

    /// 0-based inorder rank of node `v`.
    #[inline]
    pub fn inorder(&self, v: usize) -> usize {
        self.inorder[v] as usize
    }

    /// Node with 0-based inorder rank `i`.
    #[inline]
    pub fn node_at_inorder(&self, i: usize) -> usize {
        self.by_inorder[i] as usize
    }

    /// Number of left-child edges on the path from the root to each node.
    pub fn left_depths(&self) -> Vec<u32> {
        let mut ld = vec![0u32; self.len()];
        for v in 1..self.len() {
            let p = self.parent[v] as usize;
            ld[v] = ld[p] + u32::from(self.left[p] == v as u32);
        }
        ld
    }

    pub fn depths(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.len()];
        for v in 1..self.len() {
            d[v] = d[self.parent[v] as usize] + 1;
        }
        d
    }

    /// Left subtree sizes in preorder.
    pub fn left_sizes(&self) -> Vec<usize> {
        (0..self.len()).map(|v| self.ls(v)).collect()
    }

    /// Rebuilds a tree from its preorder left-size listing.
    pub fn from_left_sizes(ls: &[usize]) -> Result<Self> {
        let n = ls.len();
        let mut left = vec![NONE; n];
        let mut right = vec![NONE; n];
        // (node, subtree size) still to be expanded
        let mut stack: Vec<(usize, usize)> = Vec::new();
        if n > 0 {
            stack.push((0, n));
        }
        // preorder: node v's left child is v+1, right child is v+1+ls(v)
        while let Some((v, size)) = stack.pop() {
            let l = ls[v];
            if l >= size {
                return Err(Error::Decode(format!("left size {l} at node {v} exceeds subtree size {size}")));
            }
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
        Ok(Self::from_preorder_children(left, right))
    }

    /// Lowest common ancestor by walking parent pointers (reference implementation).
    pub fn lca_by_climbing(&self, depths: &[u32], mut u: usize, mut v: usize) -> usize {
        while depths[u] > depths[v] {
            u = self.parent[u] as usize;
        }
        while depths[v] > depths[u] {
            v = self.parent[v] as usize;
        }
        while u != v {
            u = self.parent[u] as usize;
            v = self.parent[v] as usize;
        }
        u
    }

    pub fn is_ancestor(&self, a: usize, v: usize) -> bool {
        a <= v && v < a + self.st(a)
    }
}
