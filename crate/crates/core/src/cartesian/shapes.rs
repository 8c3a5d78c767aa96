//! Small tree families used in tests and adversarial benchmarks.

use super::build::build_cartesian;
use super::tree::BinaryTree;

/// Every binary tree shape with exactly `n` nodes, in a fixed order.
pub fn all_shapes(n: usize) -> Vec<BinaryTree> {
    all_left_size_lists(n)
        .into_iter()
        .map(|ls| BinaryTree::from_left_sizes(&ls).expect("valid listing"))
        .collect()
}

fn all_left_size_lists(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for l in 0..n {
        let ls = all_left_size_lists(l);
        let rs = all_left_size_lists(n - 1 - l);
        for a in &ls {
            for b in &rs {
                let mut v = Vec::with_capacity(n);
                v.push(l);
                v.extend_from_slice(a);
                v.extend_from_slice(b);
                out.push(v);
            }
        }
    }
    out
}

/// Increasing keys: every node is the right child of its predecessor.
pub fn right_path(n: usize) -> BinaryTree {
    build_cartesian(&(0..n as u32).collect::<Vec<_>>())
}

pub fn left_path(n: usize) -> BinaryTree {
    build_cartesian(&(0..n as u32).rev().collect::<Vec<_>>())
}

/// Path alternating left and right children.
pub fn zigzag(n: usize) -> BinaryTree {
    // keys 0, n-1, 1, n-2, ... put consecutive minima on alternating sides
    let mut keys = vec![0u32; n];
    let (mut lo, mut hi) = (0usize, n);
    for (k, rank) in (0..n as u32).enumerate() {
        if k % 2 == 0 {
            keys[lo] = rank;
            lo += 1;
        } else {
            hi -= 1;
            keys[hi] = rank;
        }
    }
    build_cartesian(&keys)
}

/// Perfectly balanced shape (complete when `n = 2^k - 1`).
pub fn balanced(n: usize) -> BinaryTree {
    fn fill(keys: &mut [u32], lo: usize, hi: usize, depth: u32) {
        if lo >= hi {
            return;
        }
        let mid = (lo + hi) / 2;
        keys[mid] = depth;
        fill(keys, lo, mid, depth + 1);
        fill(keys, mid + 1, hi, depth + 1);
    }
    let mut keys = vec![0u32; n];
    fill(&mut keys, 0, n, 0);
    build_cartesian(&keys)
}

/// Right spine where every spine node also has a single left leaf.
pub fn caterpillar(n: usize) -> BinaryTree {
    let keys: Vec<u32> = (0..n as u32).map(|i| if i % 2 == 0 { n as u32 + i } else { i }).collect();
    build_cartesian(&keys)
}
