use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::tree::{BinaryTree, NONE};

/// Cartesian tree of `keys`: the root holds the leftmost minimum, its left and
/// right subtrees are the Cartesian trees of the parts before and after it.
///
/// Inorder rank `i` (0-based) corresponds to `keys[i]`.
pub fn build_cartesian<T: Ord>(keys: &[T]) -> BinaryTree {
    let n = keys.len();
    if n == 0 {
        return BinaryTree::empty();
    }
    assert!(n < NONE as usize, "array too large");
    let mut left = vec![NONE; n];
    let mut right = vec![NONE; n];
    let mut stack: Vec<u32> = Vec::new();
    for i in 0..n {
        let mut last = NONE;
        // strict comparison keeps an earlier equal key above later ones
        while let Some(&top) = stack.last() {
            if keys[top as usize] > keys[i] {
                last = stack.pop().unwrap();
            } else {
                break;
            }
        }
        left[i] = last;
        if let Some(&top) = stack.last() {
            right[top as usize] = i as u32;
        }
        stack.push(i as u32);
    }
    BinaryTree::relabel(&left, &right, stack[0] as usize)
}

/// Replaces keys by their ranks `0..n`; equal keys are ranked by position.
pub fn stable_ranks<T: Ord>(keys: &[T]) -> Vec<u32> {
    let mut idx: Vec<u32> = (0..keys.len() as u32).collect();
    idx.sort_by(|&a, &b| keys[a as usize].cmp(&keys[b as usize]));
    let mut rank = vec![0u32; keys.len()];
    for (r, &i) in idx.iter().enumerate() {
        rank[i as usize] = r as u32;
    }
    rank
}

/// Cartesian tree of a uniformly random permutation, i.e. a random BST shape.
pub fn sample_random_bst(n: usize, seed: u64) -> BinaryTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(n, &mut rng)
}

pub fn sample_with<R: rand::Rng>(n: usize, rng: &mut R) -> BinaryTree {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(rng);
    build_cartesian(&perm)
}
