//! Text interchange for tree shapes.
//!
//! Shape strings: a node is `(` left right `)`, an empty subtree is `.`.
//! So a single node is `(..)` and a root with only a left child is `((..).)`.
//! Left-size listings: preorder left-subtree sizes separated by spaces.

use super::tree::{BinaryTree, NONE};
use crate::error::{Error, Result};

pub fn to_shape_string(t: &BinaryTree) -> String {
    enum Item {
        Node(usize),
        Empty,
        Close,
    }
    let mut out = String::with_capacity(3 * t.len() + 1);
    let mut stack = vec![t.root().map_or(Item::Empty, Item::Node)];
    while let Some(item) = stack.pop() {
        match item {
            Item::Empty => out.push('.'),
            Item::Close => out.push(')'),
            Item::Node(v) => {
                out.push('(');
                stack.push(Item::Close);
                stack.push(t.right(v).map_or(Item::Empty, Item::Node));
                stack.push(t.left(v).map_or(Item::Empty, Item::Node));
            }
        }
    }
    out
}

pub fn parse_shape_string(s: &str) -> Result<BinaryTree> {
    let s: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    let bad = |pos: usize, msg: &str| Error::Format(format!("shape string at {pos}: {msg}"));
    let mut left = Vec::new();
    let mut right = Vec::new();
    // open nodes with the number of child slots already filled
    let mut open: Vec<(usize, u8)> = Vec::new();
    let mut done = false;
    let attach = |open: &mut Vec<(usize, u8)>, left: &mut Vec<u32>, right: &mut Vec<u32>, child: u32| -> bool {
        match open.last_mut() {
            None => false,
            Some((p, filled)) => {
                if *filled == 0 {
                    left[*p] = child;
                } else {
                    right[*p] = child;
                }
                *filled += 1;
                true
            }
        }
    };
    for (pos, &c) in s.iter().enumerate() {
        if done {
            return Err(bad(pos, "trailing input"));
        }
        if matches!(open.last(), Some((_, 2))) && c != b')' {
            return Err(bad(pos, "node has more than two children"));
        }
        match c {
            b'(' => {
                let v = left.len();
                left.push(NONE);
                right.push(NONE);
                attach(&mut open, &mut left, &mut right, v as u32);
                open.push((v, 0));
            }
            b'.' => {
                if !attach(&mut open, &mut left, &mut right, NONE) {
                    done = true;
                }
            }
            b')' => match open.pop() {
                Some((_, 2)) => done = open.is_empty(),
                _ => return Err(bad(pos, "node needs exactly two slots")),
            },
            _ => return Err(bad(pos, "unexpected character")),
        }
    }
    if !done {
        return Err(bad(s.len(), "unexpected end"));
    }
    // nodes were numbered in preorder as they opened
    Ok(BinaryTree::from_preorder_children(left, right))
}

pub fn to_left_sizes_string(t: &BinaryTree) -> String {
    t.left_sizes().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_left_sizes(s: &str) -> Result<BinaryTree> {
    let ls = s
        .split_whitespace()
        .map(|w| w.parse::<usize>().map_err(|e| Error::Format(format!("left size {w:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    BinaryTree::from_left_sizes(&ls)
}
