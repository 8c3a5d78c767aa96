//! Tree covering: a two-tier partition into mini and micro trees, node
//! addresses (τ-names), preorder and inorder rank/select, and LCA.

mod cover;
mod decompose;
mod params;
mod tb;

pub use cover::{decompose_nested, CoverSpace, TauName, TreeCover};
pub use decompose::{decompose, decompose_with, Decomposition};
pub use params::{CoverParams, MAX_MICRO_B};
