//! Binary trees, Cartesian trees and the entropy measures over their shapes.

mod build;
mod entropy;
mod format;
pub mod shapes;
mod tree;

pub use build::{build_cartesian, sample_random_bst, sample_with, stable_ranks};
pub use entropy::{log2_inverse_probability, model_entropy, model_entropy_table, shape_probability, subtree_entropy, EntropyReport};
pub use format::{parse_left_sizes, parse_shape_string, to_left_sizes_string, to_shape_string};
pub use tree::BinaryTree;
pub(crate) use tree::NONE;

#[cfg(test)]
mod tests;
