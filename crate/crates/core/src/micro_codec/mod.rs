//! Micro-tree types and their encodings: Zaks keys, the bounded entropy
//! code, Huffman codebooks, and the lazily built per-type lookup tables.

mod codebook;
mod entropy_code;
mod huffman;
mod type_array;
mod types;

pub use codebook::{CodecMode, Codebook};
pub use entropy_code::{decode_micro_entropy, encode_micro_entropy};
pub use huffman::{canonical_codes, huffman_lengths, kraft_sum};
pub use type_array::TypeArray;
pub use types::{MicroTables, MicroType, MAX_MICRO_NODES};

#[cfg(test)]
mod tests;
