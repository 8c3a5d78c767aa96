//! Tree shape codes: the subtree-size arithmetic code, Zaks sequences, and
//! the self-delimiting hybrid of the two.

mod arith;
mod code;
mod gamma;
mod zaks;

pub use arith::{ArithDecoder, ArithEncoder, MAX_ALPHABET};
pub use code::{
    decode, decode_hybrid_bits, decode_left_sizes, decode_subtree_size, encode_hybrid, encode_left_sizes,
    encode_subtree_size, TreeCode,
};
pub use gamma::{gamma_len, read_gamma, write_gamma};
pub use zaks::{decode_zaks, encode_zaks, read_zaks, write_zaks};
pub(crate) use zaks::read_zaks_limited;

#[cfg(test)]
mod tests;
