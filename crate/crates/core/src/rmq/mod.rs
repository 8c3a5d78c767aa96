//! Range-minimum queries answered from the tree cover of the Cartesian tree,
//! plus two plain oracles for testing.

mod index;
mod oracle;

pub use index::RmqIndex;
pub use oracle::OracleRmq;

#[cfg(test)]
mod tests;
