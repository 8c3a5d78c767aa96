pub mod cartesian;
pub mod error;
pub mod io;
pub mod micro_codec;
pub mod ops;
pub mod primitives;
pub mod rmq;
pub mod tree_code;
pub mod tree_cover;

pub use error::{Error, Result};
