//! Kronecker coefficients, reduced Kronecker coefficients and the `B`
//! generating function over three alphabets.

pub mod bounds;
pub mod error;
pub mod genfunc;
pub mod kronecker;
pub mod par;
pub mod partitions;
pub mod stability;
pub mod symfunc;
pub mod tables;

pub use error::{KronError, Result};
pub use par::Execution;
pub use partitions::Partition;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
