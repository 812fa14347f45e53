//! Partition orders, transversal rewriting and greedy overcommutative
//! semigroup varieties.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory; the
//! `ocvar` binary exposes the same operations from the command line.

pub mod cli;
pub mod error;
pub mod partitions;
pub mod rewrite;
pub mod varieties;
pub mod verify;
pub mod words;

mod union_find;

pub use error::{Error, Result};
pub use partitions::{Partition, PartitionStats};
pub use rewrite::{DeductionTrace, Identity, IdentitySystem};
pub use varieties::VarietyPresentation;
pub use words::Word;
