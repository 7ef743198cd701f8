//! Strong power graphs of finite groups, their closed-form invariants, and
//! independent oracles to check them against.

pub mod bitset;
pub mod combinatorics;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod group;
pub mod groupspec;
pub mod linalg;
pub mod permanent;
pub mod spectral;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
