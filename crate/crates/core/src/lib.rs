//! Exact kernel for finite matroids given by rank tables over all subsets of
//! the ground set. Decides transversality and fundamentality from the lattice
//! of cyclic flats, producing presentations or violated inequalities as
//! certificates, and builds duals and free products with their invariants.
//!
//! Everything is exact integer arithmetic; no floats anywhere. Ground sets are
//! indexed 0..n and subsets are bitmasks, so tables have 2^n entries.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructions;
pub mod cyclic;
pub mod error;
pub mod fundamental;
pub mod mason;
pub mod matroid;
pub mod oracle;
pub mod setsystem;
pub mod subset;
pub mod transversal;

pub use error::Error;
pub use matroid::{BuildOptions, Matroid};
pub use setsystem::SetSystem;
pub use subset::Subset;
