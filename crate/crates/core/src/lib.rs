//! First Hochschild cohomology of modular group algebras and their blocks.

pub mod error;
pub mod par;
pub mod perm;
pub mod permgroup;

pub use error::{Error, Result};
pub use perm::Perm;
pub use permgroup::{PermGroup, Subgroup};
pub mod fplinalg;
pub mod groupalgebra;
pub mod derivations;
pub mod engine;
pub mod liealg;
pub mod cyclicblocks;
pub mod chains;
