//! The group algebra `F_p G`: centre, blocks, Brauer map, block algebras
//! and the Jacobson radical of small algebras.

mod algebra;
mod blocks;
mod brauer;
mod center;
mod radical;
mod split;

pub use algebra::{AlgebraPresentation, SOLVER_CAP};
pub use blocks::{
    block_idempotents, check_idempotents, fp_dimension, section_sums, BlockDecomposition, BlockRecord, DEFAULT_SEED,
};
pub use brauer::{brauer_defect_order, brauer_map, restrict_to, to_central, GroupElem};
pub use center::{CenterTable, CommAlgebra};
pub use radical::{radical, radical_and_semisimple, RadicalData, RADICAL_CAP};
pub use split::{component_count, ideal_basis, primitive_idempotents, residue_degree};

use crate::error::Result;
use crate::permgroup::PermGroup;

pub fn center_table(g: &PermGroup, p: u32) -> Result<CenterTable> {
    CenterTable::build(g, p)
}
