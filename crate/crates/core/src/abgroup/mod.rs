//! Finitely presented abelian groups.
//!
//! All grading groups in the crate (`Z²`, the universal group, the quotients
//! by root-degree relations) are instances of [`AbGroup`]. Elements are
//! compared through the Smith normal form of the relator matrix.

mod group;
mod hom;
mod matrix;

pub use group::{generates_whole_group, quotient, AbGroup, GenerationCertificate, GroupElement};
pub use hom::Hom;
pub use matrix::{smith_normal_form, IntMatrix, SmithForm};

use alloc::sync::Arc;


/// Whether the row lattice of `b` contains every row of `a`.
pub fn row_space_contains(b: &IntMatrix, a: &IntMatrix) -> crate::Result<bool> {
    let n = b.cols();
    let g: Arc<AbGroup> = AbGroup::new((0..n).map(|i| alloc::format!("x{i}")).collect(), b.clone())?;
    for row in a.row_vecs() {
        if !GroupElement::new(&g, row)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two integer row lattices in the same ambient space coincide.
pub fn same_row_space(a: &IntMatrix, b: &IntMatrix) -> crate::Result<bool> {
    Ok(row_space_contains(a, b)? && row_space_contains(b, a)?)
}

