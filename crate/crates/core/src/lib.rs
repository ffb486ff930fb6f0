//! Exact computations with the diagrammatic Hecke category of a Coxeter system.
//!
//! The crate models Soergel diagrams as stacks of horizontal slices, assigns
//! degrees to their generators in arbitrary finitely presented abelian groups,
//! checks that every relation of the presentation is homogeneous, derives the
//! universal grading group from those homogeneity constraints, and evaluates
//! degree-based rescalings `f ↦ χ(deg f)·f` for characters `χ` into the
//! nonzero rationals.
//!
//! Everything is exact: integers are arbitrary precision and polynomial
//! coefficients are arbitrary precision rationals. The crate is `no_std` and
//! only needs `alloc`.
//!
//! Module map:
//!
//! - [`coxeter`]: Coxeter systems, realizations, the polynomial ring with its
//!   reflection action and Demazure operators, gradings of `V`.
//! - [`abgroup`]: integer matrices, Smith normal form, presented abelian groups
//!   and homomorphisms between them.
//! - [`diagram`]: slice diagrams, the text format, crossingless matchings.
//! - [`grading`]: degree assignments and the standard gradings.
//! - [`relations`]: the relation catalog, the homogeneity verifier and the
//!   derivation of the universal grading.
//! - [`rescale`]: characters and degree-based rescalings.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abgroup;
pub mod coxeter;
pub mod diagram;
mod error;
pub mod grading;
pub mod relations;
pub mod rescale;

pub use abgroup::{AbGroup, GroupElement, Hom, IntMatrix, SmithForm};
pub use coxeter::{CoxeterEntry, CoxeterSystem, Polynomial, Realization, VGrading};
pub use diagram::{Atom, Diagram, Matching};
pub use error::{Error, Result};
pub use grading::{DegreeAssignment, DegreeModel, Generator};
pub use relations::{HomogeneityReport, Relation};
pub use rescale::Character;

/// Exact rational numbers used for polynomial coefficients and character values.
pub type Rational = num_rational::BigRational;

/// Index of a simple reflection (a "color") inside its [`CoxeterSystem`].
pub type Color = usize;
