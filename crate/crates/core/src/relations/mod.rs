//! The relation catalog, homogeneity checks and the derivation of the
//! universal grading from homogeneity constraints.
//!
//! Relations are stored as templates in `data/presentation.rel` and
//! expanded per realization. The verifier only ever sees the expanded
//! [`Relation`] values, so extra relations can be supplied at runtime.

mod catalog;
mod check;
mod derive;

pub use catalog::{build_catalog, expand_templates, forcing_probes, Relation, PRESENTATION};
pub use check::{
    check_homogeneity, jw_degree_check, jw_terms, pitchfork_degrees, term_degrees, verify_all,
    verify_catalog, HomogeneityReport, JwTerm, RelationReport, Witness,
};
pub use derive::{
    compare_lattices, derive_scalar_constraints, derive_universal, derive_universal_from,
    ConstraintSystem,
    DerivedEquation, IsoCertificate, LatticeComparison, UniversalGrading,
};
