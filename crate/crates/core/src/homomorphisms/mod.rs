//! Homomorphisms between Specht and permutation modules: semistandard maps, the one-box-shift
//! maps and their Jucys–Murphy construction.

mod carter_payne;
mod endo;
mod hom_matrix;
mod hom_space;
mod relations;
mod semistandard;

pub use carter_payne::{
    carter_payne_jm, compose_cp_chain, divisible_by, jm_layers, proportionality, row_reading_image,
    CarterPayneMap, CoefficientTerm, CoefficientVector, JmMap,
};
pub use endo::{endo_ring_induced, endo_ring_restriction, EndoAnalysis, EndoBlock};
pub use hom_matrix::{HomMatrix, HomMatrixRecord, ModuleDescriptor};
pub use hom_space::{hom_space, intertwiners, intertwiners_direct, HomSpace};
pub use relations::{
    predicted_psi_image, solve_coefficients, verify_coefficients, verify_relations, RelationReport,
};
pub use semistandard::{
    psi_apply, psi_matrix, psi_target, specht_membership, theta_image, theta_on_tabloid, theta_t,
};
