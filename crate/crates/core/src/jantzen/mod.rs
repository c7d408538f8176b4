//! The tabloid bilinear form, Gram matrices, Jantzen filtrations of Specht modules and the
//! containment of one-box-shift images in Jantzen submodules.

mod containment;
mod form;

pub use containment::{
    corrected_image, error_term, theta_tilde, verify_jantzen_containment, JantzenContainment,
};
pub use form::{
    bilinear_form, in_jantzen_by_decomposition, jantzen_dims_by_congruence, jantzen_filtration,
    max_valuation, GramMatrix, JantzenFiltration, JantzenLevel,
};
