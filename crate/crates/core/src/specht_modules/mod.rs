//! Permutation modules `M^ν`, polytabloids and Specht modules with their standard bases.

mod action;
mod basis;
mod polytabloid;
mod record;
mod representation;
mod series;
mod tabloid_module;

use crate::combinatorics::Tabloid;
use crate::exact_algebra::SparseVector;

/// An element of a permutation module: a finite combination of tabloids.
pub type ModuleVector<E> = SparseVector<Tabloid, E>;

pub use action::{act_jm, act_permutation, TranspositionSum};
pub use basis::SpechtBasis;
pub(crate) use polytabloid::column_signed_terms;
pub use polytabloid::{column_antisymmetrize, polytabloid};
pub use record::{vector_from_record, vector_record, VectorEntry};
pub use representation::{InducedModule, MatrixRepresentation};
pub use series::{SeriesLayer, SpechtSeries};
pub use tabloid_module::TabloidModule;
