//! Exact scalar domains and the linear algebra built on them.

pub mod decimal;
pub mod echelon;
pub mod matrix;
pub mod ring;
pub mod smith;
pub mod sparse;

pub use echelon::{kernel_basis, rank, solve, Echelon, Insertion, DENSE_FILL_THRESHOLD};
pub use matrix::ExactMatrix;
pub use ring::{is_prime, p_adic_valuation, Field, Integers, PrimeField, Rationals, Ring, Scalar};
pub use smith::{integer_solvable, smith_normal_form, smith_normal_form_with, SmithForm};
pub use sparse::SparseVector;
