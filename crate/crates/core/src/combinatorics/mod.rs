//! Partitions, tableaux, tabloids, residues and one-box-shift combinatorics.

pub mod core;
pub mod partition;
pub mod permutation;
pub mod shift;
pub mod tableau;
pub mod tabloid;

pub use self::core::{p_core, p_weight};
pub use partition::{partitions_of, reduce_residue, Composition, Node, Partition};
pub use permutation::Permutation;
pub use shift::{one_box_shift, OneBoxShift, SemistandardSet};
pub use tableau::{semistandard_tableaux, standard_tableaux, Tableau};
pub use tabloid::{tabloids_of, Tabloid};
