pub mod combinatorics;
pub mod error;
pub mod exact_algebra;
pub mod homomorphisms;
pub mod jantzen;
pub mod limits;
pub mod specht_modules;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/specht-modules.md")]
    mod specht_modules {}
    #[doc = include_str!("../../../book/src/one-box-maps.md")]
    mod one_box_maps {}
    #[doc = include_str!("../../../book/src/endomorphisms.md")]
    mod endomorphisms {}
    #[doc = include_str!("../../../book/src/jantzen.md")]
    mod jantzen {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
