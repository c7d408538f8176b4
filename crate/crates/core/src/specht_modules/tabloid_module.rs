use std::collections::HashMap;

use crate::combinatorics::{tabloids_of, Composition, Tabloid};
use crate::error::{Error, Result};
use crate::exact_algebra::{Ring, SparseVector};
use crate::limits::check_degree;

use super::ModuleVector;

/// The permutation module `M^ν` with its basis of `ν`-tabloids in canonical order.
#[derive(Debug, Clone)]
pub struct TabloidModule {
    shape: Composition,
    basis: Vec<Tabloid>,
    index: HashMap<Tabloid, usize>,
}

impl TabloidModule {
    pub fn new(shape: &Composition) -> Result<Self> {
        check_degree(shape.n())?;
        let basis = tabloids_of(shape);
        let index = basis.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        Ok(TabloidModule {
            shape: shape.clone(),
            basis,
            index,
        })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tabloid] {
        &self.basis
    }

    pub fn index_of(&self, t: &Tabloid) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Coordinates of `v` in the tabloid basis, as a sparse vector indexed by position.
    pub fn coordinates<E: Clone>(&self, v: &ModuleVector<E>) -> Result<SparseVector<usize, E>> {
        if let Some(k) = v.keys().find(|k| !self.index.contains_key(k)) {
            return Err(Error::ShapeMismatch(format!(
                "tabloid {k} is not in M^({})",
                self.shape
            )));
        }
        Ok(v.map_keys_injective(|k| self.index[k]))
    }

    pub fn vector<R: Ring>(
        &self,
        ring: &R,
        coords: &SparseVector<usize, R::Elem>,
    ) -> ModuleVector<R::Elem> {
        SparseVector::from_terms(
            ring,
            coords.iter().map(|(&i, c)| (self.basis[i], c.clone())),
        )
    }
}
