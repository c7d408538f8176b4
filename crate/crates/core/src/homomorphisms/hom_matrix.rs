use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::exact_algebra::{ExactMatrix, Ring, Scalar, SparseVector};

/// Which module a basis belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleDescriptor {
    /// `S^λ` with its standard polytabloid basis.
    Specht { shape: Partition },
    /// `M^ν` with the tabloid basis in canonical order.
    Tabloids { shape: Composition },
    /// `S^λ` restricted to `Σ_{n-1}`, standard basis.
    Restriction { lambda: Partition },
    /// `S^λ ↑ Σ_{n+1}` with basis `e_k ⊗ (j n+1)`.
    Induced { lambda: Partition },
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleDescriptor::Specht { shape } => write!(f, "S^({shape})"),
            ModuleDescriptor::Tabloids { shape } => write!(f, "M^({shape})"),
            ModuleDescriptor::Restriction { lambda } => write!(f, "S^({lambda})↓"),
            ModuleDescriptor::Induced { lambda } => write!(f, "S^({lambda})↑"),
        }
    }
}

/// A linear map between module bases.
///
/// Column `j` of `entries` holds the coordinates of the image of the `j`-th domain basis
/// vector, so `entries` is `dim codomain × dim domain`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomMatrix<R: Ring> {
    pub domain: ModuleDescriptor,
    pub codomain: ModuleDescriptor,
    pub entries: ExactMatrix<R>,
}

impl<R: Ring> HomMatrix<R> {
    /// Builds the map from the images of the domain basis vectors (one sparse row each).
    pub fn from_images(
        domain: ModuleDescriptor,
        codomain: ModuleDescriptor,
        ring: R,
        codomain_dim: usize,
        images: Vec<SparseVector<usize, R::Elem>>,
    ) -> Result<Self> {
        let rows = ExactMatrix::from_rows(ring, codomain_dim, images)?;
        Ok(HomMatrix {
            domain,
            codomain,
            entries: rows.transpose(),
        })
    }

    /// Builds the map from a matrix acting on row vectors (`dim domain × dim codomain`).
    pub fn from_row_form(
        domain: ModuleDescriptor,
        codomain: ModuleDescriptor,
        x: &ExactMatrix<R>,
    ) -> Self {
        HomMatrix {
            domain,
            codomain,
            entries: x.transpose(),
        }
    }

    pub fn domain_dim(&self) -> usize {
        self.entries.ncols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.entries.nrows()
    }

    /// The matrix with one row per domain basis vector, acting on row vectors.
    pub fn row_form(&self) -> ExactMatrix<R> {
        self.entries.transpose()
    }

    /// Image of the `j`-th domain basis vector in codomain coordinates.
    pub fn image(&self, j: usize) -> Vec<R::Elem> {
        (0..self.codomain_dim())
            .map(|i| self.entries.get(i, j))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &HomMatrix<R>) -> Result<HomMatrix<R>> {
        if self.codomain != next.domain {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose into {} with a map from {}",
                self.codomain, next.domain
            )));
        }
        Ok(HomMatrix {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            entries: next.entries.mul(&self.entries)?,
        })
    }

    /// Whether `ρ_dom(g) X = X ρ_cod(g)` for paired row-form generator matrices.
    pub fn intertwines(
        &self,
        domain_gens: &[ExactMatrix<R>],
        codomain_gens: &[ExactMatrix<R>],
    ) -> Result<bool> {
        let x = self.row_form();
        for (a, b) in domain_gens.iter().zip(codomain_gens) {
            if a.mul(&x)? != x.mul(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_record(&self) -> HomMatrixRecord {
        let ring = self.entries.ring();
        let mut entries = Vec::new();
        for (i, row) in self.entries.rows().iter().enumerate() {
            for (&j, e) in row.iter() {
                entries.push((i, j, ring.to_scalar(e)));
            }
        }
        HomMatrixRecord {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            scalars: ring.name(),
            rows: self.codomain_dim(),
            cols: self.domain_dim(),
            entries,
        }
    }

    pub fn from_record(ring: R, record: &HomMatrixRecord) -> Result<Self> {
        if record.scalars != ring.name() {
            return Err(Error::DomainMismatch(ring.name(), record.scalars.clone()));
        }
        let mut m = ExactMatrix::zeros(ring.clone(), record.rows, record.cols);
        for (i, j, s) in &record.entries {
            if *i >= record.rows || *j >= record.cols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({i},{j}) outside {}x{}",
                    record.rows, record.cols
                )));
            }
            m.set(*i, *j, ring.from_scalar(s)?);
        }
        Ok(HomMatrix {
            domain: record.domain.clone(),
            codomain: record.codomain.clone(),
            entries: m,
        })
    }
}

/// Serializable form of a [`HomMatrix`]: sparse `(row, column, scalar)` entries in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomMatrixRecord {
    pub domain: ModuleDescriptor,
    pub codomain: ModuleDescriptor,
    pub scalars: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, Scalar)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::PrimeField;

    #[test]
    fn record_round_trip() {
        let f = PrimeField::new(5).unwrap();
        let shape: Partition = "2,1".parse().unwrap();
        let m = HomMatrix::from_images(
            ModuleDescriptor::Specht {
                shape: shape.clone(),
            },
            ModuleDescriptor::Tabloids {
                shape: shape.to_composition(),
            },
            f,
            3,
            vec![
                SparseVector::from_terms(&f, [(0usize, 1u64), (2, 4)]),
                SparseVector::from_terms(&f, [(1usize, 3u64)]),
            ],
        )
        .unwrap();
        assert_eq!(m.image(0), vec![1, 0, 4]);
        let json = serde_json::to_string(&m.to_record()).unwrap();
        let back: HomMatrixRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(HomMatrix::from_record(f, &back).unwrap(), m);
    }
}
