use std::collections::HashMap;

use crate::combinatorics::{Composition, Partition, Permutation};
use crate::error::{Error, Result};
use crate::exact_algebra::{ExactMatrix, Field, SparseVector};

use super::basis::SpechtBasis;
use super::tabloid_module::TabloidModule;

/// A representation of `Σ_n` over a field given by matrices of generators.
///
/// Vectors are rows and act on the right: `v ↦ v · M(g)`.
#[derive(Debug, Clone)]
pub struct MatrixRepresentation<F: Field> {
    field: F,
    degree: usize,
    dim: usize,
    generators: Vec<Permutation>,
    matrices: Vec<ExactMatrix<F>>,
}

impl<F: Field> MatrixRepresentation<F> {
    pub fn new(
        field: F,
        degree: usize,
        dim: usize,
        generators: Vec<Permutation>,
        matrices: Vec<ExactMatrix<F>>,
    ) -> Result<Self> {
        if generators.len() != matrices.len() {
            return Err(Error::DimensionMismatch("one matrix per generator".into()));
        }
        for (g, m) in generators.iter().zip(&matrices) {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator matrix is {}x{}, expected {dim}",
                    m.nrows(),
                    m.ncols()
                )));
            }
            if m.ring() != &field {
                return Err(Error::DomainMismatch(field.name(), m.ring().name()));
            }
        }
        Ok(MatrixRepresentation {
            field,
            degree,
            dim,
            generators,
            matrices,
        })
    }

    /// `S^λ` with the standard generators of `Σ_n`.
    pub fn specht(field: F, basis: &SpechtBasis) -> Result<Self> {
        let n = basis.degree();
        let generators = Permutation::standard_generators(n);
        let matrices = generators
            .iter()
            .map(|g| basis.action_matrix(&field, g))
            .collect::<Result<_>>()?;
        Self::new(field, n, basis.dim(), generators, matrices)
    }

    /// `S^λ` for `λ ⊢ n+1` restricted to `Σ_n`.
    pub fn restricted(field: F, basis: &SpechtBasis) -> Result<Self> {
        let n = basis
            .degree()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidArgument("cannot restrict from degree 0".into()))?;
        let generators = Permutation::standard_generators(n);
        let matrices = generators
            .iter()
            .map(|g| basis.action_matrix(&field, g))
            .collect::<Result<_>>()?;
        Self::new(field, n, basis.dim(), generators, matrices)
    }

    /// The permutation module `M^ν` on its tabloid basis.
    pub fn tabloids(field: F, shape: &Composition) -> Result<Self> {
        let module = TabloidModule::new(shape)?;
        let n = module.degree();
        let generators = Permutation::standard_generators(n);
        let one = field.one();
        let matrices = generators
            .iter()
            .map(|g| {
                let rows = module
                    .basis()
                    .iter()
                    .map(|t| {
                        let k = module
                            .index_of(&t.act(g)?)
                            .expect("tabloids are closed under the action");
                        Ok(SparseVector::from_terms(&field, [(k, one.clone())]))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ExactMatrix::from_rows(field.clone(), module.dim(), rows)
            })
            .collect::<Result<_>>()?;
        Self::new(field, n, module.dim(), generators, matrices)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn matrices(&self) -> &[ExactMatrix<F>] {
        &self.matrices
    }
}

/// The induced module `S^λ ↑ Σ_n` for `λ ⊢ n-1`.
///
/// Basis vectors are `e_k ⊗ g_j` with coset representatives `g_j = (j n)` (and `g_n = 1`),
/// indexed by `(j-1)·dim S^λ + k`. Since `g_j x = h g_{x(j)}` with `h ∈ Σ_{n-1}`, the vector
/// `e_k ⊗ g_j` is sent by `x` to `(e_k h) ⊗ g_{x(j)}`.
#[derive(Debug, Clone)]
pub struct InducedModule<F: Field> {
    field: F,
    basis: SpechtBasis,
    cache: HashMap<Permutation, ExactMatrix<F>>,
}

impl<F: Field> InducedModule<F> {
    pub fn new(field: F, lambda: &Partition) -> Result<Self> {
        crate::limits::check_degree(lambda.n() + 1)?;
        Ok(InducedModule {
            field,
            basis: SpechtBasis::new(lambda)?,
            cache: HashMap::new(),
        })
    }

    pub fn inner(&self) -> &SpechtBasis {
        &self.basis
    }

    pub fn degree(&self) -> usize {
        self.basis.degree() + 1
    }

    pub fn dim(&self) -> usize {
        self.degree() * self.basis.dim()
    }

    fn coset(&self, j: usize) -> Permutation {
        let n = self.degree();
        if j == n {
            Permutation::identity(n)
        } else {
            Permutation::transposition(n, j, n)
        }
    }

    fn inner_matrix(&mut self, h: &Permutation) -> Result<ExactMatrix<F>> {
        if let Some(m) = self.cache.get(h) {
            return Ok(m.clone());
        }
        let images = h.images()[..h.degree() - 1].to_vec();
        let m = self
            .basis
            .action_matrix(&self.field, &Permutation::from_images(images)?)?;
        self.cache.insert(h.clone(), m.clone());
        Ok(m)
    }

    /// Matrix of `x ∈ Σ_n` on the induced module.
    pub fn action_matrix(&mut self, x: &Permutation) -> Result<ExactMatrix<F>> {
        let n = self.degree();
        if x.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: x.degree(),
            });
        }
        let d = self.basis.dim();
        let mut rows = vec![SparseVector::new(); n * d];
        for j in 1..=n {
            let target = x.apply(j);
            let h = self.coset(j).then(x).then(&self.coset(target));
            debug_assert_eq!(h.apply(n), n);
            let inner = self.inner_matrix(&h)?;
            for k in 0..d {
                rows[(j - 1) * d + k] = inner.row(k).map_keys_injective(|&c| (target - 1) * d + c);
            }
        }
        ExactMatrix::from_rows(self.field.clone(), n * d, rows)
    }

    pub fn representation(&mut self) -> Result<MatrixRepresentation<F>> {
        let n = self.degree();
        let generators = Permutation::standard_generators(n);
        let matrices = generators
            .iter()
            .map(|g| self.action_matrix(g))
            .collect::<Result<_>>()?;
        MatrixRepresentation::new(self.field.clone(), n, self.dim(), generators, matrices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::PrimeField;

    #[test]
    fn induced_action_is_a_homomorphism() {
        let f = PrimeField::new(5).unwrap();
        let mut ind = InducedModule::new(f, &"2,1".parse().unwrap()).unwrap();
        assert_eq!(ind.dim(), 8);
        let s = Permutation::from_images(vec![2, 4, 1, 3]).unwrap();
        let u = Permutation::transposition(4, 3, 4);
        let lhs = ind
            .action_matrix(&s)
            .unwrap()
            .mul(&ind.action_matrix(&u).unwrap())
            .unwrap();
        assert_eq!(lhs, ind.action_matrix(&s.then(&u)).unwrap());
        assert_eq!(
            ind.action_matrix(&Permutation::identity(4)).unwrap(),
            ExactMatrix::identity(f, 8)
        );
    }
}
