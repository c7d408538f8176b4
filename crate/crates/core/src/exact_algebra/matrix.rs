use num_bigint::BigInt;

use super::ring::{Integers, PrimeField, Ring};
use super::sparse::SparseVector;
use crate::error::{Error, Result};

/// A matrix over an exact ring, stored as sparse rows.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<R: Ring> {
    ring: R,
    cols: usize,
    rows: Vec<SparseVector<usize, R::Elem>>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            ring,
            cols,
            rows: vec![SparseVector::new(); rows],
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            let one = m.ring.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(
        ring: R,
        cols: usize,
        rows: Vec<SparseVector<usize, R::Elem>>,
    ) -> Result<Self> {
        for row in &rows {
            if let Some((&k, _)) = row.last() {
                if k >= cols {
                    return Err(Error::DimensionMismatch(format!(
                        "column index {k} out of range {cols}"
                    )));
                }
            }
        }
        Ok(ExactMatrix { ring, cols, rows })
    }

    pub fn from_dense(ring: R, dense: &[Vec<R::Elem>]) -> Result<Self> {
        let cols = dense.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(dense.len());
        for r in dense {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            rows.push(SparseVector::from_terms(
                &ring,
                r.iter().cloned().enumerate(),
            ));
        }
        Ok(ExactMatrix { ring, cols, rows })
    }

    pub fn from_i64(ring: R, dense: &[Vec<i64>]) -> Result<Self> {
        let converted: Vec<Vec<R::Elem>> = dense
            .iter()
            .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
            .collect();
        Self::from_dense(ring, &converted)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVector<usize, R::Elem> {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVector<usize, R::Elem>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> R::Elem {
        self.rows[i].coeff(&self.ring, &j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: R::Elem) {
        assert!(j < self.cols, "column index out of range");
        let row = &mut self.rows[i];
        row.remove(&j);
        row.add_term(&self.ring, j, &value);
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVector::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<R::Elem>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![self.ring.zero(); self.cols];
                for (&j, e) in r.iter() {
                    d[j] = e.clone();
                }
                d
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ring.clone(), self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (&j, e) in r.iter() {
                out.rows[j].add_term(&self.ring, i, e);
            }
        }
        out
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::DomainMismatch(self.ring.name(), other.ring.name()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.cols,
                other.nrows(),
                other.cols
            )));
        }
        let mut out = Self::zeros(self.ring.clone(), self.nrows(), other.cols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = SparseVector::new();
            for (&k, e) in r.iter() {
                acc.add_scaled(&self.ring, e, &other.rows[k]);
            }
            out.rows[i] = acc;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.nrows() != other.nrows() || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.add(&self.ring, b))
            .collect();
        Ok(ExactMatrix {
            ring: self.ring.clone(),
            cols: self.cols,
            rows,
        })
    }

    /// Matrix times column vector.
    pub fn apply(&self, x: &SparseVector<usize, R::Elem>) -> SparseVector<usize, R::Elem> {
        let mut out = SparseVector::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = self.ring.zero();
            for (&j, e) in r.iter() {
                if let Some(xj) = x.get(&j) {
                    acc = self.ring.add(&acc, &self.ring.mul(e, xj));
                }
            }
            out.add_term(&self.ring, i, &acc);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVector::is_empty)
    }
}

impl ExactMatrix<Integers> {
    pub fn reduce_mod(&self, field: &PrimeField) -> ExactMatrix<PrimeField> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.map_ring(field, |x: &BigInt| field.from_int(x)))
            .collect();
        ExactMatrix {
            ring: *field,
            cols: self.cols,
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::ring::Rationals;

    #[test]
    fn product_and_transpose() {
        let a = ExactMatrix::from_i64(Integers, &[vec![1, 2], vec![0, 3]]).unwrap();
        let b = ExactMatrix::from_i64(Integers, &[vec![4, 0], vec![1, 1]]).unwrap();
        let c = a.mul(&b).unwrap();
        assert_eq!(
            c,
            ExactMatrix::from_i64(Integers, &[vec![6, 2], vec![3, 3]]).unwrap()
        );
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn mixed_domains_are_rejected() {
        let a = ExactMatrix::from_i64(PrimeField::new(5).unwrap(), &[vec![1]]).unwrap();
        let b = ExactMatrix::from_i64(PrimeField::new(7).unwrap(), &[vec![1]]).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::DomainMismatch(_, _))));
        let q = ExactMatrix::identity(Rationals, 2);
        assert!(q.mul(&ExactMatrix::zeros(Rationals, 3, 1)).is_err());
    }
}
