//! Incremental reduced row echelon form over a field.

use super::matrix::ExactMatrix;
use super::ring::Field;
use super::sparse::SparseVector;
use crate::error::{Error, Result};

/// Fraction of nonzero entries above which a stored row switches to dense storage.
pub const DENSE_FILL_THRESHOLD: f64 = 0.3;

#[derive(Debug, Clone)]
enum StoredRow<E> {
    Sparse(Vec<(usize, E)>),
    Dense(Vec<E>),
}

impl<E: Clone> StoredRow<E> {
    fn pack<F: Field<Elem = E>>(field: &F, dense: &[E]) -> Self {
        let nnz = dense.iter().filter(|e| !field.is_zero(e)).count();
        if nnz as f64 > DENSE_FILL_THRESHOLD * dense.len() as f64 {
            StoredRow::Dense(dense.to_vec())
        } else {
            StoredRow::Sparse(
                dense
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| !field.is_zero(e))
                    .map(|(j, e)| (j, e.clone()))
                    .collect(),
            )
        }
    }

    fn get<F: Field<Elem = E>>(&self, field: &F, col: usize) -> E {
        match self {
            StoredRow::Dense(d) => d[col].clone(),
            StoredRow::Sparse(s) => match s.binary_search_by_key(&col, |(j, _)| *j) {
                Ok(pos) => s[pos].1.clone(),
                Err(_) => field.zero(),
            },
        }
    }

    fn to_dense<F: Field<Elem = E>>(&self, field: &F, ncols: usize) -> Vec<E> {
        match self {
            StoredRow::Dense(d) => d.clone(),
            StoredRow::Sparse(s) => {
                let mut d = vec![field.zero(); ncols];
                for (j, e) in s {
                    d[*j] = e.clone();
                }
                d
            }
        }
    }

    /// `target -= factor * self`
    fn subtract_from<F: Field<Elem = E>>(&self, field: &F, factor: &E, target: &mut [E]) {
        match self {
            StoredRow::Dense(d) => {
                for (t, e) in target.iter_mut().zip(d) {
                    if !field.is_zero(e) {
                        *t = field.sub(t, &field.mul(factor, e));
                    }
                }
            }
            StoredRow::Sparse(s) => {
                for (j, e) in s {
                    target[*j] = field.sub(&target[*j], &field.mul(factor, e));
                }
            }
        }
    }
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Debug, Clone, PartialEq)]
pub enum Insertion<E: Clone> {
    /// The vector was independent; it received this insertion id.
    Independent(usize),
    /// The vector lies in the span. When tracking is enabled the coefficients
    /// express it in terms of the previously inserted independent vectors (by id).
    Dependent(Option<SparseVector<usize, E>>),
}

/// Reduced row echelon basis of a subspace of `F^ncols`, maintained incrementally.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<StoredRow<F::Elem>>,
    pivot_cols: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
    combos: Option<Vec<SparseVector<usize, F::Elem>>>,
    inserted: usize,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            pivot_of_col: vec![None; ncols],
            combos: None,
            inserted: 0,
        }
    }

    /// Like [`Echelon::new`], but records how each row arises from the inserted vectors,
    /// so that [`Echelon::express`] can write span members in terms of them.
    pub fn with_tracking(field: F, ncols: usize) -> Self {
        let mut e = Self::new(field, ncols);
        e.combos = Some(Vec::new());
        e
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Reduces `w` in place against the stored rows; returns the multipliers used.
    fn reduce_dense(&self, w: &mut [F::Elem]) -> Vec<(usize, F::Elem)> {
        let mut used = Vec::new();
        for (idx, row) in self.rows.iter().enumerate() {
            let c = self.pivot_cols[idx];
            if self.field.is_zero(&w[c]) {
                continue;
            }
            let factor = w[c].clone();
            row.subtract_from(&self.field, &factor, w);
            used.push((idx, factor));
        }
        used
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        w.iter().all(|e| self.field.is_zero(e))
    }

    /// Reduced form of `v` modulo the stored subspace.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        w
    }

    pub fn insert(&mut self, v: &[F::Elem]) -> Insertion<F::Elem> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let f = self.field.clone();
        let mut w = v.to_vec();
        let used = self.reduce_dense(&mut w);
        let pivot = w.iter().position(|e| !f.is_zero(e));
        let id = self.inserted;
        let combo = self.combos.as_ref().map(|combos| {
            let mut c = SparseVector::unit(&f, id);
            for (idx, factor) in &used {
                c.add_scaled(&f, &f.neg(factor), &combos[*idx]);
            }
            c
        });
        let Some(pc) = pivot else {
            // v = sum factor_i row_i = sum factor_i combo_i
            let expr = self.combos.as_ref().map(|combos| {
                let mut c = SparseVector::new();
                for (idx, factor) in &used {
                    c.add_scaled(&f, factor, &combos[*idx]);
                }
                c
            });
            return Insertion::Dependent(expr);
        };
        let inv = f.inv(&w[pc]).expect("pivot is nonzero");
        for e in w.iter_mut() {
            if !f.is_zero(e) {
                *e = f.mul(e, &inv);
            }
        }
        let combo = combo.map(|c| c.scale(&f, &inv));
        // Clear the new pivot column from existing rows.
        for idx in 0..self.rows.len() {
            let x = self.rows[idx].get(&f, pc);
            if f.is_zero(&x) {
                continue;
            }
            let mut dense = self.rows[idx].to_dense(&f, self.ncols);
            for (d, e) in dense.iter_mut().zip(&w) {
                if !f.is_zero(e) {
                    *d = f.sub(d, &f.mul(&x, e));
                }
            }
            self.rows[idx] = StoredRow::pack(&f, &dense);
            if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo.as_ref()) {
                combos[idx].add_scaled(&f, &f.neg(&x), c);
            }
        }
        self.pivot_of_col[pc] = Some(self.rows.len());
        self.pivot_cols.push(pc);
        self.rows.push(StoredRow::pack(&f, &w));
        if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo) {
            combos.push(c);
        }
        self.inserted += 1;
        Insertion::Independent(id)
    }

    /// Writes `v` as a combination of the independent inserted vectors (requires tracking).
    pub fn express(&self, v: &[F::Elem]) -> Option<SparseVector<usize, F::Elem>> {
        let combos = self.combos.as_ref().expect("express requires tracking");
        let mut w = v.to_vec();
        let used = self.reduce_dense(&mut w);
        if w.iter().any(|e| !self.field.is_zero(e)) {
            return None;
        }
        let mut c = SparseVector::new();
        for (idx, factor) in &used {
            c.add_scaled(&self.field, factor, &combos[*idx]);
        }
        Some(c)
    }

    /// The stored basis rows in dense form, with their pivot columns.
    pub fn basis(&self) -> Vec<(usize, Vec<F::Elem>)> {
        self.rows
            .iter()
            .zip(&self.pivot_cols)
            .map(|(r, &c)| (c, r.to_dense(&self.field, self.ncols)))
            .collect()
    }

    /// Basis of `{x : <row, x> = 0 for every stored row}` viewed as the null space of the
    /// matrix whose rows were inserted.
    pub fn null_space(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut out = Vec::new();
        for free in 0..self.ncols {
            if self.pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![f.zero(); self.ncols];
            x[free] = f.one();
            for (idx, row) in self.rows.iter().enumerate() {
                let e = row.get(f, free);
                if !f.is_zero(&e) {
                    x[self.pivot_cols[idx]] = f.neg(&e);
                }
            }
            out.push(x);
        }
        out
    }
}

fn dense_row<F: Field>(
    field: &F,
    row: &SparseVector<usize, F::Elem>,
    ncols: usize,
) -> Vec<F::Elem> {
    let mut d = vec![field.zero(); ncols];
    for (&j, e) in row.iter() {
        d[j] = e.clone();
    }
    d
}

fn echelon_of<F: Field>(m: &ExactMatrix<F>) -> Echelon<F> {
    let mut e = Echelon::new(m.ring().clone(), m.ncols());
    for r in m.rows() {
        if e.rank() == m.ncols() {
            break;
        }
        e.insert(&dense_row(m.ring(), r, m.ncols()));
    }
    e
}

pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    echelon_of(m).rank()
}

/// Basis of `{x : M x = 0}` as sparse column vectors.
pub fn kernel_basis<F: Field>(m: &ExactMatrix<F>) -> Vec<SparseVector<usize, F::Elem>> {
    let f = m.ring();
    echelon_of(m)
        .null_space()
        .into_iter()
        .map(|x| SparseVector::from_terms(f, x.into_iter().enumerate()))
        .collect()
}

/// Some `x` with `M x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(
    m: &ExactMatrix<F>,
    b: &SparseVector<usize, F::Elem>,
) -> Result<Option<SparseVector<usize, F::Elem>>> {
    let f = m.ring();
    if let Some((&k, _)) = b.last() {
        if k >= m.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side index {k} exceeds {} rows",
                m.nrows()
            )));
        }
    }
    let n = m.ncols();
    let mut e = Echelon::new(f.clone(), n + 1);
    for (i, r) in m.rows().iter().enumerate() {
        let mut d = dense_row(f, r, n + 1);
        d[n] = b.coeff(f, &i);
        e.insert(&d);
    }
    let mut x = SparseVector::new();
    for (c, row) in e.basis() {
        if c == n {
            return Ok(None);
        }
        x.add_term(f, c, &row[n]);
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::ring::{PrimeField, Rationals, Ring};

    #[test]
    fn identity_and_zero() {
        let f = PrimeField::new(5).unwrap();
        let id = ExactMatrix::identity(f, 3);
        assert_eq!(rank(&id), 3);
        assert!(kernel_basis(&id).is_empty());
        let z = ExactMatrix::zeros(f, 2, 3);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel_basis(&z).len(), 3);
    }

    #[test]
    fn rank_one_example() {
        let f = PrimeField::new(5).unwrap();
        let m = ExactMatrix::from_i64(f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], SparseVector::from_terms(&f, [(0usize, 3u64), (1, 1)]));
    }

    #[test]
    fn inconsistent_system() {
        let m = ExactMatrix::from_i64(Rationals, &[vec![1, 1], vec![2, 2]]).unwrap();
        let b = SparseVector::from_terms(
            &Rationals,
            [(0usize, Rationals.from_i64(1)), (1, Rationals.from_i64(3))],
        );
        assert_eq!(solve(&m, &b).unwrap(), None);
    }

    #[test]
    fn tracking_expresses_span_members() {
        let f = PrimeField::new(7).unwrap();
        let mut e = Echelon::with_tracking(f, 3);
        assert_eq!(e.insert(&[1, 2, 0]), Insertion::Independent(0));
        assert_eq!(e.insert(&[0, 1, 1]), Insertion::Independent(1));
        // 2*(1,2,0) + 3*(0,1,1) = (2,0,3) mod 7
        let c = e.express(&[2, 0, 3]).unwrap();
        assert_eq!(c, SparseVector::from_terms(&f, [(0usize, 2u64), (1, 3)]));
        match e.insert(&[2, 0, 3]) {
            Insertion::Dependent(Some(c2)) => assert_eq!(c2, c),
            other => panic!("unexpected {other:?}"),
        }
        assert!(e.express(&[0, 0, 1]).is_none());
    }

    #[test]
    fn dense_storage_kicks_in() {
        let f = PrimeField::new(3).unwrap();
        let mut e = Echelon::new(f, 4);
        e.insert(&[1, 1, 1, 1]);
        e.insert(&[0, 0, 0, 1]);
        assert!(matches!(e.rows[0], StoredRow::Dense(_)));
        assert!(matches!(e.rows[1], StoredRow::Sparse(_)));
        assert!(e.contains(&[2, 2, 2, 0]));
    }
}
