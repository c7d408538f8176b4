use std::collections::HashMap;

use rayon::prelude::*;

use crate::combinatorics::{standard_tableaux, Partition, Permutation, Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::exact_algebra::{solve, ExactMatrix, Field, Ring, SparseVector};
use crate::limits::check_degree;

use super::polytabloid::{polytabloid_terms, signed_terms_to_vector};
use super::tabloid_module::TabloidModule;
use super::ModuleVector;

/// The Specht module `S^λ` inside `M^λ`, with its basis of standard polytabloids.
///
/// Standard tableaux are ordered by their row words, so the row-reading tableau comes first.
#[derive(Debug, Clone)]
pub struct SpechtBasis {
    shape: Partition,
    tableaux: Vec<Tableau>,
    terms: Vec<Vec<(Tabloid, i8)>>,
    leads: HashMap<Tabloid, usize>,
    positions: HashMap<Tableau, usize>,
}

impl SpechtBasis {
    pub fn new(shape: &Partition) -> Result<Self> {
        check_degree(shape.n())?;
        let tableaux = standard_tableaux(shape);
        let terms: Vec<_> = tableaux.par_iter().map(polytabloid_terms).collect();
        let leads = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| {
                (
                    Tabloid::of_tableau(t).expect("standard tableaux are bijective"),
                    i,
                )
            })
            .collect();
        let positions = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(SpechtBasis {
            shape: shape.clone(),
            tableaux,
            terms,
            leads,
            positions,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.n()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn tableau(&self, k: usize) -> &Tableau {
        &self.tableaux[k]
    }

    /// Position of a standard tableau in the basis.
    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.positions.get(t).copied()
    }

    /// The `k`-th basis polytabloid.
    pub fn vector<R: Ring>(&self, ring: &R, k: usize) -> ModuleVector<R::Elem> {
        signed_terms_to_vector(ring, self.terms[k].clone())
    }

    pub fn vectors<R: Ring>(&self, ring: &R) -> Vec<ModuleVector<R::Elem>> {
        (0..self.dim()).map(|k| self.vector(ring, k)).collect()
    }

    /// `Σ_k c_k e_{t_k}` for dense coordinates `c`.
    pub fn combine<R: Ring>(&self, ring: &R, coords: &[R::Elem]) -> ModuleVector<R::Elem> {
        let mut out = SparseVector::new();
        for (k, c) in coords.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let minus = ring.neg(c);
            for &(tab, s) in &self.terms[k] {
                out.add_term(ring, tab, if s > 0 { c } else { &minus });
            }
        }
        out
    }

    /// The permutation module containing this Specht module.
    pub fn tabloid_module(&self) -> Result<TabloidModule> {
        TabloidModule::new(&self.shape.to_composition())
    }

    /// Coordinates of `v` in the standard basis.
    ///
    /// The largest tabloid of `e_t` for standard `t` is `{t}` with coefficient 1, so the
    /// standard basis is unitriangular against the tabloids: repeatedly cancelling the
    /// largest remaining tabloid either empties `v` or stops at a tabloid that leads no
    /// standard polytabloid, in which case `v` lies outside the span. Over ℤ the span is
    /// all of `S^λ_ℤ`, since the standard polytabloids form a ℤ-basis of it.
    pub fn expand<R: Ring>(&self, ring: &R, v: &ModuleVector<R::Elem>) -> Result<Vec<R::Elem>> {
        let nrows = self.shape.len();
        if let Some(k) = v
            .keys()
            .find(|k| k.degree() != self.degree() || k.num_rows() != nrows)
        {
            return Err(Error::ShapeMismatch(format!(
                "tabloid {k} is not a {}-tabloid",
                self.shape
            )));
        }
        let mut work = v.clone();
        let mut coords = vec![ring.zero(); self.dim()];
        while let Some((&lead, c)) = work.last() {
            let c = c.clone();
            let Some(&k) = self.leads.get(&lead) else {
                return Err(Error::NotInSpecht(format!(
                    "tabloid {lead} survives elimination in S^({})",
                    self.shape
                )));
            };
            let minus = ring.neg(&c);
            for &(tab, s) in &self.terms[k] {
                work.add_term(ring, tab, if s > 0 { &minus } else { &c });
            }
            coords[k] = c;
        }
        Ok(coords)
    }

    pub fn contains<R: Ring>(&self, ring: &R, v: &ModuleVector<R::Elem>) -> bool {
        self.expand(ring, v).is_ok()
    }

    /// Coordinates by a general linear solve in the tabloid basis of `M^λ`.
    ///
    /// Independent of [`SpechtBasis::expand`]; used to cross-check it.
    pub fn expand_by_solve<F: Field>(
        &self,
        field: &F,
        v: &ModuleVector<F::Elem>,
    ) -> Result<Vec<F::Elem>> {
        let module = self.tabloid_module()?;
        let mut columns = vec![SparseVector::new(); module.dim()];
        for k in 0..self.dim() {
            for (i, c) in module.coordinates(&self.vector(field, k))?.iter() {
                columns[*i].add_term(field, k, c);
            }
        }
        let m = ExactMatrix::from_rows(field.clone(), self.dim(), columns)?;
        let rhs = module.coordinates(v)?;
        let x = solve(&m, &rhs)?
            .ok_or_else(|| Error::NotInSpecht(format!("no solution in S^({})", self.shape)))?;
        Ok((0..self.dim()).map(|k| x.coeff(field, &k)).collect())
    }

    /// Coordinates of the polytabloid `e_t` for any bijective `t` of this shape.
    pub fn polytabloid_coordinates<R: Ring>(&self, ring: &R, t: &Tableau) -> Result<Vec<R::Elem>> {
        if t.shape() != self.shape || !t.is_bijective() {
            return Err(Error::InvalidTableau(format!(
                "{t} is not a bijective {}-tableau",
                self.shape
            )));
        }
        self.expand(ring, &signed_terms_to_vector(ring, polytabloid_terms(t)))
    }

    /// Matrix of `π` on the standard basis, rows holding the images `e_{t_k} π = e_{t_k π}`.
    ///
    /// A permutation of smaller degree acts through the natural embedding.
    pub fn action_matrix<R: Ring>(&self, ring: &R, pi: &Permutation) -> Result<ExactMatrix<R>> {
        let n = self.degree();
        if pi.degree() > n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: pi.degree(),
            });
        }
        let pi = pi.extend(n);
        let rows: Result<Vec<_>> = self
            .tableaux
            .par_iter()
            .map(|t| {
                let coords = self.polytabloid_coordinates(ring, &t.act(&pi)?)?;
                Ok(SparseVector::from_terms(
                    ring,
                    coords.into_iter().enumerate(),
                ))
            })
            .collect();
        ExactMatrix::from_rows(ring.clone(), self.dim(), rows?)
    }

    /// Matrix of a linear operator given on tabloid vectors, in the standard basis.
    ///
    /// Fails with [`Error::NotInSpecht`] if some image leaves the Specht module.
    pub fn operator_matrix<R: Ring>(
        &self,
        ring: &R,
        op: impl Fn(&ModuleVector<R::Elem>) -> Result<ModuleVector<R::Elem>> + Sync,
    ) -> Result<ExactMatrix<R>> {
        let rows: Result<Vec<_>> = (0..self.dim())
            .into_par_iter()
            .map(|k| {
                let coords = self.expand(ring, &op(&self.vector(ring, k))?)?;
                Ok(SparseVector::from_terms(
                    ring,
                    coords.into_iter().enumerate(),
                ))
            })
            .collect();
        ExactMatrix::from_rows(ring.clone(), self.dim(), rows?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{Integers, PrimeField, Rationals};
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(SpechtBasis::new(&p("2,1")).unwrap().dim(), 2);
        assert_eq!(SpechtBasis::new(&p("3,2")).unwrap().dim(), 5);
        let b = SpechtBasis::new(&p("4,3")).unwrap();
        assert_eq!(b.tableau(0), &tab("1234/567"));
    }

    #[test]
    fn basis_vectors_expand_to_units() {
        let z = Integers;
        let b = SpechtBasis::new(&p("3,2,1")).unwrap();
        for k in 0..b.dim() {
            let c = b.expand(&z, &b.vector(&z, k)).unwrap();
            for (i, x) in c.iter().enumerate() {
                assert_eq!(*x, BigInt::from((i == k) as i64));
            }
        }
    }

    #[test]
    fn polytabloid_identity_holds_in_tabloids() {
        let z = Integers;
        let b = SpechtBasis::new(&p("3,3,1")).unwrap();
        let e = |t: &str| signed_terms_to_vector(&z, polytabloid_terms(&tab(t)));
        let mut diff = e("321/465/7");
        for (t, coef) in [("123/564/7", 1), ("124/567/3", 1), ("123/567/4", -1)] {
            diff.add_scaled(&z, &BigInt::from(-coef), &e(t));
        }
        assert!(diff.is_empty());
        let lhs = b.polytabloid_coordinates(&z, &tab("321/465/7")).unwrap();
        let mut rhs = vec![BigInt::from(0); b.dim()];
        for (t, coef) in [("123/564/7", 1), ("124/567/3", 1), ("123/567/4", -1)] {
            for (r, s) in rhs
                .iter_mut()
                .zip(b.polytabloid_coordinates(&z, &tab(t)).unwrap())
            {
                *r += s * coef;
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn single_tabloid_is_not_in_specht() {
        let z = Integers;
        let b = SpechtBasis::new(&p("2,1")).unwrap();
        let v = SparseVector::unit(&z, Tabloid::from_rows(&[vec![1, 2], vec![3]]).unwrap());
        assert!(matches!(b.expand(&z, &v), Err(Error::NotInSpecht(_))));
        let q = Rationals;
        let vq = SparseVector::unit(&q, Tabloid::from_rows(&[vec![1, 2], vec![3]]).unwrap());
        assert!(b.expand_by_solve(&q, &vq).is_err());
    }

    #[test]
    fn solve_agrees_with_elimination() {
        let f = PrimeField::new(3).unwrap();
        let b = SpechtBasis::new(&p("3,1,1")).unwrap();
        let t = tab("413/5/2");
        let v = signed_terms_to_vector(&f, polytabloid_terms(&t));
        assert_eq!(
            b.expand(&f, &v).unwrap(),
            b.expand_by_solve(&f, &v).unwrap()
        );
    }

    #[test]
    fn action_matrices_multiply() {
        let z = Integers;
        let b = SpechtBasis::new(&p("3,2")).unwrap();
        let s = Permutation::transposition(5, 2, 4);
        let u = Permutation::long_cycle(5);
        let lhs = b
            .action_matrix(&z, &s)
            .unwrap()
            .mul(&b.action_matrix(&z, &u).unwrap())
            .unwrap();
        assert_eq!(lhs, b.action_matrix(&z, &s.then(&u)).unwrap());
    }
}
