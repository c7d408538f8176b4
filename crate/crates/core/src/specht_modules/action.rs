use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::exact_algebra::{Ring, SparseVector};

use super::ModuleVector;

fn degree_of<E: Clone>(v: &ModuleVector<E>) -> Option<usize> {
    v.keys().next().map(|k| k.degree())
}

/// `v · π`, permuting the symbols of every tabloid.
pub fn act_permutation<E: Clone>(v: &ModuleVector<E>, pi: &Permutation) -> Result<ModuleVector<E>> {
    if let Some(n) = degree_of(v) {
        if n != pi.degree() {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: pi.degree(),
            });
        }
    }
    Ok(v.map_keys_injective(|k| k.act_unchecked(pi)))
}

/// The sum of the transpositions `(i j)` of `Σ_n` with `j > excluded`.
///
/// `excluded = 0` gives the class sum of all transpositions; `excluded = n - 1` gives the
/// Jucys-Murphy element `L_n = (1 n) + (2 n) + … + (n-1 n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranspositionSum {
    n: usize,
    excluded: usize,
}

impl TranspositionSum {
    pub fn new(n: usize, excluded: usize) -> Result<Self> {
        if excluded >= n.max(1) {
            return Err(Error::InvalidArgument(format!(
                "excluded degree {excluded} must be below {n}"
            )));
        }
        Ok(TranspositionSum { n, excluded })
    }

    /// `L_n`.
    pub fn jucys_murphy(n: usize) -> Self {
        TranspositionSum {
            n,
            excluded: n.saturating_sub(1),
        }
    }

    /// Sum of all transpositions of `Σ_n`.
    pub fn all_transpositions(n: usize) -> Self {
        TranspositionSum { n, excluded: 0 }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn excluded(&self) -> usize {
        self.excluded
    }

    pub fn transpositions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (self.excluded + 1..=self.n).flat_map(|j| (1..j).map(move |i| (i, j)))
    }
}

/// `v · L` for a transposition sum `L`, computed term by term.
pub fn act_jm<R: Ring>(
    ring: &R,
    v: &ModuleVector<R::Elem>,
    sum: &TranspositionSum,
) -> Result<ModuleVector<R::Elem>> {
    if let Some(n) = degree_of(v) {
        if n != sum.degree() {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: sum.degree(),
            });
        }
    }
    let mut out = SparseVector::new();
    for (k, c) in v.iter() {
        for (i, j) in sum.transpositions() {
            out.add_term(ring, k.swap_symbols(i, j), c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Tableau, Tabloid};
    use crate::exact_algebra::Integers;
    use crate::specht_modules::polytabloid;

    #[test]
    fn counts() {
        assert_eq!(
            TranspositionSum::jucys_murphy(5).transpositions().count(),
            4
        );
        assert_eq!(
            TranspositionSum::all_transpositions(5)
                .transpositions()
                .count(),
            10
        );
        assert_eq!(
            TranspositionSum::jucys_murphy(1).transpositions().count(),
            0
        );
        assert!(TranspositionSum::new(3, 3).is_err());
    }

    #[test]
    fn permutation_action_is_a_right_action() {
        let z = Integers;
        let t: Tableau = "135/24".parse().unwrap();
        let v = polytabloid(&z, &t).unwrap();
        let s = Permutation::from_images(vec![2, 3, 1, 5, 4]).unwrap();
        let u = Permutation::transposition(5, 1, 4);
        let lhs = act_permutation(&act_permutation(&v, &s).unwrap(), &u).unwrap();
        let rhs = act_permutation(&v, &s.then(&u)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            act_permutation(&v, &s).unwrap(),
            polytabloid(&z, &t.act(&s).unwrap()).unwrap()
        );
        assert!(act_permutation(&v, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn row_stabilizer_fixes_tabloid() {
        let z = Integers;
        let k = Tabloid::from_rows(&[vec![1, 2], vec![3]]).unwrap();
        let v = SparseVector::unit(&z, k);
        assert_eq!(
            act_permutation(&v, &Permutation::transposition(3, 1, 2)).unwrap(),
            v
        );
    }

    #[test]
    fn trivial_jm_is_zero() {
        let z = Integers;
        let k = Tabloid::from_rows(&[vec![1]]).unwrap();
        let v = SparseVector::unit(&z, k);
        assert!(act_jm(&z, &v, &TranspositionSum::jucys_murphy(1))
            .unwrap()
            .is_empty());
    }
}
