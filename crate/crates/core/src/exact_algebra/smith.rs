//! Smith normal form over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::ring::Integers;

/// `u * a * v = diag(d)` with `u`, `v` unimodular and `d[i] | d[i+1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SmithForm {
    pub d: Vec<BigInt>,
    pub u: Option<ExactMatrix<Integers>>,
    pub v: Option<ExactMatrix<Integers>>,
}

impl SmithForm {
    /// Number of nonzero elementary divisors.
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }
}

type Dense = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

struct Work {
    a: Dense,
    u: Option<Dense>,
    v: Option<Dense>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            for row in v {
                row.swap(i, j);
            }
        }
    }

    /// row_dst += q * row_src
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        let (s, d) = pick_two(&mut self.a, src, dst);
        for (x, y) in d.iter_mut().zip(s.iter()) {
            if !y.is_zero() {
                *x += q * y;
            }
        }
        if let Some(u) = self.u.as_mut() {
            let (s, d) = pick_two(u, src, dst);
            for (x, y) in d.iter_mut().zip(s.iter()) {
                if !y.is_zero() {
                    *x += q * y;
                }
            }
        }
    }

    /// col_dst += q * col_src
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in &mut self.a {
            if !row[src].is_zero() {
                let t = q * &row[src];
                row[dst] += t;
            }
        }
        if let Some(v) = self.v.as_mut() {
            for row in v {
                if !row[src].is_zero() {
                    let t = q * &row[src];
                    row[dst] += t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        if let Some(u) = self.u.as_mut() {
            for x in &mut u[i] {
                *x = -&*x;
            }
        }
    }
}

fn pick_two<T>(v: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst);
    if src < dst {
        let (lo, hi) = v.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    }
}

/// Smith normal form of an integer matrix, with both transforms.
pub fn smith_normal_form(m: &ExactMatrix<Integers>) -> SmithForm {
    smith_normal_form_with(m, true, true)
}

/// Smith normal form, accumulating only the requested transforms.
pub fn smith_normal_form_with(
    m: &ExactMatrix<Integers>,
    track_u: bool,
    track_v: bool,
) -> SmithForm {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut w = Work {
        a: m.to_dense(),
        u: track_u.then(|| identity(rows)),
        v: track_v.then(|| identity(cols)),
    };
    let steps = rows.min(cols);
    let mut d = Vec::with_capacity(steps);
    for t in 0..steps {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &w.a[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                        if x.abs().is_one() {
                            break;
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            if pi != t {
                w.swap_rows(pi, t);
            }
            if pj != t {
                w.swap_cols(pj, t);
            }
            let pivot = w.a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&pivot);
                w.add_row(i, t, &-q);
                if !w.a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&pivot);
                w.add_col(j, t, &-q);
                if !w.a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !w.a[i][j].is_multiple_of(&pivot) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        d.push(w.a[t][t].clone());
    }
    let to_matrix = |x: Dense| ExactMatrix::from_dense(Integers, &x).expect("square transform");
    SmithForm {
        d,
        u: w.u.map(to_matrix),
        v: w.v.map(to_matrix),
    }
}

/// Decides whether `a x = b` has an integer solution.
pub fn integer_solvable(a: &ExactMatrix<Integers>, b: &[BigInt]) -> bool {
    assert_eq!(b.len(), a.nrows(), "right-hand side length");
    let snf = smith_normal_form_with(a, true, false);
    let u = snf.u.expect("tracked");
    // D y = U b
    for i in 0..a.nrows() {
        let mut c = BigInt::zero();
        for (&j, e) in u.row(i).iter() {
            c += e * &b[j];
        }
        let di = snf.d.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !c.is_zero() {
                return false;
            }
        } else if !c.is_multiple_of(&di) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_check(m: &ExactMatrix<Integers>) -> SmithForm {
        let s = smith_normal_form(m);
        let u = s.u.clone().unwrap();
        let v = s.v.clone().unwrap();
        let prod = u.mul(m).unwrap().mul(&v).unwrap();
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let expected = if i == j {
                    s.d[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(prod.get(i, j), expected);
            }
        }
        for w in s.d.windows(2) {
            assert!(w[0].is_zero() && w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn coprime_diagonal() {
        let s = diag_check(&ExactMatrix::from_i64(Integers, &[vec![2, 0], vec![0, 3]]).unwrap());
        assert_eq!(s.d, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn identity_and_zero() {
        let s = diag_check(&ExactMatrix::identity(Integers, 3));
        assert_eq!(s.d, vec![BigInt::one(); 3]);
        let s = diag_check(&ExactMatrix::from_i64(Integers, &[vec![0]]).unwrap());
        assert_eq!(s.d, vec![BigInt::zero()]);
    }

    #[test]
    fn rectangular() {
        let s = diag_check(
            &ExactMatrix::from_i64(
                Integers,
                &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
            )
            .unwrap(),
        );
        assert_eq!(
            s.d,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        diag_check(
            &ExactMatrix::from_i64(Integers, &[vec![1, 2, 3, 4], vec![2, 4, 6, 8]]).unwrap(),
        );
    }

    #[test]
    fn solvability() {
        let a = ExactMatrix::from_i64(Integers, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert!(integer_solvable(&a, &[BigInt::from(4), BigInt::from(9)]));
        assert!(!integer_solvable(&a, &[BigInt::from(1), BigInt::from(9)]));
    }
}
