use crate::combinatorics::{Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::exact_algebra::{Ring, SparseVector};

use super::ModuleVector;

/// All permutations of `0..len` with their signs, in lexicographic order.
pub(crate) fn signed_permutations(len: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..len).collect();
    loop {
        let inversions = (0..len)
            .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
            .filter(|&(i, j)| current[i] > current[j])
            .count();
        out.push((current.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
        // next lexicographic permutation
        let Some(i) = (0..len.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..len)
            .rev()
            .find(|&j| current[j] > current[i])
            .expect("successor exists");
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// The terms of `labels · C_t^-`: the tabloid sending symbol `t(x)` to row `labels(x)`,
/// summed over the column stabilizer of `t` with signs.
///
/// Returns no terms when some column of `labels` repeats an entry, since the sum then
/// cancels. Otherwise the terms are pairwise distinct, so no coefficients need combining.
pub(crate) fn column_signed_terms(
    t: &Tableau,
    labels: &Tableau,
    nrows: usize,
) -> Vec<(Tabloid, i8)> {
    let n = t.size();
    let mut acc: Vec<(u64, i8)> = vec![(0, 1)];
    for c in 1..=t.num_columns() {
        let symbols = t.column(c);
        let rows = labels.column(c);
        let mut sorted = rows.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Vec::new();
        }
        let options: Vec<(u64, i8)> = signed_permutations(symbols.len())
            .into_iter()
            .map(|(sigma, sign)| {
                let code = symbols.iter().zip(&sigma).fold(0u64, |code, (&y, &k)| {
                    code | (((rows[k] - 1) as u64) << (4 * (y - 1)))
                });
                (code, sign)
            })
            .collect();
        acc = acc
            .iter()
            .flat_map(|&(code, sign)| options.iter().map(move |&(c2, s2)| (code | c2, sign * s2)))
            .collect();
    }
    acc.into_iter()
        .map(|(code, sign)| (Tabloid::from_code(code, n, nrows), sign))
        .collect()
}

/// The row-index filling of `shape`: every node of row `i` holds `i`.
pub(crate) fn row_labels(t: &Tableau) -> Tableau {
    Tableau::from_fn(&t.shape(), |x| x.row)
}

/// The polytabloid `e_t`, the signed sum of `{tπ}` over the column stabilizer of `t`.
pub fn polytabloid<R: Ring>(ring: &R, t: &Tableau) -> Result<ModuleVector<R::Elem>> {
    if !t.is_bijective() {
        return Err(Error::InvalidTableau(format!("{t} is not bijective")));
    }
    crate::limits::check_degree(t.size())?;
    Ok(signed_terms_to_vector(ring, polytabloid_terms(t)))
}

pub(crate) fn polytabloid_terms(t: &Tableau) -> Vec<(Tabloid, i8)> {
    column_signed_terms(t, &row_labels(t), t.rows().len())
}

pub(crate) fn signed_terms_to_vector<R: Ring>(
    ring: &R,
    terms: Vec<(Tabloid, i8)>,
) -> ModuleVector<R::Elem> {
    let one = ring.one();
    let minus = ring.neg(&one);
    SparseVector::from_terms(
        ring,
        terms
            .into_iter()
            .map(|(k, s)| (k, if s > 0 { one.clone() } else { minus.clone() })),
    )
}

/// `labels · C_t^-` as a vector of tabloids with `nrows` rows.
///
/// `t` is a bijective tableau and `labels` any filling of the same shape by `1..=nrows`.
pub fn column_antisymmetrize<R: Ring>(
    ring: &R,
    t: &Tableau,
    labels: &Tableau,
    nrows: usize,
) -> Result<ModuleVector<R::Elem>> {
    if !t.is_bijective() {
        return Err(Error::InvalidTableau(format!("{t} is not bijective")));
    }
    if t.shape() != labels.shape() {
        return Err(Error::ShapeMismatch(format!("{t} vs {labels}")));
    }
    if labels.max_entry() > nrows {
        return Err(Error::InvalidTableau(format!(
            "{labels} has an entry above {nrows}"
        )));
    }
    Ok(signed_terms_to_vector(
        ring,
        column_signed_terms(t, labels, nrows),
    ))
}
