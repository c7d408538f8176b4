use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Composition;
use super::permutation::Permutation;
use super::tableau::Tableau;
use crate::error::{Error, Result};
use crate::limits::HARD_MAX_DEGREE;

/// An ordered set partition of `{1, …, n}` into rows (a row-equivalence class of tableaux).
///
/// Packed as four bits per symbol: bits `4(k-1)..4k` hold the 0-based row of symbol `k`.
/// The derived order compares the row of `n` first, then `n-1`, and so on; it refines the
/// dominance order on tabloids, which makes the tabloid of a standard tableau the largest
/// term of its polytabloid. [`Tabloid::canonical_cmp`] gives the lexicographic order on
/// sorted rows used for presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    code: u64,
    n: u8,
    nrows: u8,
}

impl Tabloid {
    /// Builds a tabloid from its rows (any order within a row). Empty rows are allowed.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        if n > HARD_MAX_DEGREE || rows.len() > 16 {
            return Err(Error::DegreeTooLarge {
                n,
                limit: HARD_MAX_DEGREE,
            });
        }
        let mut seen = vec![false; n + 1];
        let mut code = 0u64;
        for (r, row) in rows.iter().enumerate() {
            for &x in row {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidTableau(format!(
                        "rows {rows:?} do not partition 1..{n}"
                    )));
                }
                seen[x] = true;
                code |= (r as u64) << (4 * (x - 1));
            }
        }
        Ok(Tabloid {
            code,
            n: n as u8,
            nrows: rows.len() as u8,
        })
    }

    /// `{t}` for a bijective tableau `t`.
    pub fn of_tableau(t: &Tableau) -> Result<Self> {
        if !t.is_bijective() {
            return Err(Error::InvalidTableau(format!("{t} is not bijective")));
        }
        Tabloid::from_rows(t.rows())
    }

    /// The tabloid placing symbol `s(x)` in row `labels(x)`, for every node `x`.
    ///
    /// `s` is bijective of the same shape as `labels`; `nrows` fixes the number of rows.
    pub fn from_labelled(s: &Tableau, labels: &Tableau, nrows: usize) -> Result<Self> {
        if s.shape() != labels.shape() {
            return Err(Error::ShapeMismatch(format!("{s} vs {labels}")));
        }
        if labels.max_entry() > nrows {
            return Err(Error::InvalidTableau(format!("label exceeds {nrows} rows")));
        }
        let mut code = 0u64;
        for (rs, rl) in s.rows().iter().zip(labels.rows()) {
            for (&x, &l) in rs.iter().zip(rl) {
                code |= ((l - 1) as u64) << (4 * (x - 1));
            }
        }
        Ok(Tabloid {
            code,
            n: s.size() as u8,
            nrows: nrows as u8,
        })
    }

    pub(crate) fn from_code(code: u64, n: usize, nrows: usize) -> Self {
        Tabloid {
            code,
            n: n as u8,
            nrows: nrows as u8,
        }
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn num_rows(&self) -> usize {
        self.nrows as usize
    }

    /// 1-based row containing `symbol`.
    pub fn row_of(&self, symbol: usize) -> usize {
        ((self.code >> (4 * (symbol - 1))) & 0xF) as usize + 1
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.nrows as usize];
        for k in 1..=self.n as usize {
            rows[self.row_of(k) - 1].push(k);
        }
        rows
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows().iter().map(Vec::len).collect())
    }

    /// `{t}π = {tπ}`.
    pub fn act(&self, pi: &Permutation) -> Result<Self> {
        if pi.degree() != self.n as usize {
            return Err(Error::DegreeMismatch {
                expected: self.n as usize,
                found: pi.degree(),
            });
        }
        Ok(self.act_unchecked(pi))
    }

    pub(crate) fn act_unchecked(&self, pi: &Permutation) -> Self {
        let mut code = 0u64;
        for k in 1..=self.n as usize {
            code |= ((self.row_of(k) - 1) as u64) << (4 * (pi.apply(k) - 1));
        }
        Tabloid { code, ..*self }
    }

    /// `{t}(i j)`: exchanges the rows of symbols `i` and `j`.
    pub fn swap_symbols(&self, i: usize, j: usize) -> Self {
        let (ri, rj) = (self.row_of(i), self.row_of(j));
        if ri == rj {
            return *self;
        }
        self.with_symbol_in_row(i, rj).with_symbol_in_row(j, ri)
    }

    /// Moves `symbol` to row `row` (1-based).
    pub fn with_symbol_in_row(&self, symbol: usize, row: usize) -> Self {
        let shift = 4 * (symbol - 1);
        let code = (self.code & !(0xF << shift)) | (((row - 1) as u64) << shift);
        Tabloid { code, ..*self }
    }

    /// Lexicographic comparison of the sorted rows.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.rows().cmp(&other.rows())
    }

    /// Forgets the largest symbol `n`, keeping `nrows` rows.
    pub fn delete_last(&self, nrows: usize) -> Self {
        let n = self.n as usize;
        let mask = if n == 1 {
            0
        } else {
            (1u64 << (4 * (n - 1))) - 1
        };
        Tabloid {
            code: self.code & mask,
            n: self.n - 1,
            nrows: nrows as u8,
        }
    }
}

impl fmt::Display for Tabloid {
    /// Rows separated by `|`, e.g. `123|45|6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n > 9;
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(usize::to_string).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{}", rows.join("|"))
    }
}

impl Serialize for Tabloid {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tabloid {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Tabloid::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// All tabloids with row sizes `shape`, in the canonical (lexicographic on sorted rows) order.
pub fn tabloids_of(shape: &Composition) -> Vec<Tabloid> {
    let n = shape.n();
    let nrows = shape.len();
    let mut out = Vec::new();
    let mut assigned = vec![usize::MAX; n + 1];

    fn fill(
        shape: &Composition,
        row: usize,
        start: usize,
        left: usize,
        assigned: &mut Vec<usize>,
        out: &mut Vec<Tabloid>,
        n: usize,
        nrows: usize,
    ) {
        if row == nrows {
            let mut code = 0u64;
            for (k, &r) in assigned.iter().enumerate().skip(1) {
                code |= (r as u64) << (4 * (k - 1));
            }
            out.push(Tabloid::from_code(code, n, nrows));
            return;
        }
        if left == 0 {
            fill(
                shape,
                row + 1,
                1,
                shape.part(row + 2),
                assigned,
                out,
                n,
                nrows,
            );
            return;
        }
        for x in start..=n {
            if assigned[x] != usize::MAX {
                continue;
            }
            assigned[x] = row;
            fill(shape, row, x + 1, left - 1, assigned, out, n, nrows);
            assigned[x] = usize::MAX;
        }
    }

    if nrows == 0 {
        if n == 0 {
            out.push(Tabloid::from_code(0, 0, 0));
        }
        return out;
    }
    fill(
        shape,
        0,
        1,
        shape.part(1),
        &mut assigned,
        &mut out,
        n,
        nrows,
    );
    out
}
