use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{Composition, Node, Partition};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A filling of a Young diagram by positive integers (repeats allowed).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if shape.contains(&0) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        Partition::new(shape).map_err(|e| Error::InvalidTableau(format!("row lengths: {e}")))?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    /// Fills `shape` with `f(node)`.
    pub fn from_fn(shape: &Partition, mut f: impl FnMut(Node) -> usize) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &l)| (1..=l).map(|c| f(Node { row: i + 1, col: c })).collect())
            .collect();
        Tableau { rows }
    }

    /// The standard tableau numbering the nodes along rows: `1 2 … α_1` in the first row, and so on.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut k = 0;
        Tableau::from_fn(shape, |_| {
            k += 1;
            k
        })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated on construction")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, node: Node) -> usize {
        self.rows[node.row - 1][node.col - 1]
    }

    pub fn set(&mut self, node: Node, value: usize) {
        assert!(value > 0);
        self.rows[node.row - 1][node.col - 1] = value;
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|r| r.len() >= col)
            .map(|r| r[col - 1])
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Position of `symbol`, for bijective tableaux.
    pub fn position(&self, symbol: usize) -> Option<Node> {
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(c) = r.iter().position(|&x| x == symbol) {
                return Some(Node {
                    row: i + 1,
                    col: c + 1,
                });
            }
        }
        None
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    fn columns_strictly_increase(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }

    pub fn is_standard(&self) -> bool {
        self.is_bijective()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns_strictly_increase()
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self.columns_strictly_increase()
    }

    /// Entry counts `(#1, #2, …, #max)`.
    pub fn content(&self) -> Composition {
        let mut c = vec![0; self.max_entry()];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        Composition::new(c)
    }

    /// Whether the tableau has `counts[i]` entries equal to `i + 1` (trailing zero counts allowed).
    pub fn has_type(&self, counts: &Composition) -> bool {
        let c = self.content();
        (1..=c.len().max(counts.len())).all(|i| c.part(i) == counts.part(i))
    }

    /// `tπ`: apply `π` to every entry.
    pub fn act(&self, pi: &Permutation) -> Result<Tableau> {
        if self.max_entry() > pi.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.max_entry(),
                found: pi.degree(),
            });
        }
        Ok(Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| pi.apply(x)).collect())
                .collect(),
        })
    }

    /// Tableaux row equivalent to `self` (distinct rearrangements within rows).
    pub fn row_equivalents(&self) -> Vec<Tableau> {
        let per_row: Vec<Vec<Vec<usize>>> =
            self.rows.iter().map(|r| distinct_arrangements(r)).collect();
        let mut out = vec![Vec::new()];
        for options in &per_row {
            let mut next = Vec::with_capacity(out.len() * options.len());
            for prefix in &out {
                for o in options {
                    let mut p: Vec<Vec<usize>> = prefix.clone();
                    p.push(o.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(|rows| Tableau { rows }).collect()
    }

    /// Display with aligned columns; `mark` (if any) is drawn as `•`.
    pub fn pretty(&self, mark: Option<usize>) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for r in &self.rows {
            let cells: Vec<String> = r
                .iter()
                .map(|&x| {
                    let s = if Some(x) == mark {
                        "•".to_string()
                    } else {
                        x.to_string()
                    };
                    format!("{s:>width$}")
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// All distinct orderings of a multiset, in lexicographic order.
pub(crate) fn distinct_arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let n = cur.len();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| cur[j] > cur[i])
            .expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    /// Compact form `1234/567`, or comma-separated rows when an entry exceeds 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() > 9;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(usize::to_string).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    /// Accepts `1234/567` (single-digit entries) or `10,11/12` (comma separated).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let wide = s.contains(',');
        let rows = s
            .split('/')
            .map(|row| {
                if wide {
                    row.split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<usize>()
                                .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
                        })
                        .collect::<Result<Vec<_>>>()
                } else {
                    row.trim()
                        .chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("bad entry {c:?}")))
                        })
                        .collect::<Result<Vec<_>>>()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// All standard tableaux of `shape`, sorted by their row words (row reading first).
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &Partition, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = shape.n();
        if n == 0 {
            out.push(Vec::new());
            return;
        }
        for node in shape.removable_nodes() {
            let smaller = shape.remove_node(node).expect("removable");
            let mut sub = Vec::new();
            go(&smaller, &mut sub);
            for mut rows in sub {
                if node.row > rows.len() {
                    rows.push(Vec::new());
                }
                rows[node.row - 1].push(n);
                out.push(rows);
            }
        }
    }
    let mut raw = Vec::new();
    go(shape, &mut raw);
    let mut out: Vec<Tableau> = raw.into_iter().map(|rows| Tableau { rows }).collect();
    out.sort_by(|a, b| a.rows.concat().cmp(&b.rows.concat()));
    out
}

/// All semistandard tableaux of `shape` with `content.part(i)` entries equal to `i`.
pub fn semistandard_tableaux(shape: &Partition, content: &Composition) -> Vec<Tableau> {
    if shape.n() != content.n() {
        return Vec::new();
    }
    let rows = shape.len();
    let mut out = Vec::new();
    let mut current = vec![0usize; rows];
    let mut filling: Vec<Vec<usize>> = vec![Vec::new(); rows];

    #[allow(clippy::too_many_arguments)]
    fn strips(
        shape: &Partition,
        content: &Composition,
        symbol: usize,
        current: &mut Vec<usize>,
        filling: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if symbol > content.len() {
            if current.iter().zip(shape.parts()).all(|(c, s)| c == s) {
                out.push(Tableau {
                    rows: filling.clone(),
                });
            }
            return;
        }
        let old = current.clone();
        place(
            shape,
            content,
            symbol,
            0,
            content.part(symbol),
            &old,
            current,
            filling,
            out,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn place(
        shape: &Partition,
        content: &Composition,
        symbol: usize,
        row: usize,
        remaining: usize,
        old: &[usize],
        current: &mut Vec<usize>,
        filling: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if remaining == 0 {
            strips(shape, content, symbol + 1, current, filling, out);
            return;
        }
        if row >= current.len() {
            return;
        }
        let cap_shape = shape.part(row + 1) - old[row];
        let cap_strip = if row == 0 {
            usize::MAX
        } else {
            old[row - 1] - old[row]
        };
        let max = remaining.min(cap_shape).min(cap_strip);
        for x in (0..=max).rev() {
            current[row] = old[row] + x;
            filling[row].extend(std::iter::repeat_n(symbol, x));
            place(
                shape,
                content,
                symbol,
                row + 1,
                remaining - x,
                old,
                current,
                filling,
                out,
            );
            let len = filling[row].len();
            filling[row].truncate(len - x);
            current[row] = old[row];
        }
    }

    strips(shape, content, 1, &mut current, &mut filling, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let t: Tableau = "1234/567".parse().unwrap();
        assert_eq!(t.shape(), p("4,3"));
        assert_eq!(t.to_string(), "1234/567");
        assert!(t.is_standard());
        let wide: Tableau = "1,2,10/3".parse().unwrap();
        assert_eq!(wide.to_string(), "1,2,10/3");
        assert!("12/345".parse::<Tableau>().is_err());
    }

    #[test]
    fn standard_counts() {
        for shape in ["4,3,1", "3,2,1", "2,2", "5", "1,1,1"] {
            let s = p(shape);
            let all = standard_tableaux(&s);
            assert_eq!(all.len() as u64, s.count_standard_tableaux());
            assert!(all.iter().all(Tableau::is_standard));
            assert_eq!(all[0], Tableau::row_reading(&s));
        }
    }

    #[test]
    fn semistandard_examples() {
        let ss = semistandard_tableaux(&p("4,3"), &Composition::new(vec![3, 3, 1]));
        let shown: Vec<String> = ss.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["1112/223", "1113/222"]);
        // Kostka number K_{(3,2),(2,2,1)} = 2
        assert_eq!(
            semistandard_tableaux(&p("3,2"), &Composition::new(vec![2, 2, 1])).len(),
            2
        );
        // type equal to shape: a single tableau
        assert_eq!(
            semistandard_tableaux(&p("3,2,2"), &Composition::new(vec![3, 2, 2])).len(),
            1
        );
    }

    #[test]
    fn row_equivalent_count() {
        let t: Tableau = "1112/223".parse().unwrap();
        assert_eq!(t.row_equivalents().len(), 4 * 3);
    }

    #[test]
    fn pretty_marks_symbol() {
        let t: Tableau = "1234/567/8".parse().unwrap();
        assert_eq!(t.pretty(Some(8)), "1 2 3 4\n5 6 7\n•\n");
    }
}
