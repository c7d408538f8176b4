use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram; rows and columns are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::InvalidArgument(format!(
                "node ({row},{col}) must have 1-based coordinates"
            )));
        }
        Ok(Node { row, col })
    }

    /// Integer residue `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Residue `col - row`; reduced into `0..p` when `p > 0`.
    pub fn residue(&self, p: u64) -> i64 {
        reduce_residue(self.content(), p)
    }
}

/// Canonical representative of an integer residue modulo `p` (`p = 0` leaves it unchanged).
pub fn reduce_residue(r: i64, p: u64) -> i64 {
    if p == 0 {
        r
    } else {
        r.rem_euclid(p as i64)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Node {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = inner.split(',').map(|x| x.trim().parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(r)), Some(Ok(c)), None) => Node::new(r, c),
            _ => Err(Error::Parse(format!(
                "expected a node like (2,3), got {s:?}"
            ))),
        }
    }
}

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and trims trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {} < {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(
                "zero part before a positive part".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based); zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            panic!("row indices are 1-based");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (1..=l).map(move |c| Node { row: i + 1, col: c }))
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Node {
                row: i,
                col: self.part(i),
            })
            .collect()
    }

    /// Addable nodes, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Node {
                row: i,
                col: self.part(i) + 1,
            })
            .collect()
    }

    pub fn remove_node(&self, node: Node) -> Result<Partition> {
        if !self.removable_nodes().contains(&node) {
            return Err(Error::InvalidArgument(format!(
                "{node} is not a removable node of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        Partition::new(parts)
    }

    pub fn add_node(&self, node: Node) -> Result<Partition> {
        if !self.addable_nodes().contains(&node) {
            return Err(Error::InvalidArgument(format!(
                "{node} is not an addable node of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Partition::new(parts)
    }

    /// Dominance order: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let k = self.len().max(other.len());
        let (mut s, mut t) = (0, 0);
        for i in 1..=k {
            s += self.part(i);
            t += other.part(i);
            if s < t {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&l| l >= c).count())
                .collect(),
        }
    }

    pub fn hook_length(&self, node: Node) -> usize {
        let conj = self.conjugate();
        (self.part(node.row) - node.col) + (conj.part(node.col) - node.row) + 1
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn count_standard_tableaux(&self) -> u64 {
        let n = self.n() as u64;
        let mut num: u128 = (1..=n as u128).product();
        for node in self.nodes() {
            num /= self.hook_length(node) as u128;
        }
        num as u64
    }

    /// Multiset of residues modulo `p` of all nodes, as counts indexed by residue class.
    pub fn residue_counts(&self, p: u64) -> Vec<usize> {
        assert!(p > 0);
        let mut counts = vec![0; p as usize];
        for node in self.nodes() {
            counts[node.residue(p) as usize] += 1;
        }
        counts
    }

    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad part {x:?}: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// A finite sequence of nonnegative integers; the row sizes of tabloids of general type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based); zero beyond the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The partition with the same nonzero parts if already weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.parts.clone()).ok()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.to_composition()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition::new(parse_parts(s)?))
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            go(rest - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn residues() {
        assert_eq!(Node { row: 1, col: 1 }.residue(0), 0);
        assert_eq!(Node { row: 3, col: 1 }.residue(0), -2);
        assert_eq!(Node { row: 1, col: 4 }.residue(5), 3);
        assert_eq!(Node { row: 3, col: 1 }.residue(5), 3);
    }

    #[test]
    fn removable_and_addable() {
        let nodes = |v: Vec<(usize, usize)>| {
            v.into_iter()
                .map(|(row, col)| Node { row, col })
                .collect::<Vec<_>>()
        };
        assert_eq!(
            p("4,3,1").removable_nodes(),
            nodes(vec![(1, 4), (2, 3), (3, 1)])
        );
        assert_eq!(p("5").removable_nodes(), nodes(vec![(1, 5)]));
        assert_eq!(p("5").addable_nodes(), nodes(vec![(1, 6), (2, 1)]));
        assert_eq!(p("3,3").removable_nodes(), nodes(vec![(2, 3)]));
        assert_eq!(Partition::empty().addable_nodes(), nodes(vec![(1, 1)]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p("4,3").dominates(&p("3,3,1")).unwrap());
        assert!(p("3,2").dominates(&p("3,2")).unwrap());
        assert!(!p("3,3").dominates(&p("4,1,1")).unwrap());
        assert!(!p("4,1,1").dominates(&p("3,3")).unwrap());
        assert_eq!(p("3").dominates(&p("2")), Err(Error::SizeMismatch(3, 2)));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("4,3,1").parts(), &[4, 3, 1]);
        assert_eq!(p("(2,2,0)").parts(), &[2, 2]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p("4,3,1").to_string(), "4,3,1");
        assert_eq!("(2,3)".parse::<Node>().unwrap(), Node { row: 2, col: 3 });
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(8).len(), 22);
        assert_eq!(p("2,1").count_standard_tableaux(), 2);
        assert_eq!(p("4,3,1").count_standard_tableaux(), 70);
        let total: u64 = partitions_of(6)
            .iter()
            .map(|q| q.count_standard_tableaux().pow(2))
            .sum();
        assert_eq!(total, 720);
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
    }
}
