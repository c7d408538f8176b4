//! One-box shifts and the semistandard tableaux of one-box-shift type.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{partitions_of, Composition, Partition};
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// Moves the last node of row `a` of `alpha` to the end of row `b > a`.
pub fn one_box_shift(alpha: &Partition, a: usize, b: usize) -> Result<Partition> {
    if a == 0 || a >= b {
        return Err(Error::InvalidShift(format!(
            "need 1 ≤ a < b, got a={a}, b={b}"
        )));
    }
    if alpha.part(a) <= alpha.part(a + 1) {
        return Err(Error::InvalidShift(format!(
            "alpha_{a} > alpha_{} fails ({} ≤ {}): (a, alpha_a) is not removable",
            a + 1,
            alpha.part(a),
            alpha.part(a + 1)
        )));
    }
    if alpha.part(b - 1) <= alpha.part(b) {
        return Err(Error::InvalidShift(format!(
            "alpha_{} > alpha_{b} fails ({} ≤ {}): (b, alpha_b + 1) is not addable",
            b - 1,
            alpha.part(b - 1),
            alpha.part(b)
        )));
    }
    let rows = alpha.len().max(b);
    let mut parts: Vec<usize> = (1..=rows).map(|i| alpha.part(i)).collect();
    parts[a - 1] -= 1;
    parts[b - 1] += 1;
    Partition::new(parts.clone())
        .map_err(|_| Error::InvalidShift(format!("result {parts:?} is not weakly decreasing")))
}

/// A one-box shift `beta` of `alpha`: `beta_a = alpha_a - 1`, `beta_b = alpha_b + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneBoxShift {
    alpha: Partition,
    beta: Partition,
    a: usize,
    b: usize,
}

/// The set `{T}` attached to a semistandard tableau of one-box-shift type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SemistandardSet {
    members: BTreeSet<usize>,
}

impl SemistandardSet {
    pub fn from_members(members: impl IntoIterator<Item = usize>) -> Self {
        SemistandardSet {
            members: members.into_iter().collect(),
        }
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &SemistandardSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &SemistandardSet) -> SemistandardSet {
        SemistandardSet {
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    pub fn difference(&self, other: &SemistandardSet) -> SemistandardSet {
        SemistandardSet {
            members: self.members.difference(&other.members).copied().collect(),
        }
    }

    pub fn with(&self, i: usize) -> SemistandardSet {
        let mut m = self.members.clone();
        m.insert(i);
        SemistandardSet { members: m }
    }

    pub fn without(&self, i: usize) -> SemistandardSet {
        let mut m = self.members.clone();
        m.remove(&i);
        SemistandardSet { members: m }
    }

    /// `(-1)^{|T|}`
    pub fn sign(&self) -> i64 {
        if self.members.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for SemistandardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.members.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl OneBoxShift {
    pub fn new(alpha: &Partition, a: usize, b: usize) -> Result<Self> {
        let beta = one_box_shift(alpha, a, b)?;
        Ok(OneBoxShift {
            alpha: alpha.clone(),
            beta,
            a,
            b,
        })
    }

    /// Recovers `(a, b)` from a pair of partitions; errors unless `beta` is a one-box shift of `alpha`.
    pub fn from_pair(alpha: &Partition, beta: &Partition) -> Result<Self> {
        if alpha.n() != beta.n() {
            return Err(Error::SizeMismatch(alpha.n(), beta.n()));
        }
        let rows = alpha.len().max(beta.len());
        let diff: Vec<(usize, i64)> = (1..=rows)
            .map(|i| (i, beta.part(i) as i64 - alpha.part(i) as i64))
            .filter(|&(_, d)| d != 0)
            .collect();
        match diff.as_slice() {
            [(a, -1), (b, 1)] => OneBoxShift::new(alpha, *a, *b),
            _ => Err(Error::InvalidShift(format!(
                "{beta} is not a one-box shift of {alpha}"
            ))),
        }
    }

    /// Every one-box shift of `alpha`.
    pub fn all_of(alpha: &Partition) -> Vec<OneBoxShift> {
        let mut out = Vec::new();
        for a in 1..=alpha.len() {
            for b in a + 1..=alpha.len() + 1 {
                if let Ok(s) = OneBoxShift::new(alpha, a, b) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Every one-box-shift pair among partitions of `n`.
    pub fn all_of_degree(n: usize) -> Vec<OneBoxShift> {
        partitions_of(n)
            .iter()
            .flat_map(OneBoxShift::all_of)
            .collect()
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.alpha.n()
    }

    /// Hook length `h_i` in column `alpha_b + 1` (zero for `i ≥ b`).
    pub fn hook(&self, i: usize) -> i64 {
        if i >= self.b {
            return 0;
        }
        self.alpha.part(i) as i64 - self.alpha.part(self.b) as i64 + self.b as i64 - i as i64 - 1
    }

    /// `(h_1, …, h_{b-1})`.
    pub fn hooks(&self) -> Vec<i64> {
        (1..self.b).map(|i| self.hook(i)).collect()
    }

    pub fn h_a(&self) -> i64 {
        self.hook(self.a)
    }

    /// The rows `a ≤ i < b` whose last node is removable.
    pub fn removable_set(&self) -> SemistandardSet {
        SemistandardSet::from_members(
            (self.a..self.b).filter(|&i| self.alpha.part(i) > self.alpha.part(i + 1)),
        )
    }

    pub fn is_semistandard_set(&self, set: &SemistandardSet) -> bool {
        set.contains(self.a)
            && set.members.iter().all(|&u| u >= self.a && u < self.b)
            && set
                .members
                .iter()
                .all(|&u| self.alpha.part(u) != self.alpha.part(u + 1) || set.contains(u + 1))
    }

    fn check_set(&self, set: &SemistandardSet) -> Result<()> {
        if self.is_semistandard_set(set) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{set} is not a semistandard set for {self}"
            )))
        }
    }

    /// All semistandard sets, ordered by their sorted member lists.
    pub fn semistandard_sets(&self) -> Vec<SemistandardSet> {
        let free: Vec<usize> = (self.a + 1..self.b).collect();
        let mut out: Vec<SemistandardSet> = (0u32..1 << free.len())
            .map(|mask| {
                SemistandardSet::from_members(
                    std::iter::once(self.a).chain(
                        free.iter()
                            .enumerate()
                            .filter(|(k, _)| mask >> k & 1 == 1)
                            .map(|(_, &u)| u),
                    ),
                )
            })
            .filter(|s| self.is_semistandard_set(s))
            .collect();
        out.sort_by(|x, y| x.members.iter().cmp(y.members.iter()));
        out
    }

    /// `T̂(u)` for `a ≤ u < b`: the next member of `{T}` after `u`, or `b`; `u` itself if `u ∉ {T}`.
    pub fn hat(&self, set: &SemistandardSet, u: usize) -> usize {
        assert!(u >= self.a && u < self.b, "row {u} outside a..b");
        if !set.contains(u) {
            return u;
        }
        set.members.range(u + 1..).next().copied().unwrap_or(self.b)
    }

    /// The row `u` with `T̂(u) = v`, for `a < v ≤ b`.
    pub fn hat_inverse(&self, set: &SemistandardSet, v: usize) -> usize {
        assert!(v > self.a && v <= self.b, "row {v} outside a+1..=b");
        if v < self.b && !set.contains(v) {
            return v;
        }
        *set.members.range(..v).next_back().expect("a is a member")
    }

    /// The semistandard `alpha`-tableau of type `beta` with set `set`.
    pub fn tableau(&self, set: &SemistandardSet) -> Result<Tableau> {
        self.check_set(set)?;
        Ok(Tableau::from_fn(&self.alpha, |node| {
            let u = node.row;
            if u >= self.a && u < self.b && node.col == self.alpha.part(u) {
                self.hat(set, u)
            } else {
                u
            }
        }))
    }

    /// Recovers `{T}` from a semistandard tableau of type `beta`.
    pub fn set_of(&self, t: &Tableau) -> Result<SemistandardSet> {
        if t.shape() != self.alpha {
            return Err(Error::ShapeMismatch(format!(
                "{t} does not have shape {}",
                self.alpha
            )));
        }
        if !t.is_semistandard() || !t.has_type(&self.beta.to_composition()) {
            return Err(Error::InvalidTableau(format!(
                "{t} is not semistandard of type {}",
                self.beta
            )));
        }
        let mut members = vec![self.a];
        let mut u = self.a;
        loop {
            let next = t.get(super::partition::Node {
                row: u,
                col: self.alpha.part(u),
            });
            if next >= self.b || next <= u {
                break;
            }
            members.push(next);
            u = next;
        }
        let set = SemistandardSet::from_members(members);
        if self.tableau(&set)? != *t {
            return Err(Error::InvalidTableau(format!(
                "{t} does not match the one-box-shift pattern"
            )));
        }
        Ok(set)
    }

    /// All pairs `({T}, T)`.
    pub fn enumerate(&self) -> Vec<(SemistandardSet, Tableau)> {
        self.semistandard_sets()
            .into_iter()
            .map(|s| {
                let t = self.tableau(&s).expect("enumerated sets are valid");
                (s, t)
            })
            .collect()
    }

    /// `∏ (m_i + 1)` over part sizes `alpha_b < i < alpha_a`, `m_i` the multiplicity of `i` in `alpha`.
    pub fn count_formula(&self) -> u64 {
        let lo = self.alpha.part(self.b);
        let hi = self.alpha.part(self.a);
        (lo + 1..hi)
            .map(|i| self.alpha.parts().iter().filter(|&&x| x == i).count() as u64 + 1)
            .product()
    }

    /// `T ∨ i`: the smallest semistandard set containing `{T}` and `i + 1` (for `T̂(i) ≠ i`).
    pub fn join_vee(&self, set: &SemistandardSet, i: usize) -> Result<SemistandardSet> {
        self.check_set(set)?;
        if i < self.a || i >= self.b || !set.contains(i) {
            return Err(Error::InvalidArgument(format!(
                "join with row {i} needs T̂({i}) ≠ {i}"
            )));
        }
        if self.hat(set, i) == i + 1 {
            return Ok(set.clone());
        }
        // last row with the same length as row i + 1
        let len = self.alpha.part(i + 1);
        let mut last = i + 1;
        while self.alpha.part(last + 1) == len {
            last += 1;
        }
        let mut out = set.clone();
        for r in i + 1..=last {
            out = out.with(r);
        }
        Ok(out)
    }

    /// Type of `T ψ_i`: `beta` with one symbol `i + 1` turned into `i`.
    pub fn gamma(&self, i: usize) -> Composition {
        let rows = self.beta.len().max(i + 1);
        let mut parts: Vec<usize> = (1..=rows).map(|j| self.beta.part(j)).collect();
        parts[i - 1] += 1;
        parts[i] -= 1;
        Composition::new(parts)
    }
}

impl fmt::Display for OneBoxShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) -> ({}) [a={}, b={}]",
            self.alpha, self.beta, self.a, self.b
        )
    }
}
