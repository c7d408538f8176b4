use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}`, acting on the right.
///
/// `images[k - 1]` is the image of `k`. Products follow the right-action
/// convention: `sigma.then(tau)` applies `sigma` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut images: Vec<usize> = (1..=n).collect();
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::InvalidPermutation(format!(
                        "symbol {x} out of range 1..{n}"
                    )));
                }
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
            acc = acc.then(&Permutation::from_images(images)?);
        }
        Ok(acc)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(
            i >= 1 && j >= 1 && i <= n && j <= n,
            "transposition out of range"
        );
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    /// The long cycle `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (1..=n).map(|k| if k == n { 1 } else { k + 1 }).collect(),
        }
    }

    /// Generators `(1 2)` and `(1 2 … n)` of the symmetric group of degree `n`
    /// (fewer when `n < 3`, where they would be redundant or trivial).
    pub fn standard_generators(n: usize) -> Vec<Permutation> {
        match n {
            0 | 1 => Vec::new(),
            2 => vec![Permutation::transposition(2, 1, 2)],
            _ => vec![
                Permutation::transposition(n, 1, 2),
                Permutation::long_cycle(n),
            ],
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Right-action product: first `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    pub fn sign(&self) -> i64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut sign = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Extends to degree `m ≥ n` by fixing the new symbols.
    pub fn extend(&self, m: usize) -> Permutation {
        assert!(m >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=m);
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// All permutations of degree `n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
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

    fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                c.push(k);
                k = self.apply(k);
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    /// Parses an image list such as `2,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let images: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|x| x.trim().parse::<usize>()).collect();
        Permutation::from_images(images.map_err(|e| Error::Parse(e.to_string()))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let s = Permutation::transposition(3, 1, 2);
        let t = Permutation::transposition(3, 2, 3);
        // 1 -> 2 -> 3
        assert_eq!(s.then(&t).apply(1), 3);
        assert_eq!(s.then(&t).sign(), 1);
        assert_eq!(s.then(&s.inverse()), Permutation::identity(3));
    }

    #[test]
    fn cycles_and_display() {
        let c = Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(c.to_string(), "(1 2 3)");
        assert_eq!(Permutation::long_cycle(4).to_string(), "(1 2 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::from_images(vec![1, 1]).is_err());
    }

    #[test]
    fn enumerates_all() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
    }
}
