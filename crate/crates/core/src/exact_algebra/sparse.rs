use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ring::Ring;

/// A finitely supported vector with keys of type `K`; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseVector<K: Ord, E> {
    entries: BTreeMap<K, E>,
}

impl<K: Ord, E> Default for SparseVector<K, E> {
    fn default() -> Self {
        SparseVector {
            entries: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, E: Clone> SparseVector<K, E> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from `(key, value)` pairs, summing repeated keys.
    pub fn from_terms<R, I>(ring: &R, terms: I) -> Self
    where
        R: Ring<Elem = E>,
        I: IntoIterator<Item = (K, E)>,
    {
        let mut v = Self::new();
        for (k, e) in terms {
            v.add_term(ring, k, &e);
        }
        v
    }

    pub fn unit<R: Ring<Elem = E>>(ring: &R, key: K) -> Self {
        let mut v = Self::new();
        v.entries.insert(key, ring.one());
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> Option<&E> {
        self.entries.get(key)
    }

    pub fn coeff<R: Ring<Elem = E>>(&self, ring: &R, key: &K) -> E {
        self.entries
            .get(key)
            .cloned()
            .unwrap_or_else(|| ring.zero())
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &E)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> {
        self.entries.keys()
    }

    pub fn last(&self) -> Option<(&K, &E)> {
        self.entries.last_key_value()
    }

    pub fn add_term<R: Ring<Elem = E>>(&mut self, ring: &R, key: K, value: &E) {
        if ring.is_zero(value) {
            return;
        }
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                ring.add_assign(slot.get_mut(), value);
                if ring.is_zero(slot.get()) {
                    slot.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled<R: Ring<Elem = E>>(&mut self, ring: &R, factor: &E, other: &Self) {
        if ring.is_zero(factor) {
            return;
        }
        for (k, e) in &other.entries {
            self.add_term(ring, k.clone(), &ring.mul(factor, e));
        }
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(ring, &ring.one(), other);
        out
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(ring, &ring.neg(&ring.one()), other);
        out
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, factor: &E) -> Self {
        let mut out = Self::new();
        if ring.is_zero(factor) {
            return out;
        }
        for (k, e) in &self.entries {
            let p = ring.mul(factor, e);
            if !ring.is_zero(&p) {
                out.entries.insert(k.clone(), p);
            }
        }
        out
    }

    /// Applies a ring homomorphism coefficient-wise, dropping entries that become zero.
    pub fn map_ring<S: Ring>(
        &self,
        target: &S,
        f: impl Fn(&E) -> S::Elem,
    ) -> SparseVector<K, S::Elem> {
        let mut out = SparseVector::new();
        for (k, e) in &self.entries {
            let v = f(e);
            if !target.is_zero(&v) {
                out.entries.insert(k.clone(), v);
            }
        }
        out
    }

    /// Relabels keys; keys that collide are summed.
    pub fn map_keys<L: Ord + Clone, R: Ring<Elem = E>>(
        &self,
        ring: &R,
        f: impl Fn(&K) -> L,
    ) -> SparseVector<L, E> {
        let mut out = SparseVector::new();
        for (k, e) in &self.entries {
            out.add_term(ring, f(k), e);
        }
        out
    }

    /// Relabels keys by an injective map; no coefficients are combined.
    pub fn map_keys_injective<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> SparseVector<L, E> {
        let entries: BTreeMap<L, E> = self
            .entries
            .iter()
            .map(|(k, e)| (f(k), e.clone()))
            .collect();
        debug_assert_eq!(
            entries.len(),
            self.entries.len(),
            "key map is not injective"
        );
        SparseVector { entries }
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (K, E)> {
        self.entries.into_iter()
    }

    pub fn remove(&mut self, key: &K) -> Option<E> {
        self.entries.remove(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::ring::PrimeField;

    #[test]
    fn cancellation_removes_entries() {
        let f = PrimeField::new(5).unwrap();
        let mut v = SparseVector::from_terms(&f, [(1usize, 2u64), (3, 4)]);
        v.add_term(&f, 1, &3);
        assert_eq!(v.len(), 1);
        assert_eq!(v.coeff(&f, &3), 4);
        assert_eq!(v.coeff(&f, &1), 0);
    }

    #[test]
    fn scaled_addition() {
        let f = PrimeField::new(7).unwrap();
        let a = SparseVector::from_terms(&f, [(0usize, 1u64), (1, 2)]);
        let b = SparseVector::from_terms(&f, [(1usize, 1u64), (2, 1)]);
        let mut c = a.clone();
        c.add_scaled(&f, &5, &b);
        assert_eq!(c, SparseVector::from_terms(&f, [(0usize, 1u64), (2, 5)]));
        assert_eq!(a.sub(&f, &a), SparseVector::new());
    }
}
