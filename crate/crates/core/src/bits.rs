//! Fixed-capacity bit sets used for vertex and edge subsets.

use std::fmt;
use std::ops::Deref;

use serde::{Serialize, Serializer};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A dense bit set over `0..len`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, items: I) -> Self {
        let mut s = Self::new(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub(crate) fn from_words(len: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self {
            len,
            words: words.to_vec(),
        }
    }

    /// Capacity of the universe, not the number of members.
    pub fn capacity(&self) -> usize {
        self.len
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit {i} outside universe of size {}",
            self.len
        );
        let (w, b) = (i / WORD, i % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> BitSet {
        BitSet::full(self.len).difference(self)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

macro_rules! bitset_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(BitSet);

        impl $name {
            pub fn new(len: usize) -> Self {
                Self(BitSet::new(len))
            }

            pub fn full(len: usize) -> Self {
                Self(BitSet::full(len))
            }

            pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, items: I) -> Self {
                Self(BitSet::from_indices(len, items))
            }

            pub fn insert(&mut self, i: usize) -> bool {
                self.0.insert(i)
            }

            pub fn remove(&mut self, i: usize) {
                self.0.remove(i)
            }

            pub fn union_with(&mut self, other: &Self) {
                self.0.union_with(&other.0)
            }

            pub fn intersect_with(&mut self, other: &Self) {
                self.0.intersect_with(&other.0)
            }

            pub fn difference_with(&mut self, other: &Self) {
                self.0.difference_with(&other.0)
            }

            pub fn union(&self, other: &Self) -> Self {
                Self(self.0.union(&other.0))
            }

            pub fn intersection(&self, other: &Self) -> Self {
                Self(self.0.intersection(&other.0))
            }

            pub fn difference(&self, other: &Self) -> Self {
                Self(self.0.difference(&other.0))
            }

            pub fn complement(&self) -> Self {
                Self(self.0.complement())
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            pub fn as_bits(&self) -> &BitSet {
                &self.0
            }
        }

        impl Deref for $name {
            type Target = BitSet;

            fn deref(&self) -> &BitSet {
                &self.0
            }
        }

        impl From<BitSet> for $name {
            fn from(bits: BitSet) -> Self {
                Self(bits)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter())
            }
        }
    };
}

bitset_newtype!(
    /// A subset of the vertices `0..n` of a particular graph.
    VertexSet
);

bitset_newtype!(
    /// A subset of a graph's edges, indexed by canonical edge id.
    EdgeSet
);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn insert_and_iterate_across_word_boundary() {
        let s = BitSet::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert_eq!(s.count(), 4);
        assert!(s.contains(64));
        assert!(!s.contains(65));
        assert!(!s.contains(500));
    }

    #[test]
    fn complement_respects_capacity() {
        let s = BitSet::from_indices(5, [1, 3]);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
        assert!(BitSet::full(70).is_full());
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(a in proptest::collection::btree_set(0usize..100, 0..40),
                                        b in proptest::collection::btree_set(0usize..100, 0..40)) {
            let sa = BitSet::from_indices(100, a.iter().copied());
            let sb = BitSet::from_indices(100, b.iter().copied());
            prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection(&sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.difference(&sb).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        }
    }
}
