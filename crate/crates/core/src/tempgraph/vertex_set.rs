use std::fmt;

const WORD: usize = 64;

/// Dense bitset over vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(WORD)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = VertexSet {
            n,
            words: vec![u64::MAX; n.div_ceil(WORD)],
        };
        set.clear_tail();
        set
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut set = VertexSet::new(n);
        set.insert(v);
        set
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut set = VertexSet::new(n);
        for v in items {
            set.insert(v);
        }
        set
    }

    /// Size of the universe, not the number of members.
    pub fn capacity(&self) -> usize {
        self.n
    }

    /// Returns `true` if `v` was not already present.
    ///
    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Smallest member.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.n % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn full_set_has_no_stray_bits() {
        for n in [0, 1, 63, 64, 65, 130] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert_eq!(full.iter().count(), n);
            assert!(full.is_full());
        }
    }

    #[test]
    fn insert_remove() {
        let mut s = VertexSet::new(10);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert!(s.contains(3));
        assert!(!s.contains(11));
        assert!(s.remove(3));
        assert!(!s.remove(3));
        assert!(s.is_empty());
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            a in proptest::collection::btree_set(0usize..150, 0..60),
            b in proptest::collection::btree_set(0usize..150, 0..60),
        ) {
            let sa = VertexSet::from_iter(150, a.iter().copied());
            let sb = VertexSet::from_iter(150, b.iter().copied());
            let u: BTreeSet<_> = a.union(&b).copied().collect();
            let i: BTreeSet<_> = a.intersection(&b).copied().collect();
            let d: BTreeSet<_> = a.difference(&b).copied().collect();
            prop_assert_eq!(sa.union(&sb).iter().collect::<BTreeSet<_>>(), u);
            prop_assert_eq!(sa.intersection(&sb).iter().collect::<BTreeSet<_>>(), i.clone());
            prop_assert_eq!(sa.difference(&sb).iter().collect::<BTreeSet<_>>(), d);
            prop_assert_eq!(sa.intersection_len(&sb), i.len());
            prop_assert_eq!(sa.intersects(&sb), !i.is_empty());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.min(), a.iter().next().copied());
        }
    }
}
