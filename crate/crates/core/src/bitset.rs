//! Fixed-width bit sets used for reachability in the poset engine.

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest index in `self ∩ other`.
    pub fn first_common(&self, other: &BitSet) -> Option<usize> {
        self.first_common_from(other, 0)
    }

    /// Smallest index in `self ∩ other`, assuming neither set has members
    /// below `start`.
    pub fn first_common_from(&self, other: &BitSet, start: usize) -> Option<usize> {
        let k0 = start / 64;
        self.words[k0..]
            .iter()
            .zip(&other.words[k0..])
            .enumerate()
            .find_map(|(k, (a, b))| {
                let w = a & b;
                (w != 0).then(|| (k0 + k) * 64 + w.trailing_zeros() as usize)
            })
    }

    /// Largest index in `self ∩ other`.
    pub fn last_common(&self, other: &BitSet) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .rev()
            .find_map(|(k, (a, b))| {
                let w = a & b;
                (w != 0).then(|| k * 64 + 63 - w.leading_zeros() as usize)
            })
    }

    /// Whether `a ∩ b ⊆ self`.
    pub fn contains_intersection(&self, a: &BitSet, b: &BitSet) -> bool {
        self.contains_intersection_from(a, b, 0)
    }

    /// Whether `a ∩ b ⊆ self`, assuming `a ∩ b` has no members below `start`.
    pub fn contains_intersection_from(&self, a: &BitSet, b: &BitSet, start: usize) -> bool {
        let k0 = start / 64;
        self.words[k0..]
            .iter()
            .zip(a.words[k0..].iter().zip(&b.words[k0..]))
            .all(|(s, (x, y))| x & y & !s == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
