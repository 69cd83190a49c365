use std::fmt;

/// Subset of a ground set `{0, .., 63}` packed into one machine word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(pub u64);

/// Width of [`ElementSet`]; no ground set can be larger.
pub const MAX_ELEMENTS: usize = 64;

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn union(self, o: Self) -> Self {
        ElementSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Self) -> Self {
        ElementSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Self) -> Self {
        ElementSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min_element(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(e)
        })
    }

    /// Re-indexes the members of `self` lying in `keep` so that the `i`-th
    /// element of `keep` becomes `i`.
    pub fn compress(self, keep: ElementSet) -> ElementSet {
        let mut out = 0u64;
        for (i, e) in keep.iter().enumerate() {
            if self.contains(e) {
                out |= 1 << i;
            }
        }
        ElementSet(out)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let s = ElementSet::from_elements([0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.min_element(), Some(0));
        assert_eq!(ElementSet::full(64).len(), 64);
        assert!(ElementSet::from_elements([3]).is_subset(s));
    }

    #[test]
    fn compress_reindexes() {
        let keep = ElementSet::from_elements([1, 3, 4]);
        let s = ElementSet::from_elements([0, 3, 4]);
        assert_eq!(s.compress(keep), ElementSet::from_elements([1, 2]));
    }
}
