//! Subsets of a universe `{0, .., n-1}` with `n <= 64`, packed into one word.

use std::fmt;

/// Largest universe a [`Subset`] can describe.
pub const MAX_UNIVERSE: usize = 64;

/// A set of element indices below [`MAX_UNIVERSE`].
///
/// The derived ordering compares the underlying bit patterns, which is the
/// tie-breaking order used throughout the crate ("least bit pattern").
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All elements `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_UNIVERSE,
            "universe of size {n} exceeds {MAX_UNIVERSE}"
        );
        if n == MAX_UNIVERSE {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(a: usize) -> Self {
        Subset::EMPTY.with(a)
    }

    #[inline]
    pub fn contains(self, a: usize) -> bool {
        a < MAX_UNIVERSE && self.0 >> a & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize) -> bool {
        debug_assert!(a < MAX_UNIVERSE);
        let fresh = !self.contains(a);
        self.0 |= 1 << a;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, a: usize) {
        self.0 &= !(1 << a);
    }

    #[must_use]
    pub fn with(mut self, a: usize) -> Self {
        self.insert(a);
        self
    }

    #[must_use]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Least element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Formats the set using element labels, e.g. `{a, 1}`.
    pub fn display_with<'a, F>(self, label: F) -> String
    where
        F: Fn(usize) -> &'a str,
    {
        let parts: Vec<&str> = self.iter().map(label).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}
