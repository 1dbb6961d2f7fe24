//! Bitset subsets of a small indexed carrier.
//!
//! Every carrier in this crate (poset elements, universes, closed-set
//! families) is enumerated `0..n` with `n <= 64`, so a subset is one `u64`.

use std::cmp::Ordering;
use std::fmt;

/// Hard upper bound on carrier size imposed by the `u64` representation.
pub const MAX_CARRIER: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of size {n} exceeds {MAX_CARRIER}");
        if n == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_CARRIER);
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_CARRIER);
        Subset(self.0 | (1u64 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        if i >= MAX_CARRIER {
            return self;
        }
        Subset(self.0 & !(1u64 << i))
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

    /// Complement relative to `{0..n}`.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        Subset::full(n).difference(self)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending index order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Every subset of `self`, starting with `self` and ending with the empty set.
    pub fn subsets(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Total order used for canonical output: cardinality first, then the
    /// ascending member lists compared lexicographically.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// Renders `{a,b}` with the carrier's labels.
    pub fn render(self, labels: &[String]) -> String {
        let names: Vec<&str> = self
            .iter()
            .map(|i| labels.get(i).map_or("?", String::as_str))
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
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

impl ExactSizeIterator for Members {}

pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// All subsets of `{0..n}` in canonical order.
pub fn all_subsets_canonical(n: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = Subset::full(n).subsets().collect();
    all.sort_by(Subset::canonical_cmp);
    all
}

/// Sorts and deduplicates a list of subsets into canonical order.
pub fn canonicalize(sets: &mut Vec<Subset>) {
    sets.sort_by(Subset::canonical_cmp);
    sets.dedup();
}
