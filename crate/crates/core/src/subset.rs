//! Bitmask subsets of a finite ground set and canonically ordered families of them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Widest ground set a [`Subset`] can address.
pub const MAX_POINTS: usize = 64;

/// A subset of `{0, .., n-1}` stored as a bitmask.
///
/// Subsets are totally ordered by ascending cardinality, then by the numeric
/// value of the mask. Every [`SubsetFamily`] is kept sorted in this order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// # Panics
    /// If `point >= MAX_POINTS`.
    pub fn singleton(point: usize) -> Self {
        assert!(point < MAX_POINTS, "point {point} out of bitmask range");
        Subset(1 << point)
    }

    /// The whole carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "ground set of {n} points exceeds bitmask width");
        if n == MAX_POINTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points
            .into_iter()
            .fold(Subset::EMPTY, |acc, p| acc | Subset::singleton(p))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: usize) -> bool {
        point < MAX_POINTS && self.0 >> point & 1 == 1
    }

    pub fn insert(self, point: usize) -> Self {
        self | Subset::singleton(point)
    }

    pub fn remove(self, point: usize) -> Self {
        if point < MAX_POINTS {
            Subset(self.0 & !(1 << point))
        } else {
            self
        }
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// True iff every set bit addresses a point of an `n`-point carrier.
    pub fn fits(self, n: usize) -> bool {
        n >= MAX_POINTS || self.0 >> n == 0
    }

    /// Smallest point in the subset.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Points in ascending order.
    pub fn points(self) -> Points {
        Points(self.0)
    }

    /// Image of the subset under `f`, given as a point table.
    pub fn map(self, table: &[usize]) -> Subset {
        self.points()
            .fold(Subset::EMPTY, |acc, p| acc | Subset::singleton(table[p]))
    }

    /// All subsets of `self`, including `EMPTY` and `self`.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            set: self.0,
            next: Some(0),
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_points(iter)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the points of a [`Subset`].
#[derive(Clone)]
pub struct Points(u64);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

/// Enumerates the subsets of a mask by the carry-rippler trick, in ascending
/// numeric order.
#[derive(Clone)]
pub struct SubsetsOf {
    set: u64,
    next: Option<u64>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = (succ != 0).then_some(succ);
        Some(Subset(cur))
    }
}

/// A duplicate-free family of subsets kept in canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SubsetFamily(Vec<Subset>);

impl SubsetFamily {
    pub fn new() -> Self {
        SubsetFamily(Vec::new())
    }

    /// Builds a family from already sorted, duplicate-free members.
    pub(crate) fn from_sorted_unchecked(members: Vec<Subset>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SubsetFamily(members)
    }

    pub fn members(&self) -> &[Subset] {
        &self.0
    }

    pub fn into_members(self) -> Vec<Subset> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.0.binary_search(&s).is_ok()
    }

    /// Inserts `s`, returning false if it was already present.
    pub fn insert(&mut self, s: Subset) -> bool {
        match self.0.binary_search(&s) {
            Ok(_) => false,
            Err(at) => {
                self.0.insert(at, s);
                true
            }
        }
    }

    /// Members with at least two points.
    pub fn nontrivial(&self) -> SubsetFamily {
        SubsetFamily(self.0.iter().copied().filter(|s| s.len() >= 2).collect())
    }

    /// Union of all members.
    pub fn support(&self) -> Subset {
        self.0.iter().fold(Subset::EMPTY, |acc, &s| acc | s)
    }

    pub fn is_subfamily_of(&self, other: &SubsetFamily) -> bool {
        self.0.iter().all(|&s| other.contains(s))
    }

    pub fn union(&self, other: &SubsetFamily) -> SubsetFamily {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    pub fn intersection(&self, other: &SubsetFamily) -> SubsetFamily {
        SubsetFamily(
            self.0
                .iter()
                .copied()
                .filter(|&s| other.contains(s))
                .collect(),
        )
    }

    /// Image of every member under a point table.
    pub fn map(&self, table: &[usize]) -> SubsetFamily {
        self.0.iter().map(|s| s.map(table)).collect()
    }

    /// True iff every member fits an `n`-point carrier.
    pub fn fits(&self, n: usize) -> bool {
        self.0.iter().all(|s| s.fits(n))
    }
}

impl FromIterator<Subset> for SubsetFamily {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        let mut v: Vec<Subset> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SubsetFamily(v)
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for SubsetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl PartialOrd for SubsetFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Families compare by size, then member-wise in canonical order.
impl Ord for SubsetFamily {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(points: &[usize]) -> Subset {
        Subset::from_points(points.iter().copied())
    }

    #[test]
    fn order_is_cardinality_then_mask() {
        let mut v = vec![s(&[0, 1]), s(&[2]), s(&[]), s(&[0]), s(&[0, 1, 2]), s(&[1, 2])];
        v.sort();
        assert_eq!(
            v,
            vec![s(&[]), s(&[0]), s(&[2]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])]
        );
    }

    #[test]
    fn family_dedups_and_sorts() {
        let f: SubsetFamily = [s(&[1, 2]), s(&[0]), s(&[1, 2]), s(&[])].into_iter().collect();
        assert_eq!(f.members(), &[s(&[]), s(&[0]), s(&[1, 2])]);
        assert!(f.contains(s(&[1, 2])));
        assert!(!f.contains(s(&[1])));
        assert_eq!(f.nontrivial().members(), &[s(&[1, 2])]);
    }

    #[test]
    fn subsets_enumeration() {
        let all: Vec<u64> = s(&[0, 2, 4, 6]).subsets().map(Subset::bits).collect();
        assert_eq!(all, vec![0, 1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn fits_and_full() {
        assert!(Subset::full(3).fits(3));
        assert!(!Subset::full(3).fits(2));
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(0), Subset::EMPTY);
    }

    #[test]
    fn map_through_table() {
        assert_eq!(s(&[0, 1, 2]).map(&[1, 1, 0]), s(&[0, 1]));
        assert_eq!(Subset::EMPTY.map(&[0]), Subset::EMPTY);
    }
}
