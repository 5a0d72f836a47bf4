//! Connectivity spaces: a finite carrier with a validated family of connected
//! subsets, plus component and isomorphism queries.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits;
use crate::subset::{Subset, SubsetFamily};

/// The carrier of a space: `size` points with optional distinct labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size, labels: None }
    }

    pub fn labeled<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `point`, falling back to its index.
    pub fn label(&self, point: usize) -> String {
        match &self.labels {
            Some(l) => l[point].clone(),
            None => point.to_string(),
        }
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn unlabeled(&self) -> GroundSet {
        GroundSet::new(self.size)
    }
}

/// A finite connectivity space.
///
/// The structure always contains the empty set and is closed under unions of
/// overlapping members. When `integral` is set every singleton is connected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConnSpace {
    ground: GroundSet,
    structure: SubsetFamily,
    integral: bool,
}

impl ConnSpace {
    /// Validates `family` as a connectivity structure on `ground`.
    pub fn new(ground: GroundSet, family: SubsetFamily, integral: bool) -> Result<Self> {
        validate(&ground, &family, integral)?;
        Ok(ConnSpace {
            ground,
            structure: family,
            integral,
        })
    }

    pub(crate) fn from_parts_unchecked(
        ground: GroundSet,
        structure: SubsetFamily,
        integral: bool,
    ) -> Self {
        debug_assert!(structure.len() > 4096 || validate(&ground, &structure, integral).is_ok());
        ConnSpace {
            ground,
            structure,
            integral,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.size
    }

    pub fn structure(&self) -> &SubsetFamily {
        &self.structure
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn carrier(&self) -> Subset {
        self.ground.full()
    }

    pub fn is_connected_subset(&self, s: Subset) -> bool {
        self.structure.contains(s)
    }

    /// True iff the whole carrier is connected.
    pub fn is_connected_space(&self) -> bool {
        self.structure.contains(self.carrier())
    }

    /// Same space with the labels replaced.
    pub fn with_ground(&self, ground: GroundSet) -> Result<ConnSpace> {
        if ground.size() != self.size() {
            return Err(Error::GroundMismatch(format!(
                "relabeling {} points with {} labels",
                self.size(),
                ground.size()
            )));
        }
        Ok(ConnSpace {
            ground,
            ..self.clone()
        })
    }

    /// Image of the space under a point permutation (`perm[old] = new`).
    /// Labels travel with their points.
    pub fn permuted(&self, perm: &[usize]) -> ConnSpace {
        assert_eq!(perm.len(), self.size());
        let ground = match self.ground.labels() {
            Some(labels) => {
                let mut out = vec![String::new(); labels.len()];
                for (old, &new) in perm.iter().enumerate() {
                    out[new] = labels[old].clone();
                }
                GroundSet {
                    size: self.size(),
                    labels: Some(out),
                }
            }
            None => self.ground.clone(),
        };
        ConnSpace {
            ground,
            structure: self.structure.map(perm),
            integral: self.integral,
        }
    }

    /// The maximal connected subsets, ordered by smallest point.
    pub fn connected_components(&self) -> Result<Vec<Subset>> {
        connected_components(self)
    }
}

/// Checks the three structure invariants, reporting the first violation.
pub fn validate(ground: &GroundSet, family: &SubsetFamily, integral: bool) -> Result<()> {
    let n = ground.size();
    limits::check_addressable("carrier", n)?;
    if let Some(labels) = ground.labels() {
        if labels.len() != n {
            return Err(Error::LabelCount {
                expected: n,
                found: labels.len(),
            });
        }
    }
    if let Some(&bad) = family.iter().find(|s| !s.fits(n)) {
        return Err(Error::SubsetOutOfRange {
            subset: bad,
            size: n,
        });
    }
    if !family.contains(Subset::EMPTY) {
        return Err(Error::MissingEmptySet);
    }
    if integral {
        if let Some(p) = (0..n).find(|&p| !family.contains(Subset::singleton(p))) {
            return Err(Error::MissingSingleton(p));
        }
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if a.intersects(b) && !family.contains(a | b) {
                return Err(Error::NotUnionClosed(a, b));
            }
        }
    }
    Ok(())
}

pub fn connected_components(space: &ConnSpace) -> Result<Vec<Subset>> {
    if !space.is_integral() {
        return Err(Error::NotIntegral);
    }
    // every overlap-class of members unites to a member, so merging points
    // that share a member yields exactly the maximal connected subsets
    let n = space.size();
    let mut block: Vec<Subset> = (0..n).map(Subset::singleton).collect();
    let mut owner: Vec<usize> = (0..n).collect();
    for &m in space.structure() {
        let Some(first) = m.first() else { continue };
        let target = owner[first];
        for p in m.points() {
            let from = owner[p];
            if from != target {
                let moved = block[from];
                for q in moved.points() {
                    owner[q] = target;
                }
                block[target] = block[target] | moved;
                block[from] = Subset::EMPTY;
            }
        }
    }
    let mut out: Vec<Subset> = block.into_iter().filter(|b| !b.is_empty()).collect();
    out.sort_by_key(|b| b.first());
    Ok(out)
}

/// For each point, the number of connected sets of each cardinality that
/// contain it. Invariant under isomorphism.
pub fn degree_profiles(space: &ConnSpace) -> Vec<Vec<usize>> {
    let n = space.size();
    let mut profiles = vec![vec![0usize; n + 1]; n];
    for &m in space.structure() {
        let c = m.len();
        for p in m.points() {
            profiles[p][c] += 1;
        }
    }
    profiles
}

/// Finds a bijection `perm` (`perm[a_point] = b_point`) carrying the
/// structure of `a` onto that of `b`.
pub fn is_isomorphic(a: &ConnSpace, b: &ConnSpace) -> Result<Option<Vec<usize>>> {
    isomorphism_fixing(a, b, None)
}

/// As [`is_isomorphic`], optionally requiring `perm[fixed.0] == fixed.1`.
pub(crate) fn isomorphism_fixing(
    a: &ConnSpace,
    b: &ConnSpace,
    fixed: Option<(usize, usize)>,
) -> Result<Option<Vec<usize>>> {
    let n = a.size();
    if n != b.size() || a.structure().len() != b.structure().len() || a.integral != b.integral {
        return Ok(None);
    }
    limits::check_permutation(n)?;
    let pa = degree_profiles(a);
    let pb = degree_profiles(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }

    // members of `a` grouped by their largest point: they become checkable
    // once that point is assigned
    let mut by_last: Vec<Vec<Subset>> = vec![Vec::new(); n];
    for &m in a.structure() {
        if let Some(last) = m.points().last() {
            by_last[last].push(m);
        }
    }

    struct Search<'a> {
        n: usize,
        pa: &'a [Vec<usize>],
        pb: &'a [Vec<usize>],
        by_last: &'a [Vec<Subset>],
        target: &'a SubsetFamily,
        fixed: Option<(usize, usize)>,
        perm: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize) -> bool {
            if i == self.n {
                return true;
            }
            for cand in 0..self.n {
                if self.used[cand] || self.pa[i] != self.pb[cand] {
                    continue;
                }
                if let Some((fa, fb)) = self.fixed {
                    if (i == fa) != (cand == fb) {
                        continue;
                    }
                }
                self.perm[i] = cand;
                let ok = self.by_last[i]
                    .iter()
                    .all(|m| self.target.contains(m.map(&self.perm)));
                if ok {
                    self.used[cand] = true;
                    if self.go(i + 1) {
                        return true;
                    }
                    self.used[cand] = false;
                }
            }
            false
        }
    }

    let mut search = Search {
        n,
        pa: &pa,
        pb: &pb,
        by_last: &by_last,
        target: b.structure(),
        fixed,
        perm: vec![0; n],
        used: vec![false; n],
    };
    Ok(search.go(0).then_some(search.perm))
}

/// The relabeling of `space` whose structure is least in canonical family
/// order among all point permutations. Labels are dropped.
pub fn canonical_form(space: &ConnSpace) -> Result<ConnSpace> {
    let n = space.size();
    limits::check_permutation(n)?;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = space.structure().clone();
    // Heap's algorithm over all permutations
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let image = space.structure().map(&perm);
            if image < best {
                best = image;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(ConnSpace {
        ground: space.ground.unlabeled(),
        structure: best,
        integral: space.integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(points: &[usize]) -> Subset {
        Subset::from_points(points.iter().copied())
    }

    fn fam(sets: &[&[usize]]) -> SubsetFamily {
        sets.iter().map(|p| s(p)).collect()
    }

    fn b3() -> ConnSpace {
        ConnSpace::new(
            GroundSet::new(3),
            fam(&[&[], &[0], &[1], &[2], &[0, 1, 2]]),
            true,
        )
        .unwrap()
    }

    fn v3() -> ConnSpace {
        ConnSpace::new(
            GroundSet::new(3),
            fam(&[&[], &[0], &[1], &[2], &[0, 1], &[0, 1, 2]]),
            true,
        )
        .unwrap()
    }

    #[test]
    fn borromean_validates() {
        let b = b3();
        assert!(b.is_connected_subset(s(&[0, 1, 2])));
        assert!(!b.is_connected_subset(s(&[0, 1])));
        assert!(b.is_connected_subset(Subset::EMPTY));
    }

    #[test]
    fn discrete_nonintegral_validates() {
        assert!(ConnSpace::new(GroundSet::new(2), fam(&[&[]]), false).is_ok());
    }

    #[test]
    fn union_closure_witness() {
        let err = ConnSpace::new(
            GroundSet::new(3),
            fam(&[&[], &[0], &[1], &[2], &[0, 1], &[1, 2]]),
            true,
        )
        .unwrap_err();
        assert_eq!(err, Error::NotUnionClosed(s(&[0, 1]), s(&[1, 2])));
    }

    #[test]
    fn missing_empty_and_singleton() {
        assert_eq!(
            ConnSpace::new(GroundSet::new(2), fam(&[&[0]]), false).unwrap_err(),
            Error::MissingEmptySet
        );
        assert_eq!(
            ConnSpace::new(GroundSet::new(2), fam(&[&[], &[0]]), true).unwrap_err(),
            Error::MissingSingleton(1)
        );
        assert!(matches!(
            ConnSpace::new(GroundSet::new(2), fam(&[&[], &[2]]), false),
            Err(Error::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            GroundSet::labeled(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn components() {
        assert_eq!(b3().connected_components().unwrap(), vec![s(&[0, 1, 2])]);
        let discrete = ConnSpace::new(GroundSet::new(3), fam(&[&[], &[0], &[1], &[2]]), true).unwrap();
        assert_eq!(
            discrete.connected_components().unwrap(),
            vec![s(&[0]), s(&[1]), s(&[2])]
        );
        let b2_b3 = ConnSpace::new(
            GroundSet::new(5),
            fam(&[&[], &[0], &[1], &[2], &[3], &[4], &[0, 1], &[2, 3, 4]]),
            true,
        )
        .unwrap();
        assert_eq!(
            b2_b3.connected_components().unwrap(),
            vec![s(&[0, 1]), s(&[2, 3, 4])]
        );
        let nonint = ConnSpace::new(GroundSet::new(1), fam(&[&[]]), false).unwrap();
        assert_eq!(nonint.connected_components(), Err(Error::NotIntegral));
    }

    #[test]
    fn isomorphism_examples() {
        let relabeled = b3().permuted(&[2, 0, 1]);
        assert!(is_isomorphic(&b3(), &relabeled).unwrap().is_some());
        assert!(is_isomorphic(&b3(), &v3()).unwrap().is_none());
        let discrete = ConnSpace::new(GroundSet::new(2), fam(&[&[], &[0], &[1]]), true).unwrap();
        let indiscrete =
            ConnSpace::new(GroundSet::new(2), fam(&[&[], &[0], &[1], &[0, 1]]), true).unwrap();
        assert!(is_isomorphic(&discrete, &indiscrete).unwrap().is_none());
    }

    #[test]
    fn isomorphism_witness_maps_structure() {
        let v = v3();
        let w = v.permuted(&[1, 2, 0]);
        let perm = is_isomorphic(&v, &w).unwrap().unwrap();
        assert_eq!(v.structure().map(&perm), *w.structure());
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonical_form(&b3()).unwrap(), b3());
        // V2 with its points swapped: the connected pair stays, the least
        // relabeling is the same structure
        let v2 = ConnSpace::new(GroundSet::new(2), fam(&[&[], &[0], &[1], &[0, 1]]), true).unwrap();
        assert_eq!(canonical_form(&v2.permuted(&[1, 0])).unwrap(), v2);
        // non-integral two-point space with only {1}: both permutations
        // enumerated by hand, {0} beats {1}
        let lone = ConnSpace::new(GroundSet::new(2), fam(&[&[], &[1]]), false).unwrap();
        assert_eq!(
            canonical_form(&lone).unwrap().structure(),
            &fam(&[&[], &[0]])
        );
        let one = ConnSpace::new(GroundSet::new(1), fam(&[&[], &[0]]), true).unwrap();
        assert_eq!(canonical_form(&one).unwrap(), one);
    }

    #[test]
    fn permutation_guard() {
        let big = ConnSpace::new(GroundSet::new(11), fam(&[&[]]), false).unwrap();
        assert!(matches!(
            canonical_form(&big),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
