//! Generated structures and the lattice of structures on a fixed carrier.
//!
//! On a finite carrier the finest structure containing a family `A` is the
//! closure of `A ∪ {∅}` under unions of overlapping members. Every member of
//! that closure is a union of generators whose overlap graph is connected,
//! and such a union can be built one generator at a time with every partial
//! union overlapping the next generator. The worklist below therefore only
//! ever unites a member with the original generators.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::space::{ConnSpace, GroundSet};
use crate::subset::{Subset, SubsetFamily};

/// One step of the generation operator: `∅` together with the union of every
/// nonempty sub-collection of `family` whose members share a point.
pub fn phi(ground: &GroundSet, family: &SubsetFamily) -> Result<SubsetFamily> {
    check_fits(ground, family)?;
    let limit = Limits::current().max_family;
    let mut out: HashSet<Subset> = HashSet::new();
    out.insert(Subset::EMPTY);
    for &m in family {
        out.insert(m);
    }
    for x in 0..ground.size() {
        let through: Vec<Subset> = family.iter().copied().filter(|m| m.contains(x)).collect();
        // all these members contain x, so every union of them is reachable
        // by adding members one at a time
        let mut seen: HashSet<Subset> = through.iter().copied().collect();
        let mut queue: Vec<Subset> = through.clone();
        while let Some(s) = queue.pop() {
            for &g in &through {
                if !g.is_subset_of(s) {
                    let u = s | g;
                    if seen.insert(u) {
                        queue.push(u);
                    }
                }
            }
            if seen.len() > limit {
                return Err(Error::FamilySizeLimitExceeded { limit });
            }
        }
        out.extend(seen);
        if out.len() > limit {
            return Err(Error::FamilySizeLimitExceeded { limit });
        }
    }
    Ok(out.into_iter().collect())
}

/// The finest structure on `ground` containing `generators`, integral when
/// requested.
pub fn generate(ground: &GroundSet, generators: &SubsetFamily, integral: bool) -> Result<ConnSpace> {
    check_fits(ground, generators)?;
    let family = closure(ground.size(), generators.iter().copied(), integral)?;
    Ok(ConnSpace::from_parts_unchecked(ground.clone(), family, integral))
}

/// Closure of `generators ∪ {∅}` (plus singletons when `integral`) under
/// unions of overlapping members.
pub(crate) fn closure(
    n: usize,
    generators: impl IntoIterator<Item = Subset>,
    integral: bool,
) -> Result<SubsetFamily> {
    let limit = Limits::current().max_family;
    let mut gens: Vec<Subset> = generators.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_unstable();
    gens.dedup();

    let mut seen: HashSet<Subset> = HashSet::with_capacity(gens.len() * 2 + n + 1);
    seen.insert(Subset::EMPTY);
    if integral {
        seen.extend((0..n).map(Subset::singleton));
    }
    // singletons never enlarge a set they overlap, so only the nontrivial
    // generators drive the worklist
    let growers: Vec<Subset> = gens.iter().copied().filter(|g| g.len() >= 2).collect();
    let mut queue: Vec<Subset> = Vec::new();
    for &g in &gens {
        if seen.insert(g) || g.len() == 1 {
            queue.push(g);
        }
    }
    let bound = 1usize.checked_shl(n as u32).unwrap_or(usize::MAX);
    let mut steps = 0usize;
    while let Some(s) = queue.pop() {
        steps += 1;
        debug_assert!(steps <= bound.saturating_add(gens.len()));
        for &g in &growers {
            if g.intersects(s) && !g.is_subset_of(s) {
                let u = s | g;
                if seen.insert(u) {
                    if seen.len() > limit {
                        return Err(Error::FamilySizeLimitExceeded { limit });
                    }
                    queue.push(u);
                }
            }
        }
    }
    if seen.len() > limit {
        return Err(Error::FamilySizeLimitExceeded { limit });
    }
    Ok(seen.into_iter().collect())
}

/// Intersection of two structures on the same carrier.
pub fn structure_meet(a: &ConnSpace, b: &ConnSpace) -> Result<ConnSpace> {
    check_compatible(a, b)?;
    Ok(ConnSpace::from_parts_unchecked(
        a.ground().clone(),
        a.structure().intersection(b.structure()),
        a.is_integral(),
    ))
}

/// The structure generated by the union of two structures.
pub fn structure_join(a: &ConnSpace, b: &ConnSpace) -> Result<ConnSpace> {
    check_compatible(a, b)?;
    generate(a.ground(), &a.structure().union(b.structure()), a.is_integral())
}

/// Join of a nonempty collection of structures on a common carrier.
pub fn structure_join_all<'a>(spaces: impl IntoIterator<Item = &'a ConnSpace>) -> Result<ConnSpace> {
    let mut it = spaces.into_iter();
    let first = it
        .next()
        .ok_or_else(|| Error::GroundMismatch("join of no structures".into()))?;
    let mut family = first.structure().clone();
    for s in it {
        check_compatible(first, s)?;
        family = family.union(s.structure());
    }
    generate(first.ground(), &family, first.is_integral())
}

/// Meet of a nonempty collection of structures on a common carrier.
pub fn structure_meet_all<'a>(spaces: impl IntoIterator<Item = &'a ConnSpace>) -> Result<ConnSpace> {
    let mut it = spaces.into_iter();
    let first = it
        .next()
        .ok_or_else(|| Error::GroundMismatch("meet of no structures".into()))?
        .clone();
    it.try_fold(first, |acc, s| structure_meet(&acc, s))
}

fn check_compatible(a: &ConnSpace, b: &ConnSpace) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::GroundMismatch(format!(
            "carriers of {} and {} points",
            a.size(),
            b.size()
        )));
    }
    if a.is_integral() != b.is_integral() {
        return Err(Error::GroundMismatch("integral flags differ".into()));
    }
    Ok(())
}

fn check_fits(ground: &GroundSet, family: &SubsetFamily) -> Result<()> {
    limits::check_addressable("carrier", ground.size())?;
    match family.iter().find(|s| !s.fits(ground.size())) {
        Some(&bad) => Err(Error::SubsetOutOfRange {
            subset: bad,
            size: ground.size(),
        }),
        None => Ok(()),
    }
}
