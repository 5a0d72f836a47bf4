//! Standard spaces and the two Brunnian compositions.

use crate::analysis::{irreducibles, is_irreducible_space};
use crate::error::{Error, Result};
use crate::generation::generate;
use crate::space::{ConnSpace, GroundSet};
use crate::subset::{Subset, SubsetFamily};

/// `{∅}` plus every singleton.
pub fn discrete(n: usize) -> ConnSpace {
    generate(&GroundSet::new(n), &SubsetFamily::new(), true).expect("discrete structure")
}

/// Every subset is connected.
pub fn indiscrete(n: usize) -> Result<ConnSpace> {
    crate::limits::check_carrier("indiscrete carrier", n)?;
    let family: SubsetFamily = Subset::full(n).subsets().collect();
    Ok(ConnSpace::from_parts_unchecked(GroundSet::new(n), family, true))
}

/// `B_n`: the only nontrivial connected set is the whole carrier.
pub fn brunnian(n: usize) -> ConnSpace {
    let mut family: SubsetFamily = discrete(n).structure().clone();
    family.insert(Subset::full(n));
    ConnSpace::from_parts_unchecked(GroundSet::new(n), family, true)
}

/// `V_n`: the nontrivial connected sets are the initial segments
/// `{0, .., k-1}` for `2 <= k <= n`.
pub fn v_space(n: usize) -> ConnSpace {
    let mut family: SubsetFamily = discrete(n).structure().clone();
    for k in 2..=n {
        family.insert(Subset::full(k));
    }
    ConnSpace::from_parts_unchecked(GroundSet::new(n), family, true)
}

/// Integral space of the path-connected subsets of a simple graph.
pub fn from_graph(n: usize, edges: &[(usize, usize)]) -> Result<ConnSpace> {
    let mut gens = SubsetFamily::new();
    for &(a, b) in edges {
        if a >= n || b >= n || a == b {
            return Err(Error::InvalidEdge(a, b));
        }
        gens.insert(Subset::from_points([a, b]));
    }
    // edge-generated structure: a set is generated iff its induced subgraph
    // is connected
    generate(&GroundSet::new(n), &gens, true)
}

/// Intervals of the chain `0 < 1 < .. < n-1`.
pub fn order_space(n: usize) -> ConnSpace {
    let mut family = SubsetFamily::new();
    family.insert(Subset::EMPTY);
    for a in 0..n {
        for b in a..n {
            family.insert(Subset::full(b + 1) - Subset::full(a));
        }
    }
    ConnSpace::from_parts_unchecked(GroundSet::new(n), family, true)
}

fn check_composable(x: &ConnSpace, y: &ConnSpace) -> Result<()> {
    if !x.is_integral() || !y.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !is_irreducible_space(y) {
        return Err(Error::NotIrreducible);
    }
    if x.size() == 0 {
        return Err(Error::InvalidPoint { point: 0, size: 0 });
    }
    Ok(())
}

/// `X ▷ₚ Y`: the sink `{p}` of the generic graph of `x` replaced by a copy of
/// the generic graph of `y`.
///
/// Points of `x` other than `p` keep their relative order and come first;
/// the copy of `y` follows.
pub fn compose_at(x: &ConnSpace, p: usize, y: &ConnSpace) -> Result<ConnSpace> {
    if p >= x.size() {
        return Err(Error::InvalidPoint {
            point: p,
            size: x.size(),
        });
    }
    check_composable(x, y)?;
    let nx = x.size();
    let n = nx - 1 + y.size();
    crate::limits::check_addressable("composed carrier", n)?;
    let table: Vec<usize> = (0..nx).map(|q| if q < p { q } else { q.saturating_sub(1) }).collect();
    let y_copy = Subset::from_bits(y.carrier().bits() << (nx - 1));

    let mut gens = SubsetFamily::new();
    for &k in irreducibles(x).iter() {
        if k.contains(p) {
            gens.insert(k.remove(p).map(&table) | y_copy);
        } else {
            gens.insert(k.map(&table));
        }
    }
    for &l in irreducibles(y).iter() {
        gens.insert(Subset::from_bits(l.bits() << (nx - 1)));
    }
    generate(&GroundSet::new(n), &gens, true)
}

/// `X ▷ Y`: every sink of the generic graph of `x` replaced by a copy of the
/// generic graph of `y`. Carrier `|x| × |y|`, point `(a, b)` at `a·|y| + b`.
pub fn compose_all(x: &ConnSpace, y: &ConnSpace) -> Result<ConnSpace> {
    check_composable(x, y)?;
    let (nx, ny) = (x.size(), y.size());
    let n = nx * ny;
    crate::limits::check_addressable("composed carrier", n)?;
    let row = |a: usize| Subset::from_bits(Subset::full(ny).bits() << (a * ny));
    let mut gens = SubsetFamily::new();
    for a in 0..nx {
        for &l in irreducibles(y).iter() {
            gens.insert(Subset::from_bits(l.bits() << (a * ny)));
        }
    }
    for &k in irreducibles(x).iter() {
        gens.insert(k.points().fold(Subset::EMPTY, |acc, a| acc | row(a)));
    }
    generate(&GroundSet::new(n), &gens, true)
}
