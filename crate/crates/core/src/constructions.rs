//! Morphisms and the constructions built from them: pushforward and pullback
//! of structures, finite limits and colimits, quotients, subspaces, the
//! tensor product, hom-spaces and homotopy.
//!
//! Binary products and tensors encode the point `(i, j)` as `i·n₂ + j`.
//! Functions out of a product carrier are plain [`PointMap`]s on that
//! encoding.

use crate::error::{Error, Result};
use crate::generation::generate;
use crate::limits::{self, Limits};
use crate::space::{ConnSpace, GroundSet};
use crate::subset::{Subset, SubsetFamily};

/// A function between finite carriers, `table[i]` being the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointMap {
    source: usize,
    target: usize,
    table: Vec<usize>,
}

impl PointMap {
    pub fn new(source: usize, target: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != source {
            return Err(Error::InvalidMap(format!(
                "table has {} entries for a source of {source} points",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= target) {
            return Err(Error::InvalidMap(format!(
                "image {bad} outside a target of {target} points"
            )));
        }
        Ok(PointMap {
            source,
            target,
            table,
        })
    }

    pub fn from_fn(source: usize, target: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        PointMap::new(source, target, (0..source).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        PointMap {
            source: n,
            target: n,
            table: (0..n).collect(),
        }
    }

    pub fn constant(source: usize, target: usize, value: usize) -> Result<Self> {
        PointMap::new(source, target, vec![value; source])
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, point: usize) -> usize {
        self.table[point]
    }

    pub fn image(&self, s: Subset) -> Subset {
        s.map(&self.table)
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &PointMap) -> Result<PointMap> {
        if self.target != then.source {
            return Err(Error::GroundMismatch(format!(
                "composing a map into {} points with one from {} points",
                self.target, then.source
            )));
        }
        Ok(PointMap {
            source: self.source,
            target: then.target,
            table: self.table.iter().map(|&v| then.table[v]).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target];
        for &v in &self.table {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target];
        self.table.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
    }
}

fn check_map(f: &PointMap, x: &ConnSpace, y: &ConnSpace) -> Result<()> {
    if f.source != x.size() || f.target != y.size() {
        return Err(Error::GroundMismatch(format!(
            "map {}→{} between spaces of {} and {} points",
            f.source,
            f.target,
            x.size(),
            y.size()
        )));
    }
    Ok(())
}

/// True iff `f` sends every connected set of `x` to a connected set of `y`.
pub fn is_morphism(f: &PointMap, x: &ConnSpace, y: &ConnSpace) -> Result<bool> {
    check_map(f, x, y)?;
    Ok(x.structure().iter().all(|&k| y.is_connected_subset(f.image(k))))
}

/// All morphisms `x → y`, tables in lexicographic order.
pub fn morphisms(x: &ConnSpace, y: &ConnSpace) -> Result<Vec<PointMap>> {
    let (nx, ny) = (x.size(), y.size());
    let count = limits::power(ny, nx);
    let limit = Limits::current().max_hom as u128;
    if count > limit {
        return Err(Error::HomTooLarge { size: count, limit });
    }
    let mut out = Vec::new();
    for_each_function(nx, ny, |table| {
        let f = PointMap {
            source: nx,
            target: ny,
            table: table.to_vec(),
        };
        if x.structure().iter().all(|&k| y.is_connected_subset(f.image(k))) {
            out.push(f);
        }
    });
    Ok(out)
}

/// Calls `visit` with every table `0..n → 0..m`, lexicographically.
pub(crate) fn for_each_function(n: usize, m: usize, mut visit: impl FnMut(&[usize])) {
    if m == 0 {
        if n == 0 {
            visit(&[]);
        }
        return;
    }
    let mut table = vec![0usize; n];
    loop {
        visit(&table);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < m {
                break;
            }
            table[i] = 0;
        }
    }
}

/// Finest structure on the target making `f` a morphism out of `x`.
pub fn pushforward(f: &PointMap, x: &ConnSpace) -> Result<ConnSpace> {
    if f.source != x.size() {
        return Err(Error::GroundMismatch(format!(
            "map from {} points applied to a space of {} points",
            f.source,
            x.size()
        )));
    }
    let images: SubsetFamily = x.structure().map(&f.table);
    generate(&GroundSet::new(f.target), &images, x.is_integral())
}

/// Coarsest structure on the source making `f` a morphism into `y`.
pub fn pullback(f: &PointMap, y: &ConnSpace) -> Result<ConnSpace> {
    if f.target != y.size() {
        return Err(Error::GroundMismatch(format!(
            "map into {} points pulled back from a space of {} points",
            f.target,
            y.size()
        )));
    }
    limits::check_carrier("pullback carrier", f.source)?;
    let family: SubsetFamily = Subset::full(f.source)
        .subsets()
        .filter(|&k| y.is_connected_subset(f.image(k)))
        .collect();
    Ok(ConnSpace::from_parts_unchecked(
        GroundSet::new(f.source),
        family,
        y.is_integral(),
    ))
}

fn same_flag(a: &ConnSpace, b: &ConnSpace) -> Result<()> {
    if a.is_integral() != b.is_integral() {
        return Err(Error::GroundMismatch("integral flags differ".into()));
    }
    Ok(())
}

fn encode_box(k1: Subset, k2: Subset, n2: usize) -> Subset {
    k1.points()
        .fold(Subset::EMPTY, |acc, a| acc | Subset::from_bits(k2.bits() << (a * n2)))
}

/// Projections `|c1| × |c2| → |c1|` and `→ |c2|` in row-major encoding.
pub fn projections(n1: usize, n2: usize) -> (PointMap, PointMap) {
    let n = n1 * n2;
    (
        PointMap {
            source: n,
            target: n1,
            table: (0..n).map(|p| p / n2).collect(),
        },
        PointMap {
            source: n,
            target: n2,
            table: (0..n).map(|p| p % n2).collect(),
        },
    )
}

/// Cartesian product: a subset is connected iff both projections are.
pub fn product(c1: &ConnSpace, c2: &ConnSpace) -> Result<ConnSpace> {
    same_flag(c1, c2)?;
    let n = c1.size() * c2.size();
    limits::check_carrier("product carrier", n)?;
    let (p1, p2) = projections(c1.size(), c2.size());
    let family: SubsetFamily = Subset::full(n)
        .subsets()
        .filter(|&a| c1.is_connected_subset(p1.image(a)) && c2.is_connected_subset(p2.image(a)))
        .collect();
    Ok(ConnSpace::from_parts_unchecked(
        GroundSet::new(n),
        family,
        c1.is_integral(),
    ))
}

/// Disjoint union; the points of `c2` follow those of `c1`.
pub fn coproduct(c1: &ConnSpace, c2: &ConnSpace) -> Result<ConnSpace> {
    same_flag(c1, c2)?;
    let n = c1.size() + c2.size();
    limits::check_addressable("coproduct carrier", n)?;
    let shift = c1.size();
    let family: SubsetFamily = c1
        .structure()
        .iter()
        .copied()
        .chain(
            c2.structure()
                .iter()
                .map(|k| Subset::from_bits(k.bits() << shift)),
        )
        .collect();
    Ok(ConnSpace::from_parts_unchecked(
        GroundSet::new(n),
        family,
        c1.is_integral(),
    ))
}

/// A partition of `{0, .., n-1}` into nonempty blocks, ordered by smallest
/// point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    size: usize,
    blocks: Vec<Subset>,
}

impl Partition {
    pub fn new(size: usize, mut blocks: Vec<Subset>) -> Result<Self> {
        let mut seen = Subset::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.fits(size) {
                return Err(Error::InvalidPartition(format!(
                    "block {b} outside {size} points"
                )));
            }
            if b.intersects(seen) {
                return Err(Error::InvalidPartition(format!("block {b} overlaps another")));
            }
            seen = seen | b;
        }
        if seen != Subset::full(size) {
            return Err(Error::InvalidPartition(format!(
                "points {} are not covered",
                Subset::full(size) - seen
            )));
        }
        blocks.sort_by_key(|b| b.first());
        Ok(Partition { size, blocks })
    }

    /// Identity partition coarsened by merging each listed group.
    pub fn from_merges(size: usize, groups: &[Subset]) -> Result<Self> {
        let mut owner: Vec<usize> = (0..size).collect();
        for &g in groups {
            if !g.fits(size) {
                return Err(Error::InvalidPartition(format!("group {g} outside {size} points")));
            }
            let pts: Vec<usize> = g.points().collect();
            for w in pts.windows(2) {
                let (a, b) = (owner[w[0]], owner[w[1]]);
                if a != b {
                    for o in owner.iter_mut() {
                        if *o == b {
                            *o = a;
                        }
                    }
                }
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut slot = vec![usize::MAX; size];
        for p in 0..size {
            let r = owner[p];
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(Subset::EMPTY);
            }
            blocks[slot[r]] = blocks[slot[r]].insert(p);
        }
        Partition::new(size, blocks)
    }

    pub fn identity(size: usize) -> Self {
        Partition {
            size,
            blocks: (0..size).map(Subset::singleton).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// The canonical surjection sending each point to its block index.
    pub fn assignment(&self) -> PointMap {
        let mut table = vec![0; self.size];
        for (i, b) in self.blocks.iter().enumerate() {
            for p in b.points() {
                table[p] = i;
            }
        }
        PointMap {
            source: self.size,
            target: self.blocks.len(),
            table,
        }
    }
}

/// Quotient by a partition: the pushforward along the block assignment.
pub fn quotient(c: &ConnSpace, p: &Partition) -> Result<ConnSpace> {
    if p.size != c.size() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} points for a space of {} points",
            p.size,
            c.size()
        )));
    }
    pushforward(&p.assignment(), c)
}

/// Structure induced on `s`; the points of `s` are renumbered in order.
pub fn subspace(c: &ConnSpace, s: Subset) -> Result<ConnSpace> {
    if !s.fits(c.size()) {
        return Err(Error::SubsetOutOfRange {
            subset: s,
            size: c.size(),
        });
    }
    let mut table = vec![usize::MAX; c.size()];
    for (i, p) in s.points().enumerate() {
        table[p] = i;
    }
    let family: SubsetFamily = c
        .structure()
        .iter()
        .filter(|k| k.is_subset_of(s))
        .map(|k| k.map(&table))
        .collect();
    let ground = match c.ground().labels() {
        Some(labels) => GroundSet::labeled(s.points().map(|p| labels[p].clone()))?,
        None => GroundSet::new(s.len()),
    };
    Ok(ConnSpace::from_parts_unchecked(ground, family, c.is_integral()))
}

/// The inclusion of `s` into the carrier as a map from the subspace.
pub fn inclusion(n: usize, s: Subset) -> PointMap {
    PointMap {
        source: s.len(),
        target: n,
        table: s.points().collect(),
    }
}

/// An arrow of a [`Diagram`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub map: PointMap,
}

/// A finite free diagram: objects with morphisms between them. No
/// composition law is imposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    objects: Vec<ConnSpace>,
    arrows: Vec<Arrow>,
    integral: bool,
}

impl Diagram {
    pub fn new(integral: bool, objects: Vec<ConnSpace>, arrows: Vec<Arrow>) -> Result<Self> {
        if objects.iter().any(|o| o.is_integral() != integral) {
            return Err(Error::GroundMismatch("diagram objects with mixed integral flags".into()));
        }
        for a in &arrows {
            let (Some(x), Some(y)) = (objects.get(a.source), objects.get(a.target)) else {
                return Err(Error::InvalidMap(format!(
                    "arrow {}→{} refers to a missing object",
                    a.source, a.target
                )));
            };
            if !is_morphism(&a.map, x, y)? {
                return Err(Error::NotAMorphism);
            }
        }
        Ok(Diagram {
            objects,
            arrows,
            integral,
        })
    }

    pub fn objects(&self) -> &[ConnSpace] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }
}

/// A colimit with its coprojections, one per diagram object.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub space: ConnSpace,
    pub coprojections: Vec<PointMap>,
}

/// A limit with its projections, one per diagram object.
#[derive(Clone, Debug)]
pub struct Limit {
    pub space: ConnSpace,
    pub projections: Vec<PointMap>,
}

/// Disjoint union of the carriers glued along every arrow, with the
/// structure generated by the coprojected connected sets. Classes are
/// numbered by their first point in the disjoint union.
pub fn colimit(d: &Diagram) -> Result<Colimit> {
    let offsets: Vec<usize> = d
        .objects
        .iter()
        .scan(0, |acc, o| {
            let at = *acc;
            *acc += o.size();
            Some(at)
        })
        .collect();
    let total: usize = d.objects.iter().map(ConnSpace::size).sum();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for a in &d.arrows {
        for (p, &q) in a.map.table.iter().enumerate() {
            let (u, v) = (
                find(&mut parent, offsets[a.source] + p),
                find(&mut parent, offsets[a.target] + q),
            );
            if u != v {
                parent[u.max(v)] = u.min(v);
            }
        }
    }
    let mut class = vec![usize::MAX; total];
    let mut count = 0;
    let mut global = vec![0; total];
    for v in 0..total {
        let r = find(&mut parent, v);
        if class[r] == usize::MAX {
            class[r] = count;
            count += 1;
        }
        global[v] = class[r];
    }
    limits::check_addressable("colimit carrier", count)?;
    let coprojections: Vec<PointMap> = d
        .objects
        .iter()
        .zip(&offsets)
        .map(|(o, &off)| PointMap {
            source: o.size(),
            target: count,
            table: global[off..off + o.size()].to_vec(),
        })
        .collect();
    let images: SubsetFamily = d
        .objects
        .iter()
        .zip(&coprojections)
        .flat_map(|(o, c)| o.structure().iter().map(move |&k| c.image(k)))
        .collect();
    let space = generate(&GroundSet::new(count), &images, d.integral)?;
    Ok(Colimit {
        space,
        coprojections,
    })
}

/// Compatible tuples of the product of carriers, with the structure of sets
/// whose every projection is connected. Tuples are numbered
/// lexicographically, the first object varying slowest.
pub fn limit(d: &Diagram) -> Result<Limit> {
    let sizes: Vec<usize> = d.objects.iter().map(ConnSpace::size).collect();
    let candidates = sizes
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(s as u128));
    let max = Limits::current().max_search as u128;
    if candidates > max {
        return Err(Error::SizeLimitExceeded {
            what: "limit candidate tuples",
            size: candidates,
            limit: max,
        });
    }
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let k = sizes.len();
    let mut cur = vec![0usize; k];
    if sizes.iter().all(|&s| s > 0) {
        loop {
            if d
                .arrows
                .iter()
                .all(|a| a.map.table[cur[a.source]] == cur[a.target])
            {
                tuples.push(cur.clone());
            }
            let mut i = k;
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < sizes[i] {
                    break false;
                }
                cur[i] = 0;
            };
            if done {
                break;
            }
        }
    }
    let n = tuples.len();
    limits::check_carrier("limit carrier", n)?;
    let projections: Vec<PointMap> = (0..k)
        .map(|i| PointMap {
            source: n,
            target: sizes[i],
            table: tuples.iter().map(|t| t[i]).collect(),
        })
        .collect();
    let family: SubsetFamily = Subset::full(n)
        .subsets()
        .filter(|&s| {
            d.objects
                .iter()
                .zip(&projections)
                .all(|(o, l)| o.is_connected_subset(l.image(s)))
        })
        .collect();
    Ok(Limit {
        space: ConnSpace::from_parts_unchecked(GroundSet::new(n), family, d.integral),
        projections,
    })
}

/// Tensor product: the structure generated by all boxes `K₁ × K₂`.
pub fn tensor(x1: &ConnSpace, x2: &ConnSpace) -> Result<ConnSpace> {
    let (n1, n2) = (x1.size(), x2.size());
    let n = n1 * n2;
    limits::check_addressable("tensor carrier", n)?;
    let mut boxes = SubsetFamily::new();
    for &k1 in x1.structure() {
        for &k2 in x2.structure() {
            boxes.insert(encode_box(k1, k2, n2));
        }
    }
    // boxes of singletons are singletons, so generating without the
    // integral flag is exact for integral factors
    let generated = generate(&GroundSet::new(n), &boxes, false)?;
    let integral = x1.is_integral() && x2.is_integral();
    Ok(ConnSpace::from_parts_unchecked(
        GroundSet::new(n),
        generated.structure().clone(),
        integral,
    ))
}

/// All partial maps `f(a, -)` and `f(-, b)` are morphisms.
pub fn is_partially_connecting(
    f: &PointMap,
    x1: &ConnSpace,
    x2: &ConnSpace,
    y: &ConnSpace,
) -> Result<bool> {
    let (n1, n2) = (x1.size(), x2.size());
    if f.source != n1 * n2 || f.target != y.size() {
        return Err(Error::GroundMismatch(format!(
            "map {}→{} on a product of {n1}×{n2} points into {} points",
            f.source,
            f.target,
            y.size()
        )));
    }
    for a in 0..n1 {
        let row: Vec<usize> = (0..n2).map(|b| f.table[a * n2 + b]).collect();
        if !x2.structure().iter().all(|&k| y.is_connected_subset(k.map(&row))) {
            return Ok(false);
        }
    }
    for b in 0..n2 {
        let col: Vec<usize> = (0..n1).map(|a| f.table[a * n2 + b]).collect();
        if !x1.structure().iter().all(|&k| y.is_connected_subset(k.map(&col))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The integral space of morphisms `x → y`, kept implicit: its points are
/// the enumerated morphisms and connectedness of a set of them is decided
/// on demand.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: ConnSpace,
    target: ConnSpace,
    morphisms: Vec<PointMap>,
}

impl HomSpace {
    pub fn new(x: &ConnSpace, y: &ConnSpace) -> Result<Self> {
        if !x.is_integral() || !y.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(HomSpace {
            source: x.clone(),
            target: y.clone(),
            morphisms: morphisms(x, y)?,
        })
    }

    /// Restricts the points to the morphisms accepted by `keep`, preserving
    /// order. The structure is the induced one.
    pub fn restricted(&self, keep: impl Fn(&PointMap) -> bool) -> HomSpace {
        HomSpace {
            source: self.source.clone(),
            target: self.target.clone(),
            morphisms: self.morphisms.iter().filter(|m| keep(m)).cloned().collect(),
        }
    }

    pub fn source(&self) -> &ConnSpace {
        &self.source
    }

    pub fn target(&self) -> &ConnSpace {
        &self.target
    }

    pub fn morphisms(&self) -> &[PointMap] {
        &self.morphisms
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn index_of(&self, f: &PointMap) -> Option<usize> {
        self.morphisms.binary_search(f).ok()
    }

    /// `⟨M, A⟩`: the union of the images of `a` under the morphisms `m`.
    pub fn evaluate(&self, m: &[usize], a: Subset) -> Subset {
        m.iter()
            .fold(Subset::EMPTY, |acc, &i| acc | self.morphisms[i].image(a))
    }

    /// Pointwise criterion: `⟨M, {p}⟩` connected for every point `p`.
    pub fn is_connected(&self, m: &[usize]) -> bool {
        (0..self.source.size())
            .all(|p| self.target.is_connected_subset(self.evaluate(m, Subset::singleton(p))))
    }

    /// Defining criterion: `⟨M, K⟩` connected for every connected `K`.
    pub fn is_connected_by_definition(&self, m: &[usize]) -> bool {
        self.source
            .structure()
            .iter()
            .all(|&k| self.target.is_connected_subset(self.evaluate(m, k)))
    }

    /// The explicit space, one point per morphism.
    pub fn materialize(&self) -> Result<ConnSpace> {
        let n = self.morphisms.len();
        limits::check_carrier("hom-space carrier", n)?;
        let family: SubsetFamily = Subset::full(n)
            .subsets()
            .filter(|s| {
                let m: Vec<usize> = s.points().collect();
                self.is_connected(&m)
            })
            .collect();
        Ok(ConnSpace::from_parts_unchecked(GroundSet::new(n), family, true))
    }

    /// True iff `phi`, a map from the points of `y` to morphism indices, is
    /// a morphism `y → self`.
    pub fn is_morphism_into(&self, phi: &PointMap, y: &ConnSpace) -> Result<bool> {
        if phi.source != y.size() || phi.target != self.len() {
            return Err(Error::GroundMismatch(format!(
                "map {}→{} into a hom-space of {} points from {} points",
                phi.source,
                phi.target,
                self.len(),
                y.size()
            )));
        }
        Ok(y.structure().iter().all(|&l| {
            let m: Vec<usize> = l.points().map(|p| phi.table[p]).collect();
            self.is_connected(&m)
        }))
    }

    /// All morphisms `y → self`, tables in lexicographic order.
    pub fn morphisms_from(&self, y: &ConnSpace) -> Result<Vec<PointMap>> {
        let count = limits::power(self.len(), y.size());
        let limit = Limits::current().max_hom as u128;
        if count > limit {
            return Err(Error::HomTooLarge { size: count, limit });
        }
        let mut out = Vec::new();
        let mut err = None;
        for_each_function(y.size(), self.len(), |table| {
            let phi = PointMap {
                source: y.size(),
                target: self.len(),
                table: table.to_vec(),
            };
            match self.is_morphism_into(&phi, y) {
                Ok(true) => out.push(phi),
                Ok(false) => {}
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// The hom-space `Cnct(x, y)` as an explicit space.
pub fn hom_space(x: &ConnSpace, y: &ConnSpace) -> Result<ConnSpace> {
    HomSpace::new(x, y)?.materialize()
}

/// Transposes `psi : x ⊠ y → z` into `y → Cnct(x, z)`, `y ↦ psi(-, y)`.
/// `hom` must be `Cnct(x, z)`.
pub fn curry(psi: &PointMap, y: &ConnSpace, hom: &HomSpace) -> Result<PointMap> {
    let (nx, ny) = (hom.source.size(), y.size());
    if psi.source != nx * ny || psi.target != hom.target.size() {
        return Err(Error::GroundMismatch(format!(
            "map {}→{} is not defined on {nx}×{ny} points into {} points",
            psi.source,
            psi.target,
            hom.target.size()
        )));
    }
    let mut table = Vec::with_capacity(ny);
    for b in 0..ny {
        let partial = PointMap {
            source: nx,
            target: psi.target,
            table: (0..nx).map(|a| psi.table[a * ny + b]).collect(),
        };
        table.push(hom.index_of(&partial).ok_or(Error::NotAMorphism)?);
    }
    let phi = PointMap {
        source: ny,
        target: hom.len(),
        table,
    };
    if !hom.is_morphism_into(&phi, y)? {
        return Err(Error::NotAMorphism);
    }
    Ok(phi)
}

/// Inverse of [`curry`]: `(a, b) ↦ phi(b)(a)` on the `x ⊠ y` carrier.
pub fn uncurry(phi: &PointMap, y: &ConnSpace, hom: &HomSpace) -> Result<PointMap> {
    if phi.source != y.size() || phi.target != hom.len() {
        return Err(Error::GroundMismatch(format!(
            "map {}→{} is not from {} points into a hom-space of {} points",
            phi.source,
            phi.target,
            y.size(),
            hom.len()
        )));
    }
    let (nx, ny) = (hom.source.size(), y.size());
    let mut table = vec![0; nx * ny];
    for a in 0..nx {
        for b in 0..ny {
            table[a * ny + b] = hom.morphisms[phi.table[b]].table[a];
        }
    }
    Ok(PointMap {
        source: nx * ny,
        target: hom.target.size(),
        table,
    })
}

/// A finite time space: an integral space with two marked instants.
#[derive(Clone, Debug)]
pub struct TimeSpace {
    pub space: ConnSpace,
    pub zero: usize,
    pub one: usize,
}

impl TimeSpace {
    pub fn new(space: ConnSpace, zero: usize, one: usize) -> Result<Self> {
        if !space.is_integral() {
            return Err(Error::NotIntegral);
        }
        for p in [zero, one] {
            if p >= space.size() {
                return Err(Error::InvalidPoint {
                    point: p,
                    size: space.size(),
                });
            }
        }
        Ok(TimeSpace { space, zero, one })
    }
}

fn check_homotopy_inputs(
    f: &PointMap,
    g: &PointMap,
    x: &ConnSpace,
    y: &ConnSpace,
) -> Result<()> {
    if !x.is_integral() || !y.is_integral() {
        return Err(Error::NotIntegral);
    }
    for m in [f, g] {
        check_map(m, x, y)?;
    }
    Ok(())
}

/// Checks that `h : I × X → Y` (point `(t, p)` at `t·|X| + p`) starts at `f`,
/// ends at `g`, is a morphism at each instant, and moves every point along
/// connected tracks.
pub fn verify_homotopy(
    h: &PointMap,
    f: &PointMap,
    g: &PointMap,
    time: &TimeSpace,
    x: &ConnSpace,
    y: &ConnSpace,
) -> Result<bool> {
    check_homotopy_inputs(f, g, x, y)?;
    let (ni, nx) = (time.space.size(), x.size());
    if h.source != ni * nx || h.target != y.size() {
        return Err(Error::GroundMismatch(format!(
            "homotopy {}→{} on {ni}×{nx} points into {} points",
            h.source,
            h.target,
            y.size()
        )));
    }
    let at = |t: usize, p: usize| h.table[t * nx + p];
    if (0..nx).any(|p| at(time.zero, p) != f.table[p] || at(time.one, p) != g.table[p]) {
        return Ok(false);
    }
    for t in 0..ni {
        let row: Vec<usize> = (0..nx).map(|p| at(t, p)).collect();
        if !x.structure().iter().all(|&k| y.is_connected_subset(k.map(&row))) {
            return Ok(false);
        }
    }
    for p in 0..nx {
        let track: Vec<usize> = (0..ni).map(|t| at(t, p)).collect();
        if !time
            .space
            .structure()
            .iter()
            .all(|&d| y.is_connected_subset(d.map(&track)))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive search for a homotopy `f ∼ g` as a function on `I × X`.
/// Only the rows at instants other than the two marked ones are free.
pub fn homotopic(
    f: &PointMap,
    g: &PointMap,
    time: &TimeSpace,
    x: &ConnSpace,
    y: &ConnSpace,
) -> Result<Option<PointMap>> {
    check_homotopy_inputs(f, g, x, y)?;
    let (ni, nx, ny) = (time.space.size(), x.size(), y.size());
    if time.zero == time.one && f != g {
        return Ok(None);
    }
    let free: Vec<usize> = (0..ni).filter(|&t| t != time.zero && t != time.one).collect();
    let cells = free.len() * nx;
    let size = limits::power(ny, cells);
    let limit = Limits::current().max_search as u128;
    if size > limit {
        return Err(Error::SearchTooLarge { size, limit });
    }
    let mut table = vec![0usize; ni * nx];
    table[time.zero * nx..(time.zero + 1) * nx].copy_from_slice(&f.table);
    table[time.one * nx..(time.one + 1) * nx].copy_from_slice(&g.table);
    let mut found = None;
    let mut err = None;
    for_each_function(cells, ny, |cellv| {
        if found.is_some() || err.is_some() {
            return;
        }
        for (i, &t) in free.iter().enumerate() {
            table[t * nx..(t + 1) * nx].copy_from_slice(&cellv[i * nx..(i + 1) * nx]);
        }
        let h = PointMap {
            source: ni * nx,
            target: ny,
            table: table.clone(),
        };
        match verify_homotopy(&h, f, g, time, x, y) {
            Ok(true) => found = Some(h),
            Ok(false) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Exhaustive search for a homotopy as a morphism `I → Cnct(X, Y)`; returns
/// the morphism assigned to each instant.
pub fn homotopic_via_hom(
    f: &PointMap,
    g: &PointMap,
    time: &TimeSpace,
    x: &ConnSpace,
    y: &ConnSpace,
) -> Result<Option<Vec<PointMap>>> {
    check_homotopy_inputs(f, g, x, y)?;
    let hom = HomSpace::new(x, y)?;
    let (Some(fi), Some(gi)) = (hom.index_of(f), hom.index_of(g)) else {
        return Ok(None);
    };
    if time.zero == time.one && fi != gi {
        return Ok(None);
    }
    let ni = time.space.size();
    let free: Vec<usize> = (0..ni).filter(|&t| t != time.zero && t != time.one).collect();
    let size = limits::power(hom.len(), free.len());
    let limit = Limits::current().max_search as u128;
    if size > limit {
        return Err(Error::SearchTooLarge { size, limit });
    }
    let mut table = vec![0usize; ni];
    table[time.zero] = fi;
    table[time.one] = gi;
    let mut found = None;
    for_each_function(free.len(), hom.len(), |choice| {
        if found.is_some() {
            return;
        }
        for (i, &t) in free.iter().enumerate() {
            table[t] = choice[i];
        }
        let ok = time.space.structure().iter().all(|&d| {
            let m: Vec<usize> = d.points().map(|t| table[t]).collect();
            hom.is_connected(&m)
        });
        if ok {
            found = Some(table.iter().map(|&i| hom.morphisms[i].clone()).collect());
        }
    });
    Ok(found)
}
