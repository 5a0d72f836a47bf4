//! Irreducible connected sets, generic graphs and the connectivity index.
//!
//! On a finite space a connected set `K` is reducible exactly when it is the
//! union of two overlapping connected proper subsets. The nonempty
//! irreducible sets are the generic points; ordered by strict inclusion they
//! form the generic graph, a DAG whose sinks are the singletons of an
//! integral space. The index of a space is the length of that DAG.

use crate::error::{Error, Result};
use crate::generation::generate;
use crate::space::{is_isomorphic, ConnSpace, GroundSet};
use crate::subset::{Subset, SubsetFamily, MAX_POINTS};

/// True iff `k` is the union of two overlapping connected proper subsets.
pub fn is_reducible(space: &ConnSpace, k: Subset) -> Result<bool> {
    if k.is_empty() || !space.is_connected_subset(k) {
        return Err(Error::NotConnected(k));
    }
    Ok(reducible_unchecked(space.structure(), k))
}

fn reducible_unchecked(structure: &SubsetFamily, k: Subset) -> bool {
    let parts: Vec<Subset> = structure
        .iter()
        .copied()
        .filter(|m| !m.is_empty() && m.is_proper_subset_of(k))
        .collect();
    parts.iter().enumerate().any(|(i, &a)| {
        parts[i + 1..]
            .iter()
            .any(|&b| a.intersects(b) && (a | b) == k)
    })
}

/// All nonempty irreducible connected subsets, in canonical order.
pub fn irreducibles(space: &ConnSpace) -> SubsetFamily {
    let members: Vec<Subset> = space
        .structure()
        .iter()
        .copied()
        .filter(|&m| !m.is_empty() && !reducible_unchecked(space.structure(), m))
        .collect();
    SubsetFamily::from_sorted_unchecked(members)
}

/// Every nonempty connected subset is irreducible.
pub fn is_distinguished(space: &ConnSpace) -> bool {
    space
        .structure()
        .iter()
        .all(|&m| m.is_empty() || !reducible_unchecked(space.structure(), m))
}

/// The carrier is a nonempty irreducible connected subset.
pub fn is_irreducible_space(space: &ConnSpace) -> bool {
    let whole = space.carrier();
    !whole.is_empty()
        && space.is_connected_subset(whole)
        && !reducible_unchecked(space.structure(), whole)
}

/// The structure with the whole carrier added.
pub fn brunnian_closure(space: &ConnSpace) -> ConnSpace {
    let mut family = space.structure().clone();
    family.insert(space.carrier());
    // the carrier contains every member, so no new overlap union can appear
    ConnSpace::from_parts_unchecked(space.ground().clone(), family, space.is_integral())
}

/// A directed acyclic graph of generic points, edges running from a set to
/// the sets it immediately covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericGraph {
    vertices: Vec<Subset>,
    edges: Vec<(usize, usize)>,
}

impl GenericGraph {
    /// An abstract DAG on `vertex_count` vertices. Vertex subsets are left
    /// empty; use [`space_from_generic_graph`] to realize it.
    pub fn abstract_dag(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &edges {
            if a >= vertex_count || b >= vertex_count || a == b {
                return Err(Error::InvalidEdge(a, b));
            }
        }
        let g = GenericGraph {
            vertices: vec![Subset::EMPTY; vertex_count],
            edges: dedup_edges(edges),
        };
        if g.topological_order().is_none() {
            return Err(Error::NotADag);
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        adj
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(_, b) in &self.edges {
            deg[b] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, _) in &self.edges {
            deg[a] += 1;
        }
        deg
    }

    pub fn sinks(&self) -> Vec<usize> {
        let out = self.out_degrees();
        (0..self.vertices.len()).filter(|&v| out[v] == 0).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        let inn = self.in_degrees();
        (0..self.vertices.len()).filter(|&v| inn[v] == 0).collect()
    }

    /// Kahn order, or `None` on a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let adj = self.out_neighbors();
        let mut indeg = self.in_degrees();
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in &adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Longest path length from each vertex down to a sink.
    pub fn heights(&self) -> Vec<usize> {
        let adj = self.out_neighbors();
        let order = self
            .topological_order()
            .expect("generic graphs are acyclic");
        let mut h = vec![0usize; self.vertices.len()];
        for &v in order.iter().rev() {
            h[v] = adj[v].iter().map(|&w| h[w] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Components of the underlying undirected graph, each as a sorted
    /// vertex list, ordered by smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut index_of = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if index_of[r] == usize::MAX {
                index_of[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index_of[r]].push(v);
        }
        comps
    }

    /// A triple of distinct vertices `a → b ← c`.
    pub fn find_cotriple(&self) -> Option<(usize, usize, usize)> {
        let mut parents = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            parents[b].push(a);
        }
        parents
            .iter()
            .enumerate()
            .find(|(_, p)| p.len() >= 2)
            .map(|(b, p)| (p[0], b, p[1]))
    }

    /// One source, every other vertex entered exactly once, weakly connected.
    pub fn is_directed_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let inn = self.in_degrees();
        let roots = inn.iter().filter(|&&d| d == 0).count();
        roots == 1 && inn.iter().all(|&d| d <= 1) && self.edges.len() == n - 1
            && self.weak_components().len() == 1
    }

    /// For each vertex, the set of sinks reachable from it, as a subset of
    /// sink positions (sinks numbered in vertex order).
    pub fn reachable_sinks(&self) -> Vec<Subset> {
        let sinks = self.sinks();
        let mut sink_pos = vec![usize::MAX; self.vertices.len()];
        for (i, &s) in sinks.iter().enumerate() {
            sink_pos[s] = i;
        }
        let adj = self.out_neighbors();
        let order = self
            .topological_order()
            .expect("generic graphs are acyclic");
        let mut reach = vec![Subset::EMPTY; self.vertices.len()];
        for &v in order.iter().rev() {
            reach[v] = if adj[v].is_empty() {
                Subset::singleton(sink_pos[v])
            } else {
                adj[v].iter().fold(Subset::EMPTY, |acc, &w| acc | reach[w])
            };
        }
        reach
    }
}

fn dedup_edges(mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Covering pairs of strict inclusion among `vertices`.
fn covering_edges(vertices: &[Subset]) -> Vec<(usize, usize)> {
    let n = vertices.len();
    let mut edges = Vec::new();
    for g in 0..n {
        for h in 0..n {
            if !vertices[h].is_proper_subset_of(vertices[g]) {
                continue;
            }
            let covered = (0..n).any(|k| {
                vertices[h].is_proper_subset_of(vertices[k])
                    && vertices[k].is_proper_subset_of(vertices[g])
            });
            if !covered {
                edges.push((g, h));
            }
        }
    }
    edges
}

/// The generic graph of an integral space: its irreducible connected sets
/// in canonical order, with covering edges.
pub fn generic_graph(space: &ConnSpace) -> Result<GenericGraph> {
    if !space.is_integral() {
        return Err(Error::NotIntegral);
    }
    let vertices = irreducibles(space).into_members();
    let edges = covering_edges(&vertices);
    Ok(GenericGraph { vertices, edges })
}

/// Rebuilds the integral space whose generic graph is `g`.
///
/// Points are the sinks of `g` in vertex order; each vertex stands for the
/// set of sinks it reaches. The space generated by those sets is accepted
/// only if its generic graph matches `g` under the vertex-to-reach map.
pub fn space_from_generic_graph(g: &GenericGraph) -> Result<ConnSpace> {
    if g.topological_order().is_none() {
        return Err(Error::NotADag);
    }
    let sinks = g.sinks();
    if sinks.len() > MAX_POINTS {
        return Err(Error::SizeLimitExceeded {
            what: "generic graph sinks",
            size: sinks.len() as u128,
            limit: MAX_POINTS as u128,
        });
    }
    let reach = g.reachable_sinks();
    let ground = GroundSet::new(sinks.len());
    let space = generate(&ground, &reach.iter().copied().collect(), true)?;
    let rebuilt = generic_graph(&space)?;

    // if g were isomorphic to the rebuilt graph, the isomorphism would have
    // to send each vertex to the generic point made of the sinks it reaches
    if rebuilt.vertex_count() != g.vertex_count() {
        return Err(Error::NotRealizable(format!(
            "{} vertices, but the generated space has {} generic points",
            g.vertex_count(),
            rebuilt.vertex_count()
        )));
    }
    let mut image = Vec::with_capacity(g.vertex_count());
    for (v, &r) in reach.iter().enumerate() {
        match rebuilt.vertices.binary_search(&r) {
            Ok(i) => image.push(i),
            Err(_) => {
                return Err(Error::NotRealizable(format!(
                    "vertex {v} reaches {r}, which is not a generic point"
                )))
            }
        }
    }
    let mut hit = vec![false; image.len()];
    for (v, &i) in image.iter().enumerate() {
        if std::mem::replace(&mut hit[i], true) {
            return Err(Error::NotRealizable(format!(
                "vertex {v} reaches the same sinks as another vertex"
            )));
        }
    }
    let mut mapped: Vec<(usize, usize)> = g.edges.iter().map(|&(a, b)| (image[a], image[b])).collect();
    mapped.sort_unstable();
    let mut expected = rebuilt.edges.clone();
    expected.sort_unstable();
    if mapped != expected {
        let missing = expected.iter().find(|e| !mapped.contains(e));
        let extra = mapped.iter().find(|e| !expected.contains(e));
        return Err(Error::NotRealizable(format!(
            "edge sets differ (missing covering edge {missing:?}, extra edge {extra:?})"
        )));
    }
    Ok(space)
}

/// Heights of the generic points and the index of the space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub space_index: usize,
    /// `(generic point, height)` in generic-graph vertex order.
    pub per_vertex_heights: Vec<(Subset, usize)>,
}

impl IndexReport {
    pub fn height_of(&self, vertex: Subset) -> Option<usize> {
        self.per_vertex_heights
            .iter()
            .find(|(v, _)| *v == vertex)
            .map(|&(_, h)| h)
    }
}

pub fn index(space: &ConnSpace) -> Result<IndexReport> {
    if !space.is_integral() {
        return Err(Error::NotIntegral);
    }
    if space.size() == 0 {
        return Err(Error::NoIndexForEmptySpace);
    }
    let g = generic_graph(space)?;
    let heights = g.heights();
    Ok(IndexReport {
        space_index: heights.iter().copied().max().unwrap_or(0),
        per_vertex_heights: g.vertices.iter().copied().zip(heights).collect(),
    })
}

/// The connectivity index `ω`.
pub fn omega(space: &ConnSpace) -> Result<usize> {
    index(space).map(|r| r.space_index)
}

/// Graph-side and space-side answers to the same five structural questions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub graph_connected: bool,
    pub graph_components: usize,
    pub graph_sources: usize,
    pub cotriple: Option<(Subset, Subset, Subset)>,
    pub graph_is_tree: bool,
    pub space_connected: bool,
    pub space_components: usize,
    pub space_irreducible: bool,
    pub space_distinguished: bool,
}

impl GraphReport {
    /// True iff every graph-side fact agrees with its space-side counterpart.
    pub fn consistent(&self) -> bool {
        self.graph_connected == self.space_connected
            && self.graph_components == self.space_components
            && (self.graph_sources == 1) == self.space_irreducible
            && self.cotriple.is_none() == self.space_distinguished
            && self.graph_is_tree == (self.space_connected && self.space_distinguished)
    }
}

pub fn graph_report(space: &ConnSpace) -> Result<GraphReport> {
    if !space.is_integral() {
        return Err(Error::NotIntegral);
    }
    if space.size() == 0 {
        return Err(Error::NoIndexForEmptySpace);
    }
    let g = generic_graph(space)?;
    let comps = g.weak_components();
    Ok(GraphReport {
        graph_connected: comps.len() == 1,
        graph_components: comps.len(),
        graph_sources: g.sources().len(),
        cotriple: g
            .find_cotriple()
            .map(|(a, b, c)| (g.vertices[a], g.vertices[b], g.vertices[c])),
        graph_is_tree: g.is_directed_tree(),
        space_connected: space.is_connected_space(),
        space_components: space.connected_components()?.len(),
        space_irreducible: is_irreducible_space(space),
        space_distinguished: is_distinguished(space),
    })
}

/// Searches for a vertex bijection `a → b` preserving edges in both
/// directions, pruned by in/out degree and height.
pub fn digraph_isomorphism(a: &GenericGraph, b: &GenericGraph) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edges.len() != b.edges.len() {
        return None;
    }
    let sig = |g: &GenericGraph| -> Vec<(usize, usize, usize)> {
        let (i, o, h) = (g.in_degrees(), g.out_degrees(), g.heights());
        (0..g.vertex_count()).map(|v| (i[v], o[v], h[v])).collect()
    };
    let (sa, sb) = (sig(a), sig(b));
    let mut ca = sa.clone();
    let mut cb = sb.clone();
    ca.sort_unstable();
    cb.sort_unstable();
    if ca != cb {
        return None;
    }
    let mut adj_b = vec![vec![false; n]; n];
    for &(x, y) in &b.edges {
        adj_b[x][y] = true;
    }
    // edges of `a` checkable once both ends are assigned
    let mut back: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for &(x, y) in &a.edges {
        if x < y {
            back[y].push((x, true));
        } else {
            back[x].push((y, false));
        }
    }

    fn go(
        v: usize,
        n: usize,
        sa: &[(usize, usize, usize)],
        sb: &[(usize, usize, usize)],
        adj_b: &[Vec<bool>],
        back: &[Vec<(usize, bool)>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == n {
            return true;
        }
        for c in 0..n {
            if used[c] || sa[v] != sb[c] {
                continue;
            }
            let ok = back[v].iter().all(|&(u, u_to_v)| {
                if u_to_v {
                    adj_b[map[u]][c]
                } else {
                    adj_b[c][map[u]]
                }
            });
            if ok {
                map[v] = c;
                used[c] = true;
                if go(v + 1, n, sa, sb, adj_b, back, map, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }

    let mut map = vec![0; n];
    let mut used = vec![false; n];
    // equal edge counts plus every `a` edge mapping to a `b` edge makes the
    // map an isomorphism
    go(0, n, &sa, &sb, &adj_b, &back, &mut map, &mut used).then_some(map)
}

/// Round trip helper: rebuild from the generic graph and compare.
pub fn round_trips(space: &ConnSpace) -> Result<bool> {
    let g = generic_graph(space)?;
    let rebuilt = space_from_generic_graph(&g)?;
    Ok(is_isomorphic(space, &rebuilt)?.is_some())
}
