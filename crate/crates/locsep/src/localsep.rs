//! Local cutvertices, connectivity graphs, r-local 2-separators and their
//! separations.
//!
//! The connectivity graph at `{v0, v1}` of locality `r` has vertex set
//! `N({v0, v1})`; two vertices are adjacent iff they lie in the same
//! component of a punctured ball `B_r(v_i) - v_i - v_{1-i}`. The pair is an
//! r-local 2-separator when this graph is disconnected and the two vertices
//! are at distance at most `r/2` in the host graph (integer form:
//! `2*dist <= r`).

use crate::graph::{ball, punctured_ball_components, Graph, Vertex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SepError {
    #[error("{{{0}, {1}}} is not an r-local 2-separator at r = {2}")]
    NotASeparator(Vertex, Vertex, usize),
    #[error("vertex {0} lies in the separator")]
    VertexInSeparator(Vertex),
    #[error("vertex {0} is outside the separation's sides")]
    OutsideSides(Vertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeparatorKind {
    Cutvertex(Vertex),
    Pair(Vertex, Vertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSeparator {
    pub kind: SeparatorKind,
    pub r: usize,
}

impl LocalSeparator {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self.kind {
            SeparatorKind::Cutvertex(v) => vec![v],
            SeparatorKind::Pair(a, b) => vec![a, b],
        }
    }

    pub fn pair(&self) -> Option<(Vertex, Vertex)> {
        match self.kind {
            SeparatorKind::Pair(a, b) => Some((a, b)),
            SeparatorKind::Cutvertex(_) => None,
        }
    }
}

/// Neighbourhood `N(X)` of the pair: vertices adjacent to either, minus X.
pub fn neighbourhood(g: &Graph, v0: Vertex, v1: Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> =
        g.neighbors(v0).chain(g.neighbors(v1)).filter(|&u| u != v0 && u != v1).collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Debug)]
pub struct ConnectivityGraph {
    pub base: (Vertex, Vertex),
    pub r: usize,
    /// `N(X)`, sorted.
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    /// Components as sorted vertex lists, ordered by minimum vertex.
    /// Vertices absent from both punctured balls stay isolated.
    pub components: Vec<Vec<Vertex>>,
    comp_of: Vec<i32>,
}

impl ConnectivityGraph {
    pub fn is_disconnected(&self) -> bool {
        self.components.len() >= 2
    }

    pub fn component_of(&self, v: Vertex) -> Option<usize> {
        let c = *self.comp_of.get(v as usize)?;
        (c >= 0).then_some(c as usize)
    }

    pub fn in_separator(&self, v: Vertex) -> bool {
        v == self.base.0 || v == self.base.1
    }

    /// Component index is a singleton isolated vertex.
    pub fn is_isolated_component(&self, idx: usize) -> bool {
        self.components[idx].len() == 1
            && !self.edges.iter().any(|&(a, b)| {
                a == self.components[idx][0] || b == self.components[idx][0]
            })
    }
}

pub fn connectivity_graph(g: &Graph, v0: Vertex, v1: Vertex, r: usize) -> ConnectivityGraph {
    assert_ne!(v0, v1, "connectivity graph needs two distinct vertices");
    let nx = neighbourhood(g, v0, v1);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (center, other) in [(v0, v1), (v1, v0)] {
        let punctured = ball(g, center, r).sub.without_vertices(g, &[center, other]);
        for comp in punctured.components(g) {
            let in_nx: Vec<Vertex> =
                comp.iter().copied().filter(|v| nx.binary_search(v).is_ok()).collect();
            for i in 0..in_nx.len() {
                for j in i + 1..in_nx.len() {
                    edges.push((in_nx[i], in_nx[j]));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    // union-find over N(X)
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for &(a, b) in &edges {
        let ra = find(&mut parent, a as usize);
        let rb = find(&mut parent, b as usize);
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut comp_of = vec![-1i32; n];
    let mut components: Vec<Vec<Vertex>> = Vec::new();
    for &v in &nx {
        let root = find(&mut parent, v as usize);
        match components.iter().position(|c| find(&mut parent, c[0] as usize) == root) {
            Some(i) => components[i].push(v),
            None => components.push(vec![v]),
        }
    }
    for c in &mut components {
        c.sort_unstable();
    }
    components.sort();
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            comp_of[v as usize] = i as i32;
        }
    }
    ConnectivityGraph { base: (v0, v1), r, vertices: nx, edges, components, comp_of }
}

/// `B_r(v) - v` disconnected.
pub fn is_local_cutvertex(g: &Graph, v: Vertex, r: usize) -> bool {
    punctured_ball_components(g, v, r).len() >= 2
}

pub fn is_local_2separator(g: &Graph, v0: Vertex, v1: Vertex, r: usize) -> bool {
    match g.distance(v0, v1) {
        Some(d) if 2 * d <= r => connectivity_graph(g, v0, v1, r).is_disconnected(),
        _ => false,
    }
}

/// All r-local separators of size at most two: every r-local cutvertex, and
/// every unordered pair at distance <= r/2 with a disconnected connectivity
/// graph.
pub fn find_local_2separators(g: &Graph, r: usize) -> Vec<LocalSeparator> {
    let mut out = Vec::new();
    for v in 0..g.n() as Vertex {
        if is_local_cutvertex(g, v, r) {
            out.push(LocalSeparator { kind: SeparatorKind::Cutvertex(v), r });
        }
    }
    for v0 in 0..g.n() as Vertex {
        let dist = g.bfs_distances(v0, Some(r / 2));
        for v1 in v0 + 1..g.n() as Vertex {
            let Some(d) = dist[v1 as usize] else { continue };
            if 2 * d as usize <= r && connectivity_graph(g, v0, v1, r).is_disconnected() {
                out.push(LocalSeparator { kind: SeparatorKind::Pair(v0, v1), r });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// An r-local 2-separation: sides live in `X ∪ N(X)`, intersect in `X`, and
/// each connectivity-graph component lies within exactly one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSeparation {
    pub x: (Vertex, Vertex),
    pub r: usize,
    /// Sorted, includes both separator vertices.
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
    /// Some side component is a single isolated connectivity-graph vertex,
    /// so separations differing only on isolated vertices exist.
    pub involves_isolated: bool,
}

impl LocalSeparation {
    pub fn separator(&self) -> (Vertex, Vertex) {
        self.x
    }

    pub fn in_separator(&self, v: Vertex) -> bool {
        v == self.x.0 || v == self.x.1
    }

    /// Side of a vertex in `(A\X) ∪ (B\X)`; separator vertices and vertices
    /// outside `X ∪ N(X)` report `None`.
    pub fn side_of(&self, v: Vertex) -> Option<Side> {
        if self.in_separator(v) {
            return None;
        }
        if self.side_a.binary_search(&v).is_ok() {
            return Some(Side::A);
        }
        if self.side_b.binary_search(&v).is_ok() {
            return Some(Side::B);
        }
        None
    }

    pub fn opposite_sides(&self, u: Vertex, v: Vertex) -> Result<bool, SepError> {
        let su = self.side_of(u).ok_or(SepError::OutsideSides(u))?;
        let sv = self.side_of(v).ok_or(SepError::OutsideSides(v))?;
        Ok(su != sv)
    }

    /// Image under a vertex bijection (e.g. a graph automorphism).
    pub fn translate(&self, f: impl Fn(Vertex) -> Vertex) -> LocalSeparation {
        let map = |side: &[Vertex]| {
            let mut v: Vec<Vertex> = side.iter().map(|&x| f(x)).collect();
            v.sort_unstable();
            v
        };
        let (x0, x1) = (f(self.x.0), f(self.x.1));
        let mut side_a = map(&self.side_a);
        let mut side_b = map(&self.side_b);
        // keep the canonical orientation: least non-separator vertex in A
        let least = side_a
            .iter()
            .chain(side_b.iter())
            .copied()
            .filter(|&v| v != x0 && v != x1)
            .min();
        if let Some(least) = least {
            if side_b.binary_search(&least).is_ok() {
                std::mem::swap(&mut side_a, &mut side_b);
            }
        }
        LocalSeparation {
            x: (x0.min(x1), x0.max(x1)),
            r: self.r,
            side_a,
            side_b,
            involves_isolated: self.involves_isolated,
        }
    }
}

/// All 2^(c-1) - 1 separations with separator `X`: bipartitions of the `c`
/// local components into two nonempty groups, canonicalised so the side
/// containing the least N(X) vertex is A.
pub fn local_2separations(
    g: &Graph,
    v0: Vertex,
    v1: Vertex,
    r: usize,
) -> Result<Vec<LocalSeparation>, SepError> {
    let cg = connectivity_graph(g, v0, v1, r);
    match g.distance(v0, v1) {
        Some(d) if 2 * d <= r && cg.is_disconnected() => {}
        _ => return Err(SepError::NotASeparator(v0, v1, r)),
    }
    Ok(separations_of(&cg))
}

/// Separations built from an already-computed connectivity graph.
pub fn separations_of(cg: &ConnectivityGraph) -> Vec<LocalSeparation> {
    let c = cg.components.len();
    assert!(c >= 2);
    let (v0, v1) = cg.base;
    let mut out = Vec::new();
    // component 0 holds the least N(X) vertex; fix it in side A
    for mask in 0..(1u32 << (c - 1)) {
        let in_a = |i: usize| i == 0 || (mask >> (i - 1)) & 1 == 1;
        if (0..c).all(in_a) {
            continue; // B must be nonempty
        }
        let mut side_a = vec![v0.min(v1), v0.max(v1)];
        let mut side_b = vec![v0.min(v1), v0.max(v1)];
        let mut involves_isolated = false;
        for (i, comp) in cg.components.iter().enumerate() {
            if cg.is_isolated_component(i) {
                involves_isolated = true;
            }
            if in_a(i) {
                side_a.extend_from_slice(comp);
            } else {
                side_b.extend_from_slice(comp);
            }
        }
        side_a.sort_unstable();
        side_b.sort_unstable();
        out.push(LocalSeparation {
            x: (v0.min(v1), v0.max(v1)),
            r: cg.r,
            side_a,
            side_b,
            involves_isolated,
        });
    }
    out.sort_by(|a, b| a.side_a.cmp(&b.side_a).then(a.side_b.cmp(&b.side_b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{circular_ladder, cycle_cayley};

    fn complete_graph(n: usize) -> Graph {
        let mut g = Graph::with_order(n);
        for i in 0..n as Vertex {
            for j in i + 1..n as Vertex {
                g.add_edge(i, j, &[]);
            }
        }
        g
    }

    #[test]
    fn cycle_local_cutvertices() {
        let c12 = cycle_cayley(12).graph;
        for v in 0..12 {
            assert!(is_local_cutvertex(&c12, v, 11));
            assert!(!is_local_cutvertex(&c12, v, 12));
        }
        let c25 = cycle_cayley(25).graph;
        for v in 0..25 {
            assert!(is_local_cutvertex(&c25, v, 20));
        }
    }

    #[test]
    fn ladder_rung_is_separator() {
        let cl = circular_ladder(12);
        let g = &cl.graph;
        // X = {identity, h} where h = (0,1) has index 1
        let cg = connectivity_graph(g, 0, 1, 11);
        assert_eq!(cg.components.len(), 2);
        assert!(is_local_2separator(g, 0, 1, 11));
        let seps = local_2separations(g, 0, 1, 11).unwrap();
        assert_eq!(seps.len(), 1);
        let sep = &seps[0];
        assert_eq!(sep.side_a.len(), 4); // X plus one rung neighbourhood half
        assert_eq!(sep.side_b.len(), 4);
        assert!(!sep.involves_isolated);
    }

    #[test]
    fn complete_graph_has_no_separators() {
        let k5 = complete_graph(5);
        let cg = connectivity_graph(&k5, 0, 1, 5);
        assert!(!cg.is_disconnected());
        let k4 = complete_graph(4);
        assert!(find_local_2separators(&k4, 4).is_empty());
    }

    #[test]
    fn cycle_adjacent_pair_components() {
        // 12-cycle, X two adjacent vertices, r = 11: the two outside
        // neighbours form two components
        let g = cycle_cayley(12).graph;
        let cg = connectivity_graph(&g, 0, 1, 11);
        assert_eq!(cg.vertices, vec![2, 11]);
        assert_eq!(cg.components.len(), 2);
    }

    #[test]
    fn separation_counts_follow_component_counts() {
        // C_25 with a pair at distance 10 at r = 20 has three components
        let g = cycle_cayley(25).graph;
        let cg = connectivity_graph(&g, 0, 10, 20);
        assert_eq!(cg.components.len(), 3);
        let seps = local_2separations(&g, 0, 10, 20).unwrap();
        assert_eq!(seps.len(), 3);
        for s in &seps {
            assert!(s.side_a.len() > 2 || s.side_b.len() > 2);
            // canonical orientation: least N(X) vertex in A
            let least = *cg.vertices.first().unwrap();
            assert_eq!(s.side_of(least), Some(Side::A));
        }
    }

    #[test]
    fn ladder_separators_are_the_rungs() {
        let cl = circular_ladder(12);
        let g = &cl.graph;
        let found = find_local_2separators(g, 11);
        let pairs: Vec<(Vertex, Vertex)> = found.iter().filter_map(|s| s.pair()).collect();
        // every rung pair {x, xh} is found
        for k in 0..12 {
            let x = 2 * k as Vertex;
            let xh = cl.group.mul(x, 1) as Vertex;
            let rung = (x.min(xh), x.max(xh));
            assert!(pairs.contains(&rung), "missing rung {rung:?}");
        }
        // and no cutvertices
        assert!(found.iter().all(|s| s.pair().is_some()));
    }

    #[test]
    fn side_queries() {
        let cl = circular_ladder(12);
        let sep = &local_2separations(&cl.graph, 0, 1, 11).unwrap()[0];
        assert_eq!(sep.side_of(0), None);
        assert_eq!(sep.side_of(1), None);
        let (g_vertex, g_inv_vertex) = (2, cl.group.inv(2) as Vertex);
        let (sa, sb) = (sep.side_of(g_vertex), sep.side_of(g_inv_vertex));
        assert!(sa.is_some() && sb.is_some() && sa != sb);
        // a far vertex is outside the sides entirely
        assert_eq!(sep.side_of(8), None);
        assert!(sep.opposite_sides(8, 2).is_err());
    }
}
