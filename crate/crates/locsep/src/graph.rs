//! Simple labelled graphs with explicit edge identities, closed-walk balls,
//! walks and girth.
//!
//! The ball of diameter `r` around `v` is the subgraph of vertices and edges
//! lying on closed walks of length at most `r` through `v`. It is NOT the
//! induced subgraph on a metric ball: a vertex `u` belongs iff
//! `2*dist(v,u) <= r`, an edge `{a,b}` iff `dist(v,a) + dist(v,b) + 1 <= r`.
//! These closed forms are validated against an exact-length walk enumerator
//! in `oracle`.

use serde_json::json;
use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkError {
    #[error("walk is not closed")]
    NotClosed,
    #[error("walk is trivial")]
    Trivial,
    #[error("walk backtracks at position {0}")]
    Backtracking(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: Vertex,
    pub b: Vertex,
    pub labels: Vec<u32>,
}

impl Edge {
    pub fn other(&self, v: Vertex) -> Vertex {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<Vec<(Vertex, u32)>>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn with_order(n: usize) -> Self {
        Graph {
            names: (0..n).map(|i| i.to_string()).collect(),
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn with_names(names: Vec<String>) -> Self {
        let n = names.len();
        Graph { names, adj: vec![Vec::new(); n], edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Adds or merges a simple edge; parallel labels collapse into the label
    /// set of the one edge. Loops are rejected.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, labels: &[u32]) -> u32 {
        assert_ne!(u, v, "simple graph: no loops");
        if let Some(id) = self.edge_between(u, v) {
            let e = &mut self.edges[id as usize];
            for &l in labels {
                if !e.labels.contains(&l) {
                    e.labels.push(l);
                }
            }
            e.labels.sort_unstable();
            return id;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let mut ls = labels.to_vec();
        ls.sort_unstable();
        ls.dedup();
        let id = self.edges.len() as u32;
        self.edges.push(Edge { a, b, labels: ls });
        self.adj[u as usize].push((v, id));
        self.adj[v as usize].push((u, id));
        id
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: u32) -> &Edge {
        &self.edges[id as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v as usize].iter().map(|&(u, _)| u)
    }

    pub fn incident(&self, v: Vertex) -> &[(Vertex, u32)] {
        &self.adj[v as usize]
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.adj[u as usize].iter().find(|&&(w, _)| w == v).map(|&(_, id)| id)
    }

    /// BFS distances from `v`, optionally capped.
    pub fn bfs_distances(&self, v: Vertex, cap: Option<usize>) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        dist[v as usize] = Some(0);
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x as usize].unwrap();
            if cap.is_some_and(|c| d as usize >= c) {
                continue;
            }
            for u in self.neighbors(x) {
                if dist[u as usize].is_none() {
                    dist[u as usize] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// BFS distance; `None` marks separated vertices.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.bfs_distances(u, None)[v as usize].map(|d| d as usize)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0, None).iter().all(Option::is_some)
    }

    pub fn is_cycle_graph(&self) -> bool {
        self.n() >= 3
            && self.is_connected()
            && (0..self.n() as Vertex).all(|v| self.degree(v) == 2)
    }

    /// Length of a shortest cycle, or `None` for a forest. Scans BFS layers
    /// from every root; from root `x`, a vertex with two strictly closer
    /// neighbours closes an even cycle `2d`, one with an equal-distance
    /// neighbour an odd cycle `2d+1`.
    pub fn girth(&self) -> Option<usize> {
        let mut best = None;
        for root in 0..self.n() as Vertex {
            if let Some(g) = self.shortest_cycle_bound_from(root) {
                best = Some(best.map_or(g, |b: usize| b.min(g)));
            }
        }
        best
    }

    /// For vertex-transitive graphs the scan value is the same at every
    /// root, so one root computes the girth.
    pub fn girth_transitive(&self, root: Vertex) -> Option<usize> {
        self.shortest_cycle_bound_from(root)
    }

    fn shortest_cycle_bound_from(&self, root: Vertex) -> Option<usize> {
        let dist = self.bfs_distances(root, None);
        let mut best: Option<usize> = None;
        for v in 0..self.n() as Vertex {
            let Some(dv) = dist[v as usize] else { continue };
            let mut closer = 0;
            let mut equal = 0;
            for u in self.neighbors(v) {
                match dist[u as usize] {
                    Some(du) if du < dv => closer += 1,
                    Some(du) if du == dv => equal += 1,
                    _ => {}
                }
            }
            let dv = dv as usize;
            if closer >= 2 {
                best = Some(best.map_or(2 * dv, |b| b.min(2 * dv)));
            }
            if equal >= 1 {
                best = Some(best.map_or(2 * dv + 1, |b| b.min(2 * dv + 1)));
            }
        }
        best
    }

    /// Adjacency-list JSON: `{vertices: [names], edges: [[u, v, labels]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vertices": self.names,
            "edges": self.edges.iter().map(|e| json!([e.a, e.b, e.labels])).collect::<Vec<_>>(),
        })
    }
}

/// A subgraph of a host graph: vertex and edge masks. Subgraphs share the
/// host's vertex names but carry their own edge sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: Vec<bool>,
    pub edges: Vec<bool>,
}

impl Subgraph {
    pub fn full(g: &Graph) -> Self {
        Subgraph { vertices: vec![true; g.n()], edges: vec![true; g.edge_count()] }
    }

    pub fn empty(g: &Graph) -> Self {
        Subgraph { vertices: vec![false; g.n()], edges: vec![false; g.edge_count()] }
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices[v as usize]
    }

    pub fn contains_edge(&self, id: u32) -> bool {
        self.edges[id as usize]
    }

    pub fn vertex_list(&self) -> Vec<Vertex> {
        (0..self.vertices.len() as Vertex).filter(|&v| self.vertices[v as usize]).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.iter().filter(|&&b| b).count()
    }

    /// Removes vertices (and their incident edges).
    pub fn without_vertices(&self, g: &Graph, remove: &[Vertex]) -> Subgraph {
        let mut out = self.clone();
        for &v in remove {
            out.vertices[v as usize] = false;
            for &(_, id) in g.incident(v) {
                out.edges[id as usize] = false;
            }
        }
        out
    }

    /// Connected components (vertex lists, each sorted; components ordered by
    /// minimum vertex). Isolated vertices form their own components.
    pub fn components(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; g.n()];
        let mut out = Vec::new();
        for start in 0..g.n() as Vertex {
            if !self.vertices[start as usize] || seen[start as usize] {
                continue;
            }
            let mut comp = vec![start];
            seen[start as usize] = true;
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &(u, id) in g.incident(x) {
                    if self.edges[id as usize] && self.vertices[u as usize] && !seen[u as usize] {
                        seen[u as usize] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, g: &Graph) -> bool {
        self.components(g).len() <= 1
    }

    pub fn is_subgraph_of(&self, other: &Subgraph) -> bool {
        self.vertices.iter().zip(&other.vertices).all(|(a, b)| !a || *b)
            && self.edges.iter().zip(&other.edges).all(|(a, b)| !a || *b)
    }
}

/// The ball of diameter `r` around `center`: everything on closed walks of
/// length at most `r` through the center.
#[derive(Clone, Debug)]
pub struct Ball {
    pub center: Vertex,
    pub diameter: usize,
    pub sub: Subgraph,
}

pub fn ball(g: &Graph, v: Vertex, r: usize) -> Ball {
    let dist = g.bfs_distances(v, Some(r));
    let mut sub = Subgraph::empty(g);
    for u in 0..g.n() {
        if let Some(d) = dist[u] {
            if 2 * d as usize <= r {
                sub.vertices[u] = true;
            }
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        if let (Some(da), Some(db)) = (dist[e.a as usize], dist[e.b as usize]) {
            if da as usize + db as usize + 1 <= r {
                sub.edges[id] = true;
            }
        }
    }
    Ball { center: v, diameter: r, sub }
}

/// Whether the punctured ball `B_r(v) - v` is disconnected.
pub fn punctured_ball_components(g: &Graph, v: Vertex, r: usize) -> Vec<Vec<Vertex>> {
    ball(g, v, r).sub.without_vertices(g, &[v]).components(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub vertices: Vec<Vertex>,
}

impl Walk {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        assert!(!vertices.is_empty(), "walks are nonempty");
        Walk { vertices }
    }

    pub fn trivial(v: Vertex) -> Self {
        Walk { vertices: vec![v] }
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn is_nonbacktracking(&self) -> bool {
        self.vertices.windows(3).all(|w| w[0] != w[2])
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn reversed(&self) -> Walk {
        Walk { vertices: self.vertices.iter().rev().copied().collect() }
    }

    pub fn subwalk(&self, i: usize, j: usize) -> Walk {
        Walk { vertices: self.vertices[i..=j].to_vec() }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WalkError> {
        for w in self.vertices.windows(2) {
            if g.edge_between(w[0], w[1]).is_none() {
                return Err(WalkError::NotAdjacent(w[0], w[1]));
            }
        }
        Ok(())
    }

    /// Whether the walk stays inside a subgraph (vertices and edges).
    pub fn contained_in(&self, g: &Graph, sub: &Subgraph) -> bool {
        self.vertices.iter().all(|&v| sub.contains_vertex(v))
            && self.vertices.windows(2).all(|w| {
                g.edge_between(w[0], w[1]).is_some_and(|id| sub.contains_edge(id))
            })
    }
}

/// A minimum-length nontrivial closed subwalk of a nontrivial
/// non-backtracking closed walk; such a subwalk is a cycle.
pub fn find_cycle_in_walk(w: &Walk) -> Result<Walk, WalkError> {
    if !w.is_closed() {
        return Err(WalkError::NotClosed);
    }
    if w.is_trivial() {
        return Err(WalkError::Trivial);
    }
    if let Some(pos) = w.vertices.windows(3).position(|t| t[0] == t[2]) {
        return Err(WalkError::Backtracking(pos));
    }
    let n = w.vertices.len();
    let mut best: Option<(usize, usize)> = None;
    for i in 0..n {
        for j in i + 1..n {
            if w.vertices[i] == w.vertices[j] {
                let len = j - i;
                if best.is_none_or(|(bi, bj)| len < bj - bi) {
                    best = Some((i, j));
                }
            }
        }
    }
    let (i, j) = best.expect("closed walk repeats its endpoints");
    let cycle = w.subwalk(i, j);
    debug_assert!(is_cycle(&cycle), "minimum closed subwalk must be a cycle");
    Ok(cycle)
}

/// Closed walk with no repeated vertices except its ends, length >= 3.
pub fn is_cycle(w: &Walk) -> bool {
    if !w.is_closed() || w.len() < 3 {
        return false;
    }
    let inner = &w.vertices[..w.vertices.len() - 1];
    let mut sorted = inner.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|p| p[0] != p[1])
}

/// All cycles of length at most `max_len`, each reported once: rooted at its
/// minimum vertex, direction fixed by `second < last`.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    let mut path: Vec<Vertex> = Vec::new();
    let mut on_path = vec![false; g.n()];
    for root in 0..g.n() as Vertex {
        path.clear();
        path.push(root);
        on_path.fill(false);
        on_path[root as usize] = true;
        dfs_cycles(g, root, max_len, &mut path, &mut on_path, &mut out);
    }
    out
}

fn dfs_cycles(
    g: &Graph,
    root: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Walk>,
) {
    let last = *path.last().unwrap();
    for u in g.neighbors(last) {
        if u == root && path.len() >= 3 {
            if path[1] < *path.last().unwrap() {
                let mut cyc = path.clone();
                cyc.push(root);
                out.push(Walk::new(cyc));
            }
        } else if u > root && !on_path[u as usize] && path.len() < max_len {
            path.push(u);
            on_path[u as usize] = true;
            dfs_cycles(g, root, max_len, path, on_path, out);
            path.pop();
            on_path[u as usize] = false;
        }
    }
}
