//! Brute-force reference implementations used to validate the closed-form
//! ball criteria and the crossing BFS. Deliberately наive and independent of
//! the production code paths they check.

use crate::graph::{Graph, Subgraph, Vertex};
use crate::localsep::LocalSeparation;

/// Ball membership by exact-length walk enumeration: a vertex `u` lies in
/// the ball of diameter `r` around `v` iff some closed walk through `v` of
/// length at most `r` visits `u`, i.e. iff walks `v -> u` of length `a` and
/// `u -> v` of length `b` exist with `a + b <= r`. Edges analogously with
/// `a + 1 + b <= r`. Walk existence is computed by boolean matrix powers.
pub fn ball_by_walk_enumeration(g: &Graph, v: Vertex, r: usize) -> Subgraph {
    let n = g.n();
    // reach[k][x][y] = a walk of length exactly k from x to y exists
    let mut reach: Vec<Vec<Vec<bool>>> = Vec::with_capacity(r + 1);
    let mut id = vec![vec![false; n]; n];
    for (x, row) in id.iter_mut().enumerate() {
        row[x] = true;
    }
    reach.push(id);
    for _ in 1..=r {
        let prev = reach.last().unwrap();
        let mut next = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                if prev[x][y] {
                    for z in g.neighbors(y as Vertex) {
                        next[x][z as usize] = true;
                    }
                }
            }
        }
        reach.push(next);
    }
    let vi = v as usize;
    let mut sub = Subgraph::empty(g);
    for u in 0..n {
        'la: for a in 0..=r {
            for b in 0..=r - a {
                if reach[a][vi][u] && reach[b][u][vi] {
                    sub.vertices[u] = true;
                    break 'la;
                }
            }
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        let (x, y) = (e.a as usize, e.b as usize);
        'lb: for a in 0..=r.saturating_sub(1) {
            for b in 0..=r - 1 - a {
                // walk v ->a-> x, edge, y ->b-> v; both orientations by symmetry
                if (reach[a][vi][x] && reach[b][y][vi]) || (reach[a][vi][y] && reach[b][x][vi]) {
                    sub.edges[id] = true;
                    break 'lb;
                }
            }
        }
    }
    sub
}

/// Crossing by exhaustive walk enumeration: all u-v walks of length at most
/// `r/2`, with an independent traversal-parity scan per walk.
pub fn crosses_by_walk_enumeration(
    g: &Graph,
    sep: &LocalSeparation,
    u: Vertex,
    v: Vertex,
    r: usize,
) -> bool {
    if sep.in_separator(u) || sep.in_separator(v) || u == v {
        return false;
    }
    let mut walk = vec![u];
    dfs(g, sep, v, r / 2, &mut walk)
}

fn dfs(g: &Graph, sep: &LocalSeparation, target: Vertex, budget: usize, walk: &mut Vec<Vertex>) -> bool {
    let cur = *walk.last().unwrap();
    if cur == target && walk.len() > 1 && walk_parity_odd(sep, walk) {
        return true;
    }
    if budget == 0 {
        return false;
    }
    for w in g.neighbors(cur) {
        walk.push(w);
        if dfs(g, sep, target, budget - 1, walk) {
            walk.pop();
            return true;
        }
        walk.pop();
    }
    false
}

/// Independent parity scan: count interior maximal separator runs whose two
/// flanking vertices lie on opposite sides.
fn walk_parity_odd(sep: &LocalSeparation, verts: &[Vertex]) -> bool {
    let mut count = 0usize;
    let mut i = 1;
    while i + 1 <= verts.len().saturating_sub(1) {
        if sep.in_separator(verts[i]) {
            let start = i;
            while i < verts.len() && sep.in_separator(verts[i]) {
                i += 1;
            }
            if i < verts.len() {
                let (prev, next) = (verts[start - 1], verts[i]);
                if let (Some(a), Some(b)) = (sep.side_of(prev), sep.side_of(next)) {
                    if a != b {
                        count += 1;
                    }
                }
            }
        } else {
            i += 1;
        }
    }
    count % 2 == 1
}
