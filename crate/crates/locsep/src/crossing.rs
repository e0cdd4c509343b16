//! Crossing of local 2-separations: parity-labelled breadth-first search,
//! crossing of separators, symmetry, and total nestedness.
//!
//! A pair `{u,v}` disjoint from the separator `X` crosses a separation
//! `{A,B}` if some u-v walk of length at most `r/2` (integer form:
//! `2*len <= r`) traverses `{A,B}` oddly. The BFS tracks parity outside `X`;
//! inside `X` it additionally tracks the side from which the run was
//! entered, flipping parity on exit iff the exit side differs. Runs touching
//! a walk endpoint are unbounded and contribute nothing.

use crate::graph::{Graph, Vertex};
use crate::localsep::{
    separations_of, ConnectivityGraph, LocalSeparation, LocalSeparator, SepError, Side,
};

#[derive(Clone, Copy, PartialEq, Eq)]
enum St {
    Out { parity: bool },
    In { parity: bool, entry: Option<Side> },
}

impl St {
    fn encode(self) -> usize {
        match self {
            St::Out { parity } => parity as usize,
            St::In { parity, entry } => {
                2 + 2 * match entry {
                    Some(Side::A) => 0,
                    Some(Side::B) => 1,
                    None => 2,
                } + parity as usize
            }
        }
    }

    fn parity(self) -> bool {
        match self {
            St::Out { parity } | St::In { parity, .. } => parity,
        }
    }
}

const STATES: usize = 8;

/// Which parities are realised by u-v walks of length at most `max_len`;
/// index 0 = even, 1 = odd. Endpoints inside the separator are allowed.
pub fn reachable_parities(
    g: &Graph,
    sep: &LocalSeparation,
    u: Vertex,
    v: Vertex,
    max_len: usize,
) -> [bool; 2] {
    let mut visited = vec![false; g.n() * STATES];
    let mut reached = [false; 2];
    let start = if sep.in_separator(u) {
        St::In { parity: false, entry: None }
    } else {
        St::Out { parity: false }
    };
    let note = |reached: &mut [bool; 2], x: Vertex, s: St| {
        if x == v {
            reached[s.parity() as usize] = true;
        }
    };
    visited[u as usize * STATES + start.encode()] = true;
    note(&mut reached, u, start);
    let mut frontier = vec![(u, start)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &(x, s) in &frontier {
            for w in g.neighbors(x) {
                let ns = match s {
                    St::Out { parity } => {
                        if sep.in_separator(w) {
                            St::In { parity, entry: sep.side_of(x) }
                        } else {
                            St::Out { parity }
                        }
                    }
                    St::In { parity, entry } => {
                        if sep.in_separator(w) {
                            St::In { parity, entry }
                        } else {
                            let flip = match (entry, sep.side_of(w)) {
                                (Some(e), Some(s2)) => e != s2,
                                _ => false,
                            };
                            St::Out { parity: parity ^ flip }
                        }
                    }
                };
                let key = w as usize * STATES + ns.encode();
                if !visited[key] {
                    visited[key] = true;
                    note(&mut reached, w, ns);
                    next.push((w, ns));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    reached
}

/// Is there a u-v walk of length at most `max_len` with the requested
/// traversal parity?
pub fn parity_reachable(
    g: &Graph,
    sep: &LocalSeparation,
    u: Vertex,
    v: Vertex,
    max_len: usize,
    want_odd: bool,
) -> bool {
    reachable_parities(g, sep, u, v, max_len)[want_odd as usize]
}

/// Whether `{u,v}` crosses the separation: disjoint from the separator and
/// joined by a walk of length at most `r/2` traversing `{A,B}` oddly.
pub fn crosses_separation(
    g: &Graph,
    sep: &LocalSeparation,
    u: Vertex,
    v: Vertex,
    r: usize,
) -> Result<bool, SepError> {
    if sep.in_separator(u) {
        return Err(SepError::VertexInSeparator(u));
    }
    if sep.in_separator(v) {
        return Err(SepError::VertexInSeparator(v));
    }
    if u == v {
        return Ok(false);
    }
    Ok(parity_reachable(g, sep, u, v, r / 2, true))
}

/// Whether `{u,v}` crosses the separator `X`: it crosses some r-local
/// 2-separation with separator `X`.
pub fn crosses_separator(
    g: &Graph,
    cg: &ConnectivityGraph,
    u: Vertex,
    v: Vertex,
) -> Result<bool, SepError> {
    for sep in separations_of(cg) {
        if crosses_separation(g, &sep, u, v, cg.r)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A separator pair crosses another separator; pairs sharing a vertex never
/// cross (the crossing pair must be disjoint from the separator).
pub fn separator_crosses(
    g: &Graph,
    crosser: (Vertex, Vertex),
    target_cg: &ConnectivityGraph,
) -> bool {
    let (u, v) = crosser;
    if target_cg.in_separator(u) || target_cg.in_separator(v) {
        return false;
    }
    crosses_separator(g, target_cg, u, v).unwrap_or(false)
}

/// Totally nested: crossed by no other r-local 2-separator in `all`.
pub fn is_totally_nested(
    g: &Graph,
    x: (Vertex, Vertex),
    r: usize,
    all: &[LocalSeparator],
) -> bool {
    let cg = crate::localsep::connectivity_graph(g, x.0, x.1, r);
    if !cg.is_disconnected() {
        return false;
    }
    let canon = (x.0.min(x.1), x.0.max(x.1));
    for other in all {
        let Some(pair) = other.pair() else { continue };
        if pair == canon {
            continue;
        }
        if separator_crosses(g, pair, &cg) {
            return false;
        }
    }
    true
}

/// Variant that recomputes the full separator list.
pub fn is_totally_nested_search(g: &Graph, x: (Vertex, Vertex), r: usize) -> bool {
    let all = crate::localsep::find_local_2separators(g, r);
    is_totally_nested(g, x, r, &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{circular_ladder, cycle_cayley};
    use crate::localsep::{connectivity_graph, find_local_2separators, local_2separations};

    fn four_cycle() -> Graph {
        cycle_cayley(4).graph
    }

    #[test]
    fn crossing_on_the_four_cycle() {
        // {0,2} and {1,3} are 4-local 2-separators of C_4 and cross each other
        let g = four_cycle();
        assert!(crate::localsep::is_local_2separator(&g, 0, 2, 4));
        assert!(crate::localsep::is_local_2separator(&g, 1, 3, 4));
        let sep02 = local_2separations(&g, 0, 2, 4).unwrap().remove(0);
        assert!(crosses_separation(&g, &sep02, 1, 3, 4).unwrap());
        let all = find_local_2separators(&g, 4);
        assert!(!is_totally_nested(&g, (0, 2), 4, &all));
        assert!(!is_totally_nested(&g, (1, 3), 4, &all));
    }

    #[test]
    fn separator_vertices_are_rejected() {
        let g = four_cycle();
        let sep = local_2separations(&g, 0, 2, 4).unwrap().remove(0);
        assert_eq!(crosses_separation(&g, &sep, 0, 1, 4), Err(SepError::VertexInSeparator(0)));
    }

    #[test]
    fn same_side_short_walks_do_not_cross() {
        let cl = circular_ladder(12);
        let sep = local_2separations(&cl.graph, 0, 1, 11).unwrap().remove(0);
        // two vertices on the same side linked by a short walk avoiding X
        let g = 2u32;
        let gh = cl.group.mul(2, 1) as Vertex;
        assert!(!crosses_separation(&cl.graph, &sep, g, gh, 11).unwrap());
    }

    #[test]
    fn ladder_rungs_are_totally_nested() {
        let cl = circular_ladder(12);
        let all = find_local_2separators(&cl.graph, 11);
        assert!(is_totally_nested(&cl.graph, (0, 1), 11, &all));
    }

    #[test]
    fn crossing_symmetry_instances() {
        let g = four_cycle();
        let cg02 = connectivity_graph(&g, 0, 2, 4);
        let cg13 = connectivity_graph(&g, 1, 3, 4);
        assert_eq!(
            separator_crosses(&g, (1, 3), &cg02),
            separator_crosses(&g, (0, 2), &cg13)
        );

        let cl = circular_ladder(12);
        let all = find_local_2separators(&cl.graph, 11);
        let pairs: Vec<(Vertex, Vertex)> = all.iter().filter_map(|s| s.pair()).collect();
        for &x in &pairs {
            let cgx = connectivity_graph(&cl.graph, x.0, x.1, 11);
            for &y in &pairs {
                if x == y {
                    continue;
                }
                let cgy = connectivity_graph(&cl.graph, y.0, y.1, 11);
                assert_eq!(
                    separator_crosses(&cl.graph, y, &cgx),
                    separator_crosses(&cl.graph, x, &cgy),
                    "symmetry broke at {x:?} vs {y:?}"
                );
            }
        }
    }
}
