//! Traversals of local 2-separators and 2-separations by walks, words and
//! generators, plus the parity, weak-traversal and strong-traversal checks.
//!
//! A traversal is a subwalk whose ends lie in distinct local components (or
//! on opposite sides), with all internal vertices in the separator. Weak
//! traversals have one internal vertex, strong ones two. Closed walks are
//! scanned cyclically, open walks linearly; runs touching an open walk's
//! endpoints are unbounded and never count.

use crate::cayley::CayleyGraph;
use crate::check::Check;
use crate::graph::{enumerate_cycles, Graph, Subgraph, Vertex, Walk};
use crate::group::Elem;
use crate::localsep::{ConnectivityGraph, LocalSeparation};
use crate::words::{Alphabet, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraversalProfile {
    pub count: usize,
    pub weak: bool,
    /// Internal vertices witnessing weak traversals.
    pub weak_at: Vec<Vertex>,
    pub strong: bool,
}

impl TraversalProfile {
    pub fn odd(&self) -> bool {
        self.count % 2 == 1
    }
}

/// What a run's two flanking vertices must satisfy for the run to count.
enum Target<'a> {
    Components(&'a ConnectivityGraph),
    Sides(&'a LocalSeparation),
}

impl Target<'_> {
    fn in_separator(&self, v: Vertex) -> bool {
        match self {
            Target::Components(cg) => cg.in_separator(v),
            Target::Sides(sep) => sep.in_separator(v),
        }
    }

    fn qualifies(&self, prev: Vertex, next: Vertex) -> bool {
        match self {
            Target::Components(cg) => match (cg.component_of(prev), cg.component_of(next)) {
                (Some(a), Some(b)) => a != b,
                _ => false,
            },
            Target::Sides(sep) => match (sep.side_of(prev), sep.side_of(next)) {
                (Some(a), Some(b)) => a != b,
                _ => false,
            },
        }
    }
}

fn profile(walk: &Walk, target: Target<'_>) -> TraversalProfile {
    let verts = &walk.vertices;
    let mut out = TraversalProfile::default();
    let mut record = |run: &[Vertex], prev: Vertex, next: Vertex, out: &mut TraversalProfile| {
        if target.qualifies(prev, next) {
            out.count += 1;
            if run.len() == 1 {
                out.weak = true;
                if !out.weak_at.contains(&run[0]) {
                    out.weak_at.push(run[0]);
                }
            }
            if run.len() == 2 {
                out.strong = true;
            }
        }
    };

    if walk.is_closed() && !walk.is_trivial() {
        let m = verts.len() - 1;
        let cyc = &verts[..m];
        if cyc.iter().all(|&v| target.in_separator(v)) {
            return out; // no flanking vertices anywhere
        }
        for i in 0..m {
            if target.in_separator(cyc[i]) && !target.in_separator(cyc[(i + m - 1) % m]) {
                let mut run = vec![cyc[i]];
                let mut j = (i + 1) % m;
                while target.in_separator(cyc[j]) {
                    run.push(cyc[j]);
                    j = (j + 1) % m;
                }
                record(&run, cyc[(i + m - 1) % m], cyc[j], &mut out);
            }
        }
    } else {
        let mut i = 1;
        while i + 1 < verts.len() {
            if target.in_separator(verts[i]) {
                let start = i;
                while i < verts.len() && target.in_separator(verts[i]) {
                    i += 1;
                }
                // run must be strictly interior to be bounded
                if i < verts.len() {
                    record(&verts[start..i], verts[start - 1], verts[i], &mut out);
                }
            } else {
                i += 1;
            }
        }
    }
    out
}

/// Traversal profile of a walk against the separator (distinct local
/// components at the run's flanks).
pub fn traversal_profile_x(walk: &Walk, cg: &ConnectivityGraph) -> TraversalProfile {
    profile(walk, Target::Components(cg))
}

/// Traversal profile against a separation (opposite sides at the flanks).
pub fn traversal_profile_sep(walk: &Walk, sep: &LocalSeparation) -> TraversalProfile {
    profile(walk, Target::Sides(sep))
}

/// Combined profile over every walk labelled by `w` (one per start vertex),
/// realising the word-level traversal notions.
pub fn word_traverses_x(
    cay: &CayleyGraph,
    alphabet: &Alphabet,
    w: &Word,
    cg: &ConnectivityGraph,
) -> TraversalProfile {
    let mut best = TraversalProfile::default();
    for start in 0..cay.n() as Vertex {
        let Ok(walk) = cay.walk_of_word(start, alphabet, w) else {
            break; // a letter outside the genset fails for every start
        };
        let p = traversal_profile_x(&walk, cg);
        best.count = best.count.max(p.count);
        best.weak |= p.weak;
        best.strong |= p.strong;
        for v in p.weak_at {
            if !best.weak_at.contains(&v) {
                best.weak_at.push(v);
            }
        }
    }
    best
}

/// `g` traverses `X` at `x`: the walk `xg^-1, x, xg` is a weak traversal,
/// i.e. the two ends lie in distinct local components.
pub fn generator_traverses_at(cay: &CayleyGraph, cg: &ConnectivityGraph, g: Elem, x: Vertex) -> bool {
    if !cg.in_separator(x) {
        return false;
    }
    let a = cay.group.mul(x as Elem, cay.group.inv(g)) as Vertex;
    let b = cay.group.mul(x as Elem, g) as Vertex;
    match (cg.component_of(a), cg.component_of(b)) {
        (Some(ca), Some(cb)) => ca != cb,
        _ => false,
    }
}

pub fn generator_traverses(cay: &CayleyGraph, cg: &ConnectivityGraph, g: Elem) -> bool {
    generator_traverses_at(cay, cg, g, cg.base.0) || generator_traverses_at(cay, cg, g, cg.base.1)
}

/// `g` traverses a separation at `x`: as above with ends on opposite sides.
pub fn generator_traverses_sep_at(
    cay: &CayleyGraph,
    sep: &LocalSeparation,
    g: Elem,
    x: Vertex,
) -> bool {
    if !sep.in_separator(x) {
        return false;
    }
    let a = cay.group.mul(x as Elem, cay.group.inv(g)) as Vertex;
    let b = cay.group.mul(x as Elem, g) as Vertex;
    matches!((sep.side_of(a), sep.side_of(b)), (Some(sa), Some(sb)) if sa != sb)
}

/// Samples walks inside `B_r(x)` with both ends in `N(X)` and asserts the
/// parity biconditional: ends on opposite sides iff the walk traverses the
/// separation oddly.
pub fn parity_lemma_check(
    g: &Graph,
    sep: &LocalSeparation,
    cg: &ConnectivityGraph,
    x: Vertex,
    samples: usize,
    seed: u64,
) -> Check {
    let name = "parity_lemma";
    if !sep.in_separator(x) {
        return Check::skipped(name, format!("{x} is not in the separator"));
    }
    let b = crate::graph::ball(g, x, sep.r);
    let nx_in_ball: Vec<Vertex> =
        cg.vertices.iter().copied().filter(|&v| b.sub.contains_vertex(v)).collect();
    if nx_in_ball.is_empty() {
        return Check::skipped(name, "no N(X) vertices inside the ball");
    }
    let step = |rng: &mut ChaCha8Rng, verts: &mut Vec<Vertex>| -> bool {
        let cur = *verts.last().unwrap();
        let nbrs: Vec<Vertex> = g
            .incident(cur)
            .iter()
            .filter(|&&(u, id)| b.sub.contains_vertex(u) && b.sub.contains_edge(id))
            .map(|&(u, _)| u)
            .collect();
        if nbrs.is_empty() {
            return false;
        }
        verts.push(nbrs[rng.gen_range(0..nbrs.len())]);
        true
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < samples && attempts < samples * 50 {
        attempts += 1;
        let start = nx_in_ball[rng.gen_range(0..nx_in_ball.len())];
        let mut verts = vec![start];
        let target_len = rng.gen_range(0..=sep.r);
        for _ in 0..target_len {
            if !step(&mut rng, &mut verts) {
                break;
            }
        }
        let mut guard = 0;
        while cg.component_of(*verts.last().unwrap()).is_none() && guard < 4 * sep.r {
            if !step(&mut rng, &mut verts) {
                break;
            }
            guard += 1;
        }
        let walk = Walk::new(verts);
        let (sa, sb) = (sep.side_of(walk.start()), sep.side_of(walk.end()));
        let (Some(sa), Some(sb)) = (sa, sb) else { continue };
        tested += 1;
        let odd = traversal_profile_sep(&walk, sep).odd();
        if (sa != sb) != odd {
            return Check::fail(
                name,
                format!(
                    "walk {:?}: opposite = {}, odd = {odd}",
                    walk.vertices,
                    sa != sb
                ),
            );
        }
    }
    Check::pass_with(name, format!("{tested} sampled walks at x = {x}"))
}

/// Cycles of length at most `min(r, exhaustive_cap)` exhaustively, plus
/// seeded random non-backtracking closed walks reduced to cycles for longer
/// lengths up to `r`.
pub fn cycles_for_checks(g: &Graph, r: usize, exhaustive_cap: usize, seed: u64) -> Vec<Walk> {
    let cap = r.min(exhaustive_cap);
    let mut cycles = enumerate_cycles(g, cap);
    if r > cap {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen: Vec<Vec<Vertex>> = cycles.iter().map(canonical_cycle).collect();
        for _ in 0..500 {
            let Some(c) = random_closed_nonbacktracking(g, &mut rng, r) else { continue };
            let Ok(cycle) = crate::graph::find_cycle_in_walk(&c) else { continue };
            if cycle.len() <= r {
                let key = canonical_cycle(&cycle);
                if !seen.contains(&key) {
                    seen.push(key);
                    cycles.push(cycle);
                }
            }
        }
    }
    cycles
}

fn canonical_cycle(c: &Walk) -> Vec<Vertex> {
    let mut v = c.vertices[..c.vertices.len() - 1].to_vec();
    v.sort_unstable();
    v
}

fn random_closed_nonbacktracking(g: &Graph, rng: &mut ChaCha8Rng, max_len: usize) -> Option<Walk> {
    let start = rng.gen_range(0..g.n()) as Vertex;
    let mut verts = vec![start];
    for _ in 0..max_len {
        let cur = *verts.last().unwrap();
        let prev = if verts.len() >= 2 { Some(verts[verts.len() - 2]) } else { None };
        let nbrs: Vec<Vertex> = g.neighbors(cur).filter(|&u| Some(u) != prev).collect();
        if nbrs.is_empty() {
            return None;
        }
        let next = nbrs[rng.gen_range(0..nbrs.len())];
        verts.push(next);
        if next == start && verts.len() >= 4 {
            return Some(Walk::new(verts));
        }
    }
    None
}

/// Every cycle of length <= r weakly traversing the separation at one
/// separator vertex also does at the other.
pub fn cycle_weak_traversal_check(
    g: &Graph,
    sep: &LocalSeparation,
    r: usize,
    seed: u64,
) -> Check {
    let name = "cycle_weak_traversal";
    let cycles = cycles_for_checks(g, r, 12, seed);
    let (x0, x1) = sep.x;
    let mut relevant = 0;
    for cycle in &cycles {
        if cycle.len() > r {
            continue;
        }
        let p = traversal_profile_sep(cycle, sep);
        if p.weak {
            relevant += 1;
            let at0 = p.weak_at.contains(&x0);
            let at1 = p.weak_at.contains(&x1);
            if at0 != at1 {
                return Check::fail(
                    name,
                    format!("cycle {:?} weak at one separator vertex only", cycle.vertices),
                );
            }
        }
    }
    Check::pass_with(name, format!("{} cycles scanned, {relevant} weakly traversing", cycles.len()))
}

/// No cycle of length at most r strongly traverses the separator. A failure
/// here is a definite bug, never an instance artefact.
pub fn strong_traversal_check(g: &Graph, cg: &ConnectivityGraph, r: usize, seed: u64) -> Check {
    let name = "strong_traversal";
    let cycles = cycles_for_checks(g, r, 12, seed);
    for cycle in &cycles {
        if cycle.len() > r {
            continue;
        }
        if traversal_profile_x(cycle, cg).strong {
            return Check::fail(name, format!("cycle {:?} strongly traverses", cycle.vertices));
        }
    }
    Check::pass_with(name, format!("{} cycles scanned", cycles.len()))
}

/// Containment of a walk in a subgraph, for ball-restricted checks.
pub fn walk_in_ball(g: &Graph, walk: &Walk, sub: &Subgraph) -> bool {
    walk.contained_in(g, sub)
}
