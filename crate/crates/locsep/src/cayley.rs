//! Cayley graphs with generator-labelled edges and the left-multiplication
//! action.
//!
//! Vertices are group element indices. The edge `{g, gs}` carries two
//! orientations, one per generator direction; the stored label is the
//! canonical representative `min(s, s^-1)` of the generator pair.

use crate::graph::{Graph, Subgraph, Vertex, Walk};
use crate::group::{Elem, GenSet, Group, GroupRef};
use crate::words::{Alphabet, Word, WordError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CayleyError {
    #[error("letter evaluates to {0}, which is not in the generating set")]
    LetterNotInGenSet(Elem),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Canonical representative of the generator pair `{s, s^-1}`.
pub fn canonical_label(group: &Group, s: Elem) -> Elem {
    s.min(group.inv(s))
}

#[derive(Clone)]
pub struct CayleyGraph {
    pub group: GroupRef,
    pub genset: GenSet,
    pub graph: Graph,
}

/// Builds the simple labelled Cayley graph with edge set `{{g, gs}}`.
pub fn build(group: GroupRef, genset: GenSet) -> CayleyGraph {
    let mut graph = Graph::with_names(group.names().to_vec());
    for g in group.elems() {
        for &s in genset.elems() {
            let t = group.mul(g, s);
            graph.add_edge(g as Vertex, t as Vertex, &[canonical_label(&group, s)]);
        }
    }
    CayleyGraph { group, genset, graph }
}

impl CayleyGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn identity(&self) -> Vertex {
        self.group.identity() as Vertex
    }

    /// Left multiplication on a vertex.
    pub fn act_vertex(&self, gamma: Elem, v: Vertex) -> Vertex {
        self.group.mul(gamma, v as Elem) as Vertex
    }

    pub fn act_pair(&self, gamma: Elem, pair: (Vertex, Vertex)) -> (Vertex, Vertex) {
        let a = self.act_vertex(gamma, pair.0);
        let b = self.act_vertex(gamma, pair.1);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn act_walk(&self, gamma: Elem, w: &Walk) -> Walk {
        Walk::new(w.vertices.iter().map(|&v| self.act_vertex(gamma, v)).collect())
    }

    pub fn act_subgraph(&self, gamma: Elem, sub: &Subgraph) -> Subgraph {
        let mut out = Subgraph::empty(&self.graph);
        for v in 0..self.n() as Vertex {
            if sub.contains_vertex(v) {
                out.vertices[self.act_vertex(gamma, v) as usize] = true;
            }
        }
        for (id, e) in self.graph.edges().iter().enumerate() {
            if sub.contains_edge(id as u32) {
                let a = self.act_vertex(gamma, e.a);
                let b = self.act_vertex(gamma, e.b);
                let img = self.graph.edge_between(a, b).expect("action preserves edges");
                out.edges[img as usize] = true;
            }
        }
        out
    }

    /// Left multiplication is a label-preserving automorphism; this verifies
    /// it for one element (used by property tests).
    pub fn is_label_preserving_automorphism(&self, gamma: Elem) -> bool {
        self.graph.edges().iter().all(|e| {
            let a = self.act_vertex(gamma, e.a);
            let b = self.act_vertex(gamma, e.b);
            self.graph
                .edge_between(a, b)
                .is_some_and(|id| self.graph.edge(id).labels == e.labels)
        })
    }

    /// The walk read from a word, starting at `start`; every letter must
    /// evaluate into the generating set.
    pub fn walk_of_word(
        &self,
        start: Vertex,
        alphabet: &Alphabet,
        w: &Word,
    ) -> Result<Walk, CayleyError> {
        let mut vertices = vec![start];
        let mut x = start as Elem;
        for &l in w.letters() {
            let s = alphabet.letter_value(&self.group, l)?;
            if !self.genset.contains(s) {
                return Err(CayleyError::LetterNotInGenSet(s));
            }
            x = self.group.mul(x, s);
            vertices.push(x as Vertex);
        }
        Ok(Walk::new(vertices))
    }

    /// Girth via the single-root scan; Cayley graphs are vertex-transitive.
    pub fn girth(&self) -> Option<usize> {
        self.graph.girth_transitive(self.identity())
    }

    /// An alphabet with one valued base per generator pair: non-involutions
    /// contribute a free base named after the canonical element, involutions
    /// an involution base.
    pub fn standard_alphabet(&self) -> Alphabet {
        let mut a = Alphabet::new();
        let mut done = Vec::new();
        for &s in self.genset.elems() {
            let c = canonical_label(&self.group, s);
            if done.contains(&c) {
                continue;
            }
            done.push(c);
            a.add_valued_base(self.group.name(c), self.group.is_involution(c), c);
        }
        a
    }
}

/// Cay(C_12 x C_2, {g^±1, h}) and friends: the circular ladder CL_i.
pub fn circular_ladder(i: usize) -> CayleyGraph {
    let ci = Group::cyclic(i).expect("cycle length");
    let c2 = Group::cyclic(2).expect("C_2");
    let prod = ci.direct_product(&c2).expect("product order");
    let g = 2; // (1, 0)
    let h = 1; // (0, 1)
    let g_inv = prod.inv(g);
    let genset = prod.validate_genset(&[g, g_inv, h]).expect("ladder genset");
    build(std::sync::Arc::new(prod), genset)
}

/// Cay(C_n, {g^±1}): the n-cycle.
pub fn cycle_cayley(n: usize) -> CayleyGraph {
    let cn = Group::cyclic(n).expect("cycle length");
    let gens = if n == 2 { vec![1] } else { vec![1, cn.inv(1)] };
    let genset = cn.validate_genset(&gens).expect("cycle genset");
    build(std::sync::Arc::new(cn), genset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ball;
    use std::sync::Arc;

    #[test]
    fn cycle_and_ladder_shapes() {
        let c12 = cycle_cayley(12);
        assert_eq!(c12.n(), 12);
        assert_eq!(c12.graph.edge_count(), 12);
        assert!(c12.graph.is_cycle_graph());

        let cl12 = circular_ladder(12);
        assert_eq!(cl12.n(), 24);
        assert_eq!(cl12.graph.edge_count(), 36);
        assert!((0..24).all(|v| cl12.graph.degree(v) == 3));
        assert_eq!(cl12.girth(), Some(4));

        // C_2 with {h}: a single edge
        let c2 = Arc::new(Group::cyclic(2).unwrap());
        let gs = c2.validate_genset(&[1]).unwrap();
        let g = build(c2, gs);
        assert_eq!(g.n(), 2);
        assert_eq!(g.graph.edge_count(), 1);
    }

    #[test]
    fn action_is_label_preserving() {
        let cl = circular_ladder(6);
        for gamma in [1u32, 2, 5, 11] {
            assert!(cl.is_label_preserving_automorphism(gamma));
        }
    }

    #[test]
    fn ball_equivariance() {
        let cl = circular_ladder(6);
        for gamma in [3u32, 7] {
            for r in [2usize, 5, 8] {
                let b = ball(&cl.graph, cl.identity(), r);
                let moved = cl.act_subgraph(gamma, &b.sub);
                let direct = ball(&cl.graph, cl.act_vertex(gamma, cl.identity()), r);
                assert_eq!(moved, direct.sub);
            }
        }
    }

    #[test]
    fn walks_of_words() {
        let cl = circular_ladder(12);
        let alpha = cl.standard_alphabet();
        let start = cl.identity();

        let empty = cl.walk_of_word(start, &alpha, &Word::empty()).unwrap();
        assert!(empty.is_trivial());

        let w = alpha.parse_word("(g^1,g^0) (g^0,g^1)").unwrap();
        let walk = cl.walk_of_word(start, &alpha, &w).unwrap();
        assert_eq!(walk.len(), 2);
        walk.validate(&cl.graph).unwrap();

        // a commutator word closes in an abelian group
        let u1 = alpha.parse_word("(g^1,g^0) (g^0,g^1) (g^1,g^0)^-1 (g^0,g^1)").unwrap();
        let walk = cl.walk_of_word(start, &alpha, &u1).unwrap();
        assert!(walk.is_closed());

        // eval consistency: the walk ends at the word's value
        let v = alpha.eval(&cl.group, &w).unwrap();
        let walk = cl.walk_of_word(start, &alpha, &w).unwrap();
        assert_eq!(walk.end(), v as Vertex);
    }

    #[test]
    fn letters_outside_genset_are_rejected() {
        let c12 = cycle_cayley(12);
        let mut a = Alphabet::new();
        let b = a.add_valued_base("q", false, 3);
        let w = Word::single(a.pos(b));
        assert_eq!(
            c12.walk_of_word(0, &a, &w),
            Err(CayleyError::LetterNotInGenSet(3))
        );
    }
}
