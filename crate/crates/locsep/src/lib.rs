//! Local-separator analysis for Cayley graphs of finite groups.
//!
//! The crate builds finite groups as dense multiplication tables, constructs
//! their Cayley graphs, and analyses local connectivity: closed-walk balls,
//! local cutvertices, local 2-separators with their traversal and crossing
//! behaviour, edge insertion, involution quotients, and explicit covering
//! windows for the cycle and circular-ladder families. Free-word machinery
//! (involution-aware reduction, iterated commutators, cyclic subwords,
//! square/magic predicates, morpheme extraction) supports exhaustive
//! word-level checks. A batch harness runs corpus-wide analyses and emits
//! JSON reports.

pub mod catalog;
pub mod cayley;
pub mod check;
pub mod cover;
pub mod crossing;
pub mod graph;
pub mod group;
pub mod harness;
pub mod insertion;
pub mod lemmas;
pub mod localsep;
pub mod oracle;
pub mod quotient;
pub mod traversal;
pub mod words;
