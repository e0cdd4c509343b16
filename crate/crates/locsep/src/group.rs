//! Finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..order`. Construction validates the table:
//! exhaustively for small orders, by seeded spot-sampling above
//! [`EXHAUSTIVE_ASSOC_CAP`]. Everything downstream (Cayley graphs, balls,
//! separators) is polynomial in the table size.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

pub type Elem = u32;

/// Orders up to this bound get the full `n^3` associativity check; larger
/// tables are spot-checked on seeded random triples.
pub const EXHAUSTIVE_ASSOC_CAP: usize = 512;

/// Hard ceiling on group order; the table costs `order^2` memory.
pub const MAX_ORDER: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    EmptyGroup,
    #[error("group order {0} exceeds the maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("multiplication table has {len} entries, expected {expected}")]
    MalformedTable { len: usize, expected: usize },
    #[error("table entry {value} at ({row},{col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: Elem },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(Elem),
    #[error("associativity fails at ({a},{b},{c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenSetError {
    #[error("generating set contains the identity")]
    ContainsIdentity,
    #[error("generating set is not closed under inverses: {0} lacks its inverse")]
    NotInverseClosed(Elem),
    #[error("set does not generate the group: closure has {reached} of {order} elements")]
    DoesNotGenerate { reached: usize, order: usize },
    #[error("element index {0} out of range")]
    OutOfRange(Elem),
}

/// A validated generating set: identity-free, inverse-closed, generating.
/// The empty set is valid exactly for the trivial group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    elems: Vec<Elem>,
}

impl GenSet {
    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elems.binary_search(&g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilpotencyResult {
    Class(usize),
    NotNilpotent,
}

impl NilpotencyResult {
    pub fn class(self) -> Option<usize> {
        match self {
            NilpotencyResult::Class(n) => Some(n),
            NilpotencyResult::NotNilpotent => None,
        }
    }
}

impl std::fmt::Display for NilpotencyResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NilpotencyResult::Class(n) => write!(f, "class {n}"),
            NilpotencyResult::NotNilpotent => write!(f, "not nilpotent"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    identity: Elem,
    names: Vec<String>,
}

impl Group {
    /// Builds a group from a row-major multiplication table, validating the
    /// axioms. Names default to `x0..x{n-1}`.
    pub fn from_table(mul: Vec<Elem>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let order = match names.as_ref() {
            Some(n) => n.len(),
            None => {
                let order = (mul.len() as f64).sqrt().round() as usize;
                if order == 0 {
                    return Err(GroupError::EmptyGroup);
                }
                order
            }
        };
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        if mul.len() != order * order {
            return Err(GroupError::MalformedTable { len: mul.len(), expected: order * order });
        }
        for (i, &v) in mul.iter().enumerate() {
            if v as usize >= order {
                return Err(GroupError::EntryOutOfRange { row: i / order, col: i % order, value: v });
            }
        }
        let at = |a: usize, b: usize| mul[a * order + b];

        let mut identity = None;
        'outer: for e in 0..order {
            for x in 0..order {
                if at(e, x) as usize != x || at(x, e) as usize != x {
                    continue 'outer;
                }
            }
            identity = Some(e as Elem);
            break;
        }
        let identity = identity.ok_or(GroupError::NoIdentity)?;

        let mut inv = vec![Elem::MAX; order];
        for x in 0..order {
            let mut found = false;
            for y in 0..order {
                if at(x, y) == identity && at(y, x) == identity {
                    inv[x] = y as Elem;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(GroupError::NoInverse(x as Elem));
            }
        }

        if order <= EXHAUSTIVE_ASSOC_CAP {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b) as usize;
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c) as usize) {
                            return Err(GroupError::NotAssociative {
                                a: a as Elem,
                                b: b as Elem,
                                c: c as Elem,
                            });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x1ab1e);
            for _ in 0..200_000 {
                let a = rng.gen_range(0..order);
                let b = rng.gen_range(0..order);
                let c = rng.gen_range(0..order);
                if at(at(a, b) as usize, c) != at(a, at(b, c) as usize) {
                    return Err(GroupError::NotAssociative {
                        a: a as Elem,
                        b: b as Elem,
                        c: c as Elem,
                    });
                }
            }
        }

        let names = names.unwrap_or_else(|| (0..order).map(|i| format!("x{i}")).collect());
        Ok(Group { order, mul, inv, identity, names })
    }

    /// Z/nZ under addition, names `g^k`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = ((a + b) % n) as Elem;
            }
        }
        let names = (0..n).map(|k| format!("g^{k}")).collect();
        Group::from_table(mul, Some(names))
    }

    pub fn trivial() -> Self {
        Group::cyclic(1).expect("trivial group")
    }

    /// Componentwise product; element `(a,b)` gets index `a*|B| + b`.
    pub fn direct_product(&self, other: &Group) -> Result<Self, GroupError> {
        let n = self.order * other.order;
        if n > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(n));
        }
        let nb = other.order;
        let mut mul = vec![0; n * n];
        for a0 in 0..self.order {
            for b0 in 0..nb {
                let x = a0 * nb + b0;
                for a1 in 0..self.order {
                    for b1 in 0..nb {
                        let y = a1 * nb + b1;
                        mul[x * n + y] = (self.mul(a0 as Elem, a1 as Elem) as usize * nb
                            + other.mul(b0 as Elem, b1 as Elem) as usize)
                            as Elem;
                    }
                }
            }
        }
        let names = (0..n)
            .map(|x| format!("({},{})", self.names[x / nb], other.names[x % nb]))
            .collect();
        Group::from_table(mul, Some(names))
    }

    /// Dihedral group of order 2n; element `(k,f)` is `r^k s^f`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n < 3 {
            return Err(GroupError::BadParameter(format!("dihedral needs n >= 3, got {n}")));
        }
        let order = 2 * n;
        let idx = |k: usize, f: usize| k + n * f;
        let mut mul = vec![0; order * order];
        for k in 0..n {
            for f in 0..2 {
                for m in 0..n {
                    for e in 0..2 {
                        // (r^k s^f)(r^m s^e) = r^(k + m or k - m) s^(f+e)
                        let kk = if f == 0 { (k + m) % n } else { (k + n - m) % n };
                        mul[idx(k, f) * order + idx(m, e)] = idx(kk, (f + e) % 2) as Elem;
                    }
                }
            }
        }
        let names = (0..order)
            .map(|x| {
                let (k, f) = (x % n, x / n);
                if f == 0 { format!("r^{k}") } else { format!("r^{k}s") }
            })
            .collect();
        Group::from_table(mul, Some(names))
    }

    /// The quaternion group {±1, ±i, ±j, ±k}.
    pub fn quaternion8() -> Self {
        // axis products with signs: table[a][b] = (axis, negative)
        const AXIS: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let idx = |axis: usize, neg: bool| (axis * 2 + neg as usize) as Elem;
        let mut mul = vec![0; 64];
        for a in 0..4 {
            for sa in 0..2 {
                for b in 0..4 {
                    for sb in 0..2 {
                        let (axis, neg) = AXIS[a][b];
                        let sign = (sa + sb) % 2 == 1;
                        mul[(idx(a, sa == 1) as usize) * 8 + idx(b, sb == 1) as usize] =
                            idx(axis, neg ^ sign);
                    }
                }
            }
        }
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Group::from_table(mul, Some(names)).expect("quaternion table")
    }

    /// Upper unitriangular 3x3 matrices over F_p: order p^3, class 2.
    pub fn heisenberg(p: usize) -> Result<Self, GroupError> {
        if p < 2 || !is_prime(p) {
            return Err(GroupError::BadParameter(format!("heisenberg needs a prime, got {p}")));
        }
        let n = p * p * p;
        let idx = |a: usize, b: usize, c: usize| a + p * b + p * p * c;
        let mut mul = vec![0; n * n];
        for a0 in 0..p {
            for b0 in 0..p {
                for c0 in 0..p {
                    for a1 in 0..p {
                        for b1 in 0..p {
                            for c1 in 0..p {
                                let x = idx(a0, b0, c0);
                                let y = idx(a1, b1, c1);
                                mul[x * n + y] = idx(
                                    (a0 + a1) % p,
                                    (b0 + b1) % p,
                                    (c0 + c1 + a0 * b1) % p,
                                ) as Elem;
                            }
                        }
                    }
                }
            }
        }
        let names = (0..n)
            .map(|x| format!("({},{},{})", x % p, (x / p) % p, x / (p * p)))
            .collect();
        Group::from_table(mul, Some(names))
    }

    /// Alternating group on n points as a multiplication table.
    pub fn alternating(n: usize) -> Result<Self, GroupError> {
        if !(3..=7).contains(&n) {
            return Err(GroupError::BadParameter(format!(
                "alternating supported for 3 <= n <= 7, got {n}"
            )));
        }
        let perms = even_permutations(n);
        let index: HashMap<Vec<u8>, Elem> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i as Elem)).collect();
        let m = perms.len();
        let mut mul = vec![0; m * m];
        let mut buf = vec![0u8; n];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = a[b[k] as usize];
                }
                mul[i * m + j] = index[&buf];
            }
        }
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Group::from_table(mul, Some(names))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(|i| i as Elem)
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        self.elems().all(|a| self.elems().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elem_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_involution(&self, g: Elem) -> bool {
        g != self.identity && self.mul(g, g) == self.identity
    }

    /// `a == b` or `a == b^-1`.
    pub fn equivalent(&self, a: Elem, b: Elem) -> bool {
        a == b || a == self.inv(b)
    }

    /// One commutator step `g c^-1 g^-1 c`.
    pub fn commutator_step(&self, g: Elem, c: Elem) -> Elem {
        let t = self.mul(g, self.inv(c));
        let t = self.mul(t, self.inv(g));
        self.mul(t, c)
    }

    /// The n-th iterated commutator value of the pair `(g,h)`:
    /// `c_1 = g h^-1 g^-1 h`, `c_k = g c_{k-1}^-1 g^-1 c_{k-1}`.
    pub fn iterated_commutator(&self, g: Elem, h: Elem, n: usize) -> Elem {
        assert!(n >= 1, "iterated commutator needs n >= 1");
        let mut c = self.commutator_step(g, h);
        for _ in 1..n {
            c = self.commutator_step(g, c);
        }
        c
    }

    /// Minimal n with `c_n(g,h)` trivial for all inequivalent pairs, or a
    /// not-nilpotent marker. Per-pair the sequence `c_k` either reaches the
    /// identity (and stays there) or revisits a value, so finiteness gives a
    /// termination rule.
    pub fn nilpotency_class(&self) -> NilpotencyResult {
        let mut class = 1usize;
        let mut seen = vec![u32::MAX; self.order];
        let mut stamp = 0u32;
        for g in self.elems() {
            for h in self.elems() {
                if self.equivalent(g, h) {
                    continue;
                }
                stamp += 1;
                let mut c = self.commutator_step(g, h);
                let mut k = 1usize;
                loop {
                    if c == self.identity {
                        class = class.max(k);
                        break;
                    }
                    if seen[c as usize] == stamp {
                        return NilpotencyResult::NotNilpotent;
                    }
                    seen[c as usize] = stamp;
                    c = self.commutator_step(g, c);
                    k += 1;
                }
            }
        }
        NilpotencyResult::Class(class)
    }

    /// Breadth-first closure of `gens ∪ {identity}` under right multiplication.
    pub fn closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut in_set = vec![false; self.order];
        in_set[self.identity as usize] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    pub fn validate_genset(&self, elems: &[Elem]) -> Result<GenSet, GenSetError> {
        let mut set: Vec<Elem> = elems.to_vec();
        set.sort_unstable();
        set.dedup();
        for &g in &set {
            if g as usize >= self.order {
                return Err(GenSetError::OutOfRange(g));
            }
            if g == self.identity {
                return Err(GenSetError::ContainsIdentity);
            }
            if set.binary_search(&self.inv(g)).is_err() {
                return Err(GenSetError::NotInverseClosed(g));
            }
        }
        let closure = self.closure(&set);
        if closure.len() != self.order {
            return Err(GenSetError::DoesNotGenerate { reached: closure.len(), order: self.order });
        }
        Ok(GenSet { elems: set })
    }

    pub fn cyclic_subgroup(&self, h: Elem) -> Vec<Elem> {
        let mut out = vec![self.identity];
        let mut x = h;
        while x != self.identity {
            out.push(x);
            x = self.mul(x, h);
        }
        out.sort_unstable();
        out
    }

    /// Whether the cyclic subgroup generated by `h` is normal.
    pub fn is_normal_closure(&self, h: Elem) -> bool {
        let sub = self.cyclic_subgroup(h);
        let mut member = vec![false; self.order];
        for &x in &sub {
            member[x as usize] = true;
        }
        for gamma in self.elems() {
            for &x in &sub {
                let conj = self.mul(self.mul(gamma, x), self.inv(gamma));
                if !member[conj as usize] {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_order_element(&self) -> (Elem, usize) {
        let mut best = (self.identity, 1);
        for g in self.elems() {
            let o = self.elem_order(g);
            if o > best.1 {
                best = (g, o);
            }
        }
        best
    }

    /// Structural test for `C_i x C_j` with `j <= 2`: abelian with a maximal
    /// element order `m` satisfying `|G| = m` (then `(m,1)`), or `|G| = 2m`
    /// with an involution outside the cyclic subgroup (then `(m,2)`).
    pub fn cyclic_by_c2_decomposition(&self) -> Option<(usize, usize)> {
        if !self.is_abelian() {
            return None;
        }
        let (m_elem, m) = self.max_order_element();
        if self.order == m {
            return Some((m, 1));
        }
        if self.order == 2 * m {
            let sub = self.cyclic_subgroup(m_elem);
            let mut member = vec![false; self.order];
            for &x in &sub {
                member[x as usize] = true;
            }
            if self.elems().any(|t| self.is_involution(t) && !member[t as usize]) {
                return Some((m, 2));
            }
        }
        None
    }

    /// Group table as JSON `{order, mul, names}`.
    pub fn to_table_json(&self) -> serde_json::Value {
        json!({ "order": self.order, "mul": self.mul, "names": self.names })
    }

    pub fn from_table_json(v: &serde_json::Value) -> Result<Self, GroupError> {
        let order = v
            .get("order")
            .and_then(|o| o.as_u64())
            .ok_or_else(|| GroupError::BadParameter("missing order".into()))?
            as usize;
        let mul: Vec<Elem> = v
            .get("mul")
            .and_then(|m| m.as_array())
            .ok_or_else(|| GroupError::BadParameter("missing mul".into()))?
            .iter()
            .map(|x| x.as_u64().unwrap_or(u64::MAX) as Elem)
            .collect();
        let names = v.get("names").and_then(|n| n.as_array()).map(|arr| {
            arr.iter().map(|x| x.as_str().unwrap_or_default().to_string()).collect::<Vec<_>>()
        });
        if let Some(ref n) = names {
            if n.len() != order {
                return Err(GroupError::MalformedTable { len: mul.len(), expected: order * order });
            }
        }
        if mul.len() != order * order {
            return Err(GroupError::MalformedTable { len: mul.len(), expected: order * order });
        }
        Group::from_table(mul, names.or_else(|| Some((0..order).map(|i| format!("x{i}")).collect())))
    }
}

pub type GroupRef = Arc<Group>;

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn even_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut all = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    heap_permutations(&mut current, n, &mut all);
    all.retain(|p| permutation_is_even(p));
    all.sort();
    all
}

fn heap_permutations(arr: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == 1 {
        out.push(arr.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(arr, k - 1, out);
        if k % 2 == 0 {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

fn permutation_is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Renders a permutation in cycle notation with 1-based points, e.g. "(1 2 3)".
pub fn cycle_notation(p: &[u8]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        assert!(matches!(Group::cyclic(0), Err(GroupError::EmptyGroup)));
        let c1 = Group::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        let c12 = Group::cyclic(12).unwrap();
        assert_eq!(c12.order(), 12);
        let mut x = 1;
        for _ in 0..11 {
            x = c12.mul(x, 1);
        }
        assert_eq!(x, c12.identity());
        assert_eq!(c12.nilpotency_class(), NilpotencyResult::Class(1));
    }

    #[test]
    fn direct_products() {
        let c12 = Group::cyclic(12).unwrap();
        let c2 = Group::cyclic(2).unwrap();
        let g = c12.direct_product(&c2).unwrap();
        assert_eq!(g.order(), 24);

        let t = Group::trivial();
        let h = c12.direct_product(&t).unwrap();
        assert_eq!(h.mul_table(), c12.mul_table());

        let klein = c2.direct_product(&c2).unwrap();
        for e in klein.elems() {
            if e != klein.identity() {
                assert!(klein.is_involution(e));
            }
        }
    }

    #[test]
    fn named_groups() {
        let a5 = Group::alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        let h3 = Group::heisenberg(3).unwrap();
        assert_eq!(h3.order(), 27);
        assert_eq!(h3.nilpotency_class(), NilpotencyResult::Class(2));
        let d4 = Group::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(Group::heisenberg(4).is_err());
        assert!(Group::dihedral(2).is_err());
    }

    #[test]
    fn from_table_roundtrip_and_errors() {
        let c6 = Group::cyclic(6).unwrap();
        let relabeled = Group::from_table(c6.mul_table().to_vec(), None).unwrap();
        assert_eq!(relabeled.mul_table(), c6.mul_table());

        // break associativity: commutative quasigroup that is not a group
        let bad = vec![0, 1, 2, 1, 0, 0, 2, 0, 1];
        match Group::from_table(bad, None) {
            Err(GroupError::NotAssociative { .. }) | Err(GroupError::NoInverse(_))
            | Err(GroupError::NoIdentity) => {}
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn equivalence() {
        let c12 = Group::cyclic(12).unwrap();
        assert!(c12.equivalent(1, 11));
        assert!(c12.equivalent(c12.identity(), c12.identity()));
        assert!(!c12.equivalent(1, 2));
    }

    #[test]
    fn quaternion_commutators() {
        let q8 = Group::quaternion8();
        assert_eq!(q8.order(), 8);
        let (i, j) = (q8.elem_by_name("i").unwrap(), q8.elem_by_name("j").unwrap());
        let minus_one = q8.elem_by_name("-1").unwrap();
        assert_eq!(q8.iterated_commutator(i, j, 1), minus_one);
        assert_eq!(q8.iterated_commutator(i, j, 2), q8.identity());
        assert_eq!(q8.nilpotency_class(), NilpotencyResult::Class(2));
    }

    #[test]
    fn s3_not_nilpotent() {
        // S_3 as D_3, via its raw table
        let d3 = Group::dihedral(3).unwrap();
        let g = Group::from_table(d3.mul_table().to_vec(), None).unwrap();
        assert_eq!(g.nilpotency_class(), NilpotencyResult::NotNilpotent);
        let a5 = Group::alternating(5).unwrap();
        assert_eq!(a5.nilpotency_class(), NilpotencyResult::NotNilpotent);
    }

    #[test]
    fn genset_validation() {
        let c12 = Group::cyclic(12).unwrap();
        assert!(c12.validate_genset(&[1, 11]).is_ok());
        assert_eq!(
            c12.validate_genset(&[2, 10]),
            Err(GenSetError::DoesNotGenerate { reached: 6, order: 12 })
        );
        assert_eq!(c12.validate_genset(&[0]), Err(GenSetError::ContainsIdentity));
        assert_eq!(c12.validate_genset(&[1]), Err(GenSetError::NotInverseClosed(1)));
        // empty genset generates exactly the trivial group
        assert!(Group::trivial().validate_genset(&[]).is_ok());
        assert!(c12.validate_genset(&[]).is_err());
    }

    #[test]
    fn normal_closures() {
        let c12 = Group::cyclic(12).unwrap();
        assert!(c12.is_normal_closure(5));
        let a5 = Group::alternating(5).unwrap();
        for h in a5.elems() {
            if h != a5.identity() {
                assert!(!a5.is_normal_closure(h), "A_5 is simple");
            }
        }
        // center of D_4: rotation by pi
        let d4 = Group::dihedral(4).unwrap();
        let rot2 = d4.elem_by_name("r^2").unwrap();
        assert!(d4.is_normal_closure(rot2));
    }

    #[test]
    fn structural_decomposition() {
        let c25 = Group::cyclic(25).unwrap();
        assert_eq!(c25.cyclic_by_c2_decomposition(), Some((25, 1)));
        let c12 = Group::cyclic(12).unwrap();
        let c2 = Group::cyclic(2).unwrap();
        let cl12 = c12.direct_product(&c2).unwrap();
        assert_eq!(cl12.cyclic_by_c2_decomposition(), Some((12, 2)));
        // C_21 x C_2 is cyclic of order 42
        let c21 = Group::cyclic(21).unwrap();
        let g = c21.direct_product(&c2).unwrap();
        assert_eq!(g.cyclic_by_c2_decomposition(), Some((42, 1)));
        let q8 = Group::quaternion8();
        assert_eq!(q8.cyclic_by_c2_decomposition(), None);
        let c5x5 = Group::cyclic(5).unwrap().direct_product(&Group::cyclic(5).unwrap()).unwrap();
        assert_eq!(c5x5.cyclic_by_c2_decomposition(), None);
    }

    #[test]
    fn nilpotency_monotone_under_products() {
        let pairs = [
            (Group::cyclic(4).unwrap(), Group::quaternion8()),
            (Group::heisenberg(3).unwrap(), Group::cyclic(2).unwrap()),
            (Group::cyclic(3).unwrap(), Group::cyclic(9).unwrap()),
        ];
        for (a, b) in pairs {
            let prod = a.direct_product(&b).unwrap();
            let (ca, cb) = (a.nilpotency_class().class().unwrap(), b.nilpotency_class().class().unwrap());
            assert_eq!(prod.nilpotency_class().class().unwrap(), ca.max(cb));
        }
    }

    #[test]
    fn table_json_roundtrip() {
        let q8 = Group::quaternion8();
        let j = q8.to_table_json();
        let back = Group::from_table_json(&j).unwrap();
        assert_eq!(back.mul_table(), q8.mul_table());
        assert_eq!(back.name(2), "i");
    }
}
