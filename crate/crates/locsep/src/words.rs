//! Free words over a generator alphabet: involution-aware reduction,
//! iterated commutator words, cyclic subwords, square/magic predicates,
//! segments, morpheme extraction, and exhaustive word-level checkers.
//!
//! A letter carries a base index and a sign; involution bases use sign 0,
//! which identifies the letter with its inverse so that reduction removes
//! `hh` as well as `hh^-1`.

use crate::check::Check;
use crate::group::{Elem, Group};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("word is too short for truncation (length {0})")]
    TooShort(usize),
    #[error("word is not reduced")]
    NotReduced,
    #[error("word is empty")]
    Empty,
    #[error("word does not evaluate to the identity")]
    NotIdentity,
    #[error("alphabet base {0} has no group value")]
    MissingValue(u8),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub base: u8,
    /// +1 or -1 for free bases, 0 for involution bases.
    pub sign: i8,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter { base: self.base, sign: -self.sign }
    }

    /// Adjacent pair that reduction deletes: same base, opposite signs.
    /// For involution letters 0 == -0, so equal letters cancel too.
    pub fn cancels(self, other: Letter) -> bool {
        self.base == other.base && self.sign == -other.sign
    }

    pub fn is_involution(self) -> bool {
        self.sign == 0
    }
}

#[derive(Clone, Debug)]
pub struct BaseDef {
    pub name: String,
    pub involution: bool,
    pub value: Option<Elem>,
}

/// Generator alphabet. Bases may carry an evaluation into a group; an
/// involution base must evaluate to a group involution.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    bases: Vec<BaseDef>,
}

impl Alphabet {
    pub fn new() -> Self {
        Alphabet { bases: Vec::new() }
    }

    pub fn add_base(&mut self, name: impl Into<String>, involution: bool) -> u8 {
        self.bases.push(BaseDef { name: name.into(), involution, value: None });
        (self.bases.len() - 1) as u8
    }

    pub fn add_valued_base(
        &mut self,
        name: impl Into<String>,
        involution: bool,
        value: Elem,
    ) -> u8 {
        self.bases.push(BaseDef { name: name.into(), involution, value: Some(value) });
        (self.bases.len() - 1) as u8
    }

    pub fn base(&self, b: u8) -> &BaseDef {
        &self.bases[b as usize]
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// A letter over base `b`; involution bases normalise the sign to 0.
    pub fn letter(&self, b: u8, sign: i8) -> Letter {
        debug_assert!(sign == 1 || sign == -1);
        if self.bases[b as usize].involution {
            Letter { base: b, sign: 0 }
        } else {
            Letter { base: b, sign }
        }
    }

    pub fn pos(&self, b: u8) -> Letter {
        self.letter(b, 1)
    }

    pub fn neg(&self, b: u8) -> Letter {
        self.letter(b, -1)
    }

    /// Checks that an attached evaluation respects inverses: involution
    /// bases map to group involutions.
    pub fn validate_evaluation(&self, group: &Group) -> Result<(), WordError> {
        for (i, b) in self.bases.iter().enumerate() {
            if let Some(v) = b.value {
                if b.involution && !group.is_involution(v) {
                    return Err(WordError::Parse(format!(
                        "base {} marked involution but its value is not one",
                        self.bases[i].name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn letter_value(&self, group: &Group, l: Letter) -> Result<Elem, WordError> {
        let v = self.bases[l.base as usize].value.ok_or(WordError::MissingValue(l.base))?;
        Ok(if l.sign < 0 { group.inv(v) } else { v })
    }

    pub fn eval(&self, group: &Group, w: &Word) -> Result<Elem, WordError> {
        let mut x = group.identity();
        for &l in w.letters() {
            x = group.mul(x, self.letter_value(group, l)?);
        }
        Ok(x)
    }

    pub fn format_letter(&self, l: Letter) -> String {
        let name = &self.bases[l.base as usize].name;
        if l.sign < 0 {
            format!("{name}^-1")
        } else {
            name.clone()
        }
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.letters().iter().map(|&l| self.format_letter(l)).collect::<Vec<_>>().join(" ")
    }

    /// Parses whitespace-separated tokens `g`, `g^-1`, `g^2`. Base names may
    /// themselves contain `^` (product element names do); the whole token is
    /// tried as a base name before splitting at the final `^`.
    pub fn parse_word(&self, s: &str) -> Result<Word, WordError> {
        let find = |name: &str| self.bases.iter().position(|b| b.name == name);
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let (base, exp) = if let Some(i) = find(token) {
                (i, 1i32)
            } else if let Some((name, e)) = token.rsplit_once('^') {
                let exp: i32 =
                    e.parse().map_err(|_| WordError::Parse(format!("bad token {token}")))?;
                let i = find(name).ok_or_else(|| WordError::Parse(format!("unknown letter {name}")))?;
                (i, exp)
            } else {
                return Err(WordError::Parse(format!("unknown letter {token}")));
            };
            let sign: i8 = if exp < 0 { -1 } else { 1 };
            for _ in 0..exp.unsigned_abs() {
                letters.push(self.letter(base as u8, sign));
            }
        }
        Ok(Word::from_letters(letters))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn repeat(l: Letter, k: usize) -> Self {
        Word(vec![l; k])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Fixed point of deleting adjacent inverse pairs (and adjacent equal
    /// involution letters). Stack-based, so independent of deletion order.
    pub fn reduce(&self) -> Word {
        let mut buf: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if buf.last().is_some_and(|&top| top.cancels(l)) {
                buf.pop();
            } else {
                buf.push(l);
            }
        }
        Word(buf)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn truncate_left(&self) -> Result<Word, WordError> {
        if self.len() < 2 {
            return Err(WordError::TooShort(self.len()));
        }
        Ok(Word(self.0[1..].to_vec()))
    }

    pub fn truncate_right(&self) -> Result<Word, WordError> {
        if self.len() < 2 {
            return Err(WordError::TooShort(self.len()));
        }
        Ok(Word(self.0[..self.len() - 1].to_vec()))
    }

    pub fn rotated(&self, k: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let k = k % self.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// All rotations, deduplicated, including the word itself.
    pub fn cyclic_permutations(&self) -> Vec<Word> {
        if self.is_empty() {
            return vec![self.clone()];
        }
        let mut out: Vec<Word> = (0..self.len()).map(|k| self.rotated(k)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Contiguous subword containment.
    pub fn is_subword_of(&self, w: &Word) -> bool {
        if self.is_empty() {
            return true;
        }
        if self.len() > w.len() {
            return false;
        }
        w.0.windows(self.len()).any(|win| win == self.0.as_slice())
    }

    /// `self` or its inverse is a subword of a cyclic permutation of `w`.
    pub fn is_cyclic_subword_of(&self, w: &Word) -> bool {
        if self.is_empty() {
            return true;
        }
        if self.len() > w.len() {
            return false;
        }
        let mut doubled = w.0.clone();
        doubled.extend_from_slice(&w.0);
        let inv = self.inverse();
        doubled
            .windows(self.len())
            .take(w.len())
            .any(|win| win == self.0.as_slice() || win == inv.0.as_slice())
    }

    /// Maximal constant-base runs of a reduced word as `(base, signed exponent)`.
    /// Involution runs report a positive exponent.
    pub fn segments(&self) -> Result<Vec<(u8, i32)>, WordError> {
        if !self.is_reduced() {
            return Err(WordError::NotReduced);
        }
        let mut out: Vec<(u8, i32)> = Vec::new();
        for &l in &self.0 {
            let step: i32 = if l.sign < 0 { -1 } else { 1 };
            match out.last_mut() {
                Some((base, exp)) if *base == l.base => *exp += step,
                _ => out.push((l.base, step)),
            }
        }
        Ok(out)
    }

    pub fn segment_count(&self) -> Result<usize, WordError> {
        Ok(self.segments()?.len())
    }
}

/// The n-th iterated commutator word of two words:
/// `c_1 = a b^-1 a^-1 b` reduced, `c_k = a c^-1 a^-1 c` reduced.
pub fn iterated_commutator(a: &Word, b: &Word, n: usize) -> Word {
    assert!(n >= 1, "iterated commutator needs n >= 1");
    let step = |x: &Word, c: &Word| {
        x.concat(&c.inverse()).concat(&x.inverse()).concat(c).reduce()
    };
    let mut c = step(a, b);
    for _ in 1..n {
        c = step(a, &c);
    }
    c
}

/// `[g,h]_n` for single letters `g`, `h` with distinct bases.
pub fn iterated_commutator_letters(g: Letter, h: Letter, n: usize) -> Word {
    assert_ne!(g.base, h.base, "iterated commutator needs inequivalent letters");
    iterated_commutator(&Word::single(g), &Word::single(h), n)
}

/// Whether `u_n` equals `g (u_{n-1})^-1 (left-truncation of u_{n-1})` after
/// reduction, for `n >= 2`.
pub fn recursive_form_check(g: Letter, h: Letter, n: usize) -> bool {
    assert!(n >= 2);
    let prev = iterated_commutator_letters(g, h, n - 1);
    let Ok(trunc) = prev.truncate_left() else { return false };
    let rhs = Word::single(g).concat(&prev.inverse()).concat(&trunc).reduce();
    rhs == iterated_commutator_letters(g, h, n)
}

/// The eight square words in `g` and `h`: cyclic permutations and inversions
/// of `ghgh` and `gh^-1gh^-1`. Deduplicated if letters degenerate.
pub fn square_words(g: Letter, h: Letter) -> Vec<Word> {
    let seeds = [
        Word::from_letters(vec![g, h, g, h]),
        Word::from_letters(vec![g, h.inverse(), g, h.inverse()]),
    ];
    let mut out = Vec::new();
    for seed in seeds {
        for rot in seed.cyclic_permutations() {
            out.push(rot.inverse());
            out.push(rot);
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn is_square_word(u: &Word, g: Letter, h: Letter) -> bool {
    square_words(g, h).contains(u)
}

/// Magic: `u` and `u^-1` together contain at least three of `gh`, `hg`,
/// `g^-1 h`, `h g^-1` as linear subwords.
pub fn is_magic(u: &Word, g: Letter, h: Letter) -> bool {
    let patterns = [
        Word::from_letters(vec![g, h]),
        Word::from_letters(vec![h, g]),
        Word::from_letters(vec![g.inverse(), h]),
        Word::from_letters(vec![h, g.inverse()]),
    ];
    let inv = u.inverse();
    patterns.iter().filter(|p| p.is_subword_of(u) || p.is_subword_of(&inv)).count() >= 3
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morpheme {
    pub word: Word,
    /// Position `(start, end)` within the host word, when extracted from one.
    pub span: Option<(usize, usize)>,
}

/// Whether a nonempty word is an identity word with no nonempty proper
/// contiguous subword evaluating to the identity.
pub fn is_morpheme(group: &Group, alphabet: &Alphabet, w: &Word) -> Result<bool, WordError> {
    if w.is_empty() {
        return Ok(false);
    }
    let prefix = prefix_products(group, alphabet, w)?;
    let id = group.identity();
    if eval_span(group, &prefix, 0, w.len()) != id {
        return Ok(false);
    }
    for start in 0..w.len() {
        for end in start + 1..=w.len() {
            if end - start == w.len() {
                continue;
            }
            if eval_span(group, &prefix, start, end) == id {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Extracts the leftmost minimum-length contiguous subword of `w` that
/// evaluates to the identity. Minimality forces the morpheme property.
pub fn find_morpheme(group: &Group, alphabet: &Alphabet, w: &Word) -> Result<Morpheme, WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    if !w.is_reduced() {
        return Err(WordError::NotReduced);
    }
    let prefix = prefix_products(group, alphabet, w)?;
    let id = group.identity();
    if eval_span(group, &prefix, 0, w.len()) != id {
        return Err(WordError::NotIdentity);
    }
    for len in 1..=w.len() {
        for start in 0..=w.len() - len {
            if eval_span(group, &prefix, start, start + len) == id {
                return Ok(Morpheme { word: w.subword(start, start + len), span: Some((start, start + len)) });
            }
        }
    }
    unreachable!("the full word evaluates to the identity")
}

fn prefix_products(group: &Group, alphabet: &Alphabet, w: &Word) -> Result<Vec<Elem>, WordError> {
    let mut prefix = Vec::with_capacity(w.len() + 1);
    prefix.push(group.identity());
    let mut x = group.identity();
    for &l in w.letters() {
        x = group.mul(x, alphabet.letter_value(group, l)?);
        prefix.push(x);
    }
    Ok(prefix)
}

#[inline]
fn eval_span(group: &Group, prefix: &[Elem], start: usize, end: usize) -> Elem {
    group.mul(group.inv(prefix[start]), prefix[end])
}

fn free_pair() -> (Alphabet, Letter, Letter) {
    let mut a = Alphabet::new();
    let g = a.add_base("g", false);
    let h = a.add_base("h", false);
    let (g, h) = (a.pos(g), a.pos(h));
    (a, g, h)
}

fn involution_pair() -> (Alphabet, Letter, Letter) {
    let mut a = Alphabet::new();
    let g = a.add_base("g", false);
    let h = a.add_base("h", true);
    let (g, h) = (a.pos(g), a.pos(h));
    (a, g, h)
}

/// All windows of the cyclic word `w` with lengths in `min_len..=w.len()`.
fn cyclic_windows(w: &Word, min_len: usize) -> impl Iterator<Item = Word> + '_ {
    let n = w.len();
    let mut doubled = w.letters().to_vec();
    doubled.extend_from_slice(w.letters());
    (0..n).flat_map(move |start| {
        let doubled = doubled.clone();
        (min_len..=n).map(move |len| Word::from_letters(doubled[start..start + len].to_vec()))
    })
}

/// `|u_n| = 2^(n+1)` and `|w_n| = 3 * 2^n` for all `n <= n_max`.
pub fn check_lengths(n_max: usize) -> Check {
    let (alpha, g, h) = free_pair();
    for n in 1..=n_max {
        let u = iterated_commutator_letters(g, h, n);
        if u.len() != 1 << (n + 1) {
            return Check::fail("word_lengths", format!("|u_{n}| = {} != {}", u.len(), 1 << (n + 1)));
        }
        let w = iterated_commutator(&Word::single(g), &Word::repeat(h, 2), n);
        if w.len() != 3 << n {
            return Check::fail("word_lengths", format!("|w_{n}| = {} != {}", w.len(), 3 << n));
        }
    }
    let _ = alpha;
    Check::pass_with("word_lengths", format!("n <= {n_max}"))
}

/// `u_n = g (u_{n-1})^-1 (left-truncation of u_{n-1})` for `2 <= n <= n_max`.
pub fn check_recursive_form(n_max: usize) -> Check {
    let (_, g, h) = free_pair();
    for n in 2..=n_max {
        if !recursive_form_check(g, h, n) {
            return Check::fail("recursive_form", format!("fails at n = {n}"));
        }
    }
    Check::pass_with("recursive_form", format!("2 <= n <= {n_max}"))
}

/// No cyclic subword of `u_n` of length four is a square word, `n <= n_max`.
/// The square-word table is closed under inversion, so scanning all cyclic
/// length-4 windows covers cyclic subwords.
pub fn check_no_squares(n_max: usize) -> Check {
    let (_, g, h) = free_pair();
    let squares = square_words(g, h);
    for n in 1..=n_max {
        let u = iterated_commutator_letters(g, h, n);
        for win in cyclic_windows(&u, 4).filter(|w| w.len() == 4) {
            if squares.contains(&win) {
                return Check::fail(
                    "no_squares",
                    format!("square window at n = {n}: {:?}", win.letters()),
                );
            }
        }
    }
    Check::pass_with("no_squares", format!("n <= {n_max}"))
}

/// Every cyclic subword of `u_n` of length >= 4 is magic, `n <= n_max`.
/// Magic is invariant under inversion, so windows of rotations suffice.
pub fn check_magic_lemma(n_max: usize) -> Check {
    let (_, g, h) = free_pair();
    for n in 1..=n_max {
        let u = iterated_commutator_letters(g, h, n);
        for win in cyclic_windows(&u, 4) {
            if !is_magic(&win, g, h) {
                return Check::fail(
                    "magic_lemma",
                    format!("non-magic window of length {} at n = {n}", win.len()),
                );
            }
        }
    }
    Check::pass_with("magic_lemma", format!("n <= {n_max}"))
}

/// With `h` an involution, `u_n` avoids `ghghghg`, `ghg^-1hghg^-1` and
/// `g^-1hghg^-1hg` as cyclic subwords, `n <= n_max`.
pub fn check_no_rectangles(n_max: usize) -> Check {
    let (alpha, g, h) = involution_pair();
    let gi = g.inverse();
    let forbidden = [
        Word::from_letters(vec![g, h, g, h, g, h, g]),
        Word::from_letters(vec![g, h, gi, h, g, h, gi]),
        Word::from_letters(vec![gi, h, g, h, gi, h, g]),
    ];
    for n in 1..=n_max {
        let u = iterated_commutator_letters(g, h, n);
        for f in &forbidden {
            if f.is_cyclic_subword_of(&u) {
                return Check::fail(
                    "no_rectangles",
                    format!("{} inside u_{n}", alpha.format_word(f)),
                );
            }
        }
    }
    Check::pass_with("no_rectangles", format!("n <= {n_max}, involution convention"))
}

/// Every cyclic subword of `w_n = [g,h^2]_n` with at least four segments
/// contains `gh^2` or `h^2g` cyclically, or equals `g^-1h^2g^-1h^-1` up to
/// cyclic permutation and inversion. Also re-checks `|w_n|`.
pub fn check_ramsey(n_max: usize) -> Check {
    let (alpha, g, h) = free_pair();
    let gh2 = Word::from_letters(vec![g, h, h]);
    let h2g = Word::from_letters(vec![h, h, g]);
    let exceptional = Word::from_letters(vec![g.inverse(), h, h, g.inverse(), h.inverse()]);
    for n in 1..=n_max {
        let w = iterated_commutator(&Word::single(g), &Word::repeat(h, 2), n);
        if w.len() != 3 << n {
            return Check::fail("ramsey", format!("|w_{n}| = {} != {}", w.len(), 3 << n));
        }
        for win in cyclic_windows(&w, 4) {
            let Ok(count) = win.segment_count() else { continue };
            if count < 4 {
                continue;
            }
            let ok = gh2.is_cyclic_subword_of(&win)
                || h2g.is_cyclic_subword_of(&win)
                || (win.len() == exceptional.len() && exceptional.is_cyclic_subword_of(&win));
            if !ok {
                return Check::fail(
                    "ramsey",
                    format!("window {} at n = {n}", alpha.format_word(&win)),
                );
            }
        }
    }
    Check::pass_with("ramsey", format!("n <= {n_max}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZigzagClass {
    /// Shorter than three letters.
    TooShort,
    /// Ends with the inverse of its first letter, so it cannot be a morpheme.
    EndpointsClash,
    /// Contains `ghk` or `g^-1hk` as a cyclic subword.
    ContainsGhk,
    /// A cyclic permutation of `khghk^-1h`.
    CyclicPermOfHost,
    /// `gkh` or `g^-1kh` up to cyclic permutation and inversion.
    ExceptionalTriangle,
}

#[derive(Clone, Debug)]
pub struct ZigzagTable {
    pub entries: Vec<(String, ZigzagClass)>,
    pub conclusion_holds: bool,
}

/// Re-derives the 16-entry classification of the linear subwords of
/// `hkhghk^-1h` that contain the letter `g` (the host word of the
/// three-letter zigzag analysis), and confirms that every entry that could
/// be a morpheme of length >= 3 either contains `ghk`/`g^-1hk` cyclically or
/// is `khghk^-1h`, `gkh` or `g^-1kh` up to cyclic permutation and inversion.
pub fn zigzag3_table_check() -> ZigzagTable {
    let mut a = Alphabet::new();
    let gb = a.add_base("g", false);
    let hb = a.add_base("h", true);
    let kb = a.add_base("k", false);
    let (g, h, k) = (a.pos(gb), a.pos(hb), a.pos(kb));
    let host = Word::from_letters(vec![h, k, h, g, h, k.inverse(), h]);
    let host6 = Word::from_letters(vec![k, h, g, h, k.inverse(), h]);
    let ghk = Word::from_letters(vec![g, h, k]);
    let gihk = Word::from_letters(vec![g.inverse(), h, k]);
    let gkh = Word::from_letters(vec![g, k, h]);
    let gikh = Word::from_letters(vec![g.inverse(), k, h]);

    let g_pos = 3; // position of the unique g in the host
    let mut entries = Vec::new();
    let mut conclusion_holds = true;
    for start in 0..=g_pos {
        for end in (g_pos + 1)..=host.len() {
            let sub = host.subword(start, end);
            let class = if sub.len() < 3 {
                ZigzagClass::TooShort
            } else if sub.letters()[0].cancels(*sub.letters().last().unwrap())
                || sub.letters()[0] == sub.letters().last().unwrap().inverse()
            {
                ZigzagClass::EndpointsClash
            } else if ghk.is_cyclic_subword_of(&sub) || gihk.is_cyclic_subword_of(&sub) {
                ZigzagClass::ContainsGhk
            } else if sub.len() == host6.len() && host6.is_cyclic_subword_of(&sub) {
                ZigzagClass::CyclicPermOfHost
            } else if (sub.len() == 3)
                && (gkh.is_cyclic_subword_of(&sub) || gikh.is_cyclic_subword_of(&sub))
            {
                ZigzagClass::ExceptionalTriangle
            } else {
                conclusion_holds = false;
                ZigzagClass::TooShort
            };
            entries.push((a.format_word(&sub), class));
        }
    }
    ZigzagTable { entries, conclusion_holds }
}

pub fn zigzag3_check() -> Check {
    let table = zigzag3_table_check();
    if table.entries.len() != 16 {
        return Check::fail("zigzag3_table", format!("{} entries, expected 16", table.entries.len()));
    }
    if table.conclusion_holds {
        Check::pass_with("zigzag3_table", "16 linear subwords classified")
    } else {
        Check::fail("zigzag3_table", "an entry escaped the classification")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    fn fmt(a: &Alphabet, w: &Word) -> String {
        a.format_word(w)
    }

    #[test]
    fn reduction() {
        let (a, g, _h) = free_pair();
        let w = Word::from_letters(vec![g, g.inverse()]);
        assert!(w.reduce().is_empty());
        let w = a.parse_word("g h^-1 h g").unwrap();
        assert_eq!(fmt(&a, &w.reduce()), "g g");

        let (ai, _, hh) = involution_pair();
        let w = Word::from_letters(vec![hh, hh]);
        assert!(w.reduce().is_empty());
        let _ = ai;
    }

    #[test]
    fn commutator_words_match_known_forms() {
        let (a, g, h) = free_pair();
        let u1 = iterated_commutator_letters(g, h, 1);
        assert_eq!(fmt(&a, &u1), "g h^-1 g^-1 h");
        let u2 = iterated_commutator_letters(g, h, 2);
        assert_eq!(fmt(&a, &u2), "g h^-1 g h g^-1 h^-1 g^-1 h");
        let u3 = iterated_commutator_letters(g, h, 3);
        assert_eq!(
            fmt(&a, &u3),
            "g h^-1 g h g h^-1 g^-1 h g^-1 h^-1 g h g^-1 h^-1 g^-1 h"
        );
        assert_eq!(u3.len(), 16);
        let u6 = iterated_commutator_letters(g, h, 6);
        assert_eq!(u6.len(), 128);

        let w1 = iterated_commutator(&Word::single(g), &Word::repeat(h, 2), 1);
        assert_eq!(fmt(&a, &w1), "g h^-1 h^-1 g^-1 h h");
        let w2 = iterated_commutator(&Word::single(g), &Word::repeat(h, 2), 2);
        assert_eq!(fmt(&a, &w2), "g h^-1 h^-1 g h h g^-1 h^-1 h^-1 g^-1 h h");
    }

    #[test]
    fn commutator_words_involution_convention() {
        let (a, g, h) = involution_pair();
        assert_eq!(fmt(&a, &iterated_commutator_letters(g, h, 1)), "g h g^-1 h");
        assert_eq!(fmt(&a, &iterated_commutator_letters(g, h, 2)), "g h g h g^-1 h g^-1 h");
        assert_eq!(
            fmt(&a, &iterated_commutator_letters(g, h, 3)),
            "g h g h g h g^-1 h g^-1 h g h g^-1 h g^-1 h"
        );
    }

    #[test]
    fn truncations() {
        let (a, g, h) = free_pair();
        let u1 = iterated_commutator_letters(g, h, 1);
        assert_eq!(fmt(&a, &u1.truncate_left().unwrap()), "h^-1 g^-1 h");
        let gh = a.parse_word("g h").unwrap();
        assert_eq!(fmt(&a, &gh.truncate_right().unwrap()), "g");
        let abc = a.parse_word("g h g").unwrap();
        assert_eq!(fmt(&a, &abc.truncate_left().unwrap().truncate_right().unwrap()), "h");
        assert!(Word::single(g).truncate_left().is_err());
    }

    #[test]
    fn cyclic_machinery() {
        let mut al = Alphabet::new();
        let (ab, bb, cb) = (al.add_base("a", false), al.add_base("b", false), al.add_base("c", false));
        let (a, b, c) = (al.pos(ab), al.pos(bb), al.pos(cb));
        let abc = Word::from_letters(vec![a, b, c]);
        assert_eq!(abc.cyclic_permutations().len(), 3);
        let aa = Word::from_letters(vec![a, a]);
        assert_eq!(aa.cyclic_permutations().len(), 1);

        let ca = Word::from_letters(vec![c, a]);
        assert!(ca.is_cyclic_subword_of(&abc));
        let inv_ca = Word::from_letters(vec![a.inverse(), c.inverse()]);
        assert!(inv_ca.is_cyclic_subword_of(&abc));
        let ac = Word::from_letters(vec![a, c]);
        assert!(!ac.is_cyclic_subword_of(&abc));
        let inv_ac = Word::from_letters(vec![c.inverse(), a.inverse()]);
        assert!(!inv_ac.is_cyclic_subword_of(&abc));

        let (_, g, h) = free_pair();
        let u3 = iterated_commutator_letters(g, h, 3);
        assert!(u3.cyclic_permutations().len() <= 16);
    }

    #[test]
    fn squares_and_magic() {
        let (a, g, h) = free_pair();
        let sq = square_words(g, h);
        assert_eq!(sq.len(), 8);
        assert!(is_square_word(&a.parse_word("g h g h").unwrap(), g, h));
        assert!(is_square_word(&a.parse_word("h g^-1 h g^-1").unwrap(), g, h));
        assert!(!is_square_word(&a.parse_word("g h^-1 g^-1 h").unwrap(), g, h));

        assert!(is_magic(&a.parse_word("g h^-1 g h").unwrap(), g, h));
        assert!(!is_magic(&a.parse_word("g h g h").unwrap(), g, h));
        assert!(!is_magic(&a.parse_word("g h").unwrap(), g, h));
    }

    #[test]
    fn alternating_length4_magic_xor_square() {
        // all 32 alternating sign patterns of length 4
        let (_, g, h) = free_pair();
        for start_with_g in [true, false] {
            for bits in 0..16u32 {
                let mut letters = Vec::new();
                for i in 0..4 {
                    let neg = bits >> i & 1 == 1;
                    let base = if (i % 2 == 0) == start_with_g { g } else { h };
                    letters.push(if neg { base.inverse() } else { base });
                }
                let w = Word::from_letters(letters);
                let magic = is_magic(&w, g, h);
                let square = square_words(g, h).iter().any(|s| s.is_subword_of(&w));
                assert!(magic ^ square, "failed at {w:?}");
            }
        }
    }

    #[test]
    fn magic_square_interchange_invariance() {
        let (_, g, h) = free_pair();
        let words: Vec<Word> = cyclic_windows(&iterated_commutator_letters(g, h, 3), 4).collect();
        let swap_sign = |w: &Word, base: u8| {
            Word::from_letters(
                w.letters().iter().map(|l| if l.base == base { l.inverse() } else { *l }).collect(),
            )
        };
        let swap_base = |w: &Word| {
            Word::from_letters(
                w.letters()
                    .iter()
                    .map(|l| Letter { base: 1 - l.base, sign: l.sign })
                    .collect(),
            )
        };
        for w in words.iter().take(300) {
            let m0 = is_magic(w, g, h);
            let s0 = is_square_word(w, g, h);
            for t in [swap_sign(w, 0), swap_sign(w, 1), swap_base(w)] {
                assert_eq!(is_magic(&t, g, h), m0);
                assert_eq!(is_square_word(&t, g, h), s0);
            }
        }
    }

    #[test]
    fn segments_examples() {
        let (a, _, _) = free_pair();
        let w = a.parse_word("g^-1 h h g^-1 h^-1").unwrap();
        assert_eq!(w.segments().unwrap(), vec![(0, -1), (1, 2), (0, -1), (1, -1)]);
        let g3 = a.parse_word("g g g").unwrap();
        assert_eq!(g3.segments().unwrap().len(), 1);
        let u1 = a.parse_word("g h^-1 g^-1 h").unwrap();
        assert_eq!(u1.segments().unwrap().len(), 4);
        let unreduced = a.parse_word("g g^-1").unwrap();
        assert_eq!(unreduced.segments(), Err(WordError::NotReduced));
    }

    #[test]
    fn morphemes() {
        // C_3 x C_3 with g = (1,0), h = (0,1)
        let c3 = Group::cyclic(3).unwrap();
        let grp = c3.direct_product(&c3).unwrap();
        let mut a = Alphabet::new();
        let gb = a.add_valued_base("g", false, 3);
        let hb = a.add_valued_base("h", false, 1);
        let (g, h) = (a.pos(gb), a.pos(hb));
        let u1 = Word::from_letters(vec![g, h.inverse(), g.inverse(), h]);
        let m = find_morpheme(&grp, &a, &u1).unwrap();
        assert_eq!(m.word, u1);
        assert_eq!(m.span, Some((0, 4)));
        assert!(is_morpheme(&grp, &a, &u1).unwrap());

        // the square of an involution is a morpheme: C_2, w = g g with g free
        let c2 = Group::cyclic(2).unwrap();
        let mut af = Alphabet::new();
        let hfb = af.add_valued_base("h", false, 1);
        let hf = af.pos(hfb);
        let w2 = Word::repeat(hf, 2);
        let m = find_morpheme(&c2, &af, &w2).unwrap();
        assert_eq!(m.word.len(), 2);

        // non-reduced input rejected
        let c12 = Group::cyclic(12).unwrap();
        let mut a12 = Alphabet::new();
        let g12b = a12.add_valued_base("g", false, 1);
        let g12 = a12.pos(g12b);
        let bad = Word::from_letters(vec![g12, g12, g12.inverse(), g12.inverse()]);
        assert_eq!(find_morpheme(&c12, &a12, &bad), Err(WordError::NotReduced));
        assert_eq!(find_morpheme(&c12, &a12, &bad.reduce()), Err(WordError::Empty));
    }

    #[test]
    fn morpheme_minimality_property() {
        let q8 = Group::quaternion8();
        let mut a = Alphabet::new();
        let ib = a.add_valued_base("i", false, q8.elem_by_name("i").unwrap());
        let jb = a.add_valued_base("j", false, q8.elem_by_name("j").unwrap());
        let (i, j) = (a.pos(ib), a.pos(jb));
        let u2 = iterated_commutator(&Word::single(i), &Word::single(j), 2);
        let m = find_morpheme(&q8, &a, &u2).unwrap();
        assert!(is_morpheme(&q8, &a, &m.word).unwrap());
        // inequivalent letters force length >= 3 or a square form
        assert!(m.word.len() >= 3 || m.word.len() == 2);
    }

    #[test]
    fn word_checks_pass() {
        assert!(check_lengths(6).passed());
        assert!(check_recursive_form(6).passed());
        assert!(check_no_squares(6).passed());
        assert!(check_magic_lemma(6).passed());
        assert!(check_no_rectangles(6).passed());
        assert!(check_ramsey(5).passed());
    }

    #[test]
    fn zigzag_table_matches_expected_classification() {
        let table = zigzag3_table_check();
        assert!(table.conclusion_holds);
        assert_eq!(table.entries.len(), 16);
        let class_of = |w: &str| {
            table
                .entries
                .iter()
                .find(|(s, _)| s == w)
                .map(|(_, c)| *c)
                .unwrap_or_else(|| panic!("{w} not in table"))
        };
        assert_eq!(class_of("h k h g h k^-1 h"), ZigzagClass::EndpointsClash);
        assert_eq!(class_of("h k h g h"), ZigzagClass::EndpointsClash);
        assert_eq!(class_of("k h g h k^-1"), ZigzagClass::EndpointsClash);
        assert_eq!(class_of("h g h k^-1 h"), ZigzagClass::EndpointsClash);
        assert_eq!(class_of("h g h"), ZigzagClass::EndpointsClash);
        assert_eq!(class_of("h k h g h k^-1"), ZigzagClass::CyclicPermOfHost);
        assert_eq!(class_of("k h g h k^-1 h"), ZigzagClass::CyclicPermOfHost);
        assert_eq!(class_of("h k h g"), ZigzagClass::ContainsGhk);
        assert_eq!(class_of("k h g h"), ZigzagClass::ContainsGhk);
        assert_eq!(class_of("h g h k^-1"), ZigzagClass::ContainsGhk);
        assert_eq!(class_of("g h k^-1 h"), ZigzagClass::ContainsGhk);
        assert_eq!(class_of("h g"), ZigzagClass::TooShort);
        assert_eq!(class_of("g h"), ZigzagClass::TooShort);
        assert_eq!(class_of("g"), ZigzagClass::TooShort);
        assert_eq!(class_of("k h g"), ZigzagClass::ExceptionalTriangle);
        assert_eq!(class_of("g h k^-1"), ZigzagClass::ExceptionalTriangle);
    }

    #[test]
    fn parse_and_format() {
        let (a, _, _) = free_pair();
        let w = a.parse_word("g h^-1 g^2").unwrap();
        assert_eq!(fmt(&a, &w), "g h^-1 g g");
        assert!(a.parse_word("z").is_err());
    }
}
