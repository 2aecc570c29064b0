//! Freely reduced words over abstract generators, automorphisms given by
//! generator images, and a bounded word-problem engine for checking relator
//! images against a presentation.
//!
//! Letters are nonzero signed integers: `+k` is the k-th generator (1-based),
//! `-k` its inverse. This matches the external serialization format.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::orbifold::Presentation;

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// The single-letter word for generator `index` (0-based).
    pub fn gen(index: usize) -> Self {
        Word {
            letters: alloc::vec![index as i32 + 1],
        }
    }

    /// A single letter with explicit sign.
    pub fn letter(index: usize, positive: bool) -> Self {
        let l = index as i32 + 1;
        Word {
            letters: alloc::vec![if positive { l } else { -l }],
        }
    }

    /// Builds a word from raw signed letters, reducing freely.
    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = Word::empty();
        for &l in letters {
            assert!(l != 0, "word letters are nonzero signed indices");
            w.push(l);
        }
        w
    }

    fn push(&mut self, letter: i32) {
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::empty();
        for _ in 0..k.unsigned_abs() {
            acc = acc.concat(&base);
        }
        acc
    }

    /// `c w c^{-1}`.
    pub fn conjugated_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Cyclic rotation by `k` letters.
    pub fn rotated(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::empty();
        }
        let n = self.letters.len();
        let k = k % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word::from_letters(&letters)
    }

    /// Substitutes each letter through the table and reduces.
    pub fn substitute(&self, table: &[Word]) -> Word {
        let mut out = Word::empty();
        for &l in &self.letters {
            let idx = (l.unsigned_abs() - 1) as usize;
            assert!(idx < table.len(), "letter {} outside substitution domain", l);
            if l > 0 {
                for &m in &table[idx].letters {
                    out.push(m);
                }
            } else {
                for &m in table[idx].letters.iter().rev() {
                    out.push(-m);
                }
            }
        }
        out
    }

    /// Strips matching conjugating prefix/suffix: `w = p c p^{-1}` with `c`
    /// not further strippable. Returns `(p, c)`.
    pub fn strip_conjugator(&self) -> (Word, Word) {
        let mut prefix = Vec::new();
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == -self.letters[hi - 1] {
            prefix.push(self.letters[lo]);
            lo += 1;
            hi -= 1;
        }
        (
            Word::from_letters(&prefix),
            Word::from_letters(&self.letters[lo..hi]),
        )
    }

    /// Deletes the generator everywhere (for "forgetting a feature" checks).
    pub fn forget_generator(&self, index: usize) -> Word {
        let target = index as i32 + 1;
        let kept: Vec<i32> = self
            .letters
            .iter()
            .copied()
            .filter(|l| l.abs() != target)
            .collect();
        Word::from_letters(&kept)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *l > 0 {
                write!(f, "g{}", l)?;
            } else {
                write!(f, "g{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Freely reduces a raw letter sequence.
pub fn free_reduce(letters: &[i32]) -> Word {
    Word::from_letters(letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutoError {
    DomainMismatch,
    NotABijection,
    InverseMismatch,
}

impl fmt::Display for AutoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutoError::DomainMismatch => write!(f, "automorphism domains do not match"),
            AutoError::NotABijection => write!(f, "permutation is not a bijection"),
            AutoError::InverseMismatch => {
                write!(f, "stored inverse images do not invert the images")
            }
        }
    }
}

/// A free-group automorphism given by generator images, with its inverse
/// stored alongside and the induced marked-point permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Word>,
    inverse_images: Vec<Word>,
    permutation: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism {
            images: (0..n).map(Word::gen).collect(),
            inverse_images: (0..n).map(Word::gen).collect(),
            permutation: (0..n).collect(),
        }
    }

    /// Validates and constructs from explicit data.
    pub fn new(
        images: Vec<Word>,
        inverse_images: Vec<Word>,
        permutation: Vec<usize>,
    ) -> Result<Self, AutoError> {
        let n = images.len();
        if inverse_images.len() != n || permutation.len() != n {
            return Err(AutoError::DomainMismatch);
        }
        let mut seen = alloc::vec![false; n];
        for &p in &permutation {
            if p >= n || seen[p] {
                return Err(AutoError::NotABijection);
            }
            seen[p] = true;
        }
        let a = Automorphism {
            images,
            inverse_images,
            permutation,
        };
        if !a.inverse_is_consistent() {
            return Err(AutoError::InverseMismatch);
        }
        Ok(a)
    }

    pub(crate) fn from_parts_unchecked(
        images: Vec<Word>,
        inverse_images: Vec<Word>,
        permutation: Vec<usize>,
    ) -> Self {
        Automorphism {
            images,
            inverse_images,
            permutation,
        }
    }

    pub fn inverse_is_consistent(&self) -> bool {
        for i in 0..self.rank() {
            if self.inverse_images[i].substitute(&self.images) != Word::gen(i) {
                return false;
            }
            if self.images[i].substitute(&self.inverse_images) != Word::gen(i) {
                return false;
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    pub fn image(&self, i: usize) -> &Word {
        &self.images[i]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Homomorphic substitution of `w` through the images.
    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        assert_eq!(self.rank(), other.rank(), "composition domain mismatch");
        let images = other.images.iter().map(|w| self.apply(w)).collect();
        let inverse_images = self
            .inverse_images
            .iter()
            .map(|w| w.substitute(&other.inverse_images))
            .collect();
        let permutation = other
            .permutation
            .iter()
            .map(|&i| self.permutation[i])
            .collect();
        Automorphism {
            images,
            inverse_images,
            permutation,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let n = self.rank();
        let mut permutation = alloc::vec![0usize; n];
        for i in 0..n {
            permutation[self.permutation[i]] = i;
        }
        Automorphism {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
            permutation,
        }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.rank()).all(|i| self.images[i] == Word::gen(i))
    }

    /// Type preservation: each generator maps to a slot of the same order.
    pub fn preserves_orders(&self, p: &Presentation) -> bool {
        (0..self.rank().min(p.rank()))
            .all(|i| p.generator(i).order == p.generator(self.permutation[i]).order)
    }
}

/// Reduces exponent runs of finite-order generators into the symmetric range
/// and freely reduces, iterating to a fixed point.
pub fn normalize_mod_orders(w: &Word, p: &Presentation) -> Word {
    let mut current = w.clone();
    loop {
        let mut out: Vec<i32> = Vec::with_capacity(current.len());
        let letters = current.letters();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let idx = (l.unsigned_abs() - 1) as usize;
            let mut j = i + 1;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l > 0 { run } else { -run };
            let reduced = match p.generator(idx).order {
                Some(order) => {
                    let a = order as i64;
                    let mut e = exp.rem_euclid(a);
                    if 2 * e > a {
                        e -= a;
                    }
                    e
                }
                None => exp,
            };
            let letter = if reduced >= 0 { l.abs() } else { -l.abs() };
            for _ in 0..reduced.unsigned_abs() {
                out.push(letter);
            }
            i = j;
        }
        let next = Word::from_letters(&out);
        if next == current {
            return next;
        }
        current = next;
    }
}

fn relator_variants(p: &Presentation) -> Vec<Word> {
    let mut variants = BTreeSet::new();
    for r in p.relators() {
        for base in [r.clone(), r.inverse()] {
            for k in 0..base.len().max(1) {
                let v = normalize_mod_orders(&base.rotated(k), p);
                if !v.is_empty() {
                    variants.insert(v);
                }
            }
        }
    }
    variants.into_iter().collect()
}

fn delete_occurrences(w: &Word, v: &Word) -> Vec<Word> {
    let wl = w.letters();
    let vl = v.letters();
    let mut out = Vec::new();
    if vl.is_empty() || wl.len() < vl.len() {
        return out;
    }
    for start in 0..=(wl.len() - vl.len()) {
        if &wl[start..start + vl.len()] == vl {
            let mut rest = Vec::with_capacity(wl.len() - vl.len());
            rest.extend_from_slice(&wl[..start]);
            rest.extend_from_slice(&wl[start + vl.len()..]);
            out.push(Word::from_letters(&rest));
        }
    }
    out
}

/// Bounded word-problem attack: returns true if `w` is confirmed trivial in
/// the quotient by deleting relator occurrences (including cyclic rotations
/// and inverses) after order normalization. A `false` answer is inconclusive.
pub fn reduces_to_identity(w: &Word, p: &Presentation, max_deletions: usize) -> bool {
    let start = normalize_mod_orders(w, p);
    if start.is_empty() {
        return true;
    }
    let variants = relator_variants(p);
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<(Word, usize)> = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back((start, 0));
    let budget = 20_000usize;
    let mut expanded = 0usize;
    while let Some((current, depth)) = queue.pop_front() {
        if depth >= max_deletions {
            continue;
        }
        expanded += 1;
        if expanded > budget {
            return false;
        }
        for v in &variants {
            for next in delete_occurrences(&current, v) {
                let next = normalize_mod_orders(&next, p);
                if next.is_empty() {
                    return true;
                }
                if visited.insert(next.clone()) {
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    false
}

/// An external decision procedure for triviality of words in the quotient,
/// typically backed by a numeric realization.
pub trait IdentityOracle {
    /// `Some(true)` / `Some(false)` when decisive, `None` when unavailable.
    fn word_is_identity(&self, w: &Word) -> Option<bool>;
}

/// Deletion depth used by the symbolic relator-image check.
pub const RESPECT_DEPTH: usize = 4;

/// Checks that the image of every relator of `p` is trivial in the quotient.
///
/// Symbolically confirmed results are accepted directly; otherwise the
/// numeric oracle decides. Without either confirmation the answer is `false`.
pub fn check_respects(
    a: &Automorphism,
    p: &Presentation,
    oracle: Option<&dyn IdentityOracle>,
) -> bool {
    for r in p.relators() {
        let image = a.apply(r);
        if reduces_to_identity(&image, p, RESPECT_DEPTH) {
            continue;
        }
        match oracle.and_then(|o| o.word_is_identity(&image)) {
            Some(true) => continue,
            _ => return false,
        }
    }
    true
}

/// Outcome of an outer-equality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterEquality {
    Equal,
    Distinct,
    Unknown,
}

#[derive(Debug, Clone, Copy)]
pub struct OuterSearchOptions {
    /// Conjugator candidates are searched up to this word length.
    pub max_conjugator_len: usize,
    /// Cap on the number of exhaustive candidates tested.
    pub candidate_budget: usize,
}

impl Default for OuterSearchOptions {
    fn default() -> Self {
        OuterSearchOptions {
            max_conjugator_len: 8,
            candidate_budget: 20_000,
        }
    }
}

fn conjugates_all(a: &Automorphism, b: &Automorphism, p: &Presentation, c: &Word) -> bool {
    for i in 0..a.rank() {
        let lhs = a.image(i).clone();
        let rhs = b.image(i).conjugated_by(c);
        let diff = lhs.concat(&rhs.inverse());
        if !reduces_to_identity(&diff, p, RESPECT_DEPTH) {
            return false;
        }
    }
    true
}

/// Tests whether `a` and `b` agree up to an inner automorphism of the
/// quotient, by bounded conjugator search. `Unknown` is returned when the
/// search is inconclusive; numeric comparison of realized tuples (see the
/// enumeration module) settles those cases.
pub fn equal_as_outer(
    a: &Automorphism,
    b: &Automorphism,
    p: &Presentation,
    opts: OuterSearchOptions,
) -> OuterEquality {
    assert_eq!(a.rank(), b.rank(), "outer comparison domain mismatch");
    if a.permutation() != b.permutation() {
        // Distinct features of the orbifold are never conjugate, so the
        // induced marked-point permutation is an outer invariant.
        return OuterEquality::Distinct;
    }

    // Targeted candidates: conjugator shapes read off the images, plus relators.
    let mut candidates: BTreeSet<Word> = BTreeSet::new();
    candidates.insert(Word::empty());
    for i in 0..a.rank() {
        let (pa, ca) = a.image(i).strip_conjugator();
        let (pb, cb) = b.image(i).strip_conjugator();
        if ca == cb {
            candidates.insert(pa.concat(&pb.inverse()));
        }
    }
    for r in p.relators() {
        candidates.insert(r.clone());
        candidates.insert(r.inverse());
    }
    for c in &candidates {
        if c.len() <= opts.max_conjugator_len && conjugates_all(a, b, p, c) {
            return OuterEquality::Equal;
        }
    }

    // Exhaustive shortlex search over freely reduced words, budget-capped.
    let n = a.rank() as i32;
    let mut frontier: Vec<Word> = alloc::vec![Word::empty()];
    let mut tested = 0usize;
    for _len in 1..=opts.max_conjugator_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 1..=n {
                for letter in [l, -l] {
                    if w.letters().last() == Some(&-letter) {
                        continue;
                    }
                    let mut letters = w.letters().to_vec();
                    letters.push(letter);
                    let cand = Word::from_letters(&letters);
                    tested += 1;
                    if tested > opts.candidate_budget {
                        return OuterEquality::Unknown;
                    }
                    if !candidates.contains(&cand) && conjugates_all(a, b, p, &cand) {
                        return OuterEquality::Equal;
                    }
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    OuterEquality::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::{parse_symbol, standard_presentation, Presentation};
    use alloc::vec;

    fn stellate(orders: &[u32]) -> Presentation {
        Presentation::stellate(orders)
    }

    #[test]
    fn free_reduce_examples() {
        assert!(free_reduce(&[1, -1]).is_empty());
        assert_eq!(free_reduce(&[1, 2, -2, 1]).letters(), &[1, 1]);
        let reduced = free_reduce(&[1, 2, -1]);
        assert_eq!(free_reduce(reduced.letters()), reduced);
    }

    #[test]
    fn free_reduce_cascades() {
        assert!(free_reduce(&[1, 2, -2, -1]).is_empty());
        assert_eq!(free_reduce(&[3, 1, 2, -2, -1, -3, 4]).letters(), &[4]);
    }

    #[test]
    fn reduction_is_confluent_under_random_orders() {
        // Reduce by cancelling adjacent pairs at arbitrary positions; the
        // result must match the canonical stack reduction.
        fn reduce_random(mut letters: Vec<i32>, seed: &mut u64) -> Vec<i32> {
            loop {
                let mut pairs = vec![];
                for i in 0..letters.len().saturating_sub(1) {
                    if letters[i] == -letters[i + 1] {
                        pairs.push(i);
                    }
                }
                if pairs.is_empty() {
                    return letters;
                }
                *seed = seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let pick = pairs[(*seed >> 33) as usize % pairs.len()];
                letters.drain(pick..pick + 2);
            }
        }
        let mut seed = 0x9e3779b97f4a7c15u64;
        let samples: Vec<Vec<i32>> = vec![
            vec![1, 2, -2, -1, 3, -3, 1],
            vec![2, -2, 2, -2, 2],
            vec![1, 2, 3, -3, -2, -1],
            vec![-1, 1, -1, 1, -1],
            vec![4, -3, 3, -4, 4, 1, -1, -4],
        ];
        for s in samples {
            for _ in 0..20 {
                let canonical = free_reduce(&s);
                let random = reduce_random(s.clone(), &mut seed);
                assert_eq!(canonical.letters(), &random[..]);
            }
        }
    }

    #[test]
    fn half_twist_preserves_product_of_the_pair() {
        // S1 -> S1 S2 S1^-1, S2 -> S1 applied to S1 S2 gives S1 S2 back.
        let a = Automorphism::new(
            vec![
                Word::from_letters(&[1, 2, -1]),
                Word::from_letters(&[1]),
                Word::gen(2),
            ],
            vec![
                Word::from_letters(&[2]),
                Word::from_letters(&[-2, 1, 2]),
                Word::gen(2),
            ],
            vec![1, 0, 2],
        )
        .unwrap();
        let w = Word::from_letters(&[1, 2]);
        assert_eq!(a.apply(&w), w);
    }

    #[test]
    fn identity_automorphism_applies_trivially() {
        let a = Automorphism::identity(4);
        let w = Word::from_letters(&[1, -3, 2, 2, 4]);
        assert_eq!(a.apply(&w), w);
        assert!(a.is_identity());
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let a = Automorphism::new(
            vec![Word::from_letters(&[1, 2, -1]), Word::gen(0)],
            vec![Word::gen(1), Word::from_letters(&[-2, 1, 2])],
            vec![1, 0],
        )
        .unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn inverse_validation_rejects_garbage() {
        let err = Automorphism::new(
            vec![Word::from_letters(&[1, 2, -1]), Word::gen(0)],
            vec![Word::gen(0), Word::gen(1)],
            vec![1, 0],
        )
        .unwrap_err();
        assert_eq!(err, AutoError::InverseMismatch);
    }

    #[test]
    fn composition_is_functional() {
        // apply(compose(a, b), w) == apply(a, apply(b, w))
        let a = Automorphism::new(
            vec![Word::from_letters(&[1, 2, -1]), Word::gen(0), Word::gen(2)],
            vec![Word::gen(1), Word::from_letters(&[-2, 1, 2]), Word::gen(2)],
            vec![1, 0, 2],
        )
        .unwrap();
        let b = Automorphism::new(
            vec![Word::gen(0), Word::from_letters(&[2, 3, -2]), Word::gen(1)],
            vec![Word::gen(0), Word::gen(2), Word::from_letters(&[-3, 2, 3])],
            vec![0, 2, 1],
        )
        .unwrap();
        let words = [
            Word::from_letters(&[1, 2, 3]),
            Word::from_letters(&[-3, -2, -1]),
            Word::from_letters(&[2, -1, 2, 3, 3]),
        ];
        let ab = a.compose(&b);
        assert!(ab.inverse_is_consistent());
        for w in &words {
            assert_eq!(ab.apply(w), a.apply(&b.apply(w)));
        }
    }

    #[test]
    fn normalize_mod_orders_reduces_powers() {
        let p = stellate(&[2, 2, 2, 4]);
        let w = Word::from_letters(&[4, 4, 4]);
        assert_eq!(normalize_mod_orders(&w, &p).letters(), &[-4]);
        let w = Word::from_letters(&[1, 1]);
        assert!(normalize_mod_orders(&w, &p).is_empty());
        let w = Word::from_letters(&[-1]);
        assert_eq!(normalize_mod_orders(&w, &p).letters(), &[1]);
    }

    #[test]
    fn global_relator_is_trivial() {
        let p = stellate(&[2, 2, 2, 4]);
        let global = Word::from_letters(&[1, 2, 3, 4]);
        assert!(reduces_to_identity(&global, &p, 2));
        let rotated = Word::from_letters(&[2, 3, 4, 1]);
        assert!(reduces_to_identity(&rotated, &p, 2));
        let conj = global.conjugated_by(&Word::from_letters(&[3, -2]));
        assert!(reduces_to_identity(&conj, &p, 3));
    }

    #[test]
    fn nontrivial_word_is_not_confirmed() {
        let p = stellate(&[2, 2, 2, 4]);
        let w = Word::from_letters(&[4, 4]);
        assert!(!reduces_to_identity(&w, &p, 4));
    }

    #[test]
    fn check_respects_half_twist_on_equal_orders() {
        let p = stellate(&[2, 2, 2, 2, 2]);
        let a = crate::mcg::half_twist(1, &p).unwrap();
        assert!(check_respects(a.auto(), &p, None));
    }

    #[test]
    fn check_respects_rejects_order_swap() {
        // Forged half-twist swapping the positions of orders 2 and 4 in 2224.
        let p = stellate(&[2, 2, 2, 4]);
        let a = Automorphism::new(
            vec![
                Word::gen(0),
                Word::gen(1),
                Word::from_letters(&[3, 4, -3]),
                Word::gen(2),
            ],
            vec![
                Word::gen(0),
                Word::gen(1),
                Word::gen(3),
                Word::from_letters(&[-4, 3, 4]),
            ],
            vec![0, 1, 3, 2],
        )
        .unwrap();
        assert!(!check_respects(&a, &p, None));
    }

    #[test]
    fn check_respects_handle_twist() {
        // a -> a, b -> ba preserves the commutator relator on the torus symbol.
        let sig = parse_symbol("o").unwrap();
        let p = standard_presentation(&sig);
        let a = Automorphism::new(
            vec![Word::gen(0), Word::from_letters(&[2, 1])],
            vec![Word::gen(0), Word::from_letters(&[2, -1])],
            vec![0, 1],
        )
        .unwrap();
        assert!(check_respects(&a, &p, None));
    }

    #[test]
    fn outer_equality_reflexive() {
        let p = stellate(&[2, 2, 2, 4]);
        let a = crate::mcg::half_twist(1, &p).unwrap();
        assert_eq!(
            equal_as_outer(a.auto(), a.auto(), &p, OuterSearchOptions::default()),
            OuterEquality::Equal
        );
    }

    #[test]
    fn conjugation_by_relator_is_outer_trivial() {
        let p = stellate(&[2, 2, 2, 4]);
        let relator = Word::from_letters(&[1, 2, 3, 4]);
        let images: Vec<Word> = (0..4)
            .map(|i| Word::gen(i).conjugated_by(&relator))
            .collect();
        let inv: Vec<Word> = (0..4)
            .map(|i| Word::gen(i).conjugated_by(&relator.inverse()))
            .collect();
        let a = Automorphism::new(images, inv, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            equal_as_outer(
                &a,
                &Automorphism::identity(4),
                &p,
                OuterSearchOptions::default()
            ),
            OuterEquality::Equal
        );
    }

    #[test]
    fn half_twist_vs_identity_is_distinct() {
        let p = stellate(&[2, 2, 2, 2, 2]);
        let a = crate::mcg::half_twist(1, &p).unwrap();
        assert_eq!(
            equal_as_outer(
                a.auto(),
                &Automorphism::identity(5),
                &p,
                OuterSearchOptions::default()
            ),
            OuterEquality::Distinct
        );
    }

    #[test]
    fn forget_generator_deletes_letters() {
        let w = Word::from_letters(&[1, 2, -1, 3, 1]);
        assert_eq!(w.forget_generator(0).letters(), &[2, 3]);
    }
}
