//! Mapping-class-group generators represented as automorphisms of the
//! orbifold fundamental group: half-twists and Dehn twists along chains of
//! features, Artin pure-braid generators, the extra generators needed on
//! nonorientable surfaces (crosscap transpositions and slides, boundary
//! slides), handle twists and point pushes, and the relation words of the
//! spherical braid group.
//!
//! Braid words in the literature multiply left to right; as mapping classes
//! they act from the right. Every braid word entering this module goes
//! through [`sigma_word_auto`]/[`compose_left_to_right`], which perform that
//! translation once, centrally.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::orbifold::{FeatureKind, GenKind, Presentation};
use crate::words::{Automorphism, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum McgError {
    IndexOutOfRange,
    /// The two exchanged cone points have different rotation orders.
    OrderMismatch { left: u32, right: u32 },
    NotAGyration(usize),
    NonContiguousChain,
    /// The presentation lacks the feature layout the generator needs.
    FeatureMismatch(&'static str),
    InvalidPartition(&'static str),
    TooFewPoints,
}

impl fmt::Display for McgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McgError::IndexOutOfRange => write!(f, "generator position out of range"),
            McgError::OrderMismatch { left, right } => write!(
                f,
                "exchanged gyration points must have equal orders (got {} and {})",
                left, right
            ),
            McgError::NotAGyration(i) => write!(f, "generator {} is not a gyration", i + 1),
            McgError::NonContiguousChain => write!(f, "chain positions must be contiguous"),
            McgError::FeatureMismatch(what) => write!(f, "feature mismatch: {}", what),
            McgError::InvalidPartition(what) => write!(f, "invalid partition: {}", what),
            McgError::TooFewPoints => write!(f, "at least 3 marked points are required"),
        }
    }
}

/// A named mapping-class-group generator with its inverse stored alongside.
#[derive(Debug, Clone)]
pub struct McgGenerator {
    name: String,
    inverse_name: String,
    auto: Automorphism,
}

impl McgGenerator {
    fn new(name: String, auto: Automorphism) -> Self {
        let mut inverse_name = name.clone();
        inverse_name.push_str("_inv");
        McgGenerator {
            name,
            inverse_name,
            auto,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inverse_name(&self) -> &str {
        &self.inverse_name
    }

    pub fn auto(&self) -> &Automorphism {
        &self.auto
    }

    /// The inverse generator, with the names swapped.
    pub fn inverted(&self) -> McgGenerator {
        McgGenerator {
            name: self.inverse_name.clone(),
            inverse_name: self.name.clone(),
            auto: self.auto.inverse(),
        }
    }
}

fn fmt_name(parts: &[&str], indices: &[usize]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            s.push('_');
        }
        s.push_str(part);
    }
    for &i in indices {
        let _ = write!(s, "_{}", i);
    }
    s
}

/// Unchecked half-twist automorphism of the free group exchanging slots
/// `i` and `i+1` (0-based).
fn raw_half_twist(n: usize, i: usize) -> Automorphism {
    let mut images: Vec<Word> = (0..n).map(Word::gen).collect();
    let mut inverse_images: Vec<Word> = (0..n).map(Word::gen).collect();
    let a = i as i32 + 1;
    let b = i as i32 + 2;
    images[i] = Word::from_letters(&[a, b, -a]);
    images[i + 1] = Word::from_letters(&[a]);
    inverse_images[i] = Word::from_letters(&[b]);
    inverse_images[i + 1] = Word::from_letters(&[-b, a, b]);
    let mut permutation: Vec<usize> = (0..n).collect();
    permutation.swap(i, i + 1);
    Automorphism::from_parts_unchecked(images, inverse_images, permutation)
}

fn gyration_order(p: &Presentation, i: usize) -> Result<u32, McgError> {
    let g = p.generator(i);
    if g.kind != GenKind::Gyration {
        return Err(McgError::NotAGyration(i));
    }
    g.order.ok_or(McgError::NotAGyration(i))
}

/// Half-twist exchanging the adjacent cone points at generator positions
/// `i` and `i+1` (1-based). Requires equal rotation orders.
pub fn half_twist(i: usize, p: &Presentation) -> Result<McgGenerator, McgError> {
    let n = p.rank();
    if i == 0 || i >= n {
        return Err(McgError::IndexOutOfRange);
    }
    let left = gyration_order(p, i - 1)?;
    let right = gyration_order(p, i)?;
    if left != right {
        return Err(McgError::OrderMismatch { left, right });
    }
    Ok(McgGenerator::new(
        fmt_name(&["sigma"], &[i]),
        raw_half_twist(n, i - 1),
    ))
}

/// Right Dehn twist along a curve enclosing the contiguous features
/// `chain.0 ..= chain.1` (1-based feature positions): every generator of an
/// enclosed feature is conjugated by the product of the chain's words in
/// the global relation.
pub fn chain_dehn_twist(chain: (usize, usize), p: &Presentation) -> Result<McgGenerator, McgError> {
    let (lo, hi) = chain;
    let features = p.features();
    if lo == 0 || hi < lo || hi > features.len() {
        return Err(McgError::IndexOutOfRange);
    }
    let mut t = Word::empty();
    for f in &features[lo - 1..hi] {
        t = t.concat(&f.greek_word());
    }
    let n = p.rank();
    let mut images: Vec<Word> = (0..n).map(Word::gen).collect();
    let mut inverse_images: Vec<Word> = (0..n).map(Word::gen).collect();
    for f in &features[lo - 1..hi] {
        for g in f.first_gen..f.first_gen + f.gen_count {
            images[g] = Word::gen(g).conjugated_by(&t);
            inverse_images[g] = Word::gen(g).conjugated_by(&t.inverse());
        }
    }
    let permutation: Vec<usize> = (0..n).collect();
    Ok(McgGenerator::new(
        fmt_name(&["chain"], &[lo, hi]),
        Automorphism::from_parts_unchecked(images, inverse_images, permutation),
    ))
}

fn raw_general_half_twist(n: usize, a: usize, b: usize) -> Automorphism {
    // (a,b) = (a,a+1)^-1 (a+1,b) (a,a+1) as a braid product; translated to
    // functional order this is H(a) ∘ H(a+1,b) ∘ H(a)^-1.
    if b == a + 1 {
        return raw_half_twist(n, a - 1);
    }
    let h = raw_half_twist(n, a - 1);
    let inner = raw_general_half_twist(n, a + 1, b);
    h.compose(&inner).compose(&h.inverse())
}

/// Half-twist exchanging the (not necessarily adjacent) cone points at
/// positions `a < b`, built from adjacent half-twists.
pub fn general_half_twist(a: usize, b: usize, p: &Presentation) -> Result<McgGenerator, McgError> {
    let n = p.rank();
    if a == 0 || a >= b || b > n {
        return Err(McgError::IndexOutOfRange);
    }
    let left = gyration_order(p, a - 1)?;
    let right = gyration_order(p, b - 1)?;
    if left != right {
        return Err(McgError::OrderMismatch { left, right });
    }
    let name = if b == a + 1 {
        fmt_name(&["sigma"], &[a])
    } else {
        fmt_name(&["sigma"], &[a, b])
    };
    Ok(McgGenerator::new(name, raw_general_half_twist(n, a, b)))
}

/// Composes braid letters read left to right (braid convention) into a
/// functional composite: the leftmost letter acts first.
pub fn compose_left_to_right(letters: &[Automorphism], n: usize) -> Automorphism {
    let mut acc = Automorphism::identity(n);
    for l in letters {
        acc = l.compose(&acc);
    }
    acc
}

/// The automorphism of a braid word over the adjacent half-twist alphabet
/// (letter `+k` is the half-twist at positions k, k+1).
pub fn sigma_word_auto(w: &Word, p: &Presentation) -> Result<Automorphism, McgError> {
    let n = p.rank();
    let mut letters = Vec::new();
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize;
        if k == 0 || k >= n {
            return Err(McgError::IndexOutOfRange);
        }
        let h = raw_half_twist(n, k - 1);
        letters.push(if l > 0 { h } else { h.inverse() });
    }
    Ok(compose_left_to_right(&letters, n))
}

/// Artin pure-braid generator: the strand pair (i, j) twisted about each
/// other, `(σ_{j-1} … σ_{i+1}) σ_i² (σ_{j-1} … σ_{i+1})^{-1}`.
pub fn artin_generator(i: usize, j: usize, p: &Presentation) -> Result<McgGenerator, McgError> {
    let n = p.rank();
    if i == 0 || i >= j || j > n {
        return Err(McgError::IndexOutOfRange);
    }
    let mut letters: Vec<i32> = Vec::new();
    for k in ((i + 1)..j).rev() {
        letters.push(k as i32);
    }
    letters.push(i as i32);
    letters.push(i as i32);
    for k in (i + 1)..j {
        letters.push(-(k as i32));
    }
    let auto = sigma_word_auto(&Word::from_letters(&letters), p)?;
    Ok(McgGenerator::new(fmt_name(&["a"], &[i, j]), auto))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonorientableKind {
    CrosscapTransposition,
    TwoSidedTwist,
    CrosscapSlide,
    BoundarySlide,
}

fn adjacent_crosscap_pair(p: &Presentation, position: usize) -> Result<(usize, usize), McgError> {
    // `position` is the 1-based generator index of the first crosscap.
    let a = position
        .checked_sub(1)
        .ok_or(McgError::IndexOutOfRange)?;
    let b = a + 1;
    if b >= p.rank() {
        return Err(McgError::IndexOutOfRange);
    }
    if p.generator(a).kind != GenKind::Crosscap || p.generator(b).kind != GenKind::Crosscap {
        return Err(McgError::FeatureMismatch(
            "an adjacent pair of crosscap generators is required",
        ));
    }
    Ok((a, b))
}

fn subst_pair(n: usize, a: usize, b: usize, img_a: &[i32], img_b: &[i32]) -> Vec<Word> {
    // Letters 1, 2 in the templates stand for generators a, b.
    let map = |l: i32| -> i32 {
        let target = if l.abs() == 1 { a } else { b } as i32 + 1;
        if l > 0 {
            target
        } else {
            -target
        }
    };
    let mut out: Vec<Word> = (0..n).map(Word::gen).collect();
    out[a] = Word::from_letters(&img_a.iter().map(|&l| map(l)).collect::<Vec<_>>());
    out[b] = Word::from_letters(&img_b.iter().map(|&l| map(l)).collect::<Vec<_>>());
    out
}

/// Crosscap transposition of two adjacent crosscaps:
/// `(A, B) -> (B, B^{-2} A B^2)`.
fn crosscap_transposition(p: &Presentation, position: usize) -> Result<McgGenerator, McgError> {
    let (a, b) = adjacent_crosscap_pair(p, position)?;
    let n = p.rank();
    let images = subst_pair(n, a, b, &[2], &[-2, -2, 1, 2, 2]);
    let inverse = subst_pair(n, a, b, &[1, 1, 2, -1, -1], &[1]);
    let mut permutation: Vec<usize> = (0..n).collect();
    permutation.swap(a, b);
    Ok(McgGenerator::new(
        fmt_name(&["crosscap", "transposition"], &[position]),
        Automorphism::from_parts_unchecked(images, inverse, permutation),
    ))
}

/// Right Dehn twist along the two-sided curve through two adjacent
/// crosscaps: `(A, B) -> (A B^{-1} A^{-1}, A B^2)`.
fn two_sided_twist(p: &Presentation, position: usize) -> Result<McgGenerator, McgError> {
    let (a, b) = adjacent_crosscap_pair(p, position)?;
    let n = p.rank();
    let images = subst_pair(n, a, b, &[1, -2, -1], &[1, 2, 2]);
    let inverse = subst_pair(n, a, b, &[1, 1, 2], &[-2, -1, 2]);
    let permutation: Vec<usize> = (0..n).collect();
    Ok(McgGenerator::new(
        fmt_name(&["two", "sided", "twist"], &[position]),
        Automorphism::from_parts_unchecked(images, inverse, permutation),
    ))
}

/// Crosscap slide (the transposition followed by the two-sided twist):
/// `(A, B) -> (A B^2, (A B^2)^{-1} B^{-1} (A B^2))`.
fn crosscap_slide(p: &Presentation, position: usize) -> Result<McgGenerator, McgError> {
    let u = crosscap_transposition(p, position)?;
    let t = two_sided_twist(p, position)?;
    let auto = t.auto().compose(u.auto());
    Ok(McgGenerator::new(
        fmt_name(&["crosscap", "slide"], &[position]),
        auto,
    ))
}

/// Boundary slide of a puncture-like feature past a crosscap:
/// `(P, A) -> ((PA) P^{-1} (PA)^{-1}, P A)` where `position` names the
/// crosscap generator `A` (1-based) and `P` is the feature just before it.
fn boundary_slide(p: &Presentation, position: usize) -> Result<McgGenerator, McgError> {
    let a = position.checked_sub(1).ok_or(McgError::IndexOutOfRange)?;
    if a >= p.rank() || p.generator(a).kind != GenKind::Crosscap {
        return Err(McgError::FeatureMismatch(
            "boundary slides act on a crosscap generator",
        ));
    }
    // The neighbor is the previous feature's loop: a gyration generator or a
    // boundary loop.
    let features = p.features();
    let fi = features
        .iter()
        .position(|f| f.first_gen == a)
        .ok_or(McgError::FeatureMismatch("crosscap feature not found"))?;
    if fi == 0 {
        return Err(McgError::FeatureMismatch(
            "the crosscap needs a preceding puncture or boundary",
        ));
    }
    let prev = &features[fi - 1];
    let pidx = match prev.kind {
        FeatureKind::Gyration { .. } => prev.first_gen,
        FeatureKind::Boundary { .. } => prev.first_gen + prev.gen_count - 1,
        _ => {
            return Err(McgError::FeatureMismatch(
                "the crosscap must follow a puncture or boundary feature",
            ))
        }
    };
    let n = p.rank();
    let images = subst_pair(n, pidx, a, &[1, 2, -1, -2, -1], &[1, 2]);
    let inverse = subst_pair(n, pidx, a, &[-2, -1, 2], &[-2, 1, 2, 2]);
    let permutation: Vec<usize> = (0..n).collect();
    Ok(McgGenerator::new(
        fmt_name(&["boundary", "slide"], &[position]),
        Automorphism::from_parts_unchecked(images, inverse, permutation),
    ))
}

pub fn nonorientable_generator(
    kind: NonorientableKind,
    position: usize,
    p: &Presentation,
) -> Result<McgGenerator, McgError> {
    match kind {
        NonorientableKind::CrosscapTransposition => crosscap_transposition(p, position),
        NonorientableKind::TwoSidedTwist => two_sided_twist(p, position),
        NonorientableKind::CrosscapSlide => crosscap_slide(p, position),
        NonorientableKind::BoundarySlide => boundary_slide(p, position),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HandleKind {
    TwistA,
    TwistB,
    CrossHandleTwist,
    HandleTransposition,
    PointPushX,
    PointPushY,
}

fn handle_feature(p: &Presentation, position: usize) -> Result<usize, McgError> {
    // `position` is the 1-based index among handle features; returns the
    // generator index of the handle's X generator.
    let mut count = 0usize;
    for f in p.features() {
        if matches!(f.kind, FeatureKind::Handle) {
            count += 1;
            if count == position {
                return Ok(f.first_gen);
            }
        }
    }
    Err(McgError::FeatureMismatch("handle feature not found"))
}

fn adjacent_handles(p: &Presentation, position: usize) -> Result<(usize, usize), McgError> {
    let first = handle_feature(p, position)?;
    let second = handle_feature(p, position + 1)?;
    if second != first + 2 {
        return Err(McgError::FeatureMismatch("handles must be adjacent"));
    }
    Ok((first, second))
}

fn subst_quad(
    n: usize,
    gens: [usize; 4],
    templates: [&[i32]; 4],
) -> Vec<Word> {
    let map = |l: i32| -> i32 {
        let target = gens[(l.unsigned_abs() - 1) as usize] as i32 + 1;
        if l > 0 {
            target
        } else {
            -target
        }
    };
    let mut out: Vec<Word> = (0..n).map(Word::gen).collect();
    for (k, t) in templates.iter().enumerate() {
        out[gens[k]] = Word::from_letters(&t.iter().map(|&l| map(l)).collect::<Vec<_>>());
    }
    out
}

fn point_push_context(p: &Presentation, position: usize) -> Result<(usize, usize), McgError> {
    // `position` is the 1-based index of a gyration generator immediately
    // followed by a handle in the global relation.
    let s = position.checked_sub(1).ok_or(McgError::IndexOutOfRange)?;
    let features = p.features();
    let fi = features
        .iter()
        .position(|f| f.first_gen == s && matches!(f.kind, FeatureKind::Gyration { .. }))
        .ok_or(McgError::FeatureMismatch("point pushes move a cone point"))?;
    match features.get(fi + 1) {
        Some(f) if matches!(f.kind, FeatureKind::Handle) => Ok((s, f.first_gen)),
        _ => Err(McgError::FeatureMismatch(
            "the pushed cone point must be followed by a handle",
        )),
    }
}

pub fn handle_generator(
    kind: HandleKind,
    position: usize,
    p: &Presentation,
) -> Result<McgGenerator, McgError> {
    let n = p.rank();
    match kind {
        HandleKind::TwistA => {
            let x = handle_feature(p, position)?;
            let images = subst_pair(n, x, x + 1, &[1], &[2, 1]);
            let inverse = subst_pair(n, x, x + 1, &[1], &[2, -1]);
            Ok(McgGenerator::new(
                fmt_name(&["handle", "twist", "a"], &[position]),
                Automorphism::from_parts_unchecked(images, inverse, (0..n).collect()),
            ))
        }
        HandleKind::TwistB => {
            let x = handle_feature(p, position)?;
            let images = subst_pair(n, x, x + 1, &[1, -2], &[2]);
            let inverse = subst_pair(n, x, x + 1, &[1, 2], &[2]);
            Ok(McgGenerator::new(
                fmt_name(&["handle", "twist", "b"], &[position]),
                Automorphism::from_parts_unchecked(images, inverse, (0..n).collect()),
            ))
        }
        HandleKind::CrossHandleTwist => {
            let (h1, h2) = adjacent_handles(p, position)?;
            let gens = [h1, h1 + 1, h2, h2 + 1]; // a1 b1 a2 b2
            let images = subst_quad(
                n,
                gens,
                [
                    &[4, 1, -4],
                    &[4, -1, -4, 1, 2, 1, -4],
                    &[4, -1, -4, 1, 3, 1, -4],
                    &[4, -1, 4, 1, -4],
                ],
            );
            let inverse = subst_quad(
                n,
                gens,
                [
                    &[1, -4, 1, 4, -1],
                    &[1, -4, -1, 4, 2, 4, -1],
                    &[1, -4, -1, 4, 3, 4, -1],
                    &[1, 4, -1],
                ],
            );
            Ok(McgGenerator::new(
                fmt_name(&["cross", "handle", "twist"], &[position]),
                Automorphism::from_parts_unchecked(images, inverse, (0..n).collect()),
            ))
        }
        HandleKind::HandleTransposition => {
            let (h1, h2) = adjacent_handles(p, position)?;
            let gens = [h1, h1 + 1, h2, h2 + 1];
            // K = [a2, b2] = a2 b2 a2^-1 b2^-1
            let images = subst_quad(
                n,
                gens,
                [
                    &[3],
                    &[4],
                    &[4, 3, -4, -3, 1, 3, 4, -3, -4],
                    &[4, 3, -4, -3, 2, 3, 4, -3, -4],
                ],
            );
            let inverse = subst_quad(
                n,
                gens,
                [
                    &[1, 2, -1, -2, 3, 2, 1, -2, -1],
                    &[1, 2, -1, -2, 4, 2, 1, -2, -1],
                    &[1],
                    &[2],
                ],
            );
            let mut permutation: Vec<usize> = (0..n).collect();
            permutation.swap(h1, h2);
            permutation.swap(h1 + 1, h2 + 1);
            Ok(McgGenerator::new(
                fmt_name(&["handle", "transposition"], &[position]),
                Automorphism::from_parts_unchecked(images, inverse, permutation),
            ))
        }
        HandleKind::PointPushY => {
            let (s, x) = point_push_context(p, position)?;
            let gens = [s, x, x + 1]; // templates use 1 = S, 2 = X, 3 = Y
            let images = subst_triple(
                n,
                gens,
                [&[1, -3, 1, 3, -1], &[1, -3, -1, 3, 2, -1], &[1, 3, -1]],
            );
            let inverse = subst_triple(
                n,
                gens,
                [&[3, 1, -3], &[3, -1, -3, 1, 2, 3, 1, -3], &[3, -1, 3, 1, -3]],
            );
            Ok(McgGenerator::new(
                fmt_name(&["point", "push", "y"], &[position]),
                Automorphism::from_parts_unchecked(images, inverse, (0..n).collect()),
            ))
        }
        HandleKind::PointPushX => {
            let (s, x) = point_push_context(p, position)?;
            let gens = [s, x, x + 1];
            let images = subst_triple(
                n,
                gens,
                [&[-2, 1, 2], &[-2, -1, 2, 1, 2], &[3, -2, 1, 2]],
            );
            let inverse = subst_triple(
                n,
                gens,
                [&[1, 2, 1, -2, -1], &[1, 2, -1], &[3, -1]],
            );
            Ok(McgGenerator::new(
                fmt_name(&["point", "push", "x"], &[position]),
                Automorphism::from_parts_unchecked(images, inverse, (0..n).collect()),
            ))
        }
    }
}

fn subst_triple(n: usize, gens: [usize; 3], templates: [&[i32]; 3]) -> Vec<Word> {
    let map = |l: i32| -> i32 {
        let target = gens[(l.unsigned_abs() - 1) as usize] as i32 + 1;
        if l > 0 {
            target
        } else {
            -target
        }
    };
    let mut out: Vec<Word> = (0..n).map(Word::gen).collect();
    for (k, t) in templates.iter().enumerate() {
        out[gens[k]] = Word::from_letters(&t.iter().map(|&l| map(l)).collect::<Vec<_>>());
    }
    out
}

/// Linear index of the pure-braid generator `a_{i,j}` (1-based, i < j) in
/// the lexicographic listing over `n` strands.
pub fn pure_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i)
}

/// Inverse of [`pure_index`].
pub fn pure_pair(mut idx: usize, n: usize) -> (usize, usize) {
    let mut i = 1;
    loop {
        let row = n - i;
        if idx <= row {
            return (i, i + idx);
        }
        idx -= row;
        i += 1;
    }
}

/// The center word and the sphere relation words of the braid group on `n`
/// strands, over the adjacent-twist and pure alphabets.
#[derive(Debug, Clone)]
pub struct SphereRelations {
    /// `(σ_1 … σ_{n-1})^n` over the adjacent-twist alphabet.
    pub z_sigma: Word,
    /// The same center element expressed over the pure alphabet.
    pub z_pure: Word,
    /// One relation word per strand: strand `i` carried around all others.
    pub x_words: Vec<Word>,
}

pub fn sphere_relation_words(n: usize) -> Result<SphereRelations, McgError> {
    if n < 3 {
        return Err(McgError::TooFewPoints);
    }
    let mut z_sigma_letters = Vec::new();
    for _ in 0..n {
        for k in 1..n {
            z_sigma_letters.push(k as i32);
        }
    }
    let mut z_pure_letters = Vec::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            z_pure_letters.push(pure_index(i, j, n) as i32);
        }
    }
    let mut x_words = Vec::new();
    for i in 1..=n {
        let mut letters = Vec::new();
        for j in (i + 1)..=n {
            letters.push(pure_index(i, j, n) as i32);
        }
        for k in (1..i).rev() {
            letters.push(pure_index(k, i, n) as i32);
        }
        x_words.push(Word::from_letters(&letters));
    }
    Ok(SphereRelations {
        z_sigma: Word::from_letters(&z_sigma_letters),
        z_pure: Word::from_letters(&z_pure_letters),
        x_words,
    })
}

/// Evaluates a word over the pure alphabet into an automorphism.
pub fn pure_word_auto(w: &Word, p: &Presentation) -> Result<Automorphism, McgError> {
    let n = p.rank();
    let mut letters = Vec::new();
    for &l in w.letters() {
        let (i, j) = pure_pair(l.unsigned_abs() as usize, n);
        let a = artin_generator(i, j, p)?;
        letters.push(if l > 0 {
            a.auto().clone()
        } else {
            a.auto().inverse()
        });
    }
    Ok(compose_left_to_right(&letters, n))
}

/// Generating set of the semi-pure mapping class group for a partition of
/// the cone points into blocks of equal rotation order: all pure-braid
/// generators, plus (unless `pure_only`) half-twists exchanging consecutive
/// points of each block. Blocks need not be contiguous; non-adjacent
/// exchanges are built from adjacent ones.
pub fn semi_pure_generating_set(
    partition: &[Vec<usize>],
    p: &Presentation,
    pure_only: bool,
) -> Result<Vec<McgGenerator>, McgError> {
    let n = p.rank();
    let mut seen = alloc::vec![false; n];
    for block in partition {
        for &pos in block {
            if pos == 0 || pos > n {
                return Err(McgError::InvalidPartition("position out of range"));
            }
            if seen[pos - 1] {
                return Err(McgError::InvalidPartition("position repeated"));
            }
            seen[pos - 1] = true;
        }
        let mut order = None;
        for &pos in block {
            let o = gyration_order(p, pos - 1)?;
            match order {
                None => order = Some(o),
                Some(prev) if prev != o => {
                    return Err(McgError::OrderMismatch {
                        left: prev,
                        right: o,
                    })
                }
                _ => {}
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(McgError::InvalidPartition("positions not covered"));
    }

    let mut out = Vec::new();
    if !pure_only {
        for block in partition {
            let mut sorted = block.clone();
            sorted.sort_unstable();
            for pair in sorted.windows(2) {
                out.push(general_half_twist(pair[0], pair[1], p)?);
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(artin_generator(i, j, p)?);
        }
    }
    Ok(out)
}

/// The default partition of a stellate presentation: cone points grouped by
/// equal rotation order.
pub fn partition_by_order(p: &Presentation) -> Vec<Vec<usize>> {
    let mut blocks: Vec<(u32, Vec<usize>)> = Vec::new();
    for i in 0..p.rank() {
        let order = p.generator(i).order.unwrap_or(0);
        match blocks.iter_mut().find(|(o, _)| *o == order) {
            Some((_, b)) => b.push(i + 1),
            None => blocks.push((order, alloc::vec![i + 1])),
        }
    }
    blocks.into_iter().map(|(_, b)| b).collect()
}
