//! Conway orbifold symbols and the standard presentation of the orbifold
//! fundamental group.
//!
//! Accepted grammar (ASCII aliases next to the usual typography):
//!
//! ```text
//! symbol   := handle* gyration* mirror* crosscap*
//! handle   := 'o' | '∘'
//! gyration := digit | '(' digit+ ')'
//! mirror   := ('*' | '⋆') corner*          corner := digit | '(' digit+ ')'
//! crosscap := 'x' | '×'
//! ```
//!
//! Multi-digit orders must be parenthesized, e.g. `(12)`; whitespace between
//! tokens is ignored. Orders below 2 are rejected. When a symbol mixes
//! handles and crosscaps, each handle is rewritten into two crosscaps and the
//! signature is flagged as normalized.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldSignature {
    handles: u32,
    gyrations: Vec<u32>,
    /// One entry per mirror boundary; each lists the corner orders in order.
    boundaries: Vec<Vec<u32>>,
    crosscaps: u32,
    source_text: String,
    zip_normalized: bool,
}

impl OrbifoldSignature {
    pub fn new(
        handles: u32,
        gyrations: Vec<u32>,
        boundaries: Vec<Vec<u32>>,
        crosscaps: u32,
    ) -> Result<Self, ParseError> {
        for &g in &gyrations {
            if g < 2 {
                return Err(ParseError::at(0, ParseErrorKind::OrderTooSmall(g)));
            }
        }
        for b in &boundaries {
            for &c in b {
                if c < 2 {
                    return Err(ParseError::at(0, ParseErrorKind::OrderTooSmall(c)));
                }
            }
        }
        let mut sig = OrbifoldSignature {
            handles,
            gyrations,
            boundaries,
            crosscaps,
            source_text: String::new(),
            zip_normalized: false,
        };
        sig.zip_normalize();
        sig.source_text = sig.canonical_text();
        Ok(sig)
    }

    fn zip_normalize(&mut self) {
        if self.crosscaps > 0 && self.handles > 0 {
            self.crosscaps += 2 * self.handles;
            self.handles = 0;
            self.zip_normalized = true;
        }
    }

    pub fn handles(&self) -> u32 {
        self.handles
    }

    pub fn gyrations(&self) -> &[u32] {
        &self.gyrations
    }

    pub fn boundaries(&self) -> &[Vec<u32>] {
        &self.boundaries
    }

    pub fn crosscaps(&self) -> u32 {
        self.crosscaps
    }

    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    /// True when a mixed handle+crosscap symbol was rewritten at parse time.
    pub fn zip_normalized(&self) -> bool {
        self.zip_normalized
    }

    pub fn is_orientable(&self) -> bool {
        self.crosscaps == 0
    }

    /// Only gyration points, nothing else.
    pub fn is_stellate(&self) -> bool {
        !self.gyrations.is_empty()
            && self.handles == 0
            && self.crosscaps == 0
            && self.boundaries.is_empty()
    }

    /// Canonical ASCII spelling: handles, gyrations, mirrors, crosscaps.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for _ in 0..self.handles {
            out.push('o');
        }
        let push_order = |out: &mut String, v: u32| {
            if v < 10 {
                out.push((b'0' + v as u8) as char);
            } else {
                out.push('(');
                let mut digits = Vec::new();
                let mut v = v;
                while v > 0 {
                    digits.push((b'0' + (v % 10) as u8) as char);
                    v /= 10;
                }
                for d in digits.iter().rev() {
                    out.push(*d);
                }
                out.push(')');
            }
        };
        for &g in &self.gyrations {
            push_order(&mut out, g);
        }
        for b in &self.boundaries {
            out.push('*');
            for &c in b {
                push_order(&mut out, c);
            }
        }
        for _ in 0..self.crosscaps {
            out.push('x');
        }
        out
    }

    /// Orbifold Euler characteristic as an exact rational.
    pub fn euler_characteristic(&self) -> Ratio<i64> {
        let mut chi = Ratio::new(2, 1)
            - Ratio::new(2 * self.handles as i64, 1)
            - Ratio::new(self.crosscaps as i64, 1);
        for &a in &self.gyrations {
            chi -= Ratio::new(1, 1) - Ratio::new(1, a as i64);
        }
        for b in &self.boundaries {
            let mut corner_sum = Ratio::new(0, 1);
            for &c in b {
                corner_sum += (Ratio::new(1, 1) - Ratio::new(1, c as i64)) / 2;
            }
            chi -= Ratio::new(1, 1) + corner_sum;
        }
        chi
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.euler_characteristic() < Ratio::new(0, 1)
    }

    /// Do two signatures differ only by a cyclic rotation of the gyration
    /// list? Gyration ordering is significant otherwise.
    pub fn cyclically_equivalent(&self, other: &OrbifoldSignature) -> bool {
        if self.handles != other.handles
            || self.crosscaps != other.crosscaps
            || self.boundaries != other.boundaries
            || self.gyrations.len() != other.gyrations.len()
        {
            return false;
        }
        let n = self.gyrations.len();
        if n == 0 {
            return true;
        }
        (0..n).any(|k| {
            (0..n).all(|i| self.gyrations[(i + k) % n] == other.gyrations[i])
        })
    }
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the error was detected.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    OrderTooSmall(u32),
    UnclosedParen,
    EmptyParens,
    OrderOverflow,
}

impl ParseError {
    fn at(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{}' at byte {}", c, self.offset)
            }
            ParseErrorKind::OrderTooSmall(v) => write!(
                f,
                "order {} at byte {} is below 2; multi-digit orders need parentheses, e.g. \"(12)\"",
                v, self.offset
            ),
            ParseErrorKind::UnclosedParen => {
                write!(f, "unclosed parenthesis starting at byte {}", self.offset)
            }
            ParseErrorKind::EmptyParens => write!(f, "empty parentheses at byte {}", self.offset),
            ParseErrorKind::OrderOverflow => {
                write!(f, "order at byte {} is too large", self.offset)
            }
        }
    }
}

/// Parses a Conway orbifold symbol.
pub fn parse_symbol(text: &str) -> Result<OrbifoldSignature, ParseError> {
    let mut handles = 0u32;
    let mut gyrations: Vec<u32> = Vec::new();
    let mut boundaries: Vec<Vec<u32>> = Vec::new();
    let mut crosscaps = 0u32;

    #[derive(PartialEq, Clone, Copy)]
    enum Stage {
        Handles,
        Gyrations,
        Mirrors,
        Crosscaps,
    }
    let mut stage = Stage::Handles;
    let mut chars = text.char_indices().peekable();

    let read_order = |chars: &mut core::iter::Peekable<core::str::CharIndices>,
                      offset: usize,
                      first: char|
     -> Result<u32, ParseError> {
        if first == '(' {
            let mut value: u64 = 0;
            let mut any = false;
            loop {
                match chars.next() {
                    Some((_, d)) if d.is_ascii_digit() => {
                        any = true;
                        value = value * 10 + (d as u64 - '0' as u64);
                        if value > u32::MAX as u64 {
                            return Err(ParseError::at(offset, ParseErrorKind::OrderOverflow));
                        }
                    }
                    Some((_, ')')) => {
                        if !any {
                            return Err(ParseError::at(offset, ParseErrorKind::EmptyParens));
                        }
                        break;
                    }
                    Some((o, c)) => {
                        return Err(ParseError::at(o, ParseErrorKind::UnexpectedChar(c)))
                    }
                    None => return Err(ParseError::at(offset, ParseErrorKind::UnclosedParen)),
                }
            }
            let v = value as u32;
            if v < 2 {
                return Err(ParseError::at(offset, ParseErrorKind::OrderTooSmall(v)));
            }
            Ok(v)
        } else {
            let v = first as u32 - '0' as u32;
            if v < 2 {
                return Err(ParseError::at(offset, ParseErrorKind::OrderTooSmall(v)));
            }
            Ok(v)
        }
    };

    while let Some((offset, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        match c {
            'o' | '∘' => {
                if stage != Stage::Handles {
                    return Err(ParseError::at(offset, ParseErrorKind::UnexpectedChar(c)));
                }
                handles += 1;
            }
            '0'..='9' | '(' => {
                let order = read_order(&mut chars, offset, c)?;
                match stage {
                    Stage::Handles | Stage::Gyrations => {
                        stage = Stage::Gyrations;
                        gyrations.push(order);
                    }
                    Stage::Mirrors => {
                        boundaries
                            .last_mut()
                            .expect("mirror stage implies an open boundary")
                            .push(order);
                    }
                    Stage::Crosscaps => {
                        return Err(ParseError::at(offset, ParseErrorKind::UnexpectedChar(c)))
                    }
                }
            }
            '*' | '⋆' => {
                if stage == Stage::Crosscaps {
                    return Err(ParseError::at(offset, ParseErrorKind::UnexpectedChar(c)));
                }
                stage = Stage::Mirrors;
                boundaries.push(Vec::new());
            }
            'x' | '×' => {
                stage = Stage::Crosscaps;
                crosscaps += 1;
            }
            other => return Err(ParseError::at(offset, ParseErrorKind::UnexpectedChar(other))),
        }
    }

    let mut sig = OrbifoldSignature::new(handles, gyrations, boundaries, crosscaps)?;
    sig.source_text = String::from(text);
    Ok(sig)
}

/// Generator kinds in the standard presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Rotation generator of a cone point.
    Gyration,
    HandleX,
    HandleY,
    /// First half of the split mirror on a boundary.
    MirrorP,
    /// Last half of the split mirror on a boundary.
    MirrorQ,
    /// Interior mirror of a corner chain.
    Mirror,
    /// Loop around a boundary component.
    BoundaryLoop,
    Crosscap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub kind: GenKind,
    /// Order of the generator in the group, `None` for infinite order.
    pub order: Option<u32>,
}

/// Feature blocks of a presentation, in global-relation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeatureKind {
    Gyration { order: u32 },
    Boundary { corners: Vec<u32> },
    Crosscap,
    Handle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feature {
    pub kind: FeatureKind,
    /// Index of the feature's first generator.
    pub first_gen: usize,
    pub gen_count: usize,
}

impl Feature {
    /// The word this feature contributes to the global relation.
    pub fn greek_word(&self) -> Word {
        let g = self.first_gen as i32 + 1;
        match self.kind {
            FeatureKind::Gyration { .. } => Word::from_letters(&[g]),
            // The boundary loop comes last in the feature's generator block.
            FeatureKind::Boundary { .. } => {
                Word::from_letters(&[(self.first_gen + self.gen_count) as i32])
            }
            FeatureKind::Crosscap => Word::from_letters(&[g, g]),
            FeatureKind::Handle => Word::from_letters(&[g, g + 1, -g, -(g + 1)]),
        }
    }
}

/// A finite presentation with feature metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
    features: Vec<Feature>,
    global_relator: Option<usize>,
}

impl Presentation {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn features(&self) -> &[Feature] {
        &self.features
    }

    pub fn global_relator(&self) -> Option<&Word> {
        self.global_relator.map(|i| &self.relators[i])
    }

    /// Presentation of a stellate group: one rotation per cone point,
    /// power relators, and the product-of-all-generators relation.
    pub fn stellate(orders: &[u32]) -> Presentation {
        let mut generators = Vec::new();
        let mut relators = Vec::new();
        let mut features = Vec::new();
        for (i, &a) in orders.iter().enumerate() {
            let mut label = String::from("r");
            push_usize(&mut label, i + 1);
            generators.push(Generator {
                label,
                kind: GenKind::Gyration,
                order: Some(a),
            });
            relators.push(Word::gen(i).pow(a as i32));
            features.push(Feature {
                kind: FeatureKind::Gyration { order: a },
                first_gen: i,
                gen_count: 1,
            });
        }
        let letters: Vec<i32> = (1..=orders.len() as i32).collect();
        relators.push(Word::from_letters(&letters));
        let global = relators.len() - 1;
        Presentation {
            generators,
            relators,
            features,
            global_relator: Some(global),
        }
    }

    /// A free group of the given rank (no relators); handy for braid tests.
    pub fn free(n: usize) -> Presentation {
        let mut generators = Vec::new();
        for i in 0..n {
            let mut label = String::from("g");
            push_usize(&mut label, i + 1);
            generators.push(Generator {
                label,
                kind: GenKind::Gyration,
                order: None,
            });
        }
        Presentation {
            generators,
            relators: Vec::new(),
            features: Vec::new(),
            global_relator: None,
        }
    }

    /// Positions (0-based generator indices) of the gyration generators.
    pub fn gyration_positions(&self) -> Vec<usize> {
        self.features
            .iter()
            .filter_map(|f| match f.kind {
                FeatureKind::Gyration { .. } => Some(f.first_gen),
                _ => None,
            })
            .collect()
    }
}

fn push_usize(s: &mut String, mut v: usize) {
    let mut digits = Vec::new();
    if v == 0 {
        digits.push(b'0');
    }
    while v > 0 {
        digits.push(b'0' + (v % 10) as u8);
        v /= 10;
    }
    for d in digits.iter().rev() {
        s.push(*d as char);
    }
}

/// Emits the standard presentation of the orbifold fundamental group.
///
/// Generators are listed in the order their Greek-letter words appear in the
/// global relation: gyrations, then mirror boundaries, then crosscaps, then
/// handles. A lone mirror boundary with no other features yields the plain
/// Coxeter presentation of the kaleidoscopic group.
pub fn standard_presentation(sig: &OrbifoldSignature) -> Presentation {
    let kaleidoscopic_only = sig.handles() == 0
        && sig.crosscaps() == 0
        && sig.gyrations().is_empty()
        && sig.boundaries().len() == 1
        && !sig.boundaries()[0].is_empty();
    if kaleidoscopic_only {
        return coxeter_presentation(&sig.boundaries()[0]);
    }

    let mut generators: Vec<Generator> = Vec::new();
    let mut relators: Vec<Word> = Vec::new();
    let mut features: Vec<Feature> = Vec::new();

    for (i, &a) in sig.gyrations().iter().enumerate() {
        let idx = generators.len();
        let mut label = String::from("r");
        push_usize(&mut label, i + 1);
        generators.push(Generator {
            label,
            kind: GenKind::Gyration,
            order: Some(a),
        });
        relators.push(Word::gen(idx).pow(a as i32));
        features.push(Feature {
            kind: FeatureKind::Gyration { order: a },
            first_gen: idx,
            gen_count: 1,
        });
    }

    for (bi, corners) in sig.boundaries().iter().enumerate() {
        let first = generators.len();
        let k = corners.len();
        // Mirror chain c_0 .. c_k (the chosen mirror split into halves P, Q),
        // then the boundary loop.
        for j in 0..=k {
            let kind = if j == 0 {
                GenKind::MirrorP
            } else if j == k {
                GenKind::MirrorQ
            } else {
                GenKind::Mirror
            };
            let mut label = String::new();
            if j == 0 {
                label.push('P');
                push_usize(&mut label, bi + 1);
            } else if j == k {
                label.push('Q');
                push_usize(&mut label, bi + 1);
            } else {
                label.push('c');
                push_usize(&mut label, bi + 1);
                label.push('_');
                push_usize(&mut label, j);
            }
            generators.push(Generator {
                label,
                kind,
                order: Some(2),
            });
        }
        // Special case k = 0: a single unsplit mirror would do, but the split
        // form keeps one shape for every boundary: P, Q, lambda.
        let mirror_count = if k == 0 { 2 } else { k + 1 };
        while generators.len() - first < mirror_count {
            let mut label = String::from("Q");
            push_usize(&mut label, bi + 1);
            generators.push(Generator {
                label,
                kind: GenKind::MirrorQ,
                order: Some(2),
            });
        }
        let lambda = generators.len();
        let mut label = String::from("l");
        push_usize(&mut label, bi + 1);
        generators.push(Generator {
            label,
            kind: GenKind::BoundaryLoop,
            order: None,
        });

        for j in 0..mirror_count {
            relators.push(Word::gen(first + j).pow(2));
        }
        for (j, &c) in corners.iter().enumerate() {
            let m0 = (first + j) as i32 + 1;
            let m1 = (first + j + 1) as i32 + 1;
            relators.push(Word::from_letters(&[m0, m1]).pow(c as i32));
        }
        // P = lambda^-1 Q lambda
        let p = first as i32 + 1;
        let q = (first + mirror_count - 1) as i32 + 1;
        let l = lambda as i32 + 1;
        relators.push(Word::from_letters(&[-p, -l, q, l]));

        features.push(Feature {
            kind: FeatureKind::Boundary {
                corners: corners.clone(),
            },
            first_gen: first,
            gen_count: mirror_count + 1,
        });
    }

    for i in 0..sig.crosscaps() {
        let idx = generators.len();
        let mut label = String::from("z");
        push_usize(&mut label, i as usize + 1);
        generators.push(Generator {
            label,
            kind: GenKind::Crosscap,
            order: None,
        });
        features.push(Feature {
            kind: FeatureKind::Crosscap,
            first_gen: idx,
            gen_count: 1,
        });
    }

    for i in 0..sig.handles() {
        let idx = generators.len();
        let mut lx = String::from("x");
        push_usize(&mut lx, i as usize + 1);
        let mut ly = String::from("y");
        push_usize(&mut ly, i as usize + 1);
        generators.push(Generator {
            label: lx,
            kind: GenKind::HandleX,
            order: None,
        });
        generators.push(Generator {
            label: ly,
            kind: GenKind::HandleY,
            order: None,
        });
        features.push(Feature {
            kind: FeatureKind::Handle,
            first_gen: idx,
            gen_count: 2,
        });
    }

    let mut global = Word::empty();
    for f in &features {
        global = global.concat(&f.greek_word());
    }
    relators.push(global);
    let global_idx = relators.len() - 1;

    Presentation {
        generators,
        relators,
        features,
        global_relator: Some(global_idx),
    }
}

fn coxeter_presentation(corners: &[u32]) -> Presentation {
    let k = corners.len();
    let mut generators = Vec::new();
    for j in 0..k {
        let kind = if j == 0 {
            GenKind::MirrorP
        } else if j == k - 1 {
            GenKind::MirrorQ
        } else {
            GenKind::Mirror
        };
        let mut label = String::from("m");
        push_usize(&mut label, j + 1);
        generators.push(Generator {
            label,
            kind,
            order: Some(2),
        });
    }
    let mut relators = Vec::new();
    for j in 0..k {
        relators.push(Word::gen(j).pow(2));
    }
    // Corner i sits between mirrors i-1 and i (cyclically).
    for (i, &c) in corners.iter().enumerate() {
        let prev = ((i + k - 1) % k) as i32 + 1;
        let here = i as i32 + 1;
        if prev == here {
            continue;
        }
        relators.push(Word::from_letters(&[prev, here]).pow(c as i32));
    }
    let features = alloc::vec![Feature {
        kind: FeatureKind::Boundary {
            corners: corners.to_vec(),
        },
        first_gen: 0,
        gen_count: k,
    }];
    Presentation {
        generators,
        relators,
        features,
        global_relator: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_stellate() {
        let sig = parse_symbol("2224").unwrap();
        assert_eq!(sig.gyrations(), &[2, 2, 2, 4]);
        assert_eq!(sig.handles(), 0);
        assert_eq!(sig.crosscaps(), 0);
        assert!(sig.boundaries().is_empty());
        assert!(sig.is_stellate());
        assert_eq!(sig.source_text(), "2224");
    }

    #[test]
    fn parse_kaleidoscopic() {
        let sig = parse_symbol("*246").unwrap();
        assert_eq!(sig.boundaries(), &[vec![2, 4, 6]]);
        assert!(sig.gyrations().is_empty());
        let uni = parse_symbol("⋆246").unwrap();
        assert_eq!(uni.boundaries(), sig.boundaries());
    }

    #[test]
    fn parse_torus_and_crosscaps() {
        let sig = parse_symbol("o").unwrap();
        assert_eq!(sig.handles(), 1);
        let sig = parse_symbol("22x").unwrap();
        assert_eq!(sig.gyrations(), &[2, 2]);
        assert_eq!(sig.crosscaps(), 1);
        let sig = parse_symbol("22×").unwrap();
        assert_eq!(sig.crosscaps(), 1);
    }

    #[test]
    fn parse_whitespace_and_parens() {
        let sig = parse_symbol("*2 3 7").unwrap();
        assert_eq!(sig.boundaries(), &[vec![2, 3, 7]]);
        let sig = parse_symbol("(12)3").unwrap();
        assert_eq!(sig.gyrations(), &[12, 3]);
    }

    #[test]
    fn zip_rewrite_on_mixed_symbol() {
        let sig = parse_symbol("ox").unwrap();
        assert_eq!(sig.handles(), 0);
        assert_eq!(sig.crosscaps(), 3);
        assert!(sig.zip_normalized());
        let pure = parse_symbol("o").unwrap();
        assert!(!pure.zip_normalized());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = parse_symbol("12").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::OrderTooSmall(1));
        assert_eq!(err.offset, 0);
        let err = parse_symbol("2q4").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('q'));
        assert_eq!(err.offset, 1);
        let err = parse_symbol("2(34").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnclosedParen);
        let err = parse_symbol("x2").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('2'));
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(
            parse_symbol("2224").unwrap().euler_characteristic(),
            Ratio::new(-1, 4)
        );
        assert_eq!(
            parse_symbol("*246").unwrap().euler_characteristic(),
            Ratio::new(-1, 24)
        );
        assert_eq!(
            parse_symbol("o").unwrap().euler_characteristic(),
            Ratio::new(0, 1)
        );
        assert_eq!(
            parse_symbol("*237").unwrap().euler_characteristic(),
            Ratio::new(-1, 84)
        );
    }

    #[test]
    fn star237_is_the_smallest_hyperbolic_area_anchor() {
        let anchor = parse_symbol("*237").unwrap().euler_characteristic();
        for text in ["2224", "*246", "22222", "344", "266", "237", "*238", "*345"] {
            let chi = parse_symbol(text).unwrap().euler_characteristic();
            if chi < Ratio::new(0, 1) {
                assert!(chi <= anchor, "{} has smaller magnitude than *237", text);
            }
        }
    }

    #[test]
    fn adding_a_gyration_decreases_chi_exactly() {
        for base in ["222", "*46", "o", "34"] {
            let sig = parse_symbol(base).unwrap();
            let chi = sig.euler_characteristic();
            for a in 2..10u32 {
                let mut gy = sig.gyrations().to_vec();
                gy.push(a);
                let bigger = OrbifoldSignature::new(
                    sig.handles(),
                    gy,
                    sig.boundaries().to_vec(),
                    sig.crosscaps(),
                )
                .unwrap();
                let expected = chi - (Ratio::new(1, 1) - Ratio::new(1, a as i64));
                assert_eq!(bigger.euler_characteristic(), expected);
            }
        }
    }

    #[test]
    fn roundtrip_canonical_text() {
        for text in ["2224", "*246", "o", "22x", "oo", "3232", "(12)(10)*22x", "*2 3 7"] {
            let sig = parse_symbol(text).unwrap();
            let again = parse_symbol(&sig.canonical_text()).unwrap();
            assert_eq!(sig.handles(), again.handles());
            assert_eq!(sig.gyrations(), again.gyrations());
            assert_eq!(sig.boundaries(), again.boundaries());
            assert_eq!(sig.crosscaps(), again.crosscaps());
            assert_eq!(again.canonical_text(), sig.canonical_text());
        }
    }

    #[test]
    fn stellate_presentation_shape() {
        let p = standard_presentation(&parse_symbol("2224").unwrap());
        assert_eq!(p.rank(), 4);
        let words: Vec<&Word> = p.relators().iter().collect();
        assert_eq!(words.len(), 5);
        assert_eq!(words[0].letters(), &[1, 1]);
        assert_eq!(words[1].letters(), &[2, 2]);
        assert_eq!(words[2].letters(), &[3, 3]);
        assert_eq!(words[3].letters(), &[4, 4, 4, 4]);
        assert_eq!(words[4].letters(), &[1, 2, 3, 4]);
        assert_eq!(p.global_relator().unwrap().letters(), &[1, 2, 3, 4]);
    }

    #[test]
    fn torus_presentation_is_one_commutator() {
        let p = standard_presentation(&parse_symbol("o").unwrap());
        assert_eq!(p.rank(), 2);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].letters(), &[1, 2, -1, -2]);
    }

    #[test]
    fn crosscap_presentation() {
        let p = standard_presentation(&parse_symbol("22x").unwrap());
        assert_eq!(p.rank(), 3);
        let global = p.global_relator().unwrap();
        assert_eq!(global.letters(), &[1, 2, 3, 3]);
        assert_eq!(p.generator(2).kind, GenKind::Crosscap);
    }

    #[test]
    fn gyration_then_handle_presentation() {
        let p = standard_presentation(&parse_symbol("o2").unwrap());
        assert_eq!(p.rank(), 3);
        // Global relation: r1 [x1, y1] — the cone point's word precedes the
        // handle commutator.
        assert_eq!(p.global_relator().unwrap().letters(), &[1, 2, 3, -2, -3]);
    }

    #[test]
    fn coxeter_presentation_for_lone_boundary() {
        let p = standard_presentation(&parse_symbol("*246").unwrap());
        assert_eq!(p.rank(), 3);
        assert!(p.global_relator().is_none());
        // Squares plus three corner relators.
        assert_eq!(p.relators().len(), 6);
    }

    #[test]
    fn boundary_with_features_uses_split_mirror() {
        let p = standard_presentation(&parse_symbol("2*44").unwrap());
        // r1, then P, c, Q, lambda.
        assert_eq!(p.rank(), 5);
        assert_eq!(p.generator(1).kind, GenKind::MirrorP);
        assert_eq!(p.generator(3).kind, GenKind::MirrorQ);
        assert_eq!(p.generator(4).kind, GenKind::BoundaryLoop);
        let global = p.global_relator().unwrap();
        assert_eq!(global.letters(), &[1, 5]);
    }

    #[test]
    fn cyclic_equivalence_predicate() {
        let a = parse_symbol("2323").unwrap();
        let b = parse_symbol("3232").unwrap();
        assert!(a.cyclically_equivalent(&b));
        let c = parse_symbol("2233").unwrap();
        assert!(!a.cyclically_equivalent(&c));
    }
}
