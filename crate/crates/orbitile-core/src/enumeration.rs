//! Breadth-first enumeration of mapping-class-group elements acting on a
//! realized generator tuple, deduplicated by a conjugation-invariant numeric
//! signature, producing the ordered list of isotopy classes.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::hyperbolic::Isometry;
use crate::mcg::{partition_by_order, semi_pure_generating_set, McgError, McgGenerator};
use crate::realization::{act_on_tuple, realize, Catalog, GeneratorTuple, RealizeError};
use crate::tol;
use crate::words::Automorphism;

#[derive(Debug, Clone, PartialEq)]
pub enum EnumerateError {
    Realize(RealizeError),
    Mcg(McgError),
    /// Fixed points too close together to quantize reliably.
    DegenerateSignature,
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::Realize(e) => write!(f, "{}", e),
            EnumerateError::Mcg(e) => write!(f, "{}", e),
            EnumerateError::DegenerateSignature => {
                write!(f, "coincident fixed points prevent a stable signature")
            }
        }
    }
}

impl From<RealizeError> for EnumerateError {
    fn from(e: RealizeError) -> Self {
        EnumerateError::Realize(e)
    }
}

impl From<McgError> for EnumerateError {
    fn from(e: McgError) -> Self {
        EnumerateError::Mcg(e)
    }
}

/// Conjugation-invariant fingerprint of a tuple: normalized fixed points,
/// generator orders, and the decoration edge multiset, quantized on two
/// offset grids with the raw floats kept for collision rechecks.
#[derive(Debug, Clone)]
pub struct Signature {
    coarse: Vec<i64>,
    offset: Vec<i64>,
    fine: Vec<f64>,
}

impl Signature {
    /// Same class? Grid agreement on either grid, then a fine recheck.
    pub fn matches(&self, other: &Signature) -> bool {
        if self.coarse.len() != other.coarse.len() {
            return false;
        }
        if self.coarse != other.coarse && self.offset != other.offset {
            return false;
        }
        self.fine
            .iter()
            .zip(&other.fine)
            .all(|(a, b)| (a - b).abs() < tol::SIG_FINE)
    }

    pub fn coarse_key(&self) -> &[i64] {
        &self.coarse
    }

    pub fn offset_key(&self) -> &[i64] {
        &self.offset
    }

    /// Hex encoding of the quantized data (16 digits per entry).
    pub fn hex(&self) -> String {
        use core::fmt::Write;
        let mut s = String::with_capacity(self.coarse.len() * 16);
        for v in &self.coarse {
            let _ = write!(s, "{:016x}", *v as u64);
        }
        s
    }
}

fn quantize(x: f64) -> i64 {
    (x / tol::SIG_QUANTUM).round() as i64
}

fn quantize_offset(x: f64) -> i64 {
    (x / tol::SIG_QUANTUM + 0.5).round() as i64
}

/// Computes the signature of a verified tuple: the tuple is conjugated so
/// the first fixed point sits at the origin and the second on the positive
/// real axis, then quantized.
pub fn signature_of(t: &GeneratorTuple) -> Result<Signature, EnumerateError> {
    let pts = t.fixed_points().map_err(EnumerateError::Realize)?;
    signature_of_points(&pts.iter().map(|p| p.z()).collect::<Vec<_>>(), &orders_of(t))
}

fn orders_of(t: &GeneratorTuple) -> Vec<u32> {
    (0..t.presentation.rank())
        .map(|i| t.presentation.generator(i).order.unwrap_or(0))
        .collect()
}

/// Signature of a bare configuration (fixed points in order, with orders).
pub fn signature_of_points(
    points: &[Complex64],
    orders: &[u32],
) -> Result<Signature, EnumerateError> {
    let n = points.len();
    if n < 2 {
        return Err(EnumerateError::DegenerateSignature);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (points[i] - points[j]).norm() < tol::SIG_QUANTUM {
                return Err(EnumerateError::DegenerateSignature);
            }
        }
    }
    let p0 = crate::hyperbolic::Point::new(points[0]).map_err(|_| {
        EnumerateError::Realize(RealizeError::DegenerateTuple)
    })?;
    let t = Isometry::translation_to_origin(p0);
    let w1 = t.apply(points[1]);
    let rot = Isometry::rotation_about_by(crate::hyperbolic::Point::origin(), -w1.arg());
    let norm = rot.compose(&t);
    let normalized: Vec<Complex64> = points.iter().map(|&z| norm.apply(z)).collect();

    let mut fine = Vec::with_capacity(2 * n);
    let mut coarse: Vec<i64> = Vec::new();
    let mut offset: Vec<i64> = Vec::new();
    coarse.push(n as i64);
    offset.push(n as i64);
    for &o in orders {
        coarse.push(o as i64);
        offset.push(o as i64);
    }
    for z in &normalized {
        fine.push(z.re);
        fine.push(z.im);
        coarse.push(quantize(z.re));
        coarse.push(quantize(z.im));
        offset.push(quantize_offset(z.re));
        offset.push(quantize_offset(z.im));
    }
    // Decoration edge multiset: consecutive pairs, undirected, sorted.
    let mut edges: Vec<[i64; 4]> = Vec::with_capacity(n);
    let mut edges_off: Vec<[i64; 4]> = Vec::with_capacity(n);
    for i in 0..n {
        let a = normalized[i];
        let b = normalized[(i + 1) % n];
        let (q, r) = endpoint_keys(a, b, quantize);
        edges.push(join_edge(q, r));
        let (q, r) = endpoint_keys(a, b, quantize_offset);
        edges_off.push(join_edge(q, r));
    }
    edges.sort_unstable();
    edges_off.sort_unstable();
    for e in &edges {
        coarse.extend_from_slice(e);
    }
    for e in &edges_off {
        offset.extend_from_slice(e);
    }
    Ok(Signature {
        coarse,
        offset,
        fine,
    })
}

fn endpoint_keys(a: Complex64, b: Complex64, q: fn(f64) -> i64) -> ([i64; 2], [i64; 2]) {
    (([q(a.re), q(a.im)]), ([q(b.re), q(b.im)]))
}

fn join_edge(a: [i64; 2], b: [i64; 2]) -> [i64; 4] {
    if a <= b {
        [a[0], a[1], b[0], b[1]]
    } else {
        [b[0], b[1], a[0], a[1]]
    }
}

/// Which generating set the enumeration walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSetMode {
    /// Half-twists within equal-order blocks plus all pure generators.
    SemiPure,
    /// Pure generators only: marked points are never exchanged.
    Pure,
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerationParams {
    pub count: usize,
    pub max_word_length: usize,
    pub mode: GenSetMode,
}

impl Default for EnumerationParams {
    fn default() -> Self {
        EnumerationParams {
            count: 40,
            max_word_length: 10,
            mode: GenSetMode::SemiPure,
        }
    }
}

/// One enumerated isotopy class.
#[derive(Debug, Clone)]
pub struct TilingClass {
    /// 1-based ordinal in discovery (shortlex) order.
    pub index: usize,
    /// Generator names, leftmost acting first on the starting tuple.
    pub word: Vec<String>,
    pub auto: Automorphism,
    pub tuple: GeneratorTuple,
    pub signature: Signature,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub classes: Vec<TilingClass>,
    /// True when the whole group was exhausted before reaching the
    /// requested count.
    pub exhausted: bool,
    /// Names of the generating set walked, inverses interleaved.
    pub alphabet: Vec<String>,
}

struct SeenSet {
    signatures: Vec<Signature>,
    by_coarse: BTreeMap<Vec<i64>, Vec<usize>>,
    by_offset: BTreeMap<Vec<i64>, Vec<usize>>,
}

impl SeenSet {
    fn new() -> Self {
        SeenSet {
            signatures: Vec::new(),
            by_coarse: BTreeMap::new(),
            by_offset: BTreeMap::new(),
        }
    }

    fn contains(&self, sig: &Signature) -> bool {
        let mut candidates: Vec<usize> = Vec::new();
        if let Some(ids) = self.by_coarse.get(sig.coarse_key()) {
            candidates.extend_from_slice(ids);
        }
        if let Some(ids) = self.by_offset.get(sig.offset_key()) {
            candidates.extend_from_slice(ids);
        }
        candidates.sort_unstable();
        candidates.dedup();
        candidates
            .into_iter()
            .any(|id| self.signatures[id].matches(sig))
    }

    fn insert(&mut self, sig: Signature) {
        let id = self.signatures.len();
        self.by_coarse
            .entry(sig.coarse_key().to_vec())
            .or_default()
            .push(id);
        self.by_offset
            .entry(sig.offset_key().to_vec())
            .or_default()
            .push(id);
        self.signatures.push(sig);
    }
}

/// The generating set for a symbol's default partition (cone points grouped
/// by equal order).
pub fn generating_set(
    t: &GeneratorTuple,
    mode: GenSetMode,
) -> Result<Vec<McgGenerator>, McgError> {
    let partition = partition_by_order(&t.presentation);
    semi_pure_generating_set(&partition, &t.presentation, mode == GenSetMode::Pure)
}

/// Enumerates isotopy classes for a realized catalog entry by breadth-first
/// shortlex products of the generating set (inverses interleaved), deduping
/// semantically via tuple signatures. Deterministic for fixed inputs.
pub fn enumerate_classes(
    catalog: &Catalog,
    symbol: &str,
    realization_label: &str,
    params: &EnumerationParams,
) -> Result<Enumeration, EnumerateError> {
    let entry = catalog.lookup(symbol, realization_label)?;
    let start = realize(entry)?;
    let gens = generating_set(&start, params.mode)?;

    let mut alphabet: Vec<(String, Automorphism)> = Vec::with_capacity(2 * gens.len());
    for g in &gens {
        alphabet.push((String::from(g.name()), g.auto().clone()));
        alphabet.push((String::from(g.inverse_name()), g.auto().inverse()));
    }

    let mut seen = SeenSet::new();
    let sig0 = signature_of(&start)?;
    seen.insert(sig0.clone());
    let n = start.presentation.rank();
    let mut classes = alloc::vec![TilingClass {
        index: 1,
        word: Vec::new(),
        auto: Automorphism::identity(n),
        tuple: start,
        signature: sig0,
    }];

    let mut frontier: Vec<usize> = alloc::vec![0];
    let mut exhausted = false;
    'outer: for _len in 1..=params.max_word_length {
        if classes.len() >= params.count {
            break;
        }
        let mut next_frontier: Vec<usize> = Vec::new();
        for &ci in &frontier {
            for (j, (name, auto)) in alphabet.iter().enumerate() {
                let _ = j;
                let parent = &classes[ci];
                let tuple = act_on_tuple(auto, &parent.tuple)?;
                let sig = signature_of(&tuple)?;
                if seen.contains(&sig) {
                    continue;
                }
                let mut word = parent.word.clone();
                word.push(name.clone());
                let composed = auto.compose(&parent.auto);
                seen.insert(sig.clone());
                let index = classes.len() + 1;
                next_frontier.push(classes.len());
                classes.push(TilingClass {
                    index,
                    word,
                    auto: composed,
                    tuple,
                    signature: sig,
                });
                if classes.len() >= params.count {
                    break 'outer;
                }
            }
        }
        if next_frontier.is_empty() {
            exhausted = true;
            break;
        }
        frontier = next_frontier;
    }
    if classes.len() < params.count && !exhausted {
        // Word-length budget ran out without closing the group.
    }
    Ok(Enumeration {
        classes,
        exhausted,
        alphabet: alphabet.into_iter().map(|(n, _)| n).collect(),
    })
}

/// A dihedral relabeling of the cone points that preserves the order vector
/// and the defining relation.
#[derive(Debug, Clone)]
pub struct TupleSymmetry {
    pub shift: usize,
    pub reflected: bool,
    /// Slot `i` of the permuted tuple carries old generator `permutation[i]`.
    pub permutation: Vec<usize>,
    /// The in-place decoration edge multiset is unchanged.
    pub fixes_decoration: bool,
    /// The full labeled signature is unchanged.
    pub fixes_signature: bool,
}

#[derive(Debug, Clone)]
pub struct AmbiguityReport {
    pub symbol: String,
    pub label: String,
    /// The order vector equals its reversal up to a cyclic shift.
    pub palindromic: bool,
    pub symmetries: Vec<TupleSymmetry>,
    pub ambiguous: bool,
}

fn decoration_multiset(points: &[Complex64]) -> Vec<[i64; 4]> {
    let n = points.len();
    let mut edges: Vec<[i64; 4]> = Vec::with_capacity(n);
    for i in 0..n {
        let a = points[i];
        let b = points[(i + 1) % n];
        let (q, r) = endpoint_keys(a, b, quantize);
        edges.push(join_edge(q, r));
    }
    edges.sort_unstable();
    edges
}

/// Detects starting-decoration ambiguities: relabelings of the cone points
/// (cyclic rotations, and reversals combined with inverting each rotation)
/// that yield the same presentation and re-draw the identical decoration.
pub fn detect_ambiguity(
    catalog: &Catalog,
    symbol: &str,
    realization_label: &str,
) -> Result<AmbiguityReport, EnumerateError> {
    let entry = catalog.lookup(symbol, realization_label)?;
    let t = realize(entry)?;
    let orders = orders_of(&t);
    let n = orders.len();
    let pts: Vec<Complex64> = t
        .fixed_points()
        .map_err(EnumerateError::Realize)?
        .iter()
        .map(|p| p.z())
        .collect();
    let base_decoration = decoration_multiset(&pts);
    let base_sig = signature_of_points(&pts, &orders)?;

    let palindromic = (0..n).any(|k| (0..n).all(|i| orders[(k + n - i) % n] == orders[i]));

    let mut symmetries = Vec::new();
    let mut consider = |shift: usize, reflected: bool, perm: Vec<usize>| {
        if perm.iter().enumerate().all(|(i, &p)| p == i) {
            return;
        }
        if !(0..n).all(|i| orders[perm[i]] == orders[i]) {
            return;
        }
        let isometries: Vec<Isometry> = perm
            .iter()
            .map(|&p| {
                if reflected {
                    t.isometries[p].inverse()
                } else {
                    t.isometries[p]
                }
            })
            .collect();
        let permuted = GeneratorTuple {
            presentation: t.presentation.clone(),
            isometries,
        };
        if !permuted.verify().pass() {
            return;
        }
        let ppts: Vec<Complex64> = perm.iter().map(|&p| pts[p]).collect();
        let fixes_decoration = decoration_multiset(&ppts) == base_decoration;
        let fixes_signature = signature_of_points(&ppts, &orders)
            .map(|s| s.matches(&base_sig))
            .unwrap_or(false);
        symmetries.push(TupleSymmetry {
            shift,
            reflected,
            permutation: perm,
            fixes_decoration,
            fixes_signature,
        });
    };

    for k in 1..n {
        consider(k, false, (0..n).map(|i| (i + k) % n).collect());
    }
    for k in 0..n {
        consider(k, true, (0..n).map(|i| (k + n - i) % n).collect());
    }

    let ambiguous = symmetries.iter().any(|s| s.fixes_decoration);
    Ok(AmbiguityReport {
        symbol: String::from(entry.symbol.as_str()),
        label: String::from(entry.label.as_str()),
        palindromic,
        symmetries,
        ambiguous,
    })
}

/// Settles outer equality of two automorphisms using a realized tuple: the
/// signatures of the acted tuples agree exactly when the automorphisms
/// differ by an inner automorphism.
pub fn outer_equal_numeric(
    a: &Automorphism,
    b: &Automorphism,
    t: &GeneratorTuple,
) -> Result<bool, EnumerateError> {
    let ta = act_on_tuple(a, t)?;
    let tb = act_on_tuple(b, t)?;
    Ok(signature_of(&ta)?.matches(&signature_of(&tb)?))
}
