//! Realizations of orbifold groups as isometry groups of the disc: the
//! `(2,4,6)` triangle group, the genus-3 dodecagon cell, and a catalog of
//! starting generator tuples for the stellate subgroups, with numeric
//! verification of the defining relations.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::hyperbolic::{
    distance, geodesic_between, polygon_area, Isometry, IsometryClass, Point,
};
use crate::orbifold::{parse_symbol, standard_presentation, Presentation};
use crate::tol;
use crate::words::{Automorphism, IdentityOracle, Word};

mod catalog_data;
pub mod search;

#[derive(Debug, Clone, PartialEq)]
pub enum RealizeError {
    NonHyperbolicTriple,
    UnknownEntry,
    CoincidentCenters,
    /// A defining relation fails numerically by the given residual.
    RelationResidual(f64),
    /// Evaluating automorphism images exceeded the allowed residual.
    EvaluationResidual(f64),
    DegenerateTuple,
    BadCenterWord,
}

impl fmt::Display for RealizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizeError::NonHyperbolicTriple => {
                write!(f, "triangle angles must satisfy 1/p + 1/q + 1/r < 1")
            }
            RealizeError::UnknownEntry => write!(f, "no catalog entry with that symbol and label"),
            RealizeError::CoincidentCenters => write!(f, "rotation centers coincide"),
            RealizeError::RelationResidual(r) => {
                write!(f, "defining relation fails numerically (residual {:e})", r)
            }
            RealizeError::EvaluationResidual(r) => {
                write!(f, "image evaluation residual {:e} exceeds tolerance", r)
            }
            RealizeError::DegenerateTuple => write!(f, "tuple has non-elliptic generators"),
            RealizeError::BadCenterWord => write!(f, "bad reflection word in catalog entry"),
        }
    }
}

/// A hyperbolic triangle reflection group with the order-`q` corner at the
/// origin.
#[derive(Debug, Clone)]
pub struct TriangleGroup {
    /// Reflections in the three sides: (q-p side, q-r side, p-r side).
    pub reflections: [Isometry; 3],
    /// Corners fixed by rotations of order p, q, r respectively.
    pub corners: [Point; 3],
    pub orders: [u32; 3],
}

/// Builds the `(p, q, r)` triangle group. The order-`q` corner sits at the
/// origin, the order-`p` corner on the positive real axis.
pub fn triangle_group(p: u32, q: u32, r: u32) -> Result<TriangleGroup, RealizeError> {
    if p < 2 || q < 2 || r < 2 {
        return Err(RealizeError::NonHyperbolicTriple);
    }
    let (fp, fq, fr) = (p as f64, q as f64, r as f64);
    if 1.0 / fp + 1.0 / fq + 1.0 / fr >= 1.0 - 1e-12 {
        return Err(RealizeError::NonHyperbolicTriple);
    }
    let (ap, aq, ar) = (PI / fp, PI / fq, PI / fr);
    // Hyperbolic law of cosines for the side lengths from the q-corner.
    let cosh_qp = (aq.cos() * ap.cos() + ar.cos()) / (aq.sin() * ap.sin());
    let cosh_qr = (aq.cos() * ar.cos() + ap.cos()) / (aq.sin() * ar.sin());
    let d_qp = cosh_qp.acosh();
    let d_qr = cosh_qr.acosh();
    let corner_q = Point::origin();
    let corner_p = Point::from_xy((d_qp / 2.0).tanh(), 0.0).expect("inside disc");
    let rq = (d_qr / 2.0).tanh();
    let corner_r = Point::from_xy(rq * aq.cos(), rq * aq.sin()).expect("inside disc");

    let s_qp = Isometry::reflection_in_diameter(0.0);
    let s_qr = Isometry::reflection_in_diameter(aq);
    let side_pr = geodesic_between(corner_p, corner_r).expect("distinct corners");
    let s_pr = Isometry::reflection_across(&side_pr);

    Ok(TriangleGroup {
        reflections: [s_qp, s_qr, s_pr],
        corners: [corner_p, corner_q, corner_r],
        orders: [p, q, r],
    })
}

/// The reference frame for every catalog realization: the `*246` group
/// positioned with the order-6 corner at the origin, so the genus-3
/// dodecagon is centered in the disc.
pub fn base_frame() -> TriangleGroup {
    triangle_group(2, 6, 4).expect("(2,6,4) is hyperbolic")
}

/// Area of the base triangle of `*246`.
pub fn triangle_area_246() -> f64 {
    PI / 12.0
}

/// The genus-3 fundamental cell: a regular dodecagon about the origin with
/// opposite sides identified by hyperbolic translations.
#[derive(Debug, Clone)]
pub struct Dodecagon {
    pub vertices: [Point; 12],
    /// Translations pairing side `i` (from vertex i to i+1) with side `i+6`.
    pub side_pairings: [Isometry; 6],
}

impl Dodecagon {
    pub fn area(&self) -> f64 {
        polygon_area(&self.vertices).expect("regular polygon")
    }

    pub fn interior_angle_sum(&self) -> f64 {
        10.0 * PI - self.area()
    }

    /// Side `i` as a geodesic segment.
    pub fn side(&self, i: usize) -> crate::hyperbolic::GeodesicSegment {
        geodesic_between(self.vertices[i % 12], self.vertices[(i + 1) % 12])
            .expect("distinct vertices")
    }

    /// Is `z` inside the closed dodecagon? Positive `slop` enlarges the cell
    /// by that margin.
    pub fn contains(&self, z: Complex64, slop: f64) -> bool {
        for i in 0..12 {
            match self.side(i).arc {
                crate::hyperbolic::Arc::Circular { center, radius } => {
                    // The origin side of each orthogonal circle is the inside.
                    if (z - center).norm() < radius - slop {
                        return false;
                    }
                }
                crate::hyperbolic::Arc::Diameter => return false,
            }
        }
        true
    }

    /// Translates `z` into the closed cell by side-pairing moves.
    pub fn fold_into(&self, z: Complex64) -> Complex64 {
        let mut current = z;
        for _ in 0..200 {
            if self.contains(current, 1e-9) {
                return current;
            }
            let mut best = current;
            let mut best_norm = current.norm();
            for t in &self.side_pairings {
                for m in [t, &t.inverse()] {
                    let cand = m.apply(current);
                    if cand.norm() < best_norm - 1e-15 {
                        best = cand;
                        best_norm = cand.norm();
                    }
                }
            }
            if best == current {
                return current;
            }
            current = best;
        }
        current
    }
}

/// Constructs the regular dodecagon with vertex angle π/6 about the origin,
/// aligned with the `*246` orbit in the base frame.
pub fn genus3_dodecagon() -> Dodecagon {
    let frame = base_frame();
    // Circumradius: cosh R = cot²(π/12) for the regular 12-gon with angle π/6.
    let cot = (PI / 12.0).tan().recip();
    let cosh_r = cot * cot;
    let r_h = cosh_r.acosh();
    let r_e = (r_h / 2.0).tanh();

    // The corners are order-6 vertices of the triangulation; find their
    // directions from the orbit rather than guessing the offset.
    let orbit = search::vertex_orbit(&frame, 26, r_h + 0.8);
    let mut dirs: Vec<f64> = orbit
        .iter()
        .filter(|p| p.order == 6)
        .filter(|p| (2.0 * (p.z.norm()).atanh() - r_h).abs() < 1e-7)
        .map(|p| p.z.arg())
        .collect();
    dirs.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));
    dirs.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    assert_eq!(dirs.len(), 12, "expected 12 dodecagon corners in the orbit");

    let mut vertices = [Point::origin(); 12];
    for (i, &th) in dirs.iter().enumerate() {
        vertices[i] = Point::from_xy(r_e * th.cos(), r_e * th.sin()).expect("inside disc");
    }
    let central = Isometry::rotation_about_by(Point::origin(), PI);
    let mut side_pairings = [Isometry::identity(); 6];
    for (i, pairing) in side_pairings.iter_mut().enumerate() {
        let m = crate::hyperbolic::midpoint(vertices[i], vertices[(i + 1) % 12]);
        let half_turn = Isometry::rotation_about_by(m, PI);
        *pairing = central.compose(&half_turn);
    }
    Dodecagon {
        vertices,
        side_pairings,
    }
}

/// An ordered realization of the generators of a presentation as isometries.
#[derive(Debug, Clone)]
pub struct GeneratorTuple {
    pub presentation: Presentation,
    pub isometries: Vec<Isometry>,
}

impl GeneratorTuple {
    /// Evaluates a word in the tuple's isometries.
    pub fn evaluate(&self, w: &Word) -> Isometry {
        let mut acc = Isometry::identity();
        for &l in w.letters() {
            let idx = (l.unsigned_abs() - 1) as usize;
            let m = &self.isometries[idx];
            let m = if l > 0 { *m } else { m.inverse() };
            acc = acc.compose(&m);
        }
        acc
    }

    /// Fixed points of the (elliptic) generators.
    pub fn fixed_points(&self) -> Result<Vec<Point>, RealizeError> {
        let mut out = Vec::with_capacity(self.isometries.len());
        for m in &self.isometries {
            match m.classify() {
                IsometryClass::Elliptic { fixed_point, .. } => out.push(fixed_point),
                _ => return Err(RealizeError::DegenerateTuple),
            }
        }
        Ok(out)
    }

    /// Total geodesic length of the decoration polygon through the fixed
    /// points in generator order.
    pub fn circumference(&self) -> Result<f64, RealizeError> {
        let pts = self.fixed_points()?;
        let n = pts.len();
        let mut total = 0.0;
        for i in 0..n {
            total += distance(pts[i], pts[(i + 1) % n]);
        }
        Ok(total)
    }

    /// Runs the numeric checks for the defining relations.
    pub fn verify(&self) -> VerifyReport {
        let mut order_residual = 0.0f64;
        let mut classifications = Vec::new();
        for (i, m) in self.isometries.iter().enumerate() {
            classifications.push(m.classify());
            if let Some(a) = self.presentation.generator(i).order {
                let res = m.pow(a as i32).identity_residual();
                order_residual = order_residual.max(res);
            }
        }
        let global_residual = match self.presentation.global_relator() {
            Some(w) => self.evaluate(w).identity_residual(),
            None => {
                // Without a single global relation, check every relator.
                let mut r = 0.0f64;
                for w in self.presentation.relators() {
                    r = r.max(self.evaluate(w).identity_residual());
                }
                r
            }
        };
        VerifyReport {
            order_residual,
            global_residual,
            classifications,
        }
    }
}

/// Numeric verification report for a realized tuple.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Max residual of `m_i^{A_i}` against ±identity.
    pub order_residual: f64,
    /// Residual of the global relation (or worst relator).
    pub global_residual: f64,
    pub classifications: Vec<IsometryClass>,
}

impl VerifyReport {
    pub fn max_residual(&self) -> f64 {
        self.order_residual.max(self.global_residual)
    }

    pub fn pass(&self) -> bool {
        self.max_residual() < tol::VERIFY
    }
}

impl IdentityOracle for GeneratorTuple {
    fn word_is_identity(&self, w: &Word) -> Option<bool> {
        let res = self.evaluate(w).identity_residual();
        if res < tol::ACT_RESIDUAL {
            Some(true)
        } else if res > 1e-3 {
            Some(false)
        } else {
            None
        }
    }
}

/// Applies an automorphism to a realized tuple: generator `g` is re-realized
/// as the evaluation of its image word. This is a right action:
/// `act(a ∘ b, t) = act(b, act(a, t))`.
pub fn act_on_tuple(a: &Automorphism, t: &GeneratorTuple) -> Result<GeneratorTuple, RealizeError> {
    let isometries: Vec<Isometry> = a.images().iter().map(|w| t.evaluate(w)).collect();
    let out = GeneratorTuple {
        presentation: t.presentation.clone(),
        isometries,
    };
    let report = out.verify();
    if report.max_residual() > tol::ACT_RESIDUAL {
        return Err(RealizeError::EvaluationResidual(report.max_residual()));
    }
    Ok(out)
}

/// Where a catalog center starts: a corner of the base triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseVertex {
    /// Order-2 corner.
    P,
    /// Order-6 corner (the origin of the base frame).
    Q,
    /// Order-4 corner.
    R,
}

impl BaseVertex {
    pub fn index(self) -> usize {
        match self {
            BaseVertex::P => 0,
            BaseVertex::Q => 1,
            BaseVertex::R => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<BaseVertex> {
        match i {
            0 => Some(BaseVertex::P),
            1 => Some(BaseVertex::Q),
            2 => Some(BaseVertex::R),
            _ => None,
        }
    }

    /// Maximal rotation order supported at this vertex type.
    pub fn max_order(self) -> u32 {
        match self {
            BaseVertex::P => 2,
            BaseVertex::Q => 6,
            BaseVertex::R => 4,
        }
    }
}

/// One rotation center of a catalog entry: a reflection word applied to a
/// base-triangle corner, and the rotation order placed there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterSpec {
    pub vertex: BaseVertex,
    /// Reflection indices (0, 1, 2); the leftmost reflection applies last.
    pub word: Vec<u8>,
    pub order: u32,
}

impl CenterSpec {
    pub fn resolve(&self, frame: &TriangleGroup) -> Result<Point, RealizeError> {
        let mut z = frame.corners[self.vertex.index()];
        for &i in self.word.iter().rev() {
            let m = frame
                .reflections
                .get(i as usize)
                .ok_or(RealizeError::BadCenterWord)?;
            z = m.apply_point(z);
        }
        Ok(z)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub symbol: String,
    pub label: String,
    pub centers: Vec<CenterSpec>,
    pub notes: String,
}

/// The shipped realizations, plus any loaded from external files.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_entries(entries: Vec<CatalogEntry>) -> Catalog {
        Catalog { entries }
    }

    /// The built-in catalog of stellate realizations commensurate with the
    /// genus-3 cell.
    pub fn builtin() -> Catalog {
        Catalog {
            entries: catalog_data::entries(),
        }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn symbols(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.symbol.as_str()) {
                out.push(&e.symbol);
            }
        }
        out
    }

    /// Looks up an entry; the label "default" (or "") picks the first entry
    /// for the symbol.
    pub fn lookup(&self, symbol: &str, label: &str) -> Result<&CatalogEntry, RealizeError> {
        let canonical = parse_symbol(symbol)
            .map(|s| s.canonical_text())
            .unwrap_or_else(|_| String::from(symbol));
        let mine: Vec<&CatalogEntry> = self
            .entries
            .iter()
            .filter(|e| e.symbol == canonical)
            .collect();
        if mine.is_empty() {
            return Err(RealizeError::UnknownEntry);
        }
        if label.is_empty() || label == "default" {
            return Ok(mine[0]);
        }
        mine.into_iter()
            .find(|e| e.label == label)
            .ok_or(RealizeError::UnknownEntry)
    }
}

/// Realizes a catalog entry as a generator tuple and verifies it.
pub fn realize(entry: &CatalogEntry) -> Result<GeneratorTuple, RealizeError> {
    let frame = base_frame();
    let sig = parse_symbol(&entry.symbol).map_err(|_| RealizeError::UnknownEntry)?;
    let presentation = standard_presentation(&sig);
    let mut isometries = Vec::with_capacity(entry.centers.len());
    let mut points: Vec<Point> = Vec::with_capacity(entry.centers.len());
    for c in &entry.centers {
        let p = c.resolve(&frame)?;
        for q in &points {
            if (p.z() - q.z()).norm() < 1e-9 {
                return Err(RealizeError::CoincidentCenters);
            }
        }
        points.push(p);
        isometries.push(
            Isometry::rotation_about(p, c.order).map_err(|_| RealizeError::BadCenterWord)?,
        );
    }
    let tuple = GeneratorTuple {
        presentation,
        isometries,
    };
    let report = tuple.verify();
    if report.max_residual() > tol::ACT_RESIDUAL {
        return Err(RealizeError::RelationResidual(report.max_residual()));
    }
    Ok(tuple)
}

/// Area of the fundamental tile of the realized group.
///
/// The decoration polygon through the rotation centers of a stellate
/// starting tuple is half a fundamental domain (the group is the index-2
/// rotation subgroup of the kaleidoscopic group of that polygon), so the
/// tile area is twice the polygon area, which must equal `-2π·χ`.
pub fn fundamental_tile_area(t: &GeneratorTuple) -> Result<f64, RealizeError> {
    let pts = t.fixed_points()?;
    let area = polygon_area(&pts).map_err(|_| RealizeError::DegenerateTuple)?;
    Ok(2.0 * area)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn triangle_group_246_product_orders() {
        let tg = triangle_group(2, 4, 6).unwrap();
        let [s1, s2, s3] = tg.reflections;
        for s in [&s1, &s2, &s3] {
            assert!(s.is_reversing());
            assert!(s.compose(s).is_identity(1e-12));
        }
        // Pairwise products: s1 s3 has order p, s1 s2 order q, s2 s3 order r.
        assert!(s1.compose(&s3).pow(2).is_identity(1e-9));
        assert!(!s1.compose(&s3).is_identity(1e-9));
        assert!(s1.compose(&s2).pow(4).is_identity(1e-9));
        assert!(!s1.compose(&s2).pow(2).is_identity(1e-9));
        assert!(s2.compose(&s3).pow(6).is_identity(1e-9));
        assert!(!s2.compose(&s3).pow(3).is_identity(1e-9));
    }

    #[test]
    fn triangle_group_237_is_valid() {
        let tg = triangle_group(2, 3, 7).unwrap();
        let [s1, s2, s3] = tg.reflections;
        assert!(s1.compose(&s3).pow(2).is_identity(1e-9));
        assert!(s1.compose(&s2).pow(3).is_identity(1e-9));
        assert!(s2.compose(&s3).pow(7).is_identity(1e-9));
    }

    #[test]
    fn triangle_group_rejects_euclidean() {
        assert_eq!(
            triangle_group(2, 3, 6).unwrap_err(),
            RealizeError::NonHyperbolicTriple
        );
    }

    #[test]
    fn triangle_corners_are_fixed_by_their_rotations() {
        let tg = triangle_group(2, 4, 6).unwrap();
        // Angle at each corner is π/order: a rotation by 2π/order about the
        // corner lies in the group as a product of the adjacent reflections.
        let area = polygon_area(&tg.corners.to_vec()).unwrap();
        assert!((area - PI / 12.0).abs() < 1e-12);
    }

    #[test]
    fn base_frame_puts_order6_at_origin() {
        let f = base_frame();
        assert_eq!(f.orders, [2, 6, 4]);
        assert!(f.corners[1].z().norm() < 1e-15);
    }

    #[test]
    fn dodecagon_shape() {
        let d = genus3_dodecagon();
        assert_eq!(d.vertices.len(), 12);
        let r0 = d.vertices[0].z().norm();
        for v in &d.vertices {
            assert!((v.z().norm() - r0).abs() < 1e-9, "not on a common circle");
        }
        assert!((d.area() - 8.0 * PI).abs() < 1e-6, "area {}", d.area());
        assert!((d.interior_angle_sum() - 2.0 * PI).abs() < 1e-8);
    }

    #[test]
    fn dodecagon_pairings_are_equal_length_translations() {
        let d = genus3_dodecagon();
        let mut lengths = vec![];
        for t in &d.side_pairings {
            match t.classify() {
                IsometryClass::Hyperbolic {
                    translation_length, ..
                } => lengths.push(translation_length),
                other => panic!("pairing is not hyperbolic: {:?}", other),
            }
        }
        for l in &lengths {
            assert!((l - lengths[0]).abs() < 1e-9);
        }
    }

    #[test]
    fn dodecagon_pairings_map_sides_to_opposite_sides() {
        let d = genus3_dodecagon();
        for i in 0..6 {
            let t = &d.side_pairings[i];
            let a = t.apply(d.vertices[i].z());
            let b = t.apply(d.vertices[(i + 1) % 12].z());
            let v6 = d.vertices[(i + 6) % 12].z();
            let v7 = d.vertices[(i + 7) % 12].z();
            // Side i maps onto side i+6 (endpoints swap orientation).
            let direct = (a - v6).norm().max((b - v7).norm());
            let flipped = (a - v7).norm().max((b - v6).norm());
            assert!(direct.min(flipped) < 1e-9);
        }
    }

    #[test]
    fn dodecagon_vertices_form_one_orbit() {
        let d = genus3_dodecagon();
        let start = d.vertices[0].z();
        let mut reached = vec![start];
        let mut frontier = vec![start];
        while let Some(z) = frontier.pop() {
            for t in &d.side_pairings {
                for m in [t, &t.inverse()] {
                    let w = m.apply(z);
                    if d.vertices.iter().any(|v| (v.z() - w).norm() < 1e-9)
                        && !reached.iter().any(|r| (*r - w).norm() < 1e-9)
                    {
                        reached.push(w);
                        frontier.push(w);
                    }
                }
            }
        }
        assert_eq!(reached.len(), 12, "vertex orbit is not transitive");
    }

    #[test]
    fn dodecagon_contains_origin_and_not_far_points() {
        let d = genus3_dodecagon();
        assert!(d.contains(Complex64::new(0.0, 0.0), 1e-9));
        assert!(!d.contains(Complex64::new(0.999, 0.0), 1e-9));
    }

    #[test]
    fn fold_into_brings_points_home() {
        let d = genus3_dodecagon();
        let t = d.side_pairings[2];
        let z = Complex64::new(0.11, -0.07);
        let moved = t.apply(t.apply(z));
        let folded = d.fold_into(moved);
        assert!(d.contains(folded, -1e-9));
    }
}
