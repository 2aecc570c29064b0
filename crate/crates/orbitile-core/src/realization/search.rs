//! Orbit enumeration over the triangle-group vertices and the tuple search
//! used to build the realization catalog: candidate rotation centers are
//! vertices of the base triangulation inside the genus-3 cell, and tuples
//! are accepted when the product relation closes, the decoration polygon is
//! embedded with the expected Gauss-Bonnet area, and all centers stay in
//! the cell.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use super::{BaseVertex, CenterSpec, Dodecagon, TriangleGroup};
use crate::hyperbolic::{distance, interior_angle, Isometry, IsometryClass, Point};
use crate::tol;

/// A vertex of the triangulation: base corner image under a reflection word.
#[derive(Debug, Clone)]
pub struct OrbitPoint {
    pub z: Complex64,
    pub vertex: BaseVertex,
    /// Rotation order of the vertex stabilizer.
    pub order: u32,
    /// Reflection word (leftmost applies last).
    pub word: Vec<u8>,
}

fn point_key(z: Complex64) -> (i64, i64) {
    ((z.re / 1e-7).round() as i64, (z.im / 1e-7).round() as i64)
}

/// Breadth-first enumeration of the corner orbit out to hyperbolic radius
/// `radius` from the origin (with word depth capped at `max_depth`).
pub fn vertex_orbit(frame: &TriangleGroup, max_depth: usize, radius: f64) -> Vec<OrbitPoint> {
    let euclid_cap = (radius / 2.0).tanh();
    let mut seen: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut points: Vec<OrbitPoint> = Vec::new();
    for (i, corner) in frame.corners.iter().enumerate() {
        let vertex = BaseVertex::from_index(i).expect("three corners");
        let op = OrbitPoint {
            z: corner.z(),
            vertex,
            order: vertex.max_order(),
            word: Vec::new(),
        };
        seen.insert(point_key(op.z), points.len());
        points.push(op);
    }
    let mut frontier: Vec<usize> = (0..points.len()).collect();
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for &pi in &frontier {
            let (z, vertex, word) = {
                let p = &points[pi];
                (p.z, p.vertex, p.word.clone())
            };
            for (ri, refl) in frame.reflections.iter().enumerate() {
                let w = refl.apply(z);
                if w.norm() > euclid_cap {
                    continue;
                }
                let key = point_key(w);
                if seen.contains_key(&key) {
                    continue;
                }
                let mut new_word = Vec::with_capacity(word.len() + 1);
                new_word.push(ri as u8);
                new_word.extend_from_slice(&word);
                seen.insert(key, points.len());
                next.push(points.len());
                points.push(OrbitPoint {
                    z: w,
                    vertex,
                    order: vertex.max_order(),
                    word: new_word,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    points
}

/// A tuple found by the search, with everything needed to freeze a catalog
/// entry and to tell realizations apart.
#[derive(Debug, Clone)]
pub struct FoundTuple {
    pub centers: Vec<CenterSpec>,
    pub points: Vec<Complex64>,
    pub circumference: f64,
    pub polygon_area: f64,
    /// Conjugation-invariant class key (normalized quantized configuration).
    pub signature_key: Vec<i64>,
    /// Conjugacy-class fingerprint of the generated group: sorted quantized
    /// absolute traces of short products.
    pub group_fingerprint: Vec<i64>,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchParams {
    /// Orbit enumeration depth.
    pub max_depth: usize,
    /// Hyperbolic radius for candidate centers.
    pub radius: f64,
    /// Upper bound for each decoration edge length.
    pub max_edge: f64,
    /// Cap on the number of tuples kept.
    pub max_results: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            max_depth: 26,
            radius: 3.6,
            max_edge: 2.6,
            max_results: 64,
        }
    }
}

fn expected_polygon_area(orders: &[u32]) -> f64 {
    // Half of -2πχ for the stellate symbol with these cone orders.
    let mut chi = 2.0;
    for &a in orders {
        chi -= 1.0 - 1.0 / a as f64;
    }
    -PI * chi
}

/// Searches for ordered tuples of rotations (counterclockwise, primitive)
/// about triangulation vertices inside the cell whose product is ±identity
/// and whose decoration polygon is an embedded Coxeter half-domain.
pub fn find_stellate_tuples(
    frame: &TriangleGroup,
    cell: &Dodecagon,
    orders: &[u32],
    params: &SearchParams,
) -> Vec<FoundTuple> {
    let n = orders.len();
    assert!(n >= 3, "stellate symbols have at least 3 cone points");
    let orbit = vertex_orbit(frame, params.max_depth, params.radius);
    let inside: Vec<usize> = (0..orbit.len())
        .filter(|&i| cell.contains(orbit[i].z, -1e-9))
        .collect();

    // Candidate centers per slot, rotations, and a lookup for closing the
    // final slot from its matrix.
    let mut by_key: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for &i in &inside {
        by_key.insert(point_key(orbit[i].z), i);
    }
    let candidates: Vec<Vec<usize>> = orders
        .iter()
        .map(|&a| {
            inside
                .iter()
                .copied()
                .filter(|&i| orbit[i].order % a == 0)
                .collect()
        })
        .collect();

    // Adjacency by hyperbolic distance for the chain pruning.
    let within = |i: usize, j: usize| -> bool {
        let p = Point::new(orbit[i].z).expect("orbit points are inside");
        let q = Point::new(orbit[j].z).expect("orbit points are inside");
        distance(p, q) <= params.max_edge
    };

    let rotations: BTreeMap<(usize, u32), Isometry> = {
        let mut m = BTreeMap::new();
        for &i in &inside {
            let p = Point::new(orbit[i].z).expect("inside the disc");
            for &a in orders {
                if orbit[i].order % a == 0 {
                    m.insert(
                        (i, a),
                        Isometry::rotation_about(p, a).expect("order at least 2"),
                    );
                }
            }
        }
        m
    };

    let expected_area = expected_polygon_area(orders);
    let mut found: Vec<FoundTuple> = Vec::new();
    let mut seen_classes: Vec<Vec<i64>> = Vec::new();

    // Depth-first over the first n-1 slots; the last rotation is solved from
    // the product relation and looked up among the candidates.
    let mut slots: Vec<usize> = Vec::with_capacity(n);
    let mut partials: Vec<Isometry> = alloc::vec![Isometry::identity()];

    struct Ctx<'a> {
        orbit: &'a [OrbitPoint],
        candidates: &'a [Vec<usize>],
        rotations: &'a BTreeMap<(usize, u32), Isometry>,
        by_key: &'a BTreeMap<(i64, i64), usize>,
        orders: &'a [u32],
        expected_area: f64,
        params: &'a SearchParams,
    }

    fn close_tuple(
        ctx: &Ctx<'_>,
        slots: &[usize],
        partial: &Isometry,
        found: &mut Vec<FoundTuple>,
        seen_classes: &mut Vec<Vec<i64>>,
        within: &dyn Fn(usize, usize) -> bool,
    ) {
        let n = ctx.orders.len();
        let last_order = ctx.orders[n - 1];
        let m_last = partial.inverse();
        let fixed = match m_last.classify() {
            IsometryClass::Elliptic { fixed_point, .. } => fixed_point,
            _ => return,
        };
        let key = point_key(fixed.z());
        let Some(&pi) = ctx.by_key.get(&key) else {
            return;
        };
        if ctx.orbit[pi].order % last_order != 0 {
            return;
        }
        if slots.contains(&pi) {
            return;
        }
        if !within(slots[n - 2], pi) || !within(pi, slots[0]) {
            return;
        }
        let Some(expected) = ctx.rotations.get(&(pi, last_order)) else {
            return;
        };
        if m_last.dist_up_to_sign(expected) > tol::VERIFY {
            return;
        }

        let mut all = slots.to_vec();
        all.push(pi);
        let points: Vec<Complex64> = all.iter().map(|&i| ctx.orbit[i].z).collect();
        let pts: Vec<Point> = points
            .iter()
            .map(|&z| Point::new(z).expect("inside"))
            .collect();

        // Embedded convex decoration with the Gauss-Bonnet area of a
        // Coxeter half-domain, traversed counterclockwise.
        let mut angle_sum = 0.0;
        for i in 0..n {
            let v = pts[i];
            let u = pts[(i + n - 1) % n];
            let w = pts[(i + 1) % n];
            match interior_angle(v, u, w) {
                Ok(a) if a > 1e-9 && a < PI - 1e-9 => angle_sum += a,
                _ => return,
            }
        }
        let area = (n as f64 - 2.0) * PI - angle_sum;
        if (area - ctx.expected_area).abs() > tol::AREA {
            return;
        }
        let shoelace: f64 = (0..n)
            .map(|i| {
                let a = points[i];
                let b = points[(i + 1) % n];
                a.re * b.im - a.im * b.re
            })
            .sum();
        if shoelace <= 0.0 {
            return;
        }

        let orders_vec: Vec<u32> = ctx.orders.to_vec();
        let Ok(sig) = crate::enumeration::signature_of_points(&points, &orders_vec) else {
            return;
        };
        let sig_key = sig.coarse_key().to_vec();
        if seen_classes.contains(&sig_key) {
            return;
        }
        seen_classes.push(sig_key.clone());

        let mut circumference = 0.0;
        for i in 0..n {
            circumference += distance(pts[i], pts[(i + 1) % n]);
        }
        let gens: Vec<Isometry> = all
            .iter()
            .zip(ctx.orders)
            .map(|(&i, &a)| *ctx.rotations.get(&(i, a)).expect("candidate rotation"))
            .collect();
        let fingerprint = group_fingerprint(&gens);
        let centers = all
            .iter()
            .zip(ctx.orders)
            .map(|(&i, &a)| CenterSpec {
                vertex: ctx.orbit[i].vertex,
                word: ctx.orbit[i].word.clone(),
                order: a,
            })
            .collect();
        found.push(FoundTuple {
            centers,
            points,
            circumference,
            polygon_area: area,
            signature_key: sig_key,
            group_fingerprint: fingerprint,
        });
        let _ = ctx.params;
    }

    fn extend(
        ctx: &Ctx<'_>,
        slots: &mut Vec<usize>,
        partials: &mut Vec<Isometry>,
        found: &mut Vec<FoundTuple>,
        seen_classes: &mut Vec<Vec<i64>>,
        within: &dyn Fn(usize, usize) -> bool,
    ) {
        let n = ctx.orders.len();
        let depth = slots.len();
        if depth == n - 1 {
            close_tuple(ctx, slots, partials.last().expect("partial"), found, seen_classes, within);
            return;
        }
        for &cand in &ctx.candidates[depth] {
            if slots.contains(&cand) {
                continue;
            }
            if let Some(&prev) = slots.last() {
                if !within(prev, cand) {
                    continue;
                }
            }
            let rot = ctx.rotations.get(&(cand, ctx.orders[depth])).expect("rotation");
            slots.push(cand);
            partials.push(partials.last().expect("partial").compose(rot));
            extend(ctx, slots, partials, found, seen_classes, within);
            slots.pop();
            partials.pop();
            if found.len() >= ctx.params.max_results * 8 {
                return;
            }
        }
    }

    let ctx = Ctx {
        orbit: &orbit,
        candidates: &candidates,
        rotations: &rotations,
        by_key: &by_key,
        orders,
        expected_area,
        params,
    };
    extend(
        &ctx,
        &mut slots,
        &mut partials,
        &mut found,
        &mut seen_classes,
        &within,
    );

    // Minimal circumference first; ties broken by the quantized coordinates.
    found.sort_by(|a, b| {
        a.circumference
            .partial_cmp(&b.circumference)
            .expect("finite lengths")
            .then_with(|| a.signature_key.cmp(&b.signature_key))
    });
    found.truncate(params.max_results);
    found
}

/// Conjugation-invariant fingerprint of the generated group: the sorted
/// multiset of quantized |traces| over products of up to three generators.
pub fn group_fingerprint(gens: &[Isometry]) -> Vec<i64> {
    let mut elements: Vec<Isometry> = alloc::vec![Isometry::identity()];
    let mut keys: Vec<(i64, i64, i64, i64)> = Vec::new();
    let canon_key = |m: &Isometry| {
        let c = m.canonical();
        (
            (c.a().re / 1e-7).round() as i64,
            (c.a().im / 1e-7).round() as i64,
            (c.b().re / 1e-7).round() as i64,
            (c.b().im / 1e-7).round() as i64,
        )
    };
    keys.push(canon_key(&elements[0]));
    let mut frontier = elements.clone();
    for _ in 0..3 {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                for h in [g, &g.inverse()] {
                    let w = m.compose(h);
                    let k = canon_key(&w);
                    if !keys.contains(&k) {
                        keys.push(k);
                        next.push(w);
                        elements.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut traces: Vec<i64> = elements
        .iter()
        .map(|m| (m.trace().abs() / tol::SIG_QUANTUM).round() as i64)
        .collect();
    traces.sort_unstable();
    traces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::base_frame;

    #[test]
    fn orbit_contains_the_base_corners() {
        let frame = base_frame();
        let orbit = vertex_orbit(&frame, 6, 2.0);
        assert!(orbit.len() > 20);
        for (i, c) in frame.corners.iter().enumerate() {
            assert!(orbit
                .iter()
                .any(|p| (p.z - c.z()).norm() < 1e-12
                    && p.vertex.index() == i
                    && p.word.is_empty()));
        }
    }

    #[test]
    fn orbit_words_resolve_to_their_points() {
        let frame = base_frame();
        let orbit = vertex_orbit(&frame, 8, 2.5);
        for p in orbit.iter().step_by(7) {
            let spec = CenterSpec {
                vertex: p.vertex,
                word: p.word.clone(),
                order: 2,
            };
            let resolved = spec.resolve(&frame).unwrap();
            assert!((resolved.z() - p.z).norm() < 1e-12);
        }
    }
}
