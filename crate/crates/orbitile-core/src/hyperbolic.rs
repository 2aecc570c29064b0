//! Isometries of the hyperbolic plane in the Poincaré disc model.
//!
//! Orientation-preserving maps are stored as unit-determinant pairs `(a, b)`
//! acting by `z -> (a z + b) / (conj(b) z + conj(a))`; orientation-reversing
//! maps apply the same matrix to `conj(z)`. The pair is only defined up to a
//! global sign, so comparisons and hashing go through [`Isometry::canonical`].

use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::tol;

/// A point strictly inside the unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    z: Complex64,
}

impl Point {
    pub fn new(z: Complex64) -> Result<Self, GeomError> {
        if z.norm() < 1.0 - tol::DISC_MARGIN {
            Ok(Point { z })
        } else {
            Err(GeomError::OutsideDisc)
        }
    }

    pub fn from_xy(x: f64, y: f64) -> Result<Self, GeomError> {
        Self::new(Complex64::new(x, y))
    }

    pub fn origin() -> Self {
        Point {
            z: Complex64::new(0.0, 0.0),
        }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn x(&self) -> f64 {
        self.z.re
    }

    pub fn y(&self) -> f64 {
        self.z.im
    }
}

impl From<Point> for Complex64 {
    fn from(p: Point) -> Complex64 {
        p.z
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeomError {
    OutsideDisc,
    OrderTooSmall,
    DegenerateGeodesic,
    NotOrthogonal,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::OutsideDisc => write!(f, "point lies outside the open unit disc"),
            GeomError::OrderTooSmall => write!(f, "rotation order must be at least 2"),
            GeomError::DegenerateGeodesic => write!(f, "geodesic endpoints coincide"),
            GeomError::NotOrthogonal => {
                write!(f, "circle is not orthogonal to the unit circle")
            }
        }
    }
}

/// An isometry of the disc, possibly orientation-reversing.
#[derive(Debug, Clone, Copy)]
pub struct Isometry {
    a: Complex64,
    b: Complex64,
    reversing: bool,
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            reversing: false,
        }
    }

    /// Builds an isometry from raw coefficients, renormalizing to unit determinant.
    pub fn from_parts(a: Complex64, b: Complex64, reversing: bool) -> Self {
        let mut m = Isometry { a, b, reversing };
        m.renormalize();
        m
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn is_reversing(&self) -> bool {
        self.reversing
    }

    fn renormalize(&mut self) {
        let det = self.a.norm_sqr() - self.b.norm_sqr();
        debug_assert!(det > 0.0, "disc isometry must have positive determinant");
        let s = det.sqrt();
        if (s - 1.0).abs() > 0.0 {
            self.a /= s;
            self.b /= s;
        }
    }

    /// Determinant drift from 1; stays below [`tol::DETERMINANT`] after renormalization.
    pub fn det_residual(&self) -> f64 {
        (self.a.norm_sqr() - self.b.norm_sqr() - 1.0).abs()
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        let w = if self.reversing { z.conj() } else { z };
        (self.a * w + self.b) / (self.b.conj() * w + self.a.conj())
    }

    pub fn apply_point(&self, p: Point) -> Point {
        let mut z = self.apply(p.z());
        // Guard against rounding pushing an image onto the boundary.
        let n = z.norm();
        if n >= 1.0 - tol::DISC_MARGIN {
            z *= (1.0 - 2.0 * tol::DISC_MARGIN) / n;
        }
        Point { z }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let (oa, ob) = if self.reversing {
            (other.a.conj(), other.b.conj())
        } else {
            (other.a, other.b)
        };
        Isometry::from_parts(
            self.a * oa + self.b * ob.conj(),
            self.a * ob + self.b * oa.conj(),
            self.reversing ^ other.reversing,
        )
    }

    pub fn inverse(&self) -> Isometry {
        if self.reversing {
            Isometry {
                a: self.a,
                b: -self.b.conj(),
                reversing: true,
            }
        } else {
            Isometry {
                a: self.a.conj(),
                b: -self.b,
                reversing: false,
            }
        }
    }

    pub fn pow(&self, k: i32) -> Isometry {
        let base = if k < 0 { self.inverse() } else { *self };
        let mut acc = Isometry::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Resolves the `(a, b) ~ (-a, -b)` sign ambiguity for hashing and comparison.
    pub fn canonical(&self) -> Isometry {
        let eps = 1e-9;
        let flip = if self.a.re > eps {
            false
        } else if self.a.re < -eps {
            true
        } else if self.a.im > eps {
            false
        } else if self.a.im < -eps {
            true
        } else if self.b.re > eps {
            false
        } else if self.b.re < -eps {
            true
        } else {
            self.b.im < 0.0
        };
        if flip {
            Isometry {
                a: -self.a,
                b: -self.b,
                reversing: self.reversing,
            }
        } else {
            *self
        }
    }

    /// Trace of the matrix representative (`2 Re a`), defined up to sign.
    pub fn trace(&self) -> f64 {
        2.0 * self.a.re
    }

    /// Distance to the identity, minimized over the sign ambiguity.
    pub fn identity_residual(&self) -> f64 {
        if self.reversing {
            return f64::infinity();
        }
        let one = Complex64::new(1.0, 0.0);
        let plus = (self.a - one).norm().max(self.b.norm());
        let minus = (self.a + one).norm().max(self.b.norm());
        plus.min(minus)
    }

    pub fn is_identity(&self, eps: f64) -> bool {
        self.identity_residual() <= eps
    }

    /// Max coefficient distance between two isometries, minimized over sign.
    pub fn dist_up_to_sign(&self, other: &Isometry) -> f64 {
        if self.reversing != other.reversing {
            return f64::infinity();
        }
        let plus = (self.a - other.a).norm().max((self.b - other.b).norm());
        let minus = (self.a + other.a).norm().max((self.b + other.b).norm());
        plus.min(minus)
    }

    /// The unique orientation-preserving map sending `p` to the origin
    /// that is a hyperbolic translation along the ray through `p`.
    pub fn translation_to_origin(p: Point) -> Isometry {
        let z = p.z();
        let s = (1.0 - z.norm_sqr()).sqrt();
        Isometry::from_parts(Complex64::new(1.0 / s, 0.0), -z / s, false)
    }

    /// Counterclockwise rotation by `2π / order` about `p`.
    pub fn rotation_about(p: Point, order: u32) -> Result<Isometry, GeomError> {
        if order < 2 {
            return Err(GeomError::OrderTooSmall);
        }
        Ok(Self::rotation_about_by(p, 2.0 * PI / order as f64))
    }

    /// Counterclockwise rotation by `angle` about `p`.
    pub fn rotation_about_by(p: Point, angle: f64) -> Isometry {
        let half = angle / 2.0;
        let rot = Isometry {
            a: Complex64::from_polar(1.0, half),
            b: Complex64::new(0.0, 0.0),
            reversing: false,
        };
        let t = Isometry::translation_to_origin(p);
        t.inverse().compose(&rot).compose(&t)
    }

    /// Reflection in the diameter making angle `theta` with the real axis.
    pub fn reflection_in_diameter(theta: f64) -> Isometry {
        Isometry {
            a: Complex64::from_polar(1.0, theta),
            b: Complex64::new(0.0, 0.0),
            reversing: true,
        }
    }

    /// Inversion in a circle orthogonal to the unit circle.
    pub fn reflection_in_circle(center: Complex64, radius: f64) -> Result<Isometry, GeomError> {
        if (center.norm_sqr() - 1.0 - radius * radius).abs() > 1e-9 * (1.0 + center.norm_sqr()) {
            return Err(GeomError::NotOrthogonal);
        }
        let i = Complex64::new(0.0, 1.0);
        Ok(Isometry::from_parts(i * center / radius, -i / radius, true))
    }

    /// Reflection across the full geodesic containing `seg`.
    pub fn reflection_across(seg: &GeodesicSegment) -> Isometry {
        match seg.arc {
            Arc::Diameter => {
                let d = seg.q.z() - seg.p.z();
                Isometry::reflection_in_diameter(d.arg())
            }
            Arc::Circular { center, radius } => Isometry::reflection_in_circle(center, radius)
                .expect("segment arc is orthogonal by construction"),
        }
    }

    /// Classifies an orientation-preserving isometry.
    ///
    /// Panics on orientation-reversing input.
    pub fn classify(&self) -> IsometryClass {
        assert!(
            !self.reversing,
            "classification applies to orientation-preserving isometries"
        );
        let tr = self.trace().abs();
        if self.is_identity(tol::CLASSIFY) {
            return IsometryClass::Identity;
        }
        if tr < 2.0 - tol::CLASSIFY {
            // Elliptic: finite fixed point inside the disc.
            let fixed = if self.b.norm() < tol::CLASSIFY {
                Complex64::new(0.0, 0.0)
            } else {
                let im_a = self.a.im;
                let root = (1.0 - self.a.re * self.a.re).sqrt();
                let i = Complex64::new(0.0, 1.0);
                let z1 = i * (im_a + root) / self.b.conj();
                let z2 = i * (im_a - root) / self.b.conj();
                if z1.norm() < z2.norm() {
                    z1
                } else {
                    z2
                }
            };
            let p = Point { z: fixed };
            let t = Isometry::translation_to_origin(p);
            let centered = t.compose(self).compose(&t.inverse());
            let mut angle = 2.0 * centered.a.arg();
            if angle < 0.0 {
                angle += 2.0 * PI;
            }
            if angle >= 2.0 * PI {
                angle -= 2.0 * PI;
            }
            IsometryClass::Elliptic {
                fixed_point: p,
                angle,
            }
        } else if tr > 2.0 + tol::CLASSIFY {
            let im_a = self.a.im;
            let root = (self.a.re * self.a.re - 1.0).sqrt();
            let i = Complex64::new(0.0, 1.0);
            let z1 = i * Complex64::new(im_a + root, 0.0) / self.b.conj();
            let z2 = i * Complex64::new(im_a - root, 0.0) / self.b.conj();
            let length = 2.0 * (tr / 2.0).acosh();
            IsometryClass::Hyperbolic {
                axis_endpoints: (z1, z2),
                translation_length: length,
            }
        } else {
            let z = Complex64::new(0.0, self.a.im) / self.b.conj();
            IsometryClass::Parabolic { boundary_point: z }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum IsometryClass {
    Identity,
    Elliptic { fixed_point: Point, angle: f64 },
    Parabolic { boundary_point: Complex64 },
    Hyperbolic {
        axis_endpoints: (Complex64, Complex64),
        translation_length: f64,
    },
}

impl IsometryClass {
    pub fn is_elliptic(&self) -> bool {
        matches!(self, IsometryClass::Elliptic { .. })
    }

    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, IsometryClass::Hyperbolic { .. })
    }
}

/// Hyperbolic distance between two disc points.
pub fn distance(p: Point, q: Point) -> f64 {
    let num = (p.z() - q.z()).norm();
    let den = (Complex64::new(1.0, 0.0) - p.z().conj() * q.z()).norm();
    2.0 * (num / den).atanh()
}

/// The point halfway along the geodesic from `p` to `q`.
pub fn midpoint(p: Point, q: Point) -> Point {
    let t = Isometry::translation_to_origin(p);
    let w = t.apply(q.z());
    let r = w.norm();
    if r == 0.0 {
        return p;
    }
    let half = (r.atanh() / 2.0).tanh();
    t.inverse().apply_point(Point {
        z: w / r * half,
    })
}

/// Carrier of a geodesic segment: a diameter or a circle orthogonal to the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Arc {
    Diameter,
    Circular { center: Complex64, radius: f64 },
}

#[derive(Debug, Clone, Copy)]
pub struct GeodesicSegment {
    pub p: Point,
    pub q: Point,
    pub arc: Arc,
}

impl GeodesicSegment {
    pub fn length(&self) -> f64 {
        distance(self.p, self.q)
    }

    pub fn reversed(&self) -> GeodesicSegment {
        GeodesicSegment {
            p: self.q,
            q: self.p,
            arc: self.arc,
        }
    }

    /// Unit tangent at `at` pointing along the segment toward the other endpoint.
    pub fn tangent_at(&self, at_p: bool) -> Complex64 {
        let (from, to) = if at_p {
            (self.p.z(), self.q.z())
        } else {
            (self.q.z(), self.p.z())
        };
        match self.arc {
            Arc::Diameter => {
                let d = to - from;
                d / d.norm()
            }
            Arc::Circular { center, .. } => {
                let u = from - center;
                let v = to - center;
                let cross = u.re * v.im - u.im * v.re;
                let t = Complex64::new(0.0, 1.0) * u;
                let t = if cross >= 0.0 { t } else { -t };
                t / t.norm()
            }
        }
    }

    /// Point at parameter `s` in `[0, 1]` by arc length along the segment.
    pub fn point_at(&self, s: f64) -> Point {
        let t = Isometry::translation_to_origin(self.p);
        let w = t.apply(self.q.z());
        let r = w.norm();
        if r == 0.0 {
            return self.p;
        }
        let d = (s * r.atanh()).tanh();
        t.inverse().apply_point(Point { z: w / r * d })
    }
}

/// The unique geodesic segment between two distinct points.
pub fn geodesic_between(p: Point, q: Point) -> Result<GeodesicSegment, GeomError> {
    let pz = p.z();
    let qz = q.z();
    if (pz - qz).norm() < 1e-12 {
        return Err(GeomError::DegenerateGeodesic);
    }
    let cross = pz.re * qz.im - pz.im * qz.re;
    if cross.abs() < 1e-12 {
        return Ok(GeodesicSegment {
            p,
            q,
            arc: Arc::Diameter,
        });
    }
    // Orthogonality |c|^2 = 1 + r^2 gives a linear system for the center.
    let rp = pz.norm_sqr() + 1.0;
    let rq = qz.norm_sqr() + 1.0;
    let det = 4.0 * cross;
    let cx = (rp * 2.0 * qz.im - rq * 2.0 * pz.im) / det;
    let cy = (rq * 2.0 * pz.re - rp * 2.0 * qz.re) / det;
    let center = Complex64::new(cx, cy);
    let radius = (center.norm_sqr() - 1.0).sqrt();
    Ok(GeodesicSegment {
        p,
        q,
        arc: Arc::Circular { center, radius },
    })
}

/// Interior angle at `v` between the segments `v -> u` and `v -> w`.
///
/// Assumes the angle is at most π, which holds for the convex polygons
/// measured in this crate.
pub fn interior_angle(v: Point, u: Point, w: Point) -> Result<f64, GeomError> {
    let su = geodesic_between(v, u)?;
    let sw = geodesic_between(v, w)?;
    let tu = su.tangent_at(true);
    let tw = sw.tangent_at(true);
    let dot = (tu.re * tw.re + tu.im * tw.im).clamp(-1.0, 1.0);
    Ok(dot.acos())
}

/// Gauss-Bonnet area of the geodesic polygon with the given vertices,
/// `(n-2)π` minus the interior angle sum.
pub fn polygon_area(vertices: &[Point]) -> Result<f64, GeomError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeomError::DegenerateGeodesic);
    }
    let mut angle_sum = 0.0;
    for i in 0..n {
        let v = vertices[i];
        let u = vertices[(i + n - 1) % n];
        let w = vertices[(i + 1) % n];
        angle_sum += interior_angle(v, u, w)?;
    }
    Ok((n as f64 - 2.0) * PI - angle_sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn pt(x: f64, y: f64) -> Point {
        Point::from_xy(x, y).unwrap()
    }

    fn c(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    #[test]
    fn rotation_about_origin_order_2_negates() {
        let r = Isometry::rotation_about(Point::origin(), 2).unwrap();
        let z = c(0.3, -0.2);
        assert!((r.apply(z) + z).norm() < 1e-14);
        let canon = r.canonical();
        assert!((canon.a - c(0.0, 1.0)).norm() < 1e-14);
        assert!(canon.b.norm() < 1e-14);
    }

    #[test]
    fn rotation_about_origin_order_4_multiplies_by_i() {
        let r = Isometry::rotation_about(Point::origin(), 4).unwrap();
        let z = c(0.5, 0.1);
        assert!((r.apply(z) - z * c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn rotation_order_too_small() {
        assert_eq!(
            Isometry::rotation_about(Point::origin(), 1).unwrap_err(),
            GeomError::OrderTooSmall
        );
    }

    #[test]
    fn conjugated_rotation_has_expected_trace() {
        // Rotation of order 3 at 0.3: |trace| = 2 cos(π/3) = 1.
        let r = Isometry::rotation_about(pt(0.3, 0.0), 3).unwrap();
        assert!((r.trace().abs() - 1.0).abs() < 1e-12);
        assert!(r.pow(3).is_identity(1e-9));
    }

    #[test]
    fn rotation_fixed_point_and_angle_recovered() {
        for (x, y, n) in [(0.3, 0.1, 3), (-0.2, 0.4, 5), (0.0, 0.0, 2), (0.6, -0.3, 7)] {
            let p = pt(x, y);
            let r = Isometry::rotation_about(p, n).unwrap();
            match r.classify() {
                IsometryClass::Elliptic { fixed_point, angle } => {
                    assert!((fixed_point.z() - p.z()).norm() < 1e-9);
                    assert!((angle - 2.0 * PI / n as f64).abs() < 1e-9);
                    assert!((r.trace().abs() - 2.0 * (PI / n as f64).cos()).abs() < 1e-9);
                }
                other => panic!("expected elliptic, got {:?}", other),
            }
        }
    }

    #[test]
    fn classify_identity() {
        assert!(matches!(
            Isometry::identity().classify(),
            IsometryClass::Identity
        ));
    }

    #[test]
    fn two_half_turns_compose_to_translation() {
        let p = pt(0.4, 0.0);
        let r0 = Isometry::rotation_about(Point::origin(), 2).unwrap();
        let r1 = Isometry::rotation_about(p, 2).unwrap();
        let m = r1.compose(&r0);
        match m.classify() {
            IsometryClass::Hyperbolic {
                translation_length, ..
            } => {
                let expected = 2.0 * distance(Point::origin(), p);
                assert!((translation_length - expected).abs() < 1e-9);
                // Independent route: 2 cosh(l/2) = |trace|.
                assert!((2.0 * (translation_length / 2.0).cosh() - m.trace().abs()).abs() < 1e-9);
            }
            other => panic!("expected hyperbolic, got {:?}", other),
        }
    }

    #[test]
    fn hyperbolic_axis_endpoints_on_boundary() {
        let r0 = Isometry::rotation_about(Point::origin(), 2).unwrap();
        let r1 = Isometry::rotation_about(pt(0.4, 0.2), 2).unwrap();
        match r1.compose(&r0).classify() {
            IsometryClass::Hyperbolic { axis_endpoints, .. } => {
                assert!((axis_endpoints.0.norm() - 1.0).abs() < 1e-9);
                assert!((axis_endpoints.1.norm() - 1.0).abs() < 1e-9);
            }
            other => panic!("expected hyperbolic, got {:?}", other),
        }
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(Point::origin(), Point::origin()), 0.0);
        let d = distance(Point::origin(), pt(0.5, 0.0));
        assert!((d - 2.0 * 0.5f64.atanh()).abs() < 1e-15);
        assert!((d - 1.0986122886681098).abs() < 1e-12);
    }

    fn random_isometries() -> Vec<Isometry> {
        // A deterministic grab bag mixing rotations, translations and reflections.
        let mut out = vec![];
        let pts = [pt(0.1, 0.2), pt(-0.4, 0.3), pt(0.25, -0.55), pt(0.0, 0.61)];
        for (i, p) in pts.iter().enumerate() {
            out.push(Isometry::rotation_about(*p, 2 + i as u32).unwrap());
            out.push(Isometry::translation_to_origin(*p));
        }
        out.push(Isometry::reflection_in_diameter(0.7));
        out.push(
            Isometry::reflection_in_circle(c(1.3, 0.4), (1.3f64 * 1.3 + 0.16 - 1.0).sqrt())
                .unwrap(),
        );
        out
    }

    #[test]
    fn distance_is_isometry_invariant() {
        let p = pt(0.3, -0.2);
        let q = pt(-0.1, 0.5);
        let d = distance(p, q);
        for m in random_isometries() {
            let d2 = distance(m.apply_point(p), m.apply_point(q));
            assert!((d - d2).abs() < 1e-11, "invariance failed: {} vs {}", d, d2);
        }
    }

    #[test]
    fn composition_is_associative() {
        let ms = random_isometries();
        for i in 0..ms.len() {
            for j in 0..ms.len() {
                for k in 0..ms.len() {
                    let lhs = ms[i].compose(&ms[j]).compose(&ms[k]);
                    let rhs = ms[i].compose(&ms[j].compose(&ms[k]));
                    assert!(lhs.dist_up_to_sign(&rhs) < 1e-10);
                }
            }
        }
    }

    #[test]
    fn reversing_composes_as_xor() {
        let refl = Isometry::reflection_in_diameter(0.3);
        let rot = Isometry::rotation_about(pt(0.2, 0.1), 3).unwrap();
        assert!(refl.compose(&rot).is_reversing());
        assert!(rot.compose(&refl).is_reversing());
        assert!(!refl.compose(&refl).is_reversing());
        // Product of two reflections is orientation-preserving and here elliptic.
        let refl2 = Isometry::reflection_in_diameter(0.3 + PI / 5.0);
        let prod = refl2.compose(&refl);
        assert!(!prod.is_reversing());
        assert!(prod.classify().is_elliptic());
    }

    #[test]
    fn inverse_roundtrip() {
        for m in random_isometries() {
            let i = m.compose(&m.inverse());
            assert!(i.is_identity(1e-12), "residual {}", i.identity_residual());
            let z = c(0.37, -0.11);
            assert!((m.inverse().apply(m.apply(z)) - z).norm() < 1e-12);
        }
    }

    #[test]
    fn reflections_fix_their_mirror() {
        let s = Isometry::reflection_in_diameter(0.9);
        let on_axis = Complex64::from_polar(0.5, 0.9);
        assert!((s.apply(on_axis) - on_axis).norm() < 1e-14);

        let center = c(1.25, 1.25);
        let radius = (center.norm_sqr() - 1.0).sqrt();
        let s = Isometry::reflection_in_circle(center, radius).unwrap();
        // A point on the circle, inside the disc.
        let seg = geodesic_between(pt(0.5, 0.0), pt(0.0, 0.5)).unwrap();
        let mid = seg.point_at(0.5);
        assert!((s.apply(mid.z()) - mid.z()).norm() < 1e-12);
    }

    #[test]
    fn geodesic_diameter_case() {
        let seg = geodesic_between(pt(-0.5, 0.0), pt(0.5, 0.0)).unwrap();
        assert_eq!(seg.arc, Arc::Diameter);
        let seg = geodesic_between(pt(0.3, 0.3), pt(-0.1, -0.1)).unwrap();
        assert_eq!(seg.arc, Arc::Diameter);
    }

    #[test]
    fn geodesic_arc_case_frozen_example() {
        // Between 0.5 and 0.5i the orthogonal circle has center 1.25 + 1.25i.
        let seg = geodesic_between(pt(0.5, 0.0), pt(0.0, 0.5)).unwrap();
        match seg.arc {
            Arc::Circular { center, radius } => {
                assert!((center - c(1.25, 1.25)).norm() < 1e-12);
                assert!((radius * radius - 2.125).abs() < 1e-12);
                assert!((center.norm_sqr() - 1.0 - radius * radius).abs() < 1e-9);
                for e in [seg.p.z(), seg.q.z()] {
                    assert!(((e - center).norm() - radius).abs() < 1e-9);
                }
            }
            Arc::Diameter => panic!("expected an arc"),
        }
    }

    #[test]
    fn geodesic_swap_gives_same_carrier() {
        let a = geodesic_between(pt(0.5, 0.0), pt(0.0, 0.5)).unwrap();
        let b = geodesic_between(pt(0.0, 0.5), pt(0.5, 0.0)).unwrap();
        assert_eq!(a.arc, b.arc);
    }

    #[test]
    fn geodesic_degenerate_error() {
        let p = pt(0.1, 0.1);
        assert_eq!(
            geodesic_between(p, p).unwrap_err(),
            GeomError::DegenerateGeodesic
        );
    }

    #[test]
    fn constructed_arcs_are_orthogonal() {
        let samples = [
            (pt(0.5, 0.0), pt(0.0, 0.5)),
            (pt(0.9, 0.0), pt(0.0, 0.1)),
            (pt(-0.3, 0.4), pt(0.6, 0.2)),
            (pt(0.05, -0.8), pt(-0.7, -0.1)),
        ];
        for (p, q) in samples {
            if let Arc::Circular { center, radius } = geodesic_between(p, q).unwrap().arc {
                assert!((center.norm_sqr() - 1.0 - radius * radius).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn midpoint_is_equidistant() {
        let p = pt(0.5, 0.1);
        let q = pt(-0.2, 0.4);
        let m = midpoint(p, q);
        assert!((distance(p, m) - distance(m, q)).abs() < 1e-12);
        assert!((distance(p, m) + distance(m, q) - distance(p, q)).abs() < 1e-12);
    }

    #[test]
    fn right_angled_pentagon_has_area_half_pi() {
        // A regular right-angled pentagon: circumradius cosh R = cot(π/5) cot(π/4).
        let ch = (PI / 5.0).tan().recip();
        let r_h = ch.acosh();
        let r_e = (r_h / 2.0).tanh();
        let mut vs = vec![];
        for k in 0..5 {
            let th = 2.0 * PI * k as f64 / 5.0;
            vs.push(pt(r_e * th.cos(), r_e * th.sin()));
        }
        let area = polygon_area(&vs).unwrap();
        assert!((area - PI / 2.0).abs() < 1e-9, "area {}", area);
    }
}
