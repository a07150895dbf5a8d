//! Planar primitives: points, disks, circle–circle relations, the area of a union of
//! disks via boundary arcs, triangle metrics and gauge norms of symmetric polygons.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, EPS_GEOM};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Self {
        Point::new(libm::cos(theta), libm::sin(theta))
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    /// Polar angle in `(-π, π]`.
    pub fn angle(self) -> f64 {
        libm::atan2(self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// An open disk with positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point, radius: f64) -> Result<Self, Error> {
        if !center.is_finite() {
            return Err(Error::NonFiniteCoordinate);
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Disk { center, radius })
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    /// `|p − c| < r − eps`.
    pub fn contains_open(&self, p: Point, eps: f64) -> bool {
        self.center.distance(p) < self.radius - eps
    }

    /// `|p − c| ≤ r + eps`.
    pub fn contains_closed(&self, p: Point, eps: f64) -> bool {
        self.center.distance(p) <= self.radius + eps
    }

    pub fn point_at(&self, theta: f64) -> Point {
        self.center + Point::polar(theta) * self.radius
    }
}

/// A counterclockwise arc of directions starting at `start` and sweeping `sweep` radians.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AngleInterval {
    pub start: f64,
    pub sweep: f64,
}

impl AngleInterval {
    pub const FULL: AngleInterval = AngleInterval { start: 0.0, sweep: TAU };

    pub fn end(&self) -> f64 {
        self.start + self.sweep
    }

    pub fn is_full(&self) -> bool {
        self.sweep >= TAU
    }

    /// Whether direction `theta` lies in the closed arc.
    pub fn contains(&self, theta: f64) -> bool {
        if self.is_full() {
            return true;
        }
        normalize_angle(theta - self.start) <= self.sweep
    }
}

/// Maps an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let r = theta - TAU * libm::floor(theta / TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// How two boundary circles meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleRelation {
    Disjoint,
    ExternallyTangent(Point),
    /// The two boundary intersection points; the counterclockwise arc of the first
    /// circle from the first point to the second lies outside the second disk.
    Digon(Point, Point),
    InternallyTangent(Point),
    Contained,
}

/// Classifies the relative position of two disks with tolerance `eps` on the center distance.
pub fn circle_relation(d1: &Disk, d2: &Disk, eps: f64) -> CircleRelation {
    let delta = d2.center - d1.center;
    let d = delta.norm();
    let (r1, r2) = (d1.radius, d2.radius);
    let sum = r1 + r2;
    let diff = (r1 - r2).abs();

    if d > sum + eps {
        return CircleRelation::Disjoint;
    }
    if d >= sum - eps {
        return CircleRelation::ExternallyTangent(d1.center + delta * (r1 / sum));
    }
    if d < diff - eps || d <= eps {
        return CircleRelation::Contained;
    }
    if d <= diff + eps {
        let u = delta * (1.0 / d);
        let p = if r1 >= r2 { d1.center + u * r1 } else { d1.center - u * r1 };
        return CircleRelation::InternallyTangent(p);
    }
    let u = delta * (1.0 / d);
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h = libm::sqrt((r1 * r1 - a * a).max(0.0));
    let base = d1.center + u * a;
    let w = u.perp();
    CircleRelation::Digon(base + w * h, base - w * h)
}

/// Area of a union of disks together with its boundary, split by disk.
#[derive(Debug, Clone, PartialEq)]
pub struct UnionArea {
    pub area: f64,
    /// For each input disk, the maximal arcs of its boundary lying in no other open disk.
    pub boundary: Vec<Vec<AngleInterval>>,
}

/// Area of `⋃ disks` by integrating over the uncovered boundary arcs (Green's theorem).
pub fn union_area(disks: &[Disk]) -> Result<UnionArea, Error> {
    if disks.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let index = crate::index::DiskIndex::new(disks);
    let boundary: Vec<Vec<AngleInterval>> =
        (0..disks.len()).map(|i| uncovered_arcs(disks, &index, i)).collect();

    // Integrate relative to the centroid of the centers to limit cancellation.
    let n = disks.len() as f64;
    let origin = disks.iter().fold(Point::ORIGIN, |acc, d| acc + d.center) * (1.0 / n);
    let mut area = 0.0;
    for (disk, arcs) in disks.iter().zip(&boundary) {
        let c = disk.center - origin;
        let r = disk.radius;
        for arc in arcs {
            area += arc_green_term(c, r, arc);
        }
    }
    Ok(UnionArea { area, boundary })
}

/// Contribution `½∮(x dy − y dx)` of a counterclockwise arc of the circle `(c, r)`.
pub(crate) fn arc_green_term(c: Point, r: f64, arc: &AngleInterval) -> f64 {
    let (s0, c0) = libm::sincos(arc.start);
    let (s1, c1) = libm::sincos(arc.end());
    0.5 * (r * r * arc.sweep + c.x * r * (s1 - s0) - c.y * r * (c1 - c0))
}

fn uncovered_arcs(disks: &[Disk], index: &crate::index::DiskIndex, i: usize) -> Vec<AngleInterval> {
    let di = disks[i];
    let mut covered: Vec<(f64, f64)> = Vec::new();
    let mut fully_covered = false;
    index.for_each_near(di.center, di.radius + index.max_radius() + EPS_GEOM, |j| {
        if j == i || fully_covered {
            return;
        }
        let dj = disks[j];
        match circle_relation(&di, &dj, EPS_GEOM) {
            CircleRelation::Disjoint | CircleRelation::ExternallyTangent(_) => {}
            CircleRelation::Contained | CircleRelation::InternallyTangent(_) => {
                let same = (dj.radius - di.radius).abs() <= EPS_GEOM;
                if (same && j < i) || (!same && dj.radius > di.radius) {
                    fully_covered = true;
                }
            }
            CircleRelation::Digon(..) => {
                let delta = dj.center - di.center;
                let d = delta.norm();
                let cos_half =
                    (d * d + di.radius * di.radius - dj.radius * dj.radius) / (2.0 * d * di.radius);
                let half = libm::acos(cos_half.clamp(-1.0, 1.0));
                let start = normalize_angle(delta.angle() - half);
                covered.push((start, start + 2.0 * half));
            }
        }
    });
    if fully_covered {
        return Vec::new();
    }
    complement_arcs(&covered, EPS_GEOM / di.radius)
}

/// Complement in the circle of a set of covered arcs given as `(start, end)` with
/// `start ∈ [0, 2π)`. Gaps shorter than `merge_tol` are closed.
fn complement_arcs(covered: &[(f64, f64)], merge_tol: f64) -> Vec<AngleInterval> {
    if covered.is_empty() {
        return alloc::vec![AngleInterval::FULL];
    }
    // Split arcs wrapping past 2π.
    let mut pieces: Vec<(f64, f64)> = Vec::with_capacity(covered.len() + 2);
    for &(s, e) in covered.iter() {
        if e > TAU {
            pieces.push((s, TAU));
            pieces.push((0.0, e - TAU));
        } else {
            pieces.push((s, e));
        }
    }
    pieces.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pieces.len());
    for (s, e) in pieces {
        match merged.last_mut() {
            Some(last) if s <= last.1 + merge_tol => last.1 = last.1.max(e),
            _ => merged.push((s, e)),
        }
    }

    let mut gaps: Vec<(f64, f64)> = Vec::new();
    for w in merged.windows(2) {
        gaps.push((w[0].1, w[1].0));
    }
    // Wrap-around gap between the last covered end and the first covered start.
    let first = merged[0];
    let last = merged[merged.len() - 1];
    let wrap = (last.1, first.0 + TAU);

    let mut arcs: Vec<AngleInterval> = Vec::new();
    if wrap.1 - wrap.0 > merge_tol {
        arcs.push(AngleInterval { start: normalize_angle(wrap.0), sweep: wrap.1 - wrap.0 });
    }
    for (s, e) in gaps {
        if e - s > merge_tol {
            arcs.push(AngleInterval { start: s, sweep: e - s });
        }
    }
    arcs.sort_by(|a, b| a.start.total_cmp(&b.start));
    arcs
}

/// An origin-symmetric convex polygon used as the unit ball of a norm.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricGauge {
    vertices: Vec<Point>,
}

impl SymmetricGauge {
    /// Vertices must be counterclockwise, strictly convex and satisfy `v[k + n/2] = −v[k]`.
    pub fn new(vertices: Vec<Point>) -> Result<Self, Error> {
        let n = vertices.len();
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::InvalidGauge("need an even number of at least 4 vertices"));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteCoordinate);
        }
        let scale = vertices.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return Err(Error::InvalidGauge("all vertices at the origin"));
        }
        let half = n / 2;
        for k in 0..half {
            if (vertices[k] + vertices[k + half]).norm() > 1e-9 * scale {
                return Err(Error::InvalidGauge("vertices are not antipodally symmetric"));
            }
        }
        for k in 0..n {
            let a = vertices[k];
            let b = vertices[(k + 1) % n];
            let c = vertices[(k + 2) % n];
            if (b - a).cross(c - b) <= 1e-12 * scale * scale {
                return Err(Error::InvalidGauge("vertices are not strictly convex and counterclockwise"));
            }
        }
        Ok(SymmetricGauge { vertices })
    }

    /// The square `[−h, h]²`.
    pub fn square(half_side: f64) -> Self {
        let h = half_side;
        SymmetricGauge {
            vertices: alloc::vec![
                Point::new(h, -h),
                Point::new(h, h),
                Point::new(-h, h),
                Point::new(-h, -h),
            ],
        }
    }

    /// Regular `2m`-gon with the given circumradius, first vertex at angle `phase`.
    pub fn regular(half_count: usize, circumradius: f64, phase: f64) -> Result<Self, Error> {
        let n = 2 * half_count;
        let vertices = (0..n)
            .map(|k| Point::polar(phase + TAU * k as f64 / n as f64) * circumradius)
            .collect();
        SymmetricGauge::new(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        polygon_area(&self.vertices)
    }

    /// `min{t ≥ 0 : v ∈ tK}`.
    pub fn norm(&self, v: Point) -> f64 {
        let n = self.vertices.len();
        let mut best: f64 = 0.0;
        for k in 0..n {
            let a = self.vertices[k];
            let edge = self.vertices[(k + 1) % n] - a;
            // Outward normal of a counterclockwise edge.
            let normal = Point::new(edge.y, -edge.x);
            best = best.max(normal.dot(v) / normal.dot(a));
        }
        best
    }
}

/// Gauge norm of `v` with unit ball `k`.
pub fn gauge_norm(k: &SymmetricGauge, v: Point) -> f64 {
    k.norm(v)
}

/// Unsigned shoelace area.
pub fn polygon_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut twice = 0.0;
    for k in 0..n {
        twice += vertices[k].cross(vertices[(k + 1) % n]);
    }
    0.5 * twice.abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub const fn new(a: Point, b: Point, c: Point) -> Self {
        Triangle { a, b, c }
    }

    /// Twice the signed area (positive when counterclockwise).
    pub fn signed_area2(&self) -> f64 {
        (self.b - self.a).cross(self.c - self.a)
    }

    pub fn metrics(&self) -> TriangleMetrics {
        triangle_metrics(self)
    }

    /// Whether `p` lies in the closed triangle, with slack `eps` on the edge distances.
    pub fn contains(&self, p: Point, eps: f64) -> bool {
        let s = self.signed_area2().signum();
        let edges = [(self.a, self.b), (self.b, self.c), (self.c, self.a)];
        edges.iter().all(|&(u, v)| {
            let e = v - u;
            let len = e.norm();
            len == 0.0 || s * e.cross(p - u) / len >= -eps
        })
    }

    /// Maps `(u, v) ∈ [0,1]²` onto the triangle by folding the unit square.
    pub fn fold_point(&self, mut u: f64, mut v: f64) -> Point {
        if u + v > 1.0 {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        self.a + (self.b - self.a) * u + (self.c - self.a) * v
    }
}

/// Area and interior angles of a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleMetrics {
    pub area: f64,
    /// Angles at `a`, `b`, `c`.
    pub angles: [f64; 3],
    pub degenerate: bool,
}

pub fn triangle_metrics(t: &Triangle) -> TriangleMetrics {
    fn angle_at(apex: Point, p: Point, q: Point) -> f64 {
        let u = p - apex;
        let v = q - apex;
        if u.norm_sq() == 0.0 || v.norm_sq() == 0.0 {
            return 0.0;
        }
        libm::atan2(u.cross(v).abs(), u.dot(v))
    }
    let twice = t.signed_area2().abs();
    let longest = (t.b - t.a).norm_sq().max((t.c - t.b).norm_sq()).max((t.a - t.c).norm_sq());
    let degenerate = longest == 0.0 || twice <= 1e-12 * longest;
    TriangleMetrics {
        area: if degenerate { 0.0 } else { 0.5 * twice },
        angles: [angle_at(t.a, t.b, t.c), angle_at(t.b, t.c, t.a), angle_at(t.c, t.a, t.b)],
        degenerate,
    }
}

/// Outcome of testing whether three closed disks cover a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coverage {
    pub covered: bool,
    pub witness: Option<Point>,
}

const KRONECKER_A1: f64 = 0.754_877_666_246_692_7;
const KRONECKER_A2: f64 = 0.569_840_290_998_053_2;

/// Tests whether `triangle` lies in the union of the closed `disks`, by checking
/// `samples` low-discrepancy points plus the vertices, the circumcenter and every
/// pairwise boundary intersection inside the triangle.
pub fn closed_union_covers_triangle(triangle: &Triangle, disks: &[Disk], samples: usize) -> Coverage {
    let covered = |p: Point| disks.iter().any(|d| d.contains_closed(p, EPS_GEOM));

    let mut witnesses: Vec<Point> = alloc::vec![triangle.a, triangle.b, triangle.c];
    if let Some(cc) = circumcenter(triangle) {
        if triangle.contains(cc, 0.0) {
            witnesses.push(cc);
        }
    }
    for u in 0..disks.len() {
        for v in u + 1..disks.len() {
            let points = match circle_relation(&disks[u], &disks[v], 0.0) {
                CircleRelation::Digon(p, q) => [p, q],
                CircleRelation::InternallyTangent(p) | CircleRelation::ExternallyTangent(p) => [p, p],
                _ => continue,
            };
            witnesses.extend(points.into_iter().filter(|&w| triangle.contains(w, 0.0)));
        }
    }
    if let Some(&w) = witnesses.iter().find(|&&w| !covered(w)) {
        return Coverage { covered: false, witness: Some(w) };
    }
    let (mut u, mut v) = (0.5, 0.5);
    for _ in 0..samples {
        u += KRONECKER_A1;
        v += KRONECKER_A2;
        u -= libm::floor(u);
        v -= libm::floor(v);
        let p = triangle.fold_point(u, v);
        if !covered(p) {
            return Coverage { covered: false, witness: Some(p) };
        }
    }
    Coverage { covered: true, witness: None }
}

pub fn circumcenter(t: &Triangle) -> Option<Point> {
    let b = t.b - t.a;
    let c = t.c - t.a;
    let d = 2.0 * b.cross(c);
    if d.abs() <= 1e-300 {
        return None;
    }
    let bb = b.norm_sq();
    let cc = c.norm_sq();
    Some(t.a + Point::new(c.y * bb - b.y * cc, b.x * cc - c.x * bb) * (1.0 / d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(x: f64, y: f64, r: f64) -> Disk {
        Disk::new(Point::new(x, y), r).unwrap()
    }

    #[test]
    fn digon_vertices_are_ordered_with_uncovered_arc_between() {
        let rel = circle_relation(&disk(0.0, 0.0, 1.0), &disk(1.5, 0.0, 1.0), 1e-9);
        let CircleRelation::Digon(v1, v2) = rel else { panic!("{rel:?}") };
        assert!((v1.x - 0.75).abs() < 1e-12 && (v1.y - 0.661_437_827_8).abs() < 1e-9);
        assert!((v2.x - 0.75).abs() < 1e-12 && (v2.y + 0.661_437_827_8).abs() < 1e-9);
    }

    #[test]
    fn tangent_and_contained_cases() {
        assert_eq!(
            circle_relation(&disk(0.0, 0.0, 1.0), &disk(2.0, 0.0, 1.0), 1e-9),
            CircleRelation::ExternallyTangent(Point::new(1.0, 0.0))
        );
        assert_eq!(
            circle_relation(&disk(0.0, 0.0, 1.0), &disk(0.5, 0.0, 3.0), 1e-9),
            CircleRelation::Contained
        );
        assert_eq!(
            circle_relation(&disk(0.0, 0.0, 1.0), &disk(5.0, 0.0, 1.0), 1e-9),
            CircleRelation::Disjoint
        );
        assert_eq!(
            circle_relation(&disk(0.0, 0.0, 2.0), &disk(1.0, 0.0, 1.0), 1e-9),
            CircleRelation::InternallyTangent(Point::new(2.0, 0.0))
        );
    }

    #[test]
    fn union_of_single_and_tangent_disks() {
        let u = union_area(&[disk(0.0, 0.0, 1.0)]).unwrap();
        assert!((u.area - PI).abs() < 1e-14);
        assert_eq!(u.boundary, alloc::vec![alloc::vec![AngleInterval::FULL]]);

        let u = union_area(&[disk(0.0, 0.0, 1.0), disk(2.0, 0.0, 1.0)]).unwrap();
        assert!((u.area - 2.0 * PI).abs() < 1e-12);
        assert_eq!(union_area(&[]), Err(Error::EmptyFamily));
    }

    #[test]
    fn contained_disk_has_no_boundary() {
        let u = union_area(&[disk(0.0, 0.0, 1.0), disk(0.2, 0.0, 3.0)]).unwrap();
        assert!(u.boundary[0].is_empty());
        assert!((u.area - 9.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn complement_handles_wraparound() {
        let covered = alloc::vec![(TAU - 0.5, TAU + 0.5)];
        let arcs = complement_arcs(&covered, 1e-12);
        assert_eq!(arcs.len(), 1);
        assert!((arcs[0].start - 0.5).abs() < 1e-15);
        assert!((arcs[0].sweep - (TAU - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn gauge_norm_square_and_origin() {
        let k = SymmetricGauge::square(1.0);
        assert_eq!(gauge_norm(&k, Point::new(3.0, 1.0)), 3.0);
        assert_eq!(gauge_norm(&k, Point::ORIGIN), 0.0);
        assert!((k.area() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn gauge_rejects_asymmetric_or_clockwise() {
        let pts = alloc::vec![
            Point::new(1.0, 0.0),
            Point::new(0.0, 2.0),
            Point::new(-1.0, 0.0),
            Point::new(0.0, -1.0),
        ];
        assert!(SymmetricGauge::new(pts).is_err());
        let cw = alloc::vec![
            Point::new(1.0, 1.0),
            Point::new(1.0, -1.0),
            Point::new(-1.0, -1.0),
            Point::new(-1.0, 1.0),
        ];
        assert!(SymmetricGauge::new(cw).is_err());
    }

    #[test]
    fn triangle_metrics_cases() {
        let m = triangle_metrics(&Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ));
        assert!((m.area - 0.5).abs() < 1e-15);
        assert!((m.angles[0] - PI / 2.0).abs() < 1e-15);
        assert!((m.angles[1] - PI / 4.0).abs() < 1e-15);
        assert!((m.angles[2] - PI / 4.0).abs() < 1e-15);
        assert!(!m.degenerate);

        let s = 2.5;
        let h = libm::sqrt(3.0) / 2.0 * s;
        let m = triangle_metrics(&Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(s, 0.0),
            Point::new(s / 2.0, h),
        ));
        assert!((m.area - libm::sqrt(3.0) * s * s / 4.0).abs() < 1e-14);
        for a in m.angles {
            assert!((a - PI / 3.0).abs() < 1e-14);
        }

        let m = triangle_metrics(&Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(3.0, 3.0),
        ));
        assert!(m.degenerate);
        assert_eq!(m.area, 0.0);
    }

    #[test]
    fn circumcenter_of_right_triangle_is_hypotenuse_midpoint() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(0.0, 2.0));
        let c = circumcenter(&t).unwrap();
        assert!((c.x - 1.0).abs() < 1e-15 && (c.y - 1.0).abs() < 1e-15);
    }
}
