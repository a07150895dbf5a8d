//! Outer shell, inner shell and core of a μ-arrangement.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::arrangement::{find_digons, is_adjacent, InscribedFamily, MuArrangement};
use crate::geometry::{polygon_area, union_area, AngleInterval, Disk, Point, Triangle};
use crate::EPS_GEOM;

/// Sector of disk `disk` over an uncovered boundary arc of the union.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OuterSector {
    pub disk: usize,
    pub arc: AngleInterval,
    pub area: f64,
}

/// Triangle `[x_i, x_j, q]` with `q` a digon vertex on the union boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ShellTriangle {
    pub i: usize,
    pub j: usize,
    pub q: Point,
    pub area: f64,
}

/// Convex polygon of the centers of the members touched from inside by a maximal
/// inscribed disk.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorePolygon {
    /// Counterclockwise, starting at the smallest index.
    pub vertices: Vec<usize>,
    pub inscribed: Disk,
    pub q: Point,
    pub area: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CoreDefect {
    /// The interior vertex lies in no member containing part of the inscribed family.
    NoContainingMember,
    VertexCount(usize),
    NotConvex,
    /// Central angle at the inscribed center not above π/3.
    NarrowAngle(f64),
    ForeignCenter(usize),
}

/// A candidate core polygon rejected by one of the structural checks.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoreDiagnostic {
    pub i: usize,
    pub j: usize,
    pub q: Point,
    pub vertices: Vec<usize>,
    pub defect: CoreDefect,
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorePolygons {
    pub polygons: Vec<CorePolygon>,
    pub area: f64,
    pub diagnostics: Vec<CoreDiagnostic>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RegionDecomposition {
    pub outer: Vec<OuterSector>,
    pub shell: Vec<ShellTriangle>,
    pub core_polys: Vec<CorePolygon>,
    pub diagnostics: Vec<CoreDiagnostic>,
    pub area_u: f64,
    pub area_o: f64,
    pub area_i: f64,
    /// `area_u − area_o − area_i`.
    pub area_c: f64,
    /// Sum of the core polygon areas; agrees with `area_c` for generic arrangements.
    pub core_polygon_area: f64,
}

pub fn outer_shell(arr: &MuArrangement) -> (Vec<OuterSector>, f64) {
    let union = union_area(arr.disks()).expect("arrangements are non-empty");
    sectors_from(arr, &union.boundary)
}

fn sectors_from(arr: &MuArrangement, boundary: &[Vec<AngleInterval>]) -> (Vec<OuterSector>, f64) {
    let mut sectors = Vec::new();
    let mut total = 0.0;
    for (k, arcs) in boundary.iter().enumerate() {
        let r = arr.disks()[k].radius;
        for &arc in arcs {
            let area = 0.5 * r * r * arc.sweep;
            total += area;
            sectors.push(OuterSector { disk: k, arc, area });
        }
    }
    (sectors, total)
}

/// Whether `p` lies strictly inside the convex wedge at `apex` spanned by `a` and `b`.
fn strictly_in_wedge(apex: Point, a: Point, b: Point, p: Point) -> bool {
    let (u, v, w) = (a - apex, b - apex, p - apex);
    let orient = u.cross(v);
    if orient == 0.0 || w.norm() == 0.0 {
        return false;
    }
    let s = orient.signum();
    let tol = 1e-12;
    s * u.cross(w) > tol * u.norm() * w.norm() && s * w.cross(v) > tol * w.norm() * v.norm()
}

pub fn inner_shell(arr: &MuArrangement) -> (Vec<ShellTriangle>, f64) {
    let disks = arr.disks();
    let mut shell = Vec::new();
    let mut total = 0.0;
    for digon in find_digons(arr) {
        let (i, j) = (digon.i, digon.j);
        let (xi, xj) = (disks[i].center, disks[j].center);
        for q in digon.vertices {
            if arr.strictly_covers(q, &[]) {
                continue;
            }
            let metrics = Triangle::new(xi, xj, q).metrics();
            if metrics.degenerate {
                continue;
            }
            let mut blocked = false;
            arr.for_each_near(q, arr.max_radius() + EPS_GEOM, |k| {
                if blocked || k == i || k == j {
                    return;
                }
                let dk = &disks[k];
                if (q.distance(dk.center) - dk.radius).abs() <= EPS_GEOM
                    && strictly_in_wedge(q, xi, xj, dk.center)
                {
                    blocked = true;
                }
            });
            if !blocked {
                total += metrics.area;
                shell.push(ShellTriangle { i, j, q, area: metrics.area });
            }
        }
    }
    (shell, total)
}

pub fn core_polygons(arr: &MuArrangement) -> CorePolygons {
    let disks = arr.disks();
    let mut out = CorePolygons::default();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for digon in find_digons(arr) {
        if !is_adjacent(arr, &digon) {
            continue;
        }
        for (side, &q) in digon.vertices.iter().enumerate() {
            if !arr.strictly_covers(q, &[]) {
                continue;
            }
            let diag = |vertices: Vec<usize>, defect| CoreDiagnostic { i: digon.i, j: digon.j, q, vertices, defect };
            let Ok(family) = InscribedFamily::new(arr, digon.i, digon.j, side) else {
                continue;
            };
            // Maximal parameter over members whose interior holds q.
            let mut t0: Option<f64> = None;
            arr.for_each_near(q, arr.max_radius(), |k| {
                if k == digon.i || k == digon.j || !disks[k].contains_open(q, EPS_GEOM) {
                    return;
                }
                if let Some(t) = family.containment_extent(&disks[k], 0.0) {
                    t0 = Some(t0.map_or(t, |b: f64| b.max(t)));
                }
            });
            let Some(t0) = t0 else {
                out.diagnostics.push(diag(Vec::new(), CoreDefect::NoContainingMember));
                continue;
            };
            let inscribed = family.point(t0);
            let x = inscribed.center;
            let mut touching = Vec::new();
            arr.for_each_near(x, arr.max_radius() + EPS_GEOM, |k| {
                let dk = &disks[k];
                if (dk.radius - x.distance(dk.center) - inscribed.radius).abs() <= EPS_GEOM {
                    touching.push(k);
                }
            });
            touching.sort_by(|&a, &b| {
                let (ta, tb) = ((disks[a].center - x).angle(), (disks[b].center - x).angle());
                ta.total_cmp(&tb).then(a.cmp(&b))
            });
            let start = (0..touching.len()).min_by_key(|&p| touching[p]).unwrap_or(0);
            touching.rotate_left(start);

            let mut key = touching.clone();
            key.sort_unstable();
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);

            match check_polygon(arr, &touching, x) {
                Ok(area) => {
                    out.area += area;
                    out.polygons.push(CorePolygon { vertices: touching, inscribed: inscribed.disk(), q, area });
                }
                Err(defect) => out.diagnostics.push(diag(touching, defect)),
            }
        }
    }
    out.polygons.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// Structural checks of a candidate core polygon; returns its area.
fn check_polygon(arr: &MuArrangement, vertices: &[usize], x: Point) -> Result<f64, CoreDefect> {
    let k = vertices.len();
    if !(3..=5).contains(&k) {
        return Err(CoreDefect::VertexCount(k));
    }
    let pts: Vec<Point> = vertices.iter().map(|&v| arr.disks()[v].center).collect();
    for a in 0..k {
        let (p, q, r) = (pts[a], pts[(a + 1) % k], pts[(a + 2) % k]);
        if (q - p).cross(r - q) <= 0.0 {
            return Err(CoreDefect::NotConvex);
        }
        let angle = libm::atan2((p - x).cross(q - x), (p - x).dot(q - x));
        if angle <= PI / 3.0 - 1e-6 {
            return Err(CoreDefect::NarrowAngle(angle));
        }
    }
    let (lo, hi) = pts.iter().fold(
        (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), p| (Point::new(lo.x.min(p.x), lo.y.min(p.y)), Point::new(hi.x.max(p.x), hi.y.max(p.y))),
    );
    let reach = (hi - lo).norm();
    let mut foreign = None;
    arr.for_each_near((lo + hi) * 0.5, reach, |m| {
        if foreign.is_some() || vertices.contains(&m) {
            return;
        }
        let c = arr.disks()[m].center;
        let inside = (0..k).all(|a| {
            let (p, q) = (pts[a], pts[(a + 1) % k]);
            (q - p).cross(c - p) > EPS_GEOM * (q - p).norm()
        });
        if inside {
            foreign = Some(m);
        }
    });
    match foreign {
        Some(m) => Err(CoreDefect::ForeignCenter(m)),
        None => Ok(polygon_area(&pts)),
    }
}

pub fn decompose(arr: &MuArrangement) -> RegionDecomposition {
    let union = union_area(arr.disks()).expect("arrangements are non-empty");
    let (outer, area_o) = sectors_from(arr, &union.boundary);
    let (shell, area_i) = inner_shell(arr);
    let core = core_polygons(arr);
    RegionDecomposition {
        outer,
        shell,
        core_polys: core.polygons,
        diagnostics: core.diagnostics,
        area_u: union.area,
        area_o,
        area_i,
        area_c: union.area - area_o - area_i,
        core_polygon_area: core.area,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn disk(x: f64, y: f64, r: f64) -> Disk {
        Disk::new(Point::new(x, y), r).unwrap()
    }

    fn triple(mu: f64, side: f64) -> MuArrangement {
        let h = libm::sqrt(3.0) / 2.0 * side;
        MuArrangement::validated(mu, vec![disk(0.0, 0.0, 1.0), disk(side, 0.0, 1.0), disk(side / 2.0, h, 1.0)])
            .unwrap()
    }

    fn hex_patch(mu: f64) -> MuArrangement {
        let rho = 1.0 / (1.0 + mu);
        let mut disks = vec![disk(0.0, 0.0, rho)];
        for k in 0..6 {
            let p = Point::polar(PI / 3.0 * k as f64);
            disks.push(disk(p.x, p.y, rho));
        }
        MuArrangement::validated(mu, disks).unwrap()
    }

    #[test]
    fn single_disk() {
        let arr = MuArrangement::validated(0.5, vec![disk(1.0, 2.0, 1.0)]).unwrap();
        let d = decompose(&arr);
        assert_eq!(d.outer.len(), 1);
        assert!((d.area_o - PI).abs() < 1e-12);
        assert!((d.area_u - PI).abs() < 1e-12);
        assert_eq!(d.area_i, 0.0);
        assert!(d.area_c.abs() < 1e-12);
        assert!(d.core_polys.is_empty());
    }

    #[test]
    fn two_disks() {
        let arr = MuArrangement::validated(0.5, vec![disk(0.0, 0.0, 1.0), disk(1.5, 0.0, 1.0)]).unwrap();
        let d = decompose(&arr);
        let theta = libm::acos(0.75);
        assert_eq!(d.outer.len(), 2);
        assert!((d.area_o - (2.0 * PI - 2.0 * theta)).abs() < 1e-12);
        assert_eq!(d.shell.len(), 2);
        let h = libm::sqrt(1.0 - 0.5625);
        assert!((d.area_i - 1.5 * h).abs() < 1e-12);
        assert!(d.area_c.abs() < 1e-7);
        assert!(d.core_polys.is_empty());
    }

    #[test]
    fn thick_triple_has_one_central_core_triangle() {
        let d = decompose(&triple(0.3, 1.3));
        assert_eq!(d.core_polys.len(), 1);
        assert!(d.diagnostics.is_empty());
        let poly = &d.core_polys[0];
        assert_eq!(poly.vertices, vec![0, 1, 2]);
        let centroid = Point::new(0.65, 1.3 * libm::sqrt(3.0) / 6.0);
        assert!(poly.inscribed.center.distance(centroid) < 1e-9);
        let expected = libm::sqrt(3.0) * 1.69 / 4.0;
        assert!((d.area_c - expected).abs() < 1e-7);
        assert!((d.core_polygon_area - d.area_c).abs() < 1e-7);
        assert_eq!(d.shell.len(), 3);
        assert_eq!(d.outer.len(), 3);
    }

    #[test]
    fn hex_patch_pieces() {
        let d = decompose(&hex_patch(0.3));
        assert_eq!(d.core_polys.len(), 6);
        assert!(d.core_polys.iter().all(|p| p.vertices.len() == 3 && p.vertices[0] == 0));
        assert_eq!(d.shell.len(), 6);
        assert!((d.area_c - d.core_polygon_area).abs() < 1e-7 * d.area_u);
        let sum = d.area_o + d.area_i + d.area_c;
        assert!((sum - d.area_u).abs() <= 1e-9 * d.area_u);
    }

    #[test]
    fn wedge_test_blocks_a_center_between_the_rays() {
        let q = Point::ORIGIN;
        assert!(strictly_in_wedge(q, Point::new(1.0, 0.0), Point::new(0.0, 1.0), Point::new(1.0, 1.0)));
        assert!(!strictly_in_wedge(q, Point::new(1.0, 0.0), Point::new(0.0, 1.0), Point::new(-1.0, 1.0)));
        assert!(!strictly_in_wedge(q, Point::new(1.0, 0.0), Point::new(0.0, 1.0), Point::new(2.0, 0.0)));
    }
}
