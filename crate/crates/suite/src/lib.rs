//! Fixtures for the acceptance suite: the seeded arrangement corpus and a Monte-Carlo
//! region classifier that rebuilds the three regions from first principles.

use muarr_core::{random_arrangement, Disk, MuArrangement, Point, Window, MU_CRITICAL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SIZE: usize = 500;
pub const ORDERS: [f64; 4] = [0.1, 0.25, 0.5, MU_CRITICAL];

/// Member `k` of the corpus: order cycles through [`ORDERS`], at most 40 disks.
pub fn corpus_member(k: usize) -> MuArrangement {
    corpus_member_with_order(k, ORDERS[k % 4])
}

pub fn corpus_member_with_order(k: usize, mu: f64) -> MuArrangement {
    let n = 2 + (k * 7) % 39;
    let radius = 2.5 + (k % 5) as f64 * 0.75;
    random_arrangement(mu, &Window::centered(radius).unwrap(), n, 1000 + k as u64).unwrap().arrangement
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Disks and shell triangles bucketed on a uniform grid.
struct Buckets {
    lo: Point,
    cell: f64,
    nx: usize,
    ny: usize,
    disks: Vec<Vec<usize>>,
    triangles: Vec<Vec<usize>>,
}

impl Buckets {
    fn cell_of(&self, p: Point) -> Option<usize> {
        let cx = ((p.x - self.lo.x) / self.cell).floor();
        let cy = ((p.y - self.lo.y) / self.cell).floor();
        if cx < 0.0 || cy < 0.0 || cx >= self.nx as f64 || cy >= self.ny as f64 {
            return None;
        }
        Some(cy as usize * self.nx + cx as usize)
    }

    fn cells_of_box(&self, lo: Point, hi: Point) -> impl Iterator<Item = usize> + '_ {
        let clamp = |v: f64, n: usize| (v.floor().max(0.0) as usize).min(n - 1);
        let (x0, x1) = (clamp((lo.x - self.lo.x) / self.cell, self.nx), clamp((hi.x - self.lo.x) / self.cell, self.nx));
        let (y0, y1) = (clamp((lo.y - self.lo.y) / self.cell, self.ny), clamp((hi.y - self.lo.y) / self.cell, self.ny));
        (y0..=y1).flat_map(move |y| (x0..=x1).map(move |x| y * self.nx + x))
    }
}

/// Shell triangles enumerated directly: for every overlapping pair, each intersection
/// point of the two circles lying in no other open disk.
pub fn shell_triangles(disks: &[Disk]) -> Vec<[Point; 3]> {
    let mut out = Vec::new();
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            let (a, b) = (disks[i], disks[j]);
            let d = a.center.distance(b.center);
            if d >= a.radius + b.radius || d <= (a.radius - b.radius).abs() {
                continue;
            }
            let along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
            let h = (a.radius * a.radius - along * along).max(0.0).sqrt();
            let u = (b.center - a.center) * (1.0 / d);
            let base = a.center + u * along;
            for q in [base + u.perp() * h, base - u.perp() * h] {
                let buried = disks
                    .iter()
                    .enumerate()
                    .any(|(k, m)| k != i && k != j && m.center.distance(q) < m.radius - 1e-9);
                if !buried && h > 1e-12 {
                    out.push([a.center, b.center, q]);
                }
            }
        }
    }
    out
}

fn in_triangle(t: &[Point; 3], p: Point) -> bool {
    let s = |a: Point, b: Point| (b - a).cross(p - a);
    let (d0, d1, d2) = (s(t[0], t[1]), s(t[1], t[2]), s(t[2], t[0]));
    (d0 >= 0.0 && d1 >= 0.0 && d2 >= 0.0) || (d0 <= 0.0 && d1 <= 0.0 && d2 <= 0.0)
}

#[derive(Debug, Clone, Copy)]
pub struct RegionEstimate {
    pub box_area: f64,
    pub samples: usize,
    pub outer: usize,
    pub inner: usize,
    pub core: usize,
}

impl RegionEstimate {
    pub fn area(&self, hits: usize) -> f64 {
        self.box_area * hits as f64 / self.samples as f64
    }

    /// Binomial standard error of the area estimate at the true area `exact`.
    pub fn standard_error(&self, exact: f64) -> f64 {
        let p = (exact / self.box_area).clamp(0.0, 1.0);
        self.box_area * (p * (1.0 - p) / self.samples as f64).sqrt()
    }

    /// `|estimate − exact| ≤ 3·SE + slack`, with SE taken at the larger of the two
    /// proportions so that an exact zero is not compared against a zero-width band.
    /// `slack` absorbs the rounding of areas obtained by subtraction.
    pub fn agrees(&self, hits: usize, exact: f64, slack: f64) -> bool {
        (self.area(hits) - exact).abs() <= 3.0 * self.se(hits, exact) + slack
    }

    pub fn se(&self, hits: usize, exact: f64) -> f64 {
        self.standard_error(exact).max(self.standard_error(self.area(hits)))
    }
}

/// Classifies `side²` jittered points of the bounding box. A point of the union is in
/// the outer shell if, for some disk containing it, the ray from that disk's center
/// through it meets the circle outside every other disk; otherwise in the inner shell
/// if it lies in a shell triangle; otherwise in the core.
pub fn classify_regions(arr: &MuArrangement, side: usize, seed: u64) -> RegionEstimate {
    let disks = arr.disks();
    let triangles = shell_triangles(disks);
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for d in disks {
        lo = Point::new(lo.x.min(d.center.x - d.radius), lo.y.min(d.center.y - d.radius));
        hi = Point::new(hi.x.max(d.center.x + d.radius), hi.y.max(d.center.y + d.radius));
    }
    let cell = 0.5;
    let nx = ((hi.x - lo.x) / cell).ceil().max(1.0) as usize;
    let ny = ((hi.y - lo.y) / cell).ceil().max(1.0) as usize;
    let mut b = Buckets { lo, cell, nx, ny, disks: vec![Vec::new(); nx * ny], triangles: vec![Vec::new(); nx * ny] };
    for (k, d) in disks.iter().enumerate() {
        let r = Point::new(d.radius, d.radius);
        let cells: Vec<usize> = b.cells_of_box(d.center - r, d.center + r).collect();
        for c in cells {
            b.disks[c].push(k);
        }
    }
    for (k, t) in triangles.iter().enumerate() {
        let tlo = Point::new(t[0].x.min(t[1].x).min(t[2].x), t[0].y.min(t[1].y).min(t[2].y));
        let thi = Point::new(t[0].x.max(t[1].x).max(t[2].x), t[0].y.max(t[1].y).max(t[2].y));
        let cells: Vec<usize> = b.cells_of_box(tlo, thi).collect();
        for c in cells {
            b.triangles[c].push(k);
        }
    }

    let uncovered = |q: Point, own: usize| match b.cell_of(q) {
        None => true,
        Some(c) => !b.disks[c].iter().any(|&m| m != own && disks[m].center.distance(q) < disks[m].radius),
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (w, h) = ((hi.x - lo.x) / side as f64, (hi.y - lo.y) / side as f64);
    let mut est = RegionEstimate { box_area: (hi.x - lo.x) * (hi.y - lo.y), samples: side * side, outer: 0, inner: 0, core: 0 };
    for iy in 0..side {
        for ix in 0..side {
            let p = Point::new(
                lo.x + (ix as f64 + rng.random::<f64>()) * w,
                lo.y + (iy as f64 + rng.random::<f64>()) * h,
            );
            let Some(c) = b.cell_of(p) else { continue };
            let mut in_union = false;
            let mut outer = false;
            for &k in &b.disks[c] {
                let d = &disks[k];
                let r = d.center.distance(p);
                if r >= d.radius {
                    continue;
                }
                in_union = true;
                if r > 0.0 && uncovered(d.center + (p - d.center) * (d.radius / r), k) {
                    outer = true;
                    break;
                }
            }
            if !in_union {
                continue;
            }
            if outer {
                est.outer += 1;
            } else if b.triangles[c].iter().any(|&t| in_triangle(&triangles[t], p)) {
                est.inner += 1;
            } else {
                est.core += 1;
            }
        }
    }
    est
}
