//! Uniform bucket grid over disk centers for neighborhood queries.

use alloc::vec::Vec;

use crate::geometry::{Disk, Point};

#[derive(Debug, Clone)]
pub(crate) struct DiskIndex {
    origin: Point,
    cell: f64,
    nx: usize,
    ny: usize,
    cells: Vec<Vec<u32>>,
    max_radius: f64,
}

impl DiskIndex {
    pub(crate) fn new(disks: &[Disk]) -> Self {
        let max_radius = disks.iter().map(|d| d.radius).fold(0.0, f64::max);
        let (mut lo, mut hi) = (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for d in disks {
            lo = Point::new(lo.x.min(d.center.x), lo.y.min(d.center.y));
            hi = Point::new(hi.x.max(d.center.x), hi.y.max(d.center.y));
        }
        if disks.is_empty() {
            lo = Point::ORIGIN;
            hi = Point::ORIGIN;
        }
        let mut index = DiskIndex::empty(lo, hi, (2.0 * max_radius).max(1e-12), disks.len());
        index.max_radius = max_radius;
        for (i, d) in disks.iter().enumerate() {
            index.insert(i, d);
        }
        index
    }

    /// An empty grid over `[lo, hi]` with roughly `cell`-sized buckets, sized for `expected` disks.
    pub(crate) fn empty(lo: Point, hi: Point, cell: f64, expected: usize) -> Self {
        let span = (hi - lo).x.max((hi - lo).y);
        let mut cell = cell;
        // Keep the bucket count proportional to the population.
        let budget = (4 * expected + 16) as f64;
        while ((hi.x - lo.x) / cell + 1.0) * ((hi.y - lo.y) / cell + 1.0) > budget && cell < span {
            cell *= 2.0;
        }
        let nx = ((hi.x - lo.x) / cell) as usize + 1;
        let ny = ((hi.y - lo.y) / cell) as usize + 1;
        DiskIndex { origin: lo, cell, nx, ny, cells: alloc::vec![Vec::new(); nx * ny], max_radius: 0.0 }
    }

    pub(crate) fn insert(&mut self, i: usize, d: &Disk) {
        let (cx, cy) = self.cell_of(d.center);
        self.cells[cy * self.nx + cx].push(i as u32);
        self.max_radius = self.max_radius.max(d.radius);
    }

    pub(crate) fn max_radius(&self) -> f64 {
        self.max_radius
    }

    fn cell_of(&self, p: Point) -> (usize, usize) {
        let fx = ((p.x - self.origin.x) / self.cell).max(0.0) as usize;
        let fy = ((p.y - self.origin.y) / self.cell).max(0.0) as usize;
        (fx.min(self.nx - 1), fy.min(self.ny - 1))
    }

    /// Calls `f` for every indexed disk whose center may lie within `reach` of `p`
    /// (a superset; callers do the exact test).
    pub(crate) fn for_each_near(&self, p: Point, reach: f64, mut f: impl FnMut(usize)) {
        let lo = (p.x - reach - self.origin.x) / self.cell;
        let hi = (p.x + reach - self.origin.x) / self.cell;
        let lo_y = (p.y - reach - self.origin.y) / self.cell;
        let hi_y = (p.y + reach - self.origin.y) / self.cell;
        // Out-of-range centers were clamped into border cells, so clamping the query is safe.
        self.scan(lo, hi, lo_y, hi_y, &mut f);
    }

    fn scan(&self, lo: f64, hi: f64, lo_y: f64, hi_y: f64, f: &mut impl FnMut(usize)) {
        let clamp = |v: f64, n: usize| -> usize { (v.max(0.0) as usize).min(n - 1) };
        let (x0, x1) = (clamp(lo, self.nx), clamp(hi, self.nx));
        let (y0, y1) = (clamp(lo_y, self.ny), clamp(hi_y, self.ny));
        for cy in y0..=y1 {
            for cx in x0..=x1 {
                for &i in &self.cells[cy * self.nx + cx] {
                    f(i as usize);
                }
            }
        }
    }
}
