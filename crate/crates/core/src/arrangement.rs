//! μ-arrangement validation, digons, the inscribed-disk family of a digon, adjacency and
//! connected components.

use alloc::vec::Vec;

use crate::geometry::{circle_relation, CircleRelation, Disk, Point};
use crate::index::DiskIndex;
use crate::{Error, EPS_GEOM, EPS_PARAM};

/// A pair violating the μ-arrangement condition.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub required_distance: f64,
    pub actual_distance: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// A finite family of open disks together with the order `mu`.
///
/// Construction checks the order and the disks themselves; the pairwise condition is
/// checked by [`MuArrangement::validate`] or enforced by [`MuArrangement::validated`].
#[derive(Debug, Clone)]
pub struct MuArrangement {
    mu: f64,
    disks: Vec<Disk>,
    index: DiskIndex,
}

impl MuArrangement {
    pub fn new(mu: f64, disks: Vec<Disk>) -> Result<Self, Error> {
        check_mu(mu)?;
        if disks.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for d in &disks {
            Disk::new(d.center, d.radius)?;
        }
        let index = DiskIndex::new(&disks);
        Ok(MuArrangement { mu, disks, index })
    }

    /// Like [`MuArrangement::new`] but also rejects families violating the pairwise condition.
    pub fn validated(mu: f64, disks: Vec<Disk>) -> Result<Self, Error> {
        let arr = MuArrangement::new(mu, disks)?;
        let report = arr.validate();
        match report.violations.first() {
            None => Ok(arr),
            Some(v) => Err(Error::InvalidArrangement { count: report.violations.len(), i: v.i, j: v.j }),
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn into_disks(self) -> Vec<Disk> {
        self.disks
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, j) in self.near_pairs(0.0) {
            let (a, b) = (self.disks[i], self.disks[j]);
            let required = required_distance(&a, &b, self.mu);
            let actual = a.center.distance(b.center);
            if actual < required - EPS_GEOM || actual <= EPS_GEOM {
                violations.push(Violation { i, j, required_distance: required, actual_distance: actual });
            }
        }
        ValidationReport { valid: violations.is_empty(), violations }
    }

    /// All pairs `i < j` with `|x_i − x_j| < ρ_i + ρ_j + slack`, sorted.
    pub(crate) fn near_pairs(&self, slack: f64) -> Vec<(usize, usize)> {
        let reach_extra = self.index.max_radius() + slack;
        let mut pairs = Vec::new();
        for (i, di) in self.disks.iter().enumerate() {
            self.index.for_each_near(di.center, di.radius + reach_extra, |j| {
                if j > i {
                    let dj = &self.disks[j];
                    if di.center.distance(dj.center) < di.radius + dj.radius + slack {
                        pairs.push((i, j));
                    }
                }
            });
        }
        pairs.sort_unstable();
        pairs
    }

    /// Calls `f` with every disk index whose center may be within `reach` of `p`.
    pub(crate) fn for_each_near(&self, p: Point, reach: f64, f: impl FnMut(usize)) {
        self.index.for_each_near(p, reach, f)
    }

    pub(crate) fn max_radius(&self) -> f64 {
        self.index.max_radius()
    }

    /// Whether `p` lies in some open member other than those in `skip`, beyond `EPS_GEOM`.
    pub(crate) fn strictly_covers(&self, p: Point, skip: &[usize]) -> bool {
        let mut hit = false;
        self.for_each_near(p, self.max_radius(), |k| {
            if !hit && !skip.contains(&k) && self.disks[k].contains_open(p, EPS_GEOM) {
                hit = true;
            }
        });
        hit
    }
}

fn check_mu(mu: f64) -> Result<(), Error> {
    if mu > 0.0 && mu < 1.0 {
        Ok(())
    } else {
        Err(Error::MuOutOfRange(mu))
    }
}

/// `max(ρ_a, ρ_b) + μ·min(ρ_a, ρ_b)`.
pub fn required_distance(a: &Disk, b: &Disk, mu: f64) -> f64 {
    a.radius.max(b.radius) + mu * a.radius.min(b.radius)
}

/// Checks the μ-arrangement condition for every pair of `disks`.
pub fn validate(disks: &[Disk], mu: f64) -> Result<ValidationReport, Error> {
    Ok(MuArrangement::new(mu, disks.to_vec())?.validate())
}

/// The intersection of two overlapping members, classified.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Digon {
    pub i: usize,
    pub j: usize,
    /// Boundary intersection points; the counterclockwise arc of disk `i` from the
    /// first to the second lies outside disk `j`.
    pub vertices: [Point; 2],
    pub free: bool,
    pub thick: bool,
    /// Members other than `i`, `j` whose closure contains the digon.
    pub contained_in: Vec<usize>,
}

/// One digon per overlapping pair, sorted by `(i, j)`. Tangent pairs are not digons.
pub fn find_digons(arr: &MuArrangement) -> Vec<Digon> {
    arr.near_pairs(0.0)
        .into_iter()
        .filter_map(|(i, j)| classify_digon(arr, i, j).ok())
        .collect()
}

pub fn classify_digon(arr: &MuArrangement, i: usize, j: usize) -> Result<Digon, Error> {
    let n = arr.len();
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange(i.max(j)));
    }
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    let (a, b) = (arr.disks[i], arr.disks[j]);
    let CircleRelation::Digon(v1, v2) = circle_relation(&a, &b, EPS_GEOM) else {
        return Err(Error::NotOverlapping { i, j });
    };
    if i == j {
        return Err(Error::NotOverlapping { i, j });
    }
    let d = a.center.distance(b.center);
    let mu = arr.mu;
    let thick = (a.radius - b.radius).abs() <= EPS_GEOM
        && (d - 0.5 * (1.0 + mu) * (a.radius + b.radius)).abs() <= EPS_GEOM;

    // A member containing both vertices contains the whole digon.
    let mut contained_in = Vec::new();
    arr.for_each_near(v1, arr.max_radius() + EPS_GEOM, |k| {
        if k != i && k != j {
            let dk = &arr.disks[k];
            if dk.contains_closed(v1, EPS_GEOM) && dk.contains_closed(v2, EPS_GEOM) {
                contained_in.push(k);
            }
        }
    });
    contained_in.sort_unstable();
    Ok(Digon { i, j, vertices: [v1, v2], free: contained_in.is_empty(), thick, contained_in })
}

/// A disk of the inscribed family: internally tangent to both members of a digon.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InscribedFamilyPoint {
    pub t: f64,
    pub center: Point,
    pub radius: f64,
}

impl InscribedFamilyPoint {
    pub fn disk(&self) -> Disk {
        Disk { center: self.center, radius: self.radius.max(f64::MIN_POSITIVE) }
    }
}

/// The one-parameter family of disks inscribed in the digon `B_i ∩ B_j`.
///
/// Centers of disks internally tangent to both circles satisfy
/// `|c − x_i| − |c − x_j| = ρ_i − ρ_j`, a hyperbola branch (a line for equal radii)
/// through both digon vertices. `t ∈ [0, 1]` moves the projection of the center
/// uniformly along the chord from the chosen vertex `q` (`t = 0`) to the other one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedFamily {
    pub i: usize,
    pub j: usize,
    disk_i: Disk,
    disk_j: Disk,
    midpoint: Point,
    axis: Point,
    normal: Point,
    half_chord: f64,
    semi_axis: f64,
    conj_sq: f64,
    /// `+1` when `q` is the first digon vertex, `−1` for the second.
    side: f64,
}

impl InscribedFamily {
    /// Family of the digon of `i` and `j`, parameterized from vertex `vertex` (0 or 1).
    pub fn new(arr: &MuArrangement, i: usize, j: usize, vertex: usize) -> Result<Self, Error> {
        if i >= arr.len() || j >= arr.len() {
            return Err(Error::IndexOutOfRange(i.max(j)));
        }
        let (a, b) = (arr.disks[i], arr.disks[j]);
        if !matches!(circle_relation(&a, &b, EPS_GEOM), CircleRelation::Digon(..)) || i == j {
            return Err(Error::NotOverlapping { i, j });
        }
        let delta = b.center - a.center;
        let d = delta.norm();
        let axis = delta * (1.0 / d);
        let along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
        let half_chord = libm::sqrt((a.radius * a.radius - along * along).max(0.0));
        let semi_axis = 0.5 * (a.radius - b.radius);
        Ok(InscribedFamily {
            i,
            j,
            disk_i: a,
            disk_j: b,
            midpoint: (a.center + b.center) * 0.5,
            axis,
            normal: axis.perp(),
            half_chord,
            semi_axis,
            conj_sq: 0.25 * d * d - semi_axis * semi_axis,
            side: if vertex == 0 { 1.0 } else { -1.0 },
        })
    }

    /// The vertex `q` the family shrinks to as `t → 0⁺`.
    pub fn vertex(&self) -> Point {
        self.point(0.0).center
    }

    pub fn point(&self, t: f64) -> InscribedFamilyPoint {
        let s = self.side * self.half_chord * (1.0 - 2.0 * t);
        let x = self.semi_axis * libm::sqrt(1.0 + s * s / self.conj_sq);
        let center = self.midpoint + self.axis * x + self.normal * s;
        let ri = self.disk_i.radius - center.distance(self.disk_i.center);
        let rj = self.disk_j.radius - center.distance(self.disk_j.center);
        InscribedFamilyPoint { t, center, radius: (0.5 * (ri + rj)).max(0.0) }
    }

    /// `ρ_k − |c(t) − x_k| − r(t)`: non-negative exactly when `B(t) ⊆ closure(disk)`.
    pub fn containment_margin(&self, disk: &Disk, t: f64) -> f64 {
        let p = self.point(t);
        disk.radius - p.center.distance(disk.center) - p.radius
    }

    /// Largest `t` with `margin(t) ≥ threshold`, assuming `{t : margin ≥ threshold}` is an
    /// initial segment. Returns `None` when the vertex itself is outside `disk` (beyond
    /// `EPS_GEOM`) and `Some(1.0)` when the whole family qualifies.
    pub fn containment_extent(&self, disk: &Disk, threshold: f64) -> Option<f64> {
        if !disk.contains_closed(self.vertex(), EPS_GEOM) {
            return None;
        }
        if self.containment_margin(disk, 0.0) < threshold {
            return Some(0.0);
        }
        if self.containment_margin(disk, 1.0) >= threshold {
            return Some(1.0);
        }
        let (mut lo, mut hi) = (0.0, 1.0);
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            if self.containment_margin(disk, mid) >= threshold {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(lo)
    }

    /// `max_k t_k` over members `k ∉ {i, j}` containing the vertex, with the member
    /// attaining it. `threshold` as in [`InscribedFamily::containment_extent`].
    pub fn max_extent(&self, arr: &MuArrangement, threshold: f64) -> Option<(f64, usize)> {
        let q = self.vertex();
        let mut best: Option<(f64, usize)> = None;
        arr.for_each_near(q, arr.max_radius() + EPS_GEOM, |k| {
            if k == self.i || k == self.j {
                return;
            }
            if let Some(t) = self.containment_extent(&arr.disks[k], threshold) {
                if best.is_none_or(|(b, bk)| t > b || (t == b && k < bk)) {
                    best = Some((t, k));
                }
            }
        });
        best
    }
}

/// Whether the free digon of `i`, `j` has an inscribed disk lying in no third member.
pub fn is_adjacent(arr: &MuArrangement, digon: &Digon) -> bool {
    if !digon.free {
        return false;
    }
    let extent = |vertex| {
        InscribedFamily::new(arr, digon.i, digon.j, vertex)
            .ok()
            .and_then(|fam| fam.max_extent(arr, -EPS_GEOM))
            .map_or(0.0, |(t, _)| t)
    };
    extent(0) + extent(1) < 1.0 - EPS_PARAM
}

/// Adjacent pairs `(i, j)`, `i < j`, sorted.
pub fn adjacency_pairs(arr: &MuArrangement) -> Vec<(usize, usize)> {
    find_digons(arr)
        .iter()
        .filter(|d| is_adjacent(arr, d))
        .map(|d| (d.i, d.j))
        .collect()
}

/// Components of the graph whose edges join overlapping open disks. Each component is
/// sorted; components are ordered by their smallest index.
pub fn connected_components(arr: &MuArrangement) -> Vec<Vec<usize>> {
    let n = arr.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, j) in arr.near_pairs(0.0) {
        let (a, b) = (arr.disks[i], arr.disks[j]);
        if a.center.distance(b.center) < a.radius + b.radius - EPS_GEOM {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: Vec<Option<usize>> = alloc::vec![None; n];
    for x in 0..n {
        let root = find(&mut parent, x);
        match slot[root] {
            Some(g) => groups[g].push(x),
            None => {
                slot[root] = Some(groups.len());
                groups.push(alloc::vec![x]);
            }
        }
    }
    groups
}
