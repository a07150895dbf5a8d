//! Hexagonal extremal arrangements, their scaled refinements, seeded random
//! arrangements and window densities.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{required_distance, MuArrangement};
use crate::geometry::{union_area, Disk, Point};
use crate::index::DiskIndex;
use crate::{Error, EPS_GEOM};

/// A closed circular window.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Window {
    pub center: Point,
    pub radius: f64,
}

impl Window {
    pub fn new(center: Point, radius: f64) -> Result<Self, Error> {
        if !center.is_finite() {
            return Err(Error::NonFiniteCoordinate);
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidWindow(radius));
        }
        Ok(Window { center, radius })
    }

    pub fn centered(radius: f64) -> Result<Self, Error> {
        Window::new(Point::ORIGIN, radius)
    }

    pub fn contains_disk(&self, d: &Disk) -> bool {
        d.center.distance(self.center) + d.radius <= self.radius + EPS_GEOM
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }
}

fn check_mu(mu: f64) -> Result<(), Error> {
    if mu > 0.0 && mu < 1.0 {
        Ok(())
    } else {
        Err(Error::MuOutOfRange(mu))
    }
}

/// Points `scale·(k·u + m·v)` of the triangular lattice with `|p − c| ≤ reach`.
fn lattice_points(scale: f64, center: Point, reach: f64) -> Vec<Point> {
    let v = Point::new(0.5, libm::sqrt(3.0) / 2.0);
    let span = libm::ceil((center.norm() + reach) / scale * 2.0 / libm::sqrt(3.0)) as i64 + 1;
    let mut points = Vec::new();
    for m in -span..=span {
        for k in -span..=span {
            let p = (Point::new(k as f64, 0.0) + v * m as f64) * scale;
            if p.distance(center) <= reach + EPS_GEOM {
                points.push(p);
            }
        }
    }
    points
}

/// Disks of radius `1/(1+μ)` centered at the unit triangular lattice points of `window`.
pub fn hex_arrangement(mu: f64, window: &Window) -> Result<MuArrangement, Error> {
    check_mu(mu)?;
    let rho = 1.0 / (1.0 + mu);
    let disks: Vec<Disk> =
        lattice_points(1.0, window.center, window.radius).into_iter().map(|c| Disk { center: c, radius: rho }).collect();
    if disks.is_empty() {
        return Err(Error::EmptyWindow);
    }
    MuArrangement::new(mu, disks)
}

/// Adds, for `s = 1..=k`, the disks of the `τ^s`-scaled hexagonal arrangement that are
/// disjoint from every disk already present. Candidates are restricted to the window
/// shrunk by one lattice spacing, where the unscaled arrangement is complete.
pub fn iterate_hex(mu: f64, tau: f64, k: usize, window: &Window) -> Result<MuArrangement, Error> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::TauOutOfRange(tau));
    }
    let base = hex_arrangement(mu, window)?;
    if k == 0 {
        return Ok(base);
    }
    let rho = 1.0 / (1.0 + mu);
    let mut disks = base.into_disks();
    let r = window.radius;
    let (lo, hi) = (window.center - Point::new(r, r), window.center + Point::new(r, r));
    let mut index = DiskIndex::empty(lo, hi, 2.0 * rho, disks.len());
    for (i, d) in disks.iter().enumerate() {
        index.insert(i, d);
    }
    let inner = window.radius - 1.0;
    let mut scale = 1.0;
    for _ in 0..k {
        scale *= tau;
        let radius = rho * scale;
        if inner <= radius {
            break;
        }
        for c in lattice_points(scale, window.center, inner - radius) {
            let candidate = Disk { center: c, radius };
            let mut free = true;
            index.for_each_near(c, radius + index.max_radius(), |j| {
                let d = &disks[j];
                if free && c.distance(d.center) < radius + d.radius - EPS_GEOM {
                    free = false;
                }
            });
            if free {
                index.insert(disks.len(), &candidate);
                disks.push(candidate);
            }
        }
    }
    MuArrangement::new(mu, disks)
}

#[derive(Debug, Clone)]
pub struct RandomArrangement {
    pub arrangement: MuArrangement,
    pub target: usize,
    pub proposals: usize,
    /// `target` minus the number of accepted disks.
    pub shortfall: usize,
}

/// Sequential rejection sampling of a μ-arrangement in `window`: centers uniform in the
/// window, radii log-uniform in `[0.3, 1]`, at most `10⁴·target` proposals.
pub fn random_arrangement(mu: f64, window: &Window, target: usize, seed: u64) -> Result<RandomArrangement, Error> {
    check_mu(mu)?;
    if target == 0 {
        return Err(Error::InvalidArgument("target count must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = window.radius;
    let (lo, hi) = (window.center - Point::new(r, r), window.center + Point::new(r, r));
    let mut index = DiskIndex::empty(lo, hi, 2.0, target);
    let mut disks: Vec<Disk> = Vec::with_capacity(target);
    let (ln_lo, ln_hi) = (libm::log(0.3), 0.0);
    let budget = target.saturating_mul(10_000);
    let mut proposals = 0;
    while disks.len() < target && proposals < budget {
        proposals += 1;
        let offset = loop {
            let p = Point::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            if p.norm_sq() <= 1.0 {
                break p * r;
            }
        };
        let radius = libm::exp(rng.random_range(ln_lo..=ln_hi));
        let candidate = Disk { center: window.center + offset, radius };
        let mut ok = true;
        index.for_each_near(candidate.center, radius + index.max_radius(), |j| {
            let d = &disks[j];
            if ok && candidate.center.distance(d.center) < required_distance(&candidate, d, mu) {
                ok = false;
            }
        });
        if ok {
            index.insert(disks.len(), &candidate);
            disks.push(candidate);
        }
    }
    let shortfall = target - disks.len();
    Ok(RandomArrangement { arrangement: MuArrangement::new(mu, disks)?, target, proposals, shortfall })
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DensityEstimate {
    /// Disk area over window area.
    pub delta: f64,
    /// Disk area over union area.
    pub delta_u: f64,
    pub n_disks: usize,
}

/// Densities of the disks lying entirely inside `window`.
pub fn density_estimate(disks: &[Disk], window: &Window) -> Result<DensityEstimate, Error> {
    let included: Vec<Disk> = disks.iter().copied().filter(|d| window.contains_disk(d)).collect();
    if included.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let total: f64 = included.iter().map(Disk::area).sum();
    let union = union_area(&included)?;
    Ok(DensityEstimate { delta: total / window.area(), delta_u: total / union.area, n_disks: included.len() })
}
