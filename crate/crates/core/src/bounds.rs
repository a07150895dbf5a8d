//! The total-area bound with equality detection, per-triangle inequalities, and the
//! gauge packing check.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::arrangement::{find_digons, MuArrangement};
use crate::constructions::Window;
use crate::decomposition::{decompose, RegionDecomposition};
use crate::error::CoreHypothesis;
use crate::geometry::{
    circle_relation, closed_union_covers_triangle, gauge_norm, CircleRelation, Disk, Point, SymmetricGauge,
    Triangle,
};
use crate::{Error, EPS_GEOM, MU_CRITICAL, TOL_EQ};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Coefficients {
    pub mu: f64,
    pub sigma_core: f64,
    pub sigma_shell: f64,
}

/// Weights of the core and inner-shell areas in the bound. Defined on `[0, 1)`.
pub fn coefficients(mu: f64) -> Coefficients {
    let s = 1.0 + mu;
    let sigma_core = 2.0 * PI / (libm::sqrt(3.0) * s * s);
    let sigma_shell = 4.0 * libm::acos(s / 2.0) / (s * libm::sqrt((3.0 + mu) * (1.0 - mu)));
    Coefficients { mu, sigma_core, sigma_shell }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BoundMode {
    /// `μ ≤ √3 − 1`: the proved inequality.
    Theorem,
    /// `μ > √3 − 1`: the core term is dropped; only conjectural beyond some unknown order.
    Conjectural,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub mode: BoundMode,
    pub coefficients: Coefficients,
    /// `π Σ ρ_i²`.
    pub total_disk_area: f64,
    pub rhs: f64,
    /// `rhs − total_disk_area`.
    pub slack: f64,
    pub tolerance: f64,
    /// `slack ≤ tolerance · max(T, 1)`.
    pub slack_within_tolerance: bool,
    pub non_thick_free_digons: Vec<(usize, usize)>,
    /// Both the slack test and the digon classification indicate equality.
    pub equality: bool,
    pub holds: bool,
    pub decomposition: RegionDecomposition,
}

pub fn theorem_bound(arr: &MuArrangement) -> BoundReport {
    theorem_bound_with_tolerance(arr, TOL_EQ)
}

pub fn theorem_bound_with_tolerance(arr: &MuArrangement, tolerance: f64) -> BoundReport {
    let mu = arr.mu();
    let coefficients = coefficients(mu);
    let mode = if mu <= MU_CRITICAL { BoundMode::Theorem } else { BoundMode::Conjectural };
    let decomposition = decompose(arr);
    let total: f64 = arr.disks().iter().map(Disk::area).sum();
    let core_term = match mode {
        BoundMode::Theorem => coefficients.sigma_core * decomposition.area_c,
        BoundMode::Conjectural => 0.0,
    };
    let rhs = core_term + coefficients.sigma_shell * decomposition.area_i + decomposition.area_o;
    let slack = rhs - total;
    let scale = total.max(1.0);
    let non_thick_free_digons: Vec<(usize, usize)> =
        find_digons(arr).into_iter().filter(|d| d.free && !d.thick).map(|d| (d.i, d.j)).collect();
    let slack_within_tolerance = slack <= tolerance * scale;
    BoundReport {
        mode,
        coefficients,
        total_disk_area: total,
        rhs,
        slack,
        tolerance,
        slack_within_tolerance,
        equality: slack_within_tolerance && non_thick_free_digons.is_empty(),
        holds: slack >= -1e-9 * scale,
        non_thick_free_digons,
        decomposition,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TriangleCheck {
    /// Sector area over triangle area.
    pub lhs_over_delta: f64,
    pub bound: f64,
    pub holds: bool,
    pub tight: bool,
}

fn law_of_cosines_angle(adjacent1: f64, adjacent2: f64, opposite: f64) -> f64 {
    let c = (adjacent1 * adjacent1 + adjacent2 * adjacent2 - opposite * opposite) / (2.0 * adjacent1 * adjacent2);
    libm::acos(c.clamp(-1.0, 1.0))
}

/// Sectors of two overlapping disks in the triangle of their centers and a digon vertex,
/// against the inner-shell weight.
pub fn shell_triangle_check(rho_i: f64, rho_j: f64, mu: f64, center_distance: f64) -> Result<TriangleCheck, Error> {
    let d = center_distance;
    if !(rho_i > 0.0 && rho_j > 0.0 && d.is_finite()) {
        return Err(Error::InvalidArgument("radii must be positive and distance finite"));
    }
    if d >= rho_i + rho_j - EPS_GEOM || d <= (rho_i - rho_j).abs() + EPS_GEOM {
        return Err(Error::NotOverlapping { i: 0, j: 1 });
    }
    if d < rho_i.max(rho_j) + mu * rho_i.min(rho_j) - EPS_GEOM {
        return Err(Error::InvalidArrangement { count: 1, i: 0, j: 1 });
    }
    let alpha_i = law_of_cosines_angle(rho_i, d, rho_j);
    let alpha_j = law_of_cosines_angle(rho_j, d, rho_i);
    let delta = 0.5 * rho_i * d * libm::sin(alpha_i);
    let lhs = 0.5 * (alpha_i * rho_i * rho_i + alpha_j * rho_j * rho_j) / delta;
    let bound = coefficients(mu).sigma_shell;
    let tight = (rho_i - rho_j).abs() <= EPS_GEOM && (d - (1.0 + mu) * rho_i).abs() <= EPS_GEOM;
    Ok(TriangleCheck { lhs_over_delta: lhs, bound, holds: lhs <= bound + 1e-9, tight })
}

/// Sectors of three disks in the triangle of their centers, against the core weight.
/// The hypotheses are verified first and the failing one is reported with a witness.
pub fn core_triangle_check(disks: &[Disk; 3], mu: f64) -> Result<TriangleCheck, Error> {
    let tri = Triangle::new(disks[0].center, disks[1].center, disks[2].center);
    let metrics = tri.metrics();
    if metrics.degenerate {
        return Err(Error::Hypothesis(CoreHypothesis::Degenerate));
    }
    for (u, v, w) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
        let (a, b) = (disks[u], disks[v]);
        let dist = a.center.distance(b.center);
        if dist < a.radius.max(b.radius) + mu * a.radius.min(b.radius) - EPS_GEOM {
            return Err(Error::Hypothesis(CoreHypothesis::ArrangementViolated { u, v }));
        }
        let covered = |p: Point| disks[w].contains_open(p, EPS_GEOM);
        let inside = match circle_relation(&a, &b, EPS_GEOM) {
            CircleRelation::Digon(p, q) => covered(p) && covered(q),
            CircleRelation::ExternallyTangent(p) => covered(p),
            _ => true,
        };
        if inside {
            return Err(Error::Hypothesis(CoreHypothesis::PairIntersectionCovered { u, v, w }));
        }
    }
    let coverage = closed_union_covers_triangle(&tri, disks, 100_000);
    if let Some(witness) = coverage.witness {
        return Err(Error::Hypothesis(CoreHypothesis::NotCovered { witness }));
    }
    let lhs = 0.5
        * (0..3).map(|u| metrics.angles[u] * disks[u].radius * disks[u].radius).sum::<f64>()
        / metrics.area;
    let bound = coefficients(mu).sigma_core;
    let rho = disks[0].radius;
    let side = (1.0 + mu) * rho;
    let tight = disks.iter().all(|d| (d.radius - rho).abs() <= EPS_GEOM)
        && [(0, 1), (1, 2), (0, 2)]
            .iter()
            .all(|&(u, v)| (disks[u].center.distance(disks[v].center) - side).abs() <= EPS_GEOM);
    Ok(TriangleCheck { lhs_over_delta: lhs, bound, holds: lhs <= bound + 1e-9, tight })
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PackingReport {
    /// First pair violating the order-μ condition in the gauge, if any.
    pub violation: Option<(usize, usize)>,
    /// Minimum over pairs of `‖x_i − x_j‖_K − (1+μ)(λ_i+λ_j)/2`.
    pub min_packing_slack: f64,
    pub packing: bool,
    /// Homothets whose centers lie in the window.
    pub window_count: usize,
    /// `Σ λ_i² area(K) / area(window)` over those homothets.
    pub window_density: f64,
    /// `4 / (1+μ)²`.
    pub density_bound: f64,
}

/// Checks that homothets `x_i + λ_i K` forming an order-μ arrangement in the gauge of
/// `K` are packed after scaling by `(1+μ)/2`, and reports their density in `window`.
pub fn prop1_packing_check(
    k: &SymmetricGauge,
    homothets: &[(Point, f64)],
    mu: f64,
    window: &Window,
) -> Result<PackingReport, Error> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::MuOutOfRange(mu));
    }
    if homothets.iter().any(|&(c, l)| !c.is_finite() || !(l > 0.0 && l.is_finite())) {
        return Err(Error::InvalidArgument("homothets need finite centers and positive factors"));
    }
    let mut violation = None;
    let mut min_slack = f64::INFINITY;
    for i in 0..homothets.len() {
        for j in i + 1..homothets.len() {
            let ((xi, li), (xj, lj)) = (homothets[i], homothets[j]);
            let n = gauge_norm(k, xi - xj);
            if violation.is_none() && n < li.max(lj) + mu * li.min(lj) - EPS_GEOM {
                violation = Some((i, j));
            }
            min_slack = min_slack.min(n - 0.5 * (1.0 + mu) * (li + lj));
        }
    }
    let inside: Vec<f64> =
        homothets.iter().filter(|(c, _)| c.distance(window.center) <= window.radius).map(|&(_, l)| l).collect();
    let window_density =
        inside.iter().map(|l| l * l).sum::<f64>() * k.area() / (PI * window.radius * window.radius);
    Ok(PackingReport {
        violation,
        min_packing_slack: min_slack,
        packing: min_slack >= -1e-9,
        window_count: inside.len(),
        window_density,
        density_bound: 4.0 / ((1.0 + mu) * (1.0 + mu)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn coefficient_values() {
        let c = coefficients(0.0);
        assert!((c.sigma_core - 3.627_598_728).abs() < 1e-9);
        assert!((c.sigma_shell - 2.418_399_152).abs() < 1e-9);
        let c = coefficients(MU_CRITICAL);
        let v = 2.0 * PI / (3.0 * libm::sqrt(3.0));
        assert!((c.sigma_core - v).abs() < 1e-12);
        assert!((c.sigma_shell - v).abs() < 1e-12);
    }

    #[test]
    fn shell_check_examples() {
        let tight = shell_triangle_check(1.0, 1.0, 0.25, 1.25).unwrap();
        assert!(tight.tight && tight.holds);
        let expected = 4.0 * libm::acos(0.625) / (1.25 * libm::sqrt(3.25 * 0.75));
        assert!((tight.lhs_over_delta - expected).abs() < 1e-12);
        assert!((tight.bound - expected).abs() < 1e-12);

        let unequal = shell_triangle_check(1.0, 0.6, 0.25, 1.15).unwrap();
        assert!(!unequal.tight && unequal.lhs_over_delta < unequal.bound);

        let far = shell_triangle_check(1.0, 1.0, 0.25, 1.6).unwrap();
        assert!(far.lhs_over_delta < tight.lhs_over_delta);

        assert!(shell_triangle_check(1.0, 1.0, 0.25, 2.5).is_err());
        assert!(shell_triangle_check(1.0, 1.0, 0.25, 1.1).is_err());
    }

    fn equilateral(side: f64, radii: [f64; 3]) -> [Disk; 3] {
        let h = libm::sqrt(3.0) / 2.0 * side;
        [
            Disk::new(Point::new(0.0, 0.0), radii[0]).unwrap(),
            Disk::new(Point::new(side, 0.0), radii[1]).unwrap(),
            Disk::new(Point::new(side / 2.0, h), radii[2]).unwrap(),
        ]
    }

    #[test]
    fn core_check_examples() {
        let c = core_triangle_check(&equilateral(1.3, [1.0; 3]), 0.3).unwrap();
        assert!(c.tight && c.holds);
        assert!((c.lhs_over_delta - 2.0 * PI / (libm::sqrt(3.0) * 1.69)).abs() < 1e-12);

        let c = core_triangle_check(&equilateral(1.35, [1.0; 3]), 0.3).unwrap();
        assert!(!c.tight && c.lhs_over_delta < c.bound);

        // Pairwise distances ρ_u + μρ_v with radii (1, 1, 0.9).
        let mu = 0.2;
        let (a, b) = (1.0 + mu, 1.0 + mu * 0.9);
        let x = (a * a + b * b - b * b) / (2.0 * a);
        let y = libm::sqrt(b * b - x * x);
        let disks = [
            Disk::new(Point::new(0.0, 0.0), 1.0).unwrap(),
            Disk::new(Point::new(a, 0.0), 1.0).unwrap(),
            Disk::new(Point::new(x, y), 0.9).unwrap(),
        ];
        let c = core_triangle_check(&disks, mu).unwrap();
        assert!(!c.tight && c.lhs_over_delta < c.bound);
    }

    #[test]
    fn core_check_reports_failed_hypotheses() {
        let r = core_triangle_check(&equilateral(1.2, [1.0; 3]), 0.3);
        assert!(matches!(r, Err(Error::Hypothesis(CoreHypothesis::ArrangementViolated { .. }))));
        let r = core_triangle_check(&equilateral(1.9, [1.0; 3]), 0.3);
        assert!(matches!(r, Err(Error::Hypothesis(CoreHypothesis::NotCovered { .. }))));
        let line = [
            Disk::new(Point::new(0.0, 0.0), 1.0).unwrap(),
            Disk::new(Point::new(1.5, 0.0), 1.0).unwrap(),
            Disk::new(Point::new(3.0, 0.0), 1.0).unwrap(),
        ];
        assert_eq!(core_triangle_check(&line, 0.3), Err(Error::Hypothesis(CoreHypothesis::Degenerate)));
    }

    #[test]
    fn bound_on_single_disk_and_thick_triple() {
        let arr = MuArrangement::validated(0.3, vec![Disk::new(Point::ORIGIN, 1.0).unwrap()]).unwrap();
        let r = theorem_bound(&arr);
        assert!((r.total_disk_area - PI).abs() < 1e-12 && (r.rhs - PI).abs() < 1e-12 && r.equality);

        let arr = MuArrangement::validated(0.3, equilateral(1.3, [1.0; 3]).to_vec()).unwrap();
        let r = theorem_bound(&arr);
        assert!(r.slack.abs() <= 1e-6 * r.total_disk_area, "{}", r.slack);
        assert!(r.equality);

        let mut disks = equilateral(1.3, [1.0; 3]);
        disks[2].center.y += 0.05;
        let arr = MuArrangement::validated(0.3, disks.to_vec()).unwrap();
        let r = theorem_bound(&arr);
        assert!(r.slack > 0.0 && !r.equality);
        assert!(!r.non_thick_free_digons.is_empty());
    }

    #[test]
    fn square_lattice_packing_is_tight() {
        let k = SymmetricGauge::square(0.5);
        let mu = 0.5;
        let lambda = 2.0 / (1.0 + mu);
        let mut homothets = vec![];
        for a in -3..=3 {
            for b in -3..=3 {
                homothets.push((Point::new(a as f64, b as f64), lambda));
            }
        }
        let r = prop1_packing_check(&k, &homothets, mu, &Window::new(Point::ORIGIN, 3.0).unwrap()).unwrap();
        assert!(r.violation.is_none() && r.packing);
        assert!(r.min_packing_slack.abs() <= 1e-12);

        let pair = [(Point::ORIGIN, 1.0), (Point::new(0.7, 0.0), 1.0)];
        let r = prop1_packing_check(&k, &pair, mu, &Window::new(Point::ORIGIN, 3.0).unwrap()).unwrap();
        assert_eq!(r.violation, Some((0, 1)));
    }
}
