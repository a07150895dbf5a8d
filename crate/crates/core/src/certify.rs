//! Certification of the analytic inequalities behind the shell estimate.
//!
//! `f(ρ, μ)` is the sector area of a unit disk and a disk of radius `ρ` whose centers are
//! `1 + μρ` apart, in the triangle spanned by the centers and a digon vertex, and
//! `g = 4Δ` where `Δ` is the area of that triangle. The ratio `f/Δ` is increasing in
//! `ρ` exactly when `h = f′Δ − Δ′f > 0` (derivatives in `ρ`), which is checked on a
//! grid with a Lipschitz margin.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::coefficients;
use crate::geometry::{closed_union_covers_triangle, Disk, Triangle};
use crate::{Error, MU_CRITICAL};

/// Bound on `|∂h/∂ρ|` over the certified rectangle.
pub const LIPSCHITZ_RHO: f64 = 4.78;
/// Bound on `|∂h/∂μ|` over the certified rectangle.
pub const LIPSCHITZ_MU: f64 = 28.49;
/// Allowance for floating-point error in each evaluation of `h`.
pub const ROUNDING_SLACK: f64 = 1e-9;
pub const DEFAULT_RESOLUTION: usize = 8691;

const CLAMP_LIMIT: f64 = 1e-12;

fn checked_acos(x: f64, rho: f64, mu: f64) -> Result<f64, Error> {
    if !x.is_finite() {
        return Err(Error::NonFiniteValue { rho, mu });
    }
    if x.abs() > 1.0 + CLAMP_LIMIT {
        return Err(Error::ClampExcursion { rho, mu, value: x });
    }
    Ok(libm::acos(x.clamp(-1.0, 1.0)))
}

fn check_domain(rho: f64, mu: f64, rho_min: f64) -> Result<(), Error> {
    let rho_ok = if rho_min > 0.0 { rho >= rho_min } else { rho > 0.0 };
    if rho_ok && rho <= 1.0 && (0.0..=MU_CRITICAL).contains(&mu) {
        Ok(())
    } else {
        Err(Error::OutOfDomain { rho, mu })
    }
}

/// Values and `ρ`-derivatives of `f` and `g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellTerms {
    pub f: f64,
    pub g: f64,
    pub df: f64,
    pub dg: f64,
}

/// `f` and `g` without domain checks; the arccos arguments are still validated.
fn fg_raw(rho: f64, mu: f64) -> Result<(f64, f64, f64, f64), Error> {
    let c = 1.0 + mu * rho;
    let a1 = (1.0 + c * c - rho * rho) / (2.0 * c);
    let a2 = (rho * rho + c * c - 1.0) / (2.0 * rho * c);
    let alpha_i = checked_acos(a1, rho, mu)?;
    let alpha_j = checked_acos(a2, rho, mu)?;
    let p = (2.0 + rho + mu * rho) * (2.0 - rho + mu * rho) * (1.0 - mu * mu);
    let g = rho * libm::sqrt(p);
    let f = 0.5 * alpha_i + 0.5 * rho * rho * alpha_j;
    if !(f.is_finite() && g.is_finite()) {
        return Err(Error::NonFiniteValue { rho, mu });
    }
    Ok((f, g, a1, a2))
}

/// `f`, `g` and their closed-form `ρ`-derivatives.
pub fn shell_terms(rho: f64, mu: f64) -> Result<ShellTerms, Error> {
    let (f, g, _, a2) = fg_raw(rho, mu)?;
    let c = 1.0 + mu * rho;
    let alpha_j = libm::acos(a2.clamp(-1.0, 1.0));

    let da1 = (mu * c * c - 2.0 * rho * c - mu + mu * rho * rho) / (2.0 * c * c);
    let (n, d) = (rho * rho + c * c - 1.0, 2.0 * rho * c);
    let (dn, dd) = (2.0 * rho + 2.0 * c * mu, 2.0 * c + 2.0 * rho * mu);
    let da2 = (dn * d - n * dd) / (d * d);
    // Sines of the two angles, from the triangle area g/4.
    let sin_i = g / (2.0 * c);
    let sin_j = g / (2.0 * rho * c);
    let df = -0.5 * da1 / sin_i + rho * alpha_j - 0.5 * rho * rho * da2 / sin_j;

    let p = (2.0 + rho + mu * rho) * (2.0 - rho + mu * rho) * (1.0 - mu * mu);
    let dp = (1.0 - mu * mu) * ((1.0 + mu) * (2.0 - rho + mu * rho) + (2.0 + rho + mu * rho) * (mu - 1.0));
    let sp = libm::sqrt(p);
    let dg = sp + rho * dp / (2.0 * sp);
    if !(df.is_finite() && dg.is_finite()) {
        return Err(Error::NonFiniteValue { rho, mu });
    }
    Ok(ShellTerms { f, g, df, dg })
}

/// `(f(ρ, μ), g(ρ, μ))` for `0 < ρ ≤ 1`, `0 ≤ μ ≤ √3 − 1`.
pub fn shell_fg(rho: f64, mu: f64) -> Result<(f64, f64), Error> {
    check_domain(rho, mu, 0.0)?;
    let (f, g, _, _) = fg_raw(rho, mu)?;
    Ok((f, g))
}

fn h_raw(rho: f64, mu: f64) -> Result<f64, Error> {
    let t = shell_terms(rho, mu)?;
    Ok(0.25 * (t.df * t.g - t.dg * t.f))
}

/// `h = f′Δ − Δ′f` with `Δ = g/4`, for `0.2 ≤ ρ ≤ 1`, `0 ≤ μ ≤ √3 − 1`.
pub fn shell_h(rho: f64, mu: f64) -> Result<f64, Error> {
    check_domain(rho, mu, 0.2)?;
    h_raw(rho, mu)
}

/// The evaluation grid: both endpoints of each axis are included.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridSpec {
    pub rho_range: (f64, f64),
    pub mu_range: (f64, f64),
    pub n_rho: usize,
    pub n_mu: usize,
}

impl GridSpec {
    pub fn new(n_rho: usize, n_mu: usize) -> Result<Self, Error> {
        if n_rho < 2 || n_mu < 2 {
            return Err(Error::InvalidResolution(n_rho, n_mu));
        }
        Ok(GridSpec { rho_range: (0.2, 1.0), mu_range: (0.0, MU_CRITICAL), n_rho, n_mu })
    }

    pub fn default_resolution() -> Self {
        GridSpec::new(DEFAULT_RESOLUTION, DEFAULT_RESOLUTION).expect("valid default")
    }

    fn axis(range: (f64, f64), n: usize, k: usize) -> f64 {
        if k + 1 == n {
            range.1
        } else {
            range.0 + (range.1 - range.0) * (k as f64 / (n - 1) as f64)
        }
    }

    pub fn rho(&self, k: usize) -> f64 {
        GridSpec::axis(self.rho_range, self.n_rho, k)
    }

    pub fn mu(&self, m: usize) -> f64 {
        GridSpec::axis(self.mu_range, self.n_mu, m)
    }

    pub fn step_rho(&self) -> f64 {
        (self.rho_range.1 - self.rho_range.0) / (self.n_rho - 1) as f64
    }

    pub fn step_mu(&self) -> f64 {
        (self.mu_range.1 - self.mu_range.0) / (self.n_mu - 1) as f64
    }

    /// Largest variation of `h` between any point of the rectangle and its nearest node.
    pub fn lipschitz_loss(&self) -> f64 {
        LIPSCHITZ_RHO * self.step_rho() / 2.0 + LIPSCHITZ_MU * self.step_mu() / 2.0
    }

    /// Splits the `ρ` rows into consecutive chunks of at most `rows` rows.
    pub fn chunks(&self, rows: usize) -> Vec<Range<usize>> {
        let rows = rows.max(1);
        (0..self.n_rho).step_by(rows).map(|s| s..(s + rows).min(self.n_rho)).collect()
    }
}

/// Minimum of `h` over part of the grid, with the first node attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMinimum {
    pub value: f64,
    pub k: usize,
    pub m: usize,
}

impl GridMinimum {
    /// Combines two minima; ties go to the lower `(k, m)`.
    pub fn merge(self, other: GridMinimum) -> GridMinimum {
        if other.value < self.value || (other.value == self.value && (other.k, other.m) < (self.k, self.m)) {
            other
        } else {
            self
        }
    }
}

/// Minimum of `h` over the rows `rows` of the grid.
pub fn chunk_minimum(spec: &GridSpec, rows: Range<usize>) -> Result<GridMinimum, Error> {
    let mut best = GridMinimum { value: f64::INFINITY, k: rows.start, m: 0 };
    for k in rows {
        let rho = spec.rho(k);
        for m in 0..spec.n_mu {
            let mu = spec.mu(m);
            let v = h_raw(rho, mu)?;
            if !v.is_finite() {
                return Err(Error::NonFiniteValue { rho, mu });
            }
            if v < best.value {
                best = GridMinimum { value: v, k, m };
            }
        }
    }
    Ok(best)
}

/// Reduces chunk minima in chunk order.
pub fn reduce_minima(minima: impl IntoIterator<Item = GridMinimum>) -> Option<GridMinimum> {
    minima.into_iter().reduce(GridMinimum::merge)
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CertificationGrid {
    pub rho_range: (f64, f64),
    pub mu_range: (f64, f64),
    pub resolution: (usize, usize),
    pub grid_min: f64,
    pub argmin: (f64, f64),
    pub argmin_index: (usize, usize),
    pub lipschitz: (f64, f64),
    pub rounding_slack: f64,
    pub lipschitz_loss: f64,
    /// `grid_min − lipschitz_loss − rounding_slack`.
    pub global_lower_bound: f64,
    pub verdict: bool,
}

impl CertificationGrid {
    pub fn from_minimum(spec: &GridSpec, min: GridMinimum) -> Self {
        let loss = spec.lipschitz_loss();
        let bound = min.value - loss - ROUNDING_SLACK;
        CertificationGrid {
            rho_range: spec.rho_range,
            mu_range: spec.mu_range,
            resolution: (spec.n_rho, spec.n_mu),
            grid_min: min.value,
            argmin: (spec.rho(min.k), spec.mu(min.m)),
            argmin_index: (min.k, min.m),
            lipschitz: (LIPSCHITZ_RHO, LIPSCHITZ_MU),
            rounding_slack: ROUNDING_SLACK,
            lipschitz_loss: loss,
            global_lower_bound: bound,
            verdict: bound > 0.0,
        }
    }
}

/// Evaluates `h` on the whole grid on the calling thread.
pub fn certify_h_positive(spec: &GridSpec) -> Result<CertificationGrid, Error> {
    let mut minima = Vec::new();
    for rows in spec.chunks(64) {
        minima.push(chunk_minimum(spec, rows)?);
    }
    let min = reduce_minima(minima).expect("grid has at least two rows");
    Ok(CertificationGrid::from_minimum(spec, min))
}

/// Local minimization of `h` by compass search inside the rectangle.
pub fn refine_minimum(start: (f64, f64)) -> Result<(f64, f64, f64), Error> {
    let clamp = |rho: f64, mu: f64| (rho.clamp(0.2, 1.0), mu.clamp(0.0, MU_CRITICAL));
    let (mut rho, mut mu) = clamp(start.0, start.1);
    let mut best = shell_h(rho, mu)?;
    let mut step = 1e-3;
    while step > 1e-14 {
        let mut moved = false;
        for (dr, dm) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            let (r, m) = clamp(rho + dr * step, mu + dm * step);
            let v = shell_h(r, m)?;
            if v < best {
                (rho, mu, best) = (r, m, v);
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    Ok((rho, mu, best))
}

/// Agreement of the closed-form derivatives with central differences.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DerivativeGate {
    pub samples: usize,
    pub step: f64,
    pub max_error_f: f64,
    pub max_error_g: f64,
    /// Points where `h` and its finite-difference counterpart differ in sign.
    pub sign_mismatches: usize,
    pub passed: bool,
}

pub fn derivative_gate(samples: usize, seed: u64) -> Result<DerivativeGate, Error> {
    let step = 1e-6;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut ef, mut eg, mut mismatches) = (0.0f64, 0.0f64, 0);
    for _ in 0..samples {
        let rho = rng.random_range(0.2..=1.0);
        let mu = rng.random_range(0.0..=MU_CRITICAL);
        let t = shell_terms(rho, mu)?;
        let (fp, gp, _, _) = fg_raw(rho + step, mu)?;
        let (fm, gm, _, _) = fg_raw(rho - step, mu)?;
        let (dfn, dgn) = ((fp - fm) / (2.0 * step), (gp - gm) / (2.0 * step));
        ef = ef.max((t.df - dfn).abs());
        eg = eg.max((t.dg - dgn).abs());
        let h = t.df * t.g - t.dg * t.f;
        let hn = dfn * t.g - dgn * t.f;
        if (h > 0.0) != (hn > 0.0) {
            mismatches += 1;
        }
    }
    Ok(DerivativeGate {
        samples,
        step,
        max_error_f: ef,
        max_error_g: eg,
        sign_mismatches: mismatches,
        passed: ef <= 1e-6 && eg <= 1e-6 && mismatches == 0,
    })
}

/// Largest observed `|∂h/∂ρ|` and `|∂h/∂μ|` at random points, by central differences.
pub fn lipschitz_spot_check(samples: usize, seed: u64) -> Result<(f64, f64), Error> {
    let step = 1e-6;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut lr, mut lm) = (0.0f64, 0.0f64);
    for _ in 0..samples {
        let rho = rng.random_range(0.2 + step..=1.0 - step);
        let mu = rng.random_range(step..=MU_CRITICAL - step);
        let dr = (h_raw(rho + step, mu)? - h_raw(rho - step, mu)?) / (2.0 * step);
        let dm = (h_raw(rho, mu + step)? - h_raw(rho, mu - step)?) / (2.0 * step);
        lr = lr.max(dr.abs());
        lm = lm.max(dm.abs());
    }
    Ok((lr, lm))
}

/// `σ_shell(μ) − (7 − μ)/(5 + μ)`.
pub fn case1_margin(mu: f64) -> f64 {
    coefficients(mu).sigma_shell - (7.0 - mu) / (5.0 + mu)
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MarginScan {
    pub samples: usize,
    pub min_margin: f64,
    pub argmin_mu: f64,
    /// Margins never increase along the samples.
    pub decreasing: bool,
}

/// `case1_margin` at `samples` equally spaced orders in `[0, √3 − 1]`.
pub fn case1_scan(samples: usize) -> MarginScan {
    let n = samples.max(2);
    let mut scan = MarginScan { samples: n, min_margin: f64::INFINITY, argmin_mu: 0.0, decreasing: true };
    let mut prev = f64::INFINITY;
    for k in 0..n {
        let mu = GridSpec::axis((0.0, MU_CRITICAL), n, k);
        let v = case1_margin(mu);
        if v < scan.min_margin {
            scan.min_margin = v;
            scan.argmin_mu = mu;
        }
        if v > prev {
            scan.decreasing = false;
        }
        prev = v;
    }
    scan
}

/// `(αA² + βB²)/Δ` for the triangle with sides `A`, `B` enclosing the angle `γ`; `α`
/// and `β` are the angles at the far ends of `A` and `B`.
pub fn fab(a: f64, b: f64, gamma: f64) -> f64 {
    let c = libm::sqrt(a * a + b * b - 2.0 * a * b * libm::cos(gamma));
    let delta = 0.5 * a * b * libm::sin(gamma);
    let alpha = libm::atan2(2.0 * delta, a * a + c * c - b * b);
    let beta = libm::atan2(2.0 * delta, b * b + c * c - a * a);
    (alpha * a * a + beta * b * b) / delta
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FabReport {
    pub gammas: Vec<f64>,
    pub values: Vec<f64>,
    pub strictly_decreasing: bool,
}

/// Samples `fab` at `gamma_samples` equally spaced interior angles of `(0, π)`.
pub fn fab_monotonicity(a: f64, b: f64, gamma_samples: usize) -> Result<FabReport, Error> {
    if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidArgument("side lengths must be positive"));
    }
    if gamma_samples < 3 {
        return Err(Error::InvalidArgument("at least three angle samples are needed"));
    }
    let gammas: Vec<f64> = (1..=gamma_samples).map(|k| PI * k as f64 / (gamma_samples + 1) as f64).collect();
    let values: Vec<f64> = gammas.iter().map(|&g| fab(a, b, g)).collect();
    let strictly_decreasing = values.windows(2).all(|w| w[1] < w[0]);
    Ok(FabReport { gammas, values, strictly_decreasing })
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NocoreProbe {
    /// Largest `ν` for which the triple is a ν-arrangement.
    pub max_nu: f64,
    pub pairwise_intersecting: bool,
    pub covers_center_triangle: bool,
}

pub fn nocore_probe(disks: &[Disk; 3]) -> Result<NocoreProbe, Error> {
    let tri = Triangle::new(disks[0].center, disks[1].center, disks[2].center);
    if tri.metrics().degenerate {
        return Err(Error::Collinear);
    }
    let mut max_nu = f64::INFINITY;
    let mut pairwise_intersecting = true;
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        let (a, b) = (disks[u], disks[v]);
        let d = a.center.distance(b.center);
        max_nu = max_nu.min((d - a.radius.max(b.radius)) / a.radius.min(b.radius));
        pairwise_intersecting &= d <= a.radius + b.radius;
    }
    let covers = closed_union_covers_triangle(&tri, disks, 100_000).covered;
    Ok(NocoreProbe { max_nu, pairwise_intersecting, covers_center_triangle: covers })
}
