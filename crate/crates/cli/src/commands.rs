//! One function per subcommand. Each returns the rendered report and whether the
//! checked property held; side files (SVG, generated arrangements) are written here.

use std::fs;
use std::path::Path;
use std::time::Instant;

use muarr_core::{
    case1_margin, case1_scan, coefficients, decompose, density_estimate, derivative_gate, iterate_hex,
    lipschitz_spot_check, random_arrangement, refine_minimum, theorem_bound_with_tolerance, BoundMode,
    CertificationGrid, Coefficients, DensityEstimate, DerivativeGate, GridSpec, MarginScan, MuArrangement,
    ValidationReport, Window, MU_CRITICAL, TOL_EQ,
};
use serde::Serialize;

use crate::error::CliError;
use crate::format::ArrangementFile;
use crate::parallel::certify_parallel;
use crate::report::{digest, ReportFile};
use crate::svg;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Violation,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Violation => 1,
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Success
        } else {
            Status::Violation
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub report: String,
    pub status: Status,
}

pub const DERIVATIVE_GATE_SAMPLES: usize = 10_000;
pub const CASE1_SAMPLES: usize = 10_000;
pub const LIPSCHITZ_SAMPLES: usize = 100_000;
const SEED: u64 = 0x6d75_6172;

fn read(path: &Path) -> Result<(ArrangementFile, String), CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    let text = String::from_utf8(bytes).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let file = ArrangementFile::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok((file, digest(text.as_bytes())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn window(radius: f64) -> Result<Window, CliError> {
    Window::centered(radius).map_err(|source| CliError::Field { field: "--window-radius".into(), source })
}

pub fn validate(input: &Path) -> Result<Outcome, CliError> {
    let (file, digest) = read(input)?;
    let arr = file.arrangement()?;
    let v = arr.validate();
    let status = Status::from_bool(v.valid);
    Ok(Outcome { report: ReportFile::new("validate", Some(digest), v).render(), status })
}

#[derive(Debug, Serialize)]
struct Areas {
    area_u: f64,
    area_o: f64,
    area_i: f64,
    area_c: f64,
    core_polygon_area: f64,
    /// `(O + I + C − U) / U`.
    additivity_residual: f64,
}

#[derive(Debug, Serialize)]
struct Counts {
    disks: usize,
    outer_sectors: usize,
    shell_triangles: usize,
    core_polygons: usize,
}

#[derive(Debug, Serialize)]
struct Decomposition {
    mu: f64,
    areas: Areas,
    counts: Counts,
}

#[derive(Debug, Serialize)]
struct Rejected {
    validation: ValidationReport,
}

fn rejected(command: &'static str, digest: String, validation: ValidationReport) -> Outcome {
    let mut report = ReportFile::new(command, Some(digest), Rejected { validation });
    report.warnings.push("input is not a valid arrangement of the given order".into());
    Outcome { report: report.render(), status: Status::Violation }
}

fn summarize(arr: &MuArrangement, d: &muarr_core::RegionDecomposition) -> (Areas, Counts, Vec<String>) {
    let areas = Areas {
        area_u: d.area_u,
        area_o: d.area_o,
        area_i: d.area_i,
        area_c: d.area_c,
        core_polygon_area: d.core_polygon_area,
        additivity_residual: (d.area_o + d.area_i + d.area_c - d.area_u) / d.area_u,
    };
    let counts = Counts {
        disks: arr.len(),
        outer_sectors: d.outer.len(),
        shell_triangles: d.shell.len(),
        core_polygons: d.core_polys.len(),
    };
    let warnings = d
        .diagnostics
        .iter()
        .map(|g| format!("core polygon at digon ({}, {}) skipped: {:?} (members {:?})", g.i, g.j, g.defect, g.vertices))
        .collect();
    (areas, counts, warnings)
}

pub fn decompose_file(input: &Path, svg_out: Option<&Path>) -> Result<Outcome, CliError> {
    let (file, digest) = read(input)?;
    let arr = file.arrangement()?;
    let v = arr.validate();
    if !v.valid {
        return Ok(rejected("decompose", digest, v));
    }
    let d = decompose(&arr);
    if let Some(path) = svg_out {
        write(path, &svg::render(&arr, &d))?;
    }
    let (areas, counts, warnings) = summarize(&arr, &d);
    let mut report = ReportFile::new("decompose", Some(digest), Decomposition { mu: arr.mu(), areas, counts });
    report.warnings = warnings;
    Ok(Outcome { report: report.render(), status: Status::Success })
}

#[derive(Debug, Serialize)]
struct Bound {
    mode: BoundMode,
    banner: Option<&'static str>,
    coefficients: Coefficients,
    total_disk_area: f64,
    rhs: f64,
    slack: f64,
    tolerance: f64,
    slack_within_tolerance: bool,
    non_thick_free_digons: Vec<(usize, usize)>,
    equality: bool,
    holds: bool,
    areas: Areas,
    counts: Counts,
}

pub const CONJECTURAL_BANNER: &str =
    "conjectural: mu exceeds sqrt(3) - 1, the core term is dropped and this bound is not a theorem";

pub fn verify_bound(input: &Path, tolerance: Option<f64>) -> Result<Outcome, CliError> {
    let tolerance = tolerance.unwrap_or(TOL_EQ);
    if !(tolerance >= 0.0 && tolerance.is_finite()) {
        return Err(CliError::Usage(format!("--tolerance must be a finite non-negative number, got {tolerance}")));
    }
    let (file, digest) = read(input)?;
    let arr = file.arrangement()?;
    let v = arr.validate();
    if !v.valid {
        return Ok(rejected("verify-bound", digest, v));
    }
    let r = theorem_bound_with_tolerance(&arr, tolerance);
    let (areas, counts, warnings) = summarize(&arr, &r.decomposition);
    let result = Bound {
        mode: r.mode,
        banner: (r.mode == BoundMode::Conjectural).then_some(CONJECTURAL_BANNER),
        coefficients: r.coefficients,
        total_disk_area: r.total_disk_area,
        rhs: r.rhs,
        slack: r.slack,
        tolerance: r.tolerance,
        slack_within_tolerance: r.slack_within_tolerance,
        non_thick_free_digons: r.non_thick_free_digons,
        equality: r.equality,
        holds: r.holds,
        areas,
        counts,
    };
    let mut report = ReportFile::new("verify-bound", Some(digest), result);
    report.warnings = warnings;
    Ok(Outcome { report: report.render(), status: Status::from_bool(r.holds) })
}

#[derive(Debug, Serialize)]
struct Refinement {
    rho: f64,
    mu: f64,
    h: f64,
}

#[derive(Debug, Serialize)]
struct Case1 {
    margin_at_critical: f64,
    scan: MarginScan,
}

#[derive(Debug, Serialize)]
struct Timing {
    threads: usize,
    grid_seconds: f64,
    total_seconds: f64,
}

#[derive(Debug, Serialize)]
struct Certification {
    derivative_gate: DerivativeGate,
    grid: Option<CertificationGrid>,
    /// `grid_min` to 12 significant digits.
    grid_min_12: Option<String>,
    margin_arithmetic: Option<String>,
    refined_minimum: Option<Refinement>,
    case1: Case1,
    /// Largest observed |∂h/∂ρ| and |∂h/∂μ| by finite differences; reported only.
    lipschitz_observed: (f64, f64),
    verdict: bool,
    timing: Timing,
}

/// Parses `N` or `NxM`.
pub fn parse_resolution(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad resolution `{s}`: {e}"));
    match s.split_once(['x', 'X']) {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

pub fn certify(resolution: (usize, usize), threads: usize) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let spec = GridSpec::new(resolution.0, resolution.1)?;
    let gate = derivative_gate(DERIVATIVE_GATE_SAMPLES, SEED)?;
    let mut grid = None;
    let mut grid_seconds = 0.0;
    let mut refined = None;
    if gate.passed {
        let t = Instant::now();
        let g = certify_parallel(&spec, threads)?;
        grid_seconds = t.elapsed().as_secs_f64();
        let (rho, mu, h) = refine_minimum(g.argmin)?;
        refined = Some(Refinement { rho, mu, h });
        grid = Some(g);
    }
    let case1 = Case1 { margin_at_critical: case1_margin(MU_CRITICAL), scan: case1_scan(CASE1_SAMPLES) };
    let lipschitz_observed = lipschitz_spot_check(LIPSCHITZ_SAMPLES, SEED)?;
    let verdict = grid.is_some_and(|g| g.verdict) && case1.scan.min_margin > 0.0;
    let margin_arithmetic = grid.map(|g| {
        format!(
            "grid_min {:.12e} - lipschitz_loss {:.12e} (= {} * {:.6e} / 2 + {} * {:.6e} / 2) - rounding {:e} = {:.12e} {} 0",
            g.grid_min,
            g.lipschitz_loss,
            g.lipschitz.0,
            spec.step_rho(),
            g.lipschitz.1,
            spec.step_mu(),
            g.rounding_slack,
            g.global_lower_bound,
            if g.verdict { ">" } else { "<=" }
        )
    });
    let result = Certification {
        derivative_gate: gate,
        grid_min_12: grid.map(|g| format!("{:.11e}", g.grid_min)),
        grid,
        margin_arithmetic,
        refined_minimum: refined,
        case1,
        lipschitz_observed,
        verdict,
        timing: Timing { threads, grid_seconds, total_seconds: start.elapsed().as_secs_f64() },
    };
    let mut report = ReportFile::new("certify", None, result);
    if !gate.passed {
        report.warnings.push("closed-form derivatives disagree with finite differences; grid not evaluated".into());
    }
    Ok(Outcome { report: report.render(), status: Status::from_bool(verdict) })
}

#[derive(Debug, Serialize)]
struct Reference {
    /// Limit density of the unrefined hexagonal arrangement.
    formula: &'static str,
    value: f64,
    relative_deviation: f64,
}

fn reference(mu: f64, delta_u: f64) -> Reference {
    let c = coefficients(mu);
    let (formula, value) =
        if mu <= MU_CRITICAL { ("sigma_core", c.sigma_core) } else { ("sigma_shell", c.sigma_shell) };
    Reference { formula, value, relative_deviation: (delta_u - value) / value }
}

#[derive(Debug, Serialize)]
struct Hex {
    mu: f64,
    window_radius: f64,
    tau: Option<f64>,
    iterations: usize,
    n_disks: usize,
    density: DensityEstimate,
    reference: Reference,
}

pub fn hex(
    mu: f64,
    window_radius: f64,
    tau: Option<f64>,
    iterations: usize,
    output: Option<&Path>,
) -> Result<Outcome, CliError> {
    let w = window(window_radius)?;
    let arr = match (tau, iterations) {
        (_, 0) => iterate_hex(mu, tau.unwrap_or(0.5), 0, &w)?,
        (Some(t), k) => iterate_hex(mu, t, k, &w)?,
        (None, _) => return Err(CliError::Usage("--iterations needs --tau".into())),
    };
    let text = ArrangementFile::from_disks(mu, arr.disks()).to_json();
    if let Some(path) = output {
        write(path, &text)?;
    }
    let density = density_estimate(arr.disks(), &w)?;
    let result = Hex {
        mu,
        window_radius,
        tau,
        iterations,
        n_disks: arr.len(),
        reference: reference(mu, density.delta_u),
        density,
    };
    Ok(Outcome { report: ReportFile::new("hex", Some(digest(text.as_bytes())), result).render(), status: Status::Success })
}

#[derive(Debug, Serialize)]
struct Random {
    mu: f64,
    window_radius: f64,
    seed: u64,
    target: usize,
    accepted: usize,
    proposals: usize,
    shortfall: usize,
}

pub fn random(mu: f64, window_radius: f64, count: usize, seed: u64, output: Option<&Path>) -> Result<Outcome, CliError> {
    let w = window(window_radius)?;
    let r = random_arrangement(mu, &w, count, seed)?;
    let text = ArrangementFile::from_disks(mu, r.arrangement.disks()).to_json();
    if let Some(path) = output {
        write(path, &text)?;
    }
    let result = Random {
        mu,
        window_radius,
        seed,
        target: r.target,
        accepted: r.arrangement.len(),
        proposals: r.proposals,
        shortfall: r.shortfall,
    };
    let mut report = ReportFile::new("random", Some(digest(text.as_bytes())), result);
    if r.shortfall > 0 {
        report.warnings.push(format!("only {} of {} disks placed", r.arrangement.len(), r.target));
    }
    Ok(Outcome { report: report.render(), status: Status::from_bool(r.shortfall == 0) })
}

#[derive(Debug, Serialize)]
struct Density {
    mu: f64,
    window_radius: f64,
    density: DensityEstimate,
}

pub fn density(input: &Path, window_radius: f64) -> Result<Outcome, CliError> {
    let (file, digest) = read(input)?;
    let w = window(window_radius)?;
    let disks = file.disks()?;
    let density = density_estimate(&disks, &w)?;
    let result = Density { mu: file.mu, window_radius, density };
    Ok(Outcome { report: ReportFile::new("density", Some(digest), result).render(), status: Status::Success })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolution_forms() {
        assert_eq!(parse_resolution("100"), Ok((100, 100)));
        assert_eq!(parse_resolution("8691x20"), Ok((8691, 20)));
        assert!(parse_resolution("10y").is_err());
    }

    #[test]
    fn coarse_grid_fails_with_margin_arithmetic() {
        let out = certify((100, 100), 2).unwrap();
        assert_eq!(out.status, Status::Violation);
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        let grid = &v["result"]["grid"];
        assert_eq!(grid["verdict"], false);
        let loss = grid["lipschitz_loss"].as_f64().unwrap();
        assert!((loss - 0.1246).abs() < 5e-4, "{loss}");
        assert!(v["result"]["margin_arithmetic"].as_str().unwrap().contains("<= 0"));
    }
}
