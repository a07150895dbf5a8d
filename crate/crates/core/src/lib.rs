//! Generalized Minkowski arrangements (μ-arrangements) of open disks in the plane.
//!
//! A μ-arrangement is a finite family of open disks in which no member overlaps the
//! μ-core (the concentric copy scaled by μ) of another member. This crate validates
//! such families, splits their union into outer shell, inner shell and core, evaluates
//! the sharp total-area bound with equality detection, certifies the analytic
//! inequality behind the shell estimate on a Lipschitz grid, and builds the extremal
//! hexagonal constructions.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command line and
//! the multi-threaded certification driver live in the `muarr` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod bounds;
pub mod certify;
pub mod constructions;
pub mod decomposition;
mod error;
pub mod geometry;
mod index;

pub use arrangement::{
    adjacency_pairs, classify_digon, connected_components, find_digons, is_adjacent, validate,
    Digon, InscribedFamily, InscribedFamilyPoint, MuArrangement, ValidationReport, Violation,
};
pub use bounds::{
    coefficients, core_triangle_check, prop1_packing_check, shell_triangle_check, theorem_bound,
    theorem_bound_with_tolerance, BoundMode, BoundReport, Coefficients, PackingReport,
    TriangleCheck,
};
pub use certify::{
    case1_margin, case1_scan, certify_h_positive, chunk_minimum, derivative_gate, fab,
    fab_monotonicity, lipschitz_spot_check, nocore_probe, reduce_minima, refine_minimum,
    shell_fg, shell_h, shell_terms, CertificationGrid, DerivativeGate, FabReport, GridMinimum,
    GridSpec, MarginScan, NocoreProbe, ShellTerms,
};
pub use constructions::{
    density_estimate, hex_arrangement, iterate_hex, random_arrangement, DensityEstimate,
    RandomArrangement, Window,
};
pub use decomposition::{
    core_polygons, decompose, inner_shell, outer_shell, CoreDefect, CoreDiagnostic, CorePolygon,
    CorePolygons, OuterSector, RegionDecomposition, ShellTriangle,
};
pub use error::{CoreHypothesis, Error};
pub use geometry::{
    circle_relation, closed_union_covers_triangle, gauge_norm, polygon_area, triangle_metrics,
    union_area, AngleInterval, CircleRelation, Coverage, Disk, Point, SymmetricGauge, Triangle,
    TriangleMetrics, UnionArea,
};

/// Global length tolerance used to classify tangency, containment and boundary membership.
pub const EPS_GEOM: f64 = 1e-9;

/// Tolerance on the inscribed-disk parameter when deciding adjacency.
pub const EPS_PARAM: f64 = 1e-9;

/// Relative slack under which the area bound is reported as attained.
pub const TOL_EQ: f64 = 1e-6;

/// `√3 − 1`, the largest order for which the hexagonal arrangement still covers the plane.
pub const MU_CRITICAL: f64 = 0.732_050_807_568_877_2;
