use crate::geometry::Point;

/// Errors produced by the arrangement toolkit.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("disk radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("coordinates must be finite")]
    NonFiniteCoordinate,
    #[error("the disk family is empty")]
    EmptyFamily,
    #[error("order mu = {0} is outside (0, 1)")]
    MuOutOfRange(f64),
    #[error("arrangement condition violated by {count} pair(s), first ({i}, {j})")]
    InvalidArrangement { count: usize, i: usize, j: usize },
    #[error("disks {i} and {j} do not form a digon")]
    NotOverlapping { i: usize, j: usize },
    #[error("disk index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("invalid gauge polygon: {0}")]
    InvalidGauge(&'static str),
    #[error("(rho, mu) = ({rho}, {mu}) is outside the domain")]
    OutOfDomain { rho: f64, mu: f64 },
    #[error("arccos argument {value} leaves [-1, 1] by more than rounding at (rho, mu) = ({rho}, {mu})")]
    ClampExcursion { rho: f64, mu: f64, value: f64 },
    #[error("non-finite value at (rho, mu) = ({rho}, {mu})")]
    NonFiniteValue { rho: f64, mu: f64 },
    #[error("grid resolution must be at least 2 x 2, got {0} x {1}")]
    InvalidResolution(usize, usize),
    #[error("centers are collinear")]
    Collinear,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("core-triangle hypothesis failed: {0}")]
    Hypothesis(CoreHypothesis),
    #[error("tau = {0} is outside (0, 1)")]
    TauOutOfRange(f64),
    #[error("window radius must be positive and finite, got {0}")]
    InvalidWindow(f64),
    #[error("no disk lies entirely inside the window")]
    EmptyWindow,
}

/// Which hypothesis of the core-triangle inequality failed, with a witness.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CoreHypothesis {
    /// The pair violates the μ-arrangement condition.
    ArrangementViolated { u: usize, v: usize },
    /// The closed intersection of `u` and `v` is empty or lies inside the open disk `w`.
    PairIntersectionCovered { u: usize, v: usize, w: usize },
    /// The triangle of centers is not covered by the closed disks; `witness` is uncovered.
    NotCovered { witness: Point },
    /// The three centers are collinear.
    Degenerate,
}

impl core::fmt::Display for CoreHypothesis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoreHypothesis::ArrangementViolated { u, v } => {
                write!(f, "disks {u} and {v} violate the arrangement condition")
            }
            CoreHypothesis::PairIntersectionCovered { u, v, w } => {
                write!(f, "closed intersection of {u} and {v} is not outside open disk {w}")
            }
            CoreHypothesis::NotCovered { witness } => {
                write!(f, "point ({}, {}) of the triangle is uncovered", witness.x, witness.y)
            }
            CoreHypothesis::Degenerate => write!(f, "centers are collinear"),
        }
    }
}
