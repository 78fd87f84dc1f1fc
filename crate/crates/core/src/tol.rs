//! Central tolerances. Every threshold used by the numeric paths lives here
//! so that reproducibility claims are auditable in one place.

/// Two floating-mode phases are considered equal when within this bound.
/// Exact-mode phases are compared without any tolerance.
pub const PHASE_TOL: f64 = 1e-9;

/// Default convergence tolerance for limiting phases and log-masses of a
/// sampled Cauchy sequence.
pub const CONV_TOL: f64 = 1e-6;

/// Tolerance of the derivative-free optimizer used for the quotient metrics
/// (grid sweep plus simplex refinement).
pub const OPT_TOL: f64 = 1e-4;

/// Tolerance of the golden-section refinement inside the displacement sup.
pub const SUP_REFINE_TOL: f64 = 1e-9;

/// Agreement required of group arithmetic round trips (compose with inverse,
/// lift bookkeeping).
pub const GROUP_TOL: f64 = 1e-12;

/// Grid resolution for the sup over one period of `theta - id`.
pub const THETA_GRID: usize = 4096;

/// Grid points per axis for the coarse quotient-metric sweep.
pub const QUOTIENT_GRID: usize = 33;

/// Cap on the number of hearts the atlas closure may register.
pub const ATLAS_CAP: usize = 10_000;

/// Default bound on HN filtration length (and search depth) for models that
/// do not declare their own.
pub const DEFAULT_MAX_HN_LENGTH: usize = 16;
