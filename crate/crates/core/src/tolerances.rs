//! Pinned numerical tolerances used by the checks and the test suites.
//!
//! Two regimes: pure tent arithmetic (a handful of roundings per value)
//! gets 1e-12-class budgets; anything routed through a transform
//! accumulates O(M log M) roundoff and gets 1e-9-class budgets.

/// Tent-arithmetic inequality slack (geometric ratio bound, sharp unit
/// bound, symbol domination).
pub const TENT_TOL: f64 = 1e-12;

/// Transform-mediated inequality slack (operator norms, tail norms,
/// Plancherel comparisons).
pub const TRANSFORM_TOL: f64 = 1e-9;

/// Per-frequency agreement between the summed block symbol and its
/// telescoped closed form.
pub const TELESCOPE_POINTWISE_TOL: f64 = 1e-13;

/// Admissible negative excursion of a single Fejér block symbol value.
/// Blocks are nonnegative in exact arithmetic.
pub const BLOCK_NONNEG_TOL: f64 = 1e-15;

/// Relative agreement demanded between the space-side and
/// frequency-side evaluations of the L2 norm.
pub const NORM_AGREEMENT_REL: f64 = 1e-10;

/// Relative agreement between direct-quadrature convolution and
/// spectral multiplication.
pub const ORACLE_REL: f64 = 1e-8;

/// Relative tolerance for the extremal pure-mode ratio against the
/// exact symbol supremum.
pub const EXTREMAL_TOL: f64 = 1e-10;

/// Switch-over threshold for the closed-form kernel: below this
/// |sin(x/2)| the removable singularity is patched with its limit.
/// Far below any grid spacing in use (2π/2^22 ≈ 1.5e-6).
pub const CLOSED_FORM_SINGULARITY_EPS: f64 = 1e-12;

/// A consecutive-term ratio must exceed 1 by at least this margin for
/// a sequence to certify as lacunary.
pub const RATIO_MARGIN: f64 = 1e-12;

/// Coefficient magnitudes below this fraction of the peak are treated
/// as zero when measuring a signal's bandwidth.
pub const BANDWIDTH_REL_CUTOFF: f64 = 1e-12;
