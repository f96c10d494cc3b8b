//! Numerical tolerances used across the crate, collected in one place so
//! every threshold has a single authoritative value.

/// Maximum absolute entry deviation of `h - h†` tolerated before a matrix
/// is rejected as non-Hermitian. Kronecker-product round-off at the
/// supported dimensions stays orders of magnitude below this.
pub const HERMITICITY: f64 = 1e-10;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm falls below this.
pub const JACOBI_OFF_DIAG: f64 = 1e-12;

/// Hard cap on Jacobi sweeps; quadratic convergence makes this generous.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Most negative eigenvalue tolerated when validating a density matrix.
pub const PSD: f64 = 1e-8;

/// Allowed deviation of a density-matrix trace from one.
pub const UNIT_TRACE: f64 = 1e-10;

/// Allowed deviation of a pure state's squared norm from one.
pub const STATE_NORM: f64 = 1e-10;

/// Three-tangle threshold separating numerical zero from genuine
/// GHZ-class tangle.
pub const TANGLE_FLOOR: f64 = 1e-9;

/// Smallest simplex population accepted when sampling W-class canonical
/// forms; keeps samples away from the class boundary.
pub const SIMPLEX_FLOOR: f64 = 1e-6;

/// Monogamy slack: a score `delta >= -MONOGAMY` counts as monogamous.
/// Spectra carry ~1e-12 noise, so exact zero would be an unstable rule.
pub const MONOGAMY: f64 = 1e-10;

/// Slack allowed when checking the generalized-GHZ lower boundary.
pub const BOUNDARY_SLACK: f64 = 1e-9;

/// Rejection-sampler iteration cap; exceeding it signals a broken rng.
pub const RESAMPLE_CAP: usize = 10_000;
