//! Generalized geometric measure for three-party pure states and the
//! generalized-GHZ lower-boundary relations linking it to the monogamy
//! score of one and two copies.

use crate::error::{Error, Result};
use crate::linalg;
use crate::monogamy::{monogamy_score, ScoreParts};
use crate::states::{reduced_density, PureState};
use crate::tol;

/// Domain slack accepted at the boundary-function endpoints before the
/// input is rejected; spectra land within ~1e-12 of the exact range.
const DOMAIN_SLACK: f64 = 1e-9;

/// GGM of a three-party pure state: one minus the largest single-site
/// eigenvalue, together with the site attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GgmValue {
    value: f64,
    max_eigen_site: usize,
}

impl GgmValue {
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Site whose reduced state holds the overall maximum eigenvalue
    /// (lowest index on ties).
    pub fn max_eigen_site(&self) -> usize {
        self.max_eigen_site
    }
}

/// Outcome of the lower-boundary check for one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropositionCheck {
    pub delta: f64,
    pub ggm: f64,
    pub bound: f64,
    /// Whether the GGM maximum eigenvalue comes from the nodal site — the
    /// hypothesis under which the bound is proven; numerically it holds
    /// regardless.
    pub nodal_attains_max: bool,
    pub holds: bool,
}

/// Compute the GGM `1 − maxᵢ λᵢ^max` of a three-party pure state.
pub fn ggm(psi: &PureState) -> Result<GgmValue> {
    if psi.num_parties() != 3 {
        return Err(Error::NotThreeQubits {
            expected: 3,
            got: psi.dims().as_slice().to_vec(),
        });
    }
    let mut best = f64::NEG_INFINITY;
    let mut site = 0;
    for k in 0..3 {
        let reduced = reduced_density(psi, &[k])?;
        let lam = linalg::hermitian_eigenvalues(reduced.matrix())?.max();
        if lam > best {
            best = lam;
            site = k;
        }
    }
    Ok(GgmValue {
        value: (1.0 - best).max(0.0),
        max_eigen_site: site,
    })
}

/// GGM of the generalized GHZ state whose monogamy score equals `delta`
/// (the `α ≥ ½` branch): `E = 1 − ½(1 + √(1 − 4δ²))`.
pub fn gghz_boundary(delta: f64) -> Result<f64> {
    let delta = check_range("delta", delta, 0.0, 0.5)?;
    Ok(1.0 - 0.5 * (1.0 + (1.0 - 4.0 * delta * delta).max(0.0).sqrt()))
}

/// GGM of the generalized GHZ state whose *two-copy* monogamy score equals
/// `delta2`: invert `2ν(1+ν) = δ⁽²⁾` for `ν = √(α(1−α))`, then map as in
/// the single-copy boundary.
pub fn gghz_boundary_two_copies(delta2: f64) -> Result<f64> {
    let delta2 = check_range("delta2", delta2, 0.0, 1.5)?;
    let nu = 0.5 * ((1.0 + 2.0 * delta2).sqrt() - 1.0);
    Ok(1.0 - 0.5 * (1.0 + (1.0 - 4.0 * nu * nu).max(0.0).sqrt()))
}

fn check_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if !value.is_finite() || value < lo - DOMAIN_SLACK || value > hi + DOMAIN_SLACK {
        return Err(Error::OutOfRange {
            name,
            value,
            lo,
            hi,
        });
    }
    Ok(value.clamp(lo, hi))
}

/// Check the generalized-GHZ lower bound `GGM ≥ boundary(δ)` for a
/// three-qubit pure state with nonnegative monogamy score (party 0 nodal).
pub fn proposition_check(psi: &PureState) -> Result<PropositionCheck> {
    let parts = ScoreParts::from_pure(psi, 0)?;
    let delta = monogamy_score(&parts);
    let bound = gghz_boundary(delta)?;
    let g = ggm(psi)?;
    Ok(PropositionCheck {
        delta,
        ggm: g.value(),
        bound,
        nodal_attains_max: g.max_eigen_site() == 0,
        holds: g.value() >= bound - tol::BOUNDARY_SLACK,
    })
}
