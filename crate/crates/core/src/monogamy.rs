//! Negativity, monogamy scores, closed-form multicopy and pair-of-states
//! scores, and activation searches.
//!
//! The closed forms let multicopy scores be evaluated for any copy count
//! without ever building the Kronecker power; the explicit-power route is
//! kept as an independent cross-check.

use crate::error::{Error, Result};
use crate::ggm;
use crate::linalg::{self};
use crate::states::{ClassLabel, DensityMatrix, PureState};
use crate::tol;

/// The negativities a monogamy score is assembled from: the nodal party
/// against the rest, and the nodal party against each other party in
/// ascending party order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreParts {
    n_one_rest: f64,
    n_pair: Vec<f64>,
    nodal: usize,
}

impl ScoreParts {
    pub fn new(n_one_rest: f64, n_pair: Vec<f64>, nodal: usize) -> Result<Self> {
        let n_one_rest = clamp_negativity(n_one_rest)?;
        let n_pair = n_pair
            .into_iter()
            .map(clamp_negativity)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n_one_rest,
            n_pair,
            nodal,
        })
    }

    /// Score parts of a pure state with the given nodal party.
    pub fn from_pure(psi: &PureState, nodal: usize) -> Result<Self> {
        Self::from_density(&psi.density(), nodal)
    }

    /// Score parts of an arbitrary (pure or mixed) state.
    pub fn from_density(rho: &DensityMatrix, nodal: usize) -> Result<Self> {
        let parties = rho.num_parties();
        if parties < 2 {
            return Err(Error::TooFewParties(parties));
        }
        if nodal >= parties {
            return Err(Error::SubsystemIndex {
                index: nodal,
                count: parties,
            });
        }
        let mask: Vec<bool> = (0..parties).map(|i| i == nodal).collect();
        let n_one_rest = negativity(rho, &mask)?;
        let mut n_pair = Vec::with_capacity(parties - 1);
        for other in (0..parties).filter(|&i| i != nodal) {
            let pair = rho.reduced(&[nodal, other])?;
            let pair_mask = if nodal < other {
                [true, false]
            } else {
                [false, true]
            };
            n_pair.push(negativity(&pair, &pair_mask)?);
        }
        Self::new(n_one_rest, n_pair, nodal)
    }

    pub fn n_one_rest(&self) -> f64 {
        self.n_one_rest
    }

    pub fn n_pair(&self) -> &[f64] {
        &self.n_pair
    }

    pub fn nodal(&self) -> usize {
        self.nodal
    }

    fn ensure_three_party(&self, other: &Self) -> Result<()> {
        if self.n_pair.len() != 2 || other.n_pair.len() != 2 {
            return Err(Error::PairArity {
                left: self.n_pair.len(),
                right: other.n_pair.len(),
            });
        }
        Ok(())
    }
}

fn clamp_negativity(v: f64) -> Result<f64> {
    if v >= 0.0 {
        Ok(v + 0.0) // clears a -0.0 sign bit
    } else if v > -1e-12 {
        // Spectral noise; snap to the exact boundary.
        Ok(0.0)
    } else {
        Err(Error::NegativeScorePart(v))
    }
}

/// Negativity across the bipartition given by `side_mask`: the absolute sum
/// of negative eigenvalues of the partial transpose, cross-checked against
/// the trace-norm form `(‖ρ^T‖₁ − 1)/2`.
pub fn negativity(rho: &DensityMatrix, side_mask: &[bool]) -> Result<f64> {
    let pt = linalg::partial_transpose(rho.matrix(), rho.dims(), side_mask)?;
    let spectrum = linalg::hermitian_eigenvalues(&pt)?;
    let from_negatives = spectrum.negative_part();
    let from_trace_norm = (spectrum.abs_sum() - 1.0) / 2.0;
    assert!(
        (from_negatives - from_trace_norm).abs() <= 1e-10,
        "negativity routes disagree: {from_negatives} vs {from_trace_norm}"
    );
    Ok(from_negatives)
}

/// Negativity of a pure state across nodal-vs-rest when the nodal party is
/// a qubit: `√(λ₁(1−λ₁))` with `λ₁` the larger nodal eigenvalue.
pub fn pure_negativity_one_vs_rest(psi: &PureState, nodal: usize) -> Result<f64> {
    if nodal >= psi.num_parties() {
        return Err(Error::SubsystemIndex {
            index: nodal,
            count: psi.num_parties(),
        });
    }
    if psi.dims().dim(nodal) != 2 {
        return Err(Error::NodalNotQubit(psi.dims().dim(nodal)));
    }
    let reduced = crate::states::reduced_density(psi, &[nodal])?;
    let lam = linalg::hermitian_eigenvalues(reduced.matrix())?
        .max()
        .clamp(0.0, 1.0);
    Ok((lam * (1.0 - lam)).max(0.0).sqrt())
}

/// Closed form for the negativity of `m` copies: `((1+2n)^m − 1)/2`.
/// Saturates to infinity once the power overflows; sign questions at that
/// scale are settled in the log domain by the score functions.
pub fn negativity_m_copies(n: f64, m: u32) -> f64 {
    0.5 * ((1.0 + 2.0 * n).powi(m as i32) - 1.0)
}

/// Closed form for the negativity of a product of two states:
/// `n_ρ(1+n_σ) + n_σ(1+n_ρ)`.
pub fn negativity_product(n_rho: f64, n_sigma: f64) -> f64 {
    n_rho * (1.0 + n_sigma) + n_sigma * (1.0 + n_rho)
}

/// Monogamy score `δ = N(nodal:rest) − Σᵢ N(nodal:i)`.
/// Nonnegative means the state is monogamous for negativity.
pub fn monogamy_score(parts: &ScoreParts) -> f64 {
    parts.n_one_rest - parts.n_pair.iter().sum::<f64>()
}

/// Monogamy score of `m` copies via the closed forms:
/// `½[(1+2N)^m − Σᵢ(1+2nᵢ)^m + (k−1)]` for `k` pair terms.
///
/// When any power would overflow, only the sign is recoverable; it is decided
/// in the log domain and the result saturates to ±∞.
pub fn monogamy_score_m_copies(parts: &ScoreParts, m: u32) -> f64 {
    let k = parts.n_pair.len();
    let base_rest = 1.0 + 2.0 * parts.n_one_rest;
    let max_base = parts
        .n_pair
        .iter()
        .fold(base_rest, |acc, &n| acc.max(1.0 + 2.0 * n));
    // ln(1e300) ≈ 690.8
    if (m as f64) * max_base.ln() < 690.0 {
        let mut acc = base_rest.powi(m as i32);
        for &n in &parts.n_pair {
            acc -= (1.0 + 2.0 * n).powi(m as i32);
        }
        return 0.5 * (acc + (k as f64 - 1.0));
    }

    let mf = m as f64;
    let mut positive = vec![mf * base_rest.ln()];
    if k > 1 {
        positive.push(((k - 1) as f64).ln());
    }
    let negative: Vec<f64> = parts
        .n_pair
        .iter()
        .map(|&n| mf * (1.0 + 2.0 * n).ln())
        .collect();
    if log_sum_exp(&positive) >= log_sum_exp(&negative) {
        f64::INFINITY
    } else {
        f64::NEG_INFINITY
    }
}

fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln()
}

/// Smallest `m ∈ [1, m_max]` whose multicopy score is nonnegative (within
/// the monogamy slack), found by linear scan; `None` if no such `m` exists
/// in range. Monotonicity of the score in `m` is not assumed.
pub fn minimal_activation_copies(parts: &ScoreParts, m_max: u32) -> Option<u32> {
    (1..=m_max).find(|&m| monogamy_score_m_copies(parts, m) >= -tol::MONOGAMY)
}

/// Three-party score of a pair of three-party states sharing their nodal
/// parties: each term is the product-state negativity of the matching
/// marginals.
pub fn pair_score_three_party(r: &ScoreParts, s: &ScoreParts) -> Result<f64> {
    r.ensure_three_party(s)?;
    Ok(negativity_product(r.n_one_rest, s.n_one_rest)
        - negativity_product(r.n_pair[0], s.n_pair[0])
        - negativity_product(r.n_pair[1], s.n_pair[1]))
}

/// Four-party score of the same pair: parties 3 and 3' merge into one
/// location while parties 2 and 2' stay singletons, so the first pair term
/// loses its partner factor and the σ-side 2' term enters alone.
pub fn pair_score_four_party(r: &ScoreParts, s: &ScoreParts) -> Result<f64> {
    r.ensure_three_party(s)?;
    Ok(negativity_product(r.n_one_rest, s.n_one_rest)
        - r.n_pair[0]
        - negativity_product(r.n_pair[1], s.n_pair[1])
        - s.n_pair[0])
}

/// Brute-force multicopy negativity: build `ρ^{⊗m}` explicitly and run the
/// partial-transpose spectrum. Only possible while the Kronecker power fits
/// under the matrix dimension cap; this is the oracle the closed form is
/// validated against.
pub fn negativity_m_copies_explicit(
    rho: &DensityMatrix,
    side_mask: &[bool],
    m: u32,
) -> Result<f64> {
    if m == 0 {
        return Err(Error::OutOfRange {
            name: "m",
            value: 0.0,
            lo: 1.0,
            hi: f64::INFINITY,
        });
    }
    if side_mask.len() != rho.num_parties() {
        return Err(Error::MaskLength {
            expected: rho.num_parties(),
            got: side_mask.len(),
        });
    }
    let mut power = rho.clone();
    let mut mask = side_mask.to_vec();
    for _ in 1..m {
        power = power.tensor(rho)?;
        mask.extend_from_slice(side_mask);
    }
    negativity(&power, &mask)
}

/// Per-state activation result: scores for one and two copies, the minimal
/// activating copy count, SLOCC class, and genuine multipartite entanglement.
#[derive(Debug, Clone, PartialEq)]
pub struct ActivationRecord {
    pub delta_1: f64,
    pub delta_2: f64,
    pub m_min: Option<u32>,
    pub class: ClassLabel,
    pub ggm: f64,
}

impl ActivationRecord {
    pub fn from_parts(parts: &ScoreParts, class: ClassLabel, ggm: f64, m_max: u32) -> Self {
        Self {
            delta_1: monogamy_score(parts),
            delta_2: monogamy_score_m_copies(parts, 2),
            m_min: minimal_activation_copies(parts, m_max),
            class,
            ggm,
        }
    }

    pub fn evaluate(psi: &PureState, class: ClassLabel, m_max: u32) -> Result<Self> {
        let parts = ScoreParts::from_pure(psi, 0)?;
        let ggm = ggm::ggm(psi)?.value();
        Ok(Self::from_parts(&parts, class, ggm, m_max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ComplexMatrix, SubsystemDims, C64};
    use crate::rng::SeededRng;
    use crate::states::{
        gghz_state, ghz_state, haar_random_pure, random_density_matrix, w_state, GghzParams,
    };

    const W_N_REST: f64 = 0.4714045207910317; // √2/3
    const W_N_PAIR: f64 = 0.2060113295832983; // (√5−1)/6
    const W_DELTA_1: f64 = 0.059381861624435116;
    const W_DELTA_2: f64 = 0.3934454960266013;

    fn bell_density() -> DensityMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [C64::new(s, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(s, 0.0)];
        DensityMatrix::new(
            ComplexMatrix::outer(&v, &v).unwrap(),
            SubsystemDims::qubits(2),
        )
        .unwrap()
    }

    #[test]
    fn negativity_of_separable_and_bell() {
        let sep = DensityMatrix::new(
            ComplexMatrix::from_diag(&[0.4, 0.1, 0.3, 0.2]).unwrap(),
            SubsystemDims::qubits(2),
        )
        .unwrap();
        assert_eq!(negativity(&sep, &[true, false]).unwrap(), 0.0);
        let n = negativity(&bell_density(), &[true, false]).unwrap();
        assert!((n - 0.5).abs() < 1e-12);
    }

    #[test]
    fn negativity_is_side_symmetric() {
        let mut rng = SeededRng::new(21);
        for _ in 0..10 {
            let rho = random_density_matrix(&SubsystemDims::qubits(2), &mut rng).unwrap();
            let a = negativity(&rho, &[true, false]).unwrap();
            let b = negativity(&rho, &[false, true]).unwrap();
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn w_state_one_vs_rest() {
        let n = negativity(&w_state().density(), &[true, false, false]).unwrap();
        assert!((n - W_N_REST).abs() < 1e-12);
        let shortcut = pure_negativity_one_vs_rest(&w_state(), 0).unwrap();
        assert!((shortcut - W_N_REST).abs() < 1e-12);
    }

    #[test]
    fn pure_shortcut_fixture_values() {
        let product = gghz_state(&GghzParams::new(1.0, 0.0).unwrap());
        assert_eq!(pure_negativity_one_vs_rest(&product, 0).unwrap(), 0.0);
        let n = pure_negativity_one_vs_rest(&ghz_state(), 0).unwrap();
        assert!((n - 0.5).abs() < 1e-12);
    }

    #[test]
    fn pure_shortcut_rejects_non_qubit_nodal() {
        let mut amps = vec![C64::new(0.0, 0.0); 6];
        amps[0] = C64::new(1.0, 0.0);
        let psi = crate::states::PureState::new(
            amps,
            SubsystemDims::new(vec![3, 2]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            pure_negativity_one_vs_rest(&psi, 0),
            Err(Error::NodalNotQubit(3))
        ));
    }

    #[test]
    fn score_parts_of_fixtures() {
        let product = gghz_state(&GghzParams::new(1.0, 0.0).unwrap());
        let parts = ScoreParts::from_pure(&product, 0).unwrap();
        assert_eq!(parts.n_one_rest(), 0.0);
        assert_eq!(parts.n_pair(), &[0.0, 0.0]);

        let parts = ScoreParts::from_pure(&ghz_state(), 0).unwrap();
        assert!((parts.n_one_rest() - 0.5).abs() < 1e-12);
        assert!(parts.n_pair().iter().all(|&n| n < 1e-12));

        let parts = ScoreParts::from_pure(&w_state(), 0).unwrap();
        assert!((parts.n_one_rest() - W_N_REST).abs() < 1e-12);
        for &n in parts.n_pair() {
            assert!((n - W_N_PAIR).abs() < 1e-12);
        }
    }

    #[test]
    fn monogamy_scores_of_fixtures() {
        let parts = ScoreParts::from_pure(&ghz_state(), 0).unwrap();
        assert!((monogamy_score(&parts) - 0.5).abs() < 1e-12);

        let parts = ScoreParts::from_pure(&w_state(), 0).unwrap();
        assert!((monogamy_score(&parts) - W_DELTA_1).abs() < 1e-12);
        assert!((monogamy_score_m_copies(&parts, 2) - W_DELTA_2).abs() < 1e-12);
        assert_eq!(minimal_activation_copies(&parts, 100), Some(1));

        for alpha in [0.0, 0.2, 0.5, 0.75, 1.0] {
            let psi = gghz_state(&GghzParams::new(alpha, 0.4).unwrap());
            let parts = ScoreParts::from_pure(&psi, 0).unwrap();
            let expect = (alpha * (1.0 - alpha)).sqrt();
            assert!(
                (monogamy_score(&parts) - expect).abs() < 1e-12,
                "alpha = {alpha}"
            );
        }
    }

    #[test]
    fn copy_closed_form_basics() {
        assert_eq!(negativity_m_copies(0.0, 17), 0.0);
        assert_eq!(negativity_m_copies(0.37, 1), 0.37);
        assert!((negativity_m_copies(0.5, 2) - 1.5).abs() < 1e-15);
        assert!(negativity_m_copies(0.5, 10_000).is_infinite());
    }

    #[test]
    fn product_closed_form_basics() {
        assert_eq!(negativity_product(0.42, 0.0), 0.42);
        assert!((negativity_product(0.5, 0.5) - 1.5).abs() < 1e-15);
        assert_eq!(
            negativity_product(0.137, 0.462),
            negativity_product(0.462, 0.137)
        );
        // Consistency with two equal copies.
        let n = 0.2137;
        assert!((negativity_product(n, n) - negativity_m_copies(n, 2)).abs() < 1e-14);
    }

    #[test]
    fn multicopy_score_reduces_at_one_copy() {
        let parts = ScoreParts::new(0.31, vec![0.17, 0.21], 0).unwrap();
        assert!(
            (monogamy_score_m_copies(&parts, 1) - monogamy_score(&parts)).abs() < 1e-14
        );
    }

    #[test]
    fn ghz_two_copy_score() {
        let parts = ScoreParts::from_pure(&ghz_state(), 0).unwrap();
        assert!((monogamy_score_m_copies(&parts, 2) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn monogamous_parts_stay_monogamous() {
        // Theorem-1 shape on a fixed grid of physical parts.
        let parts = ScoreParts::new(0.45, vec![0.25, 0.2], 0).unwrap();
        assert!(monogamy_score(&parts) >= 0.0);
        for m in 1..=50 {
            assert!(monogamy_score_m_copies(&parts, m) >= 0.0, "m = {m}");
        }
    }

    #[test]
    fn unphysical_parts_never_activate() {
        // A pair negativity above the one-vs-rest negativity cannot occur
        // for real states; its power outgrows the rest power forever and
        // the scan must report no activating copy count.
        let parts = ScoreParts::new(0.3, vec![0.35, 0.0], 0).unwrap();
        assert_eq!(minimal_activation_copies(&parts, 200), None);
        // Squared-monogamy violation alone is not enough to block
        // activation: the rest base still dominates here.
        let parts = ScoreParts::new(0.3, vec![0.25, 0.25], 0).unwrap();
        let m = minimal_activation_copies(&parts, 200).unwrap();
        assert!(m > 2, "crossing should be well past two copies, got {m}");
    }

    #[test]
    fn log_domain_sign_matches_exact_crossing() {
        // Crossing far beyond f64 overflow; exact integer computed with
        // 200-digit arithmetic: m* = 6932.
        let parts = ScoreParts::new(0.5, vec![0.4999, 0.4999], 0).unwrap();
        assert_eq!(minimal_activation_copies(&parts, 10_000), Some(6932));
        assert_eq!(monogamy_score_m_copies(&parts, 6931), f64::NEG_INFINITY);
        assert_eq!(monogamy_score_m_copies(&parts, 6932), f64::INFINITY);
    }

    #[test]
    fn pair_scores_of_fixture_pairs() {
        let ghz = ScoreParts::from_pure(&ghz_state(), 0).unwrap();
        let d = pair_score_three_party(&ghz, &ghz).unwrap();
        assert!((d - 1.5).abs() < 1e-12);

        // A trivial partner reduces both pair scores to the single score.
        let trivial = ScoreParts::new(0.0, vec![0.0, 0.0], 0).unwrap();
        let w = ScoreParts::from_pure(&w_state(), 0).unwrap();
        assert!(
            (pair_score_three_party(&w, &trivial).unwrap() - monogamy_score(&w)).abs() < 1e-12
        );
        assert!(
            (pair_score_four_party(&w, &trivial).unwrap() - monogamy_score(&w)).abs() < 1e-12
        );
    }

    #[test]
    fn pair_score_arity_checked() {
        let three = ScoreParts::new(0.4, vec![0.1, 0.1], 0).unwrap();
        let four = ScoreParts::new(0.4, vec![0.1, 0.1, 0.1], 0).unwrap();
        assert!(matches!(
            pair_score_three_party(&three, &four),
            Err(Error::PairArity { left: 2, right: 3 })
        ));
        assert!(matches!(
            pair_score_four_party(&four, &three),
            Err(Error::PairArity { .. })
        ));
    }

    #[test]
    fn four_party_minus_three_party_identity() {
        let mut rng = SeededRng::new(33);
        for _ in 0..50 {
            let r = ScoreParts::from_pure(&haar_random_pure(&SubsystemDims::qubits(3), &mut rng), 0)
                .unwrap();
            let s = ScoreParts::from_pure(&haar_random_pure(&SubsystemDims::qubits(3), &mut rng), 0)
                .unwrap();
            let gap = pair_score_four_party(&r, &s).unwrap()
                - pair_score_three_party(&r, &s).unwrap();
            let expect = 2.0 * r.n_pair()[0] * s.n_pair()[0];
            assert!((gap - expect).abs() < 1e-12);
            assert!(gap >= -1e-12);
        }
    }

    #[test]
    fn explicit_oracle_matches_closed_form() {
        let mut rng = SeededRng::new(55);
        let dims = SubsystemDims::qubits(2);
        for _ in 0..20 {
            let rho = random_density_matrix(&dims, &mut rng).unwrap();
            let mask = [true, false];
            let n = negativity(&rho, &mask).unwrap();
            let one = negativity_m_copies_explicit(&rho, &mask, 1).unwrap();
            assert!((one - n).abs() < 1e-12);
            let two = negativity_m_copies_explicit(&rho, &mask, 2).unwrap();
            assert!((two - negativity_m_copies(n, 2)).abs() < 1e-9);
        }
        // One three-copy case: a 64-dimensional power, right at the cap.
        let rho = random_density_matrix(&dims, &mut rng).unwrap();
        let n = negativity(&rho, &[true, false]).unwrap();
        let three = negativity_m_copies_explicit(&rho, &[true, false], 3).unwrap();
        assert!((three - negativity_m_copies(n, 3)).abs() < 1e-9);
    }

    #[test]
    fn explicit_oracle_bell_two_copies() {
        let n = negativity_m_copies_explicit(&bell_density(), &[true, false], 2).unwrap();
        assert!((n - 1.5).abs() < 1e-10);
    }

    #[test]
    fn explicit_oracle_respects_dimension_cap() {
        let rho = ghz_state().density();
        assert!(matches!(
            negativity_m_copies_explicit(&rho, &[true, false, false], 3),
            Err(Error::DimensionCap(_))
        ));
    }

    #[test]
    fn mixed_states_score_and_activate() {
        let mut rng = SeededRng::new(0x3a1d);
        let dims = SubsystemDims::qubits(3);
        let mut nonmono = 0;
        for _ in 0..30 {
            let rho = random_density_matrix(&dims, &mut rng).unwrap();
            let parts = ScoreParts::from_density(&rho, 0).unwrap();
            assert!(parts.n_one_rest() >= 0.0);
            assert_eq!(parts.n_pair().len(), 2);
            let m = minimal_activation_copies(&parts, 10_000);
            assert!(m.is_some(), "mixed state failed to activate");
            if monogamy_score(&parts) < -tol::MONOGAMY {
                nonmono += 1;
                assert!(m.unwrap() >= 2);
            }
        }
        // Full-rank Ginibre states are strongly mixed; most are PPT on
        // every cut and thus trivially monogamous, but the scoring path
        // must handle them all.
        let _ = nonmono;
    }

    #[test]
    fn activation_record_for_fixtures() {
        let rec = ActivationRecord::evaluate(&ghz_state(), ClassLabel::GhzClass, 100).unwrap();
        assert!((rec.delta_1 - 0.5).abs() < 1e-12);
        assert!((rec.delta_2 - 1.5).abs() < 1e-12);
        assert_eq!(rec.m_min, Some(1));
        assert!((rec.ggm - 0.5).abs() < 1e-12);
    }
}
