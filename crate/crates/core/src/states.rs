//! Pure states and density matrices over listed subsystems, fixture states,
//! Haar and W-class samplers, and the three-tangle classifier.

use rand::Rng;
use rand_distr::{Dirichlet, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, SubsystemDims, C64};
use crate::rng::SeededRng;
use crate::tol;

/// Normalized complex amplitude vector with a per-party dimension list.
/// Subsystem 0 is the most significant index of the basis label.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
    dims: SubsystemDims,
}

impl PureState {
    /// Build from amplitudes that are already normalized within
    /// [`tol::STATE_NORM`].
    pub fn new(amplitudes: Vec<C64>, dims: SubsystemDims) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::AmplitudeCount {
                expected: dims.total(),
                got: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let deviation = (norm_sqr - 1.0).abs();
        if deviation > tol::STATE_NORM {
            return Err(Error::NotNormalized(deviation));
        }
        Ok(Self { amplitudes, dims })
    }

    /// Build by rescaling arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(mut amplitudes: Vec<C64>, dims: SubsystemDims) -> Result<Self> {
        if amplitudes.len() != dims.total() {
            return Err(Error::AmplitudeCount {
                expected: dims.total(),
                got: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr <= 0.0 || !norm_sqr.is_finite() {
            return Err(Error::NotNormalized(1.0));
        }
        let inv = 1.0 / norm_sqr.sqrt();
        for a in &mut amplitudes {
            *a *= inv;
        }
        Ok(Self { amplitudes, dims })
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn dims(&self) -> &SubsystemDims {
        &self.dims
    }

    pub fn num_parties(&self) -> usize {
        self.dims.len()
    }

    /// The projector `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> DensityMatrix {
        let mat = ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
            .expect("state dimension is within the matrix cap");
        DensityMatrix {
            mat,
            dims: self.dims.clone(),
        }
    }

    /// Evolve by a unitary acting on the full state space.
    pub fn apply_unitary(&self, u: &ComplexMatrix) -> Result<Self> {
        let amplitudes = u.mul_vec(&self.amplitudes)?;
        Self::new(amplitudes, self.dims.clone())
    }

    pub(crate) fn ensure_three_qubits(&self) -> Result<()> {
        if self.dims.as_slice() != [2, 2, 2] {
            return Err(Error::NotThreeQubits {
                expected: 3,
                got: self.dims.as_slice().to_vec(),
            });
        }
        Ok(())
    }
}

/// Hermitian, positive-semidefinite, unit-trace matrix with a per-party
/// dimension list. Validity is checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    dims: SubsystemDims,
}

impl DensityMatrix {
    /// Validate Hermiticity, unit trace, and positive semidefiniteness.
    pub fn new(mat: ComplexMatrix, dims: SubsystemDims) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::NotSquare {
                rows: mat.rows(),
                cols: mat.cols(),
            });
        }
        if dims.total() != mat.rows() {
            return Err(Error::DimsMismatch {
                product: dims.total(),
                dim: mat.rows(),
            });
        }
        let dev = mat.hermiticity_deviation();
        if dev > tol::HERMITICITY {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let trace = mat.trace();
        let trace_dev = (trace - C64::new(1.0, 0.0)).norm();
        if trace_dev > tol::UNIT_TRACE {
            return Err(Error::InvalidDensity(format!(
                "trace deviates from 1 by {trace_dev:e}"
            )));
        }
        let spectrum = linalg::hermitian_eigenvalues(&mat)?;
        if spectrum.min() < -tol::PSD {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {:e}",
                spectrum.min()
            )));
        }
        Ok(Self { mat, dims })
    }

    /// Wrap a matrix that is valid by construction (projectors of normalized
    /// states, partial traces of valid inputs, ...).
    pub(crate) fn trusted(mat: ComplexMatrix, dims: SubsystemDims) -> Self {
        debug_assert!(mat.hermiticity_deviation() <= 1e-9);
        debug_assert!((mat.trace() - C64::new(1.0, 0.0)).norm() <= 1e-9);
        Self { mat, dims }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        psi.density()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dims(&self) -> &SubsystemDims {
        &self.dims
    }

    pub fn num_parties(&self) -> usize {
        self.dims.len()
    }

    /// Reduced state over the kept subsystems.
    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let mat = linalg::partial_trace(&self.mat, &self.dims, keep)?;
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        let dims = SubsystemDims::new(kept.iter().map(|&k| self.dims.dim(k)).collect())?;
        Ok(DensityMatrix::trusted(mat, dims))
    }

    /// Tensor product with another state: `ρ ⊗ σ`.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let mat = linalg::kron(&self.mat, &other.mat)?;
        Ok(DensityMatrix::trusted(mat, self.dims.joined(&other.dims)))
    }
}

/// SLOCC class of a three-qubit pure state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    GhzClass,
    WClass,
    Biseparable,
    Product,
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassLabel::GhzClass => "ghz-class",
            ClassLabel::WClass => "w-class",
            ClassLabel::Biseparable => "biseparable",
            ClassLabel::Product => "product",
        };
        f.write_str(s)
    }
}

/// Classify a three-qubit pure state: genuinely entangled states split into
/// GHZ class (nonzero three-tangle) and W class (vanishing three-tangle);
/// otherwise the state is biseparable or fully product.
pub fn classify(psi: &PureState) -> Result<ClassLabel> {
    psi.ensure_three_qubits()?;
    let mut pure_sites = 0;
    for site in 0..3 {
        if site_max_eigenvalue(psi, site)? >= 1.0 - tol::HERMITICITY {
            pure_sites += 1;
        }
    }
    Ok(match pure_sites {
        0 => {
            if three_tangle(psi)? > tol::TANGLE_FLOOR {
                ClassLabel::GhzClass
            } else {
                ClassLabel::WClass
            }
        }
        3 => ClassLabel::Product,
        _ => ClassLabel::Biseparable,
    })
}

fn site_max_eigenvalue(psi: &PureState, site: usize) -> Result<f64> {
    let reduced = reduced_density(psi, &[site])?;
    Ok(linalg::hermitian_eigenvalues(reduced.matrix())?.max())
}

/// Parameters of the generalized GHZ state
/// `√α|0…0⟩ + √(1−α) e^{iφ}|1…1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GghzParams {
    alpha: f64,
    phi: f64,
}

impl GghzParams {
    pub fn new(alpha: f64, phi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) || !alpha.is_finite() {
            return Err(Error::OutOfRange {
                name: "alpha",
                value: alpha,
                lo: 0.0,
                hi: 1.0,
            });
        }
        let tau = 2.0 * std::f64::consts::PI;
        Ok(Self {
            alpha,
            phi: phi.rem_euclid(tau),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// `(|000⟩ + |111⟩)/√2`.
pub fn ghz_state() -> PureState {
    gghz_state(&GghzParams::new(0.5, 0.0).unwrap())
}

/// `(|001⟩ + |010⟩ + |100⟩)/√3`.
pub fn w_state() -> PureState {
    let a = C64::new((1.0f64 / 3.0).sqrt(), 0.0);
    let zero = C64::new(0.0, 0.0);
    let amps = vec![zero, a, a, zero, a, zero, zero, zero];
    PureState::new(amps, SubsystemDims::qubits(3)).unwrap()
}

/// The generalized GHZ state `√α|000⟩ + √(1−α) e^{iφ}|111⟩`.
pub fn gghz_state(p: &GghzParams) -> PureState {
    let zero = C64::new(0.0, 0.0);
    let mut amps = vec![zero; 8];
    amps[0] = C64::new(p.alpha().sqrt(), 0.0);
    amps[7] = C64::from_polar((1.0 - p.alpha()).sqrt(), p.phi());
    PureState::new(amps, SubsystemDims::qubits(3)).unwrap()
}

/// Haar-random pure state: independent standard complex Gaussian amplitudes,
/// normalized. This is the unique unitarily invariant measure.
pub fn haar_random_pure(dims: &SubsystemDims, rng: &mut SeededRng) -> PureState {
    let total = dims.total();
    loop {
        let amps: Vec<C64> = (0..total)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        if let Ok(psi) = PureState::normalized(amps, dims.clone()) {
            return psi;
        }
        // Astronomically unlikely zero-norm draw; just redraw.
    }
}

/// Haar-random three-qubit state rejected until it is GHZ-class: nonzero
/// three-tangle and no pure single-site reduction. The rejection set has
/// measure zero, so this almost never loops.
pub fn sample_ghz_class(rng: &mut SeededRng) -> Result<PureState> {
    sample_ghz_class_capped(rng, tol::RESAMPLE_CAP)
}

fn sample_ghz_class_capped(rng: &mut SeededRng, cap: usize) -> Result<PureState> {
    let dims = SubsystemDims::qubits(3);
    for _ in 0..cap {
        let psi = haar_random_pure(&dims, rng);
        if three_tangle(&psi)? <= tol::TANGLE_FLOOR {
            continue;
        }
        let mut degenerate = false;
        for site in 0..3 {
            if site_max_eigenvalue(&psi, site)? >= 1.0 - tol::HERMITICITY {
                degenerate = true;
                break;
            }
        }
        if degenerate {
            continue;
        }
        return Ok(psi);
    }
    Err(Error::SamplerStalled(cap))
}

/// W-class state in canonical form `√a|001⟩ + √b|010⟩ + √c|100⟩ + √d|000⟩`,
/// with `(a,b,c,d)` uniform on the 3-simplex and the three W populations
/// bounded away from zero.
pub fn sample_w_class(rng: &mut SeededRng) -> Result<PureState> {
    sample_w_class_capped(rng, tol::RESAMPLE_CAP)
}

fn sample_w_class_capped(rng: &mut SeededRng, cap: usize) -> Result<PureState> {
    let dirichlet = Dirichlet::new([1.0, 1.0, 1.0, 1.0]).expect("valid concentration");
    for _ in 0..cap {
        let [a, b, c, d]: [f64; 4] = rng.sample(&dirichlet);
        if a <= tol::SIMPLEX_FLOOR || b <= tol::SIMPLEX_FLOOR || c <= tol::SIMPLEX_FLOOR {
            continue;
        }
        let zero = C64::new(0.0, 0.0);
        let mut amps = vec![zero; 8];
        amps[0b001] = C64::new(a.sqrt(), 0.0);
        amps[0b010] = C64::new(b.sqrt(), 0.0);
        amps[0b100] = C64::new(c.sqrt(), 0.0);
        amps[0b000] = C64::new(d.sqrt(), 0.0);
        return PureState::normalized(amps, SubsystemDims::qubits(3));
    }
    Err(Error::SamplerStalled(cap))
}

/// Full-rank random density matrix: `ρ = G G† / tr(G G†)` with `G` a square
/// complex Ginibre matrix (the Hilbert-Schmidt-induced measure).
pub fn random_density_matrix(dims: &SubsystemDims, rng: &mut SeededRng) -> Result<DensityMatrix> {
    let n = dims.total();
    let g = ComplexMatrix::new(
        n,
        n,
        (0..n * n)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect(),
    )?;
    let gg = g.matmul(&g.adjoint())?;
    let trace = gg.trace().re;
    Ok(DensityMatrix::trusted(gg.scaled(1.0 / trace), dims.clone()))
}

/// Three-tangle of a three-qubit pure state: the modulus of Cayley's
/// hyperdeterminant of the amplitude tensor, `τ = 4|d₁ − 2d₂ + 4d₃|`.
/// Vanishes exactly on the W class and reaches 1 on the GHZ state.
pub fn three_tangle(psi: &PureState) -> Result<f64> {
    psi.ensure_three_qubits()?;
    let a = |q0: usize, q1: usize, q2: usize| psi.amplitudes[(q0 << 2) | (q1 << 1) | q2];

    let a000 = a(0, 0, 0);
    let a001 = a(0, 0, 1);
    let a010 = a(0, 1, 0);
    let a011 = a(0, 1, 1);
    let a100 = a(1, 0, 0);
    let a101 = a(1, 0, 1);
    let a110 = a(1, 1, 0);
    let a111 = a(1, 1, 1);

    let d1 = a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a100 * a100 * a011 * a011;
    let d2 = a000 * a111 * a011 * a100
        + a000 * a111 * a101 * a010
        + a000 * a111 * a110 * a001
        + a011 * a100 * a101 * a010
        + a011 * a100 * a110 * a001
        + a101 * a010 * a110 * a001;
    let d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;

    Ok(4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm())
}

/// Reduced density matrix of `|ψ⟩⟨ψ|` over the kept subsystems.
pub fn reduced_density(psi: &PureState, keep: &[usize]) -> Result<DensityMatrix> {
    psi.density().reduced(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_states_are_normalized() {
        for psi in [ghz_state(), w_state()] {
            let n: f64 = psi.amplitudes().iter().map(|a| a.norm_sqr()).sum();
            assert!((n - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn gghz_limits() {
        let product = gghz_state(&GghzParams::new(1.0, 0.0).unwrap());
        assert_eq!(product.amplitudes()[0], C64::new(1.0, 0.0));
        let ghz = gghz_state(&GghzParams::new(0.5, 0.0).unwrap());
        assert!(ghz.amplitudes()[0].re > 0.7);
        assert_eq!(ghz.amplitudes(), ghz_state().amplitudes());
    }

    #[test]
    fn gghz_single_site_eigenvalues() {
        let alpha = 0.7;
        let psi = gghz_state(&GghzParams::new(alpha, 1.3).unwrap());
        for site in 0..3 {
            let r = reduced_density(&psi, &[site]).unwrap();
            let spec = linalg::hermitian_eigenvalues(r.matrix()).unwrap();
            assert!((spec.max() - alpha).abs() < 1e-12);
            assert!((spec.min() - (1.0 - alpha)).abs() < 1e-12);
        }
    }

    #[test]
    fn gghz_params_rejects_bad_alpha() {
        assert!(GghzParams::new(-0.1, 0.0).is_err());
        assert!(GghzParams::new(1.1, 0.0).is_err());
    }

    #[test]
    fn tangle_of_fixtures() {
        assert!((three_tangle(&ghz_state()).unwrap() - 1.0).abs() < 1e-12);
        assert!(three_tangle(&w_state()).unwrap() < 1e-15);
        let product = gghz_state(&GghzParams::new(1.0, 0.0).unwrap());
        assert!(three_tangle(&product).unwrap() < 1e-15);
    }

    #[test]
    fn tangle_needs_three_qubits() {
        let psi = PureState::new(
            vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
            SubsystemDims::qubits(1),
        )
        .unwrap();
        assert!(matches!(
            three_tangle(&psi),
            Err(Error::NotThreeQubits { .. })
        ));
    }

    #[test]
    fn reductions_of_fixtures() {
        let r = reduced_density(&PureState::new(
            {
                let mut v = vec![C64::new(0.0, 0.0); 8];
                v[0] = C64::new(1.0, 0.0);
                v
            },
            SubsystemDims::qubits(3),
        )
        .unwrap(), &[0])
        .unwrap();
        assert!((r.matrix().at(0, 0).re - 1.0).abs() < 1e-15);

        let r = reduced_density(&w_state(), &[0]).unwrap();
        assert!((r.matrix().at(0, 0).re - 2.0 / 3.0).abs() < 1e-12);
        assert!((r.matrix().at(1, 1).re - 1.0 / 3.0).abs() < 1e-12);

        let r = reduced_density(&ghz_state(), &[0, 1]).unwrap();
        assert!((r.matrix().at(0, 0).re - 0.5).abs() < 1e-12);
        assert!((r.matrix().at(3, 3).re - 0.5).abs() < 1e-12);
        assert!(r.matrix().at(0, 3).norm() < 1e-15);

        let r = reduced_density(&ghz_state(), &[1]).unwrap();
        assert!((r.matrix().at(0, 0).re - 0.5).abs() < 1e-12);
        assert!((r.matrix().at(1, 1).re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn reduced_densities_are_valid() {
        let mut rng = SeededRng::new(11);
        for _ in 0..20 {
            let psi = haar_random_pure(&SubsystemDims::qubits(3), &mut rng);
            for keep in [&[0usize][..], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]] {
                let r = reduced_density(&psi, keep).unwrap();
                // Re-validate through the strict constructor.
                assert!(DensityMatrix::new(r.matrix().clone(), r.dims().clone()).is_ok());
            }
        }
    }

    #[test]
    fn classify_fixture_states() {
        assert_eq!(classify(&ghz_state()).unwrap(), ClassLabel::GhzClass);
        assert_eq!(classify(&w_state()).unwrap(), ClassLabel::WClass);
        let product = gghz_state(&GghzParams::new(1.0, 0.0).unwrap());
        assert_eq!(classify(&product).unwrap(), ClassLabel::Product);

        // |0⟩ ⊗ Bell(12): biseparable.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut amps = vec![C64::new(0.0, 0.0); 8];
        amps[0b000] = C64::new(s, 0.0);
        amps[0b011] = C64::new(s, 0.0);
        let psi = PureState::new(amps, SubsystemDims::qubits(3)).unwrap();
        assert_eq!(classify(&psi).unwrap(), ClassLabel::Biseparable);
    }

    #[test]
    fn ghz_class_sampler_outputs() {
        let mut rng = SeededRng::new(3);
        for _ in 0..50 {
            let psi = sample_ghz_class(&mut rng).unwrap();
            assert!(three_tangle(&psi).unwrap() > tol::TANGLE_FLOOR);
            assert_eq!(classify(&psi).unwrap(), ClassLabel::GhzClass);
        }
    }

    #[test]
    fn w_class_sampler_outputs() {
        let mut rng = SeededRng::new(4);
        for _ in 0..50 {
            let psi = sample_w_class(&mut rng).unwrap();
            assert!(three_tangle(&psi).unwrap() <= tol::TANGLE_FLOOR);
            assert_eq!(classify(&psi).unwrap(), ClassLabel::WClass);
        }
    }

    #[test]
    fn sampler_cap_reports_stall() {
        let mut rng = SeededRng::new(5);
        assert!(matches!(
            sample_ghz_class_capped(&mut rng, 0),
            Err(Error::SamplerStalled(0))
        ));
    }

    #[test]
    fn canonical_w_point_is_w_state() {
        // (a,b,c,d) = (1/3,1/3,1/3,0) reproduces the W state.
        let third = 1.0f64 / 3.0;
        let zero = C64::new(0.0, 0.0);
        let mut amps = vec![zero; 8];
        amps[1] = C64::new(third.sqrt(), 0.0);
        amps[2] = C64::new(third.sqrt(), 0.0);
        amps[4] = C64::new(third.sqrt(), 0.0);
        let psi = PureState::normalized(amps, SubsystemDims::qubits(3)).unwrap();
        assert!(psi
            .amplitudes()
            .iter()
            .zip(w_state().amplitudes())
            .all(|(a, b)| (a - b).norm() < 1e-15));
    }

    #[test]
    fn pure_state_validation() {
        let dims = SubsystemDims::qubits(1);
        assert!(matches!(
            PureState::new(vec![C64::new(1.0, 0.0)], dims.clone()),
            Err(Error::AmplitudeCount { .. })
        ));
        assert!(matches!(
            PureState::new(vec![C64::new(1.0, 0.0), C64::new(0.5, 0.0)], dims.clone()),
            Err(Error::NotNormalized(_))
        ));
        assert!(PureState::normalized(
            vec![C64::new(3.0, 0.0), C64::new(4.0, 0.0)],
            dims
        )
        .is_ok());
    }

    #[test]
    fn density_matrix_validation() {
        let dims = SubsystemDims::qubits(1);
        // Trace 2.
        let m = ComplexMatrix::from_diag(&[1.0, 1.0]).unwrap();
        assert!(matches!(
            DensityMatrix::new(m, dims.clone()),
            Err(Error::InvalidDensity(_))
        ));
        // Negative eigenvalue.
        let m = ComplexMatrix::from_diag(&[1.5, -0.5]).unwrap();
        assert!(matches!(
            DensityMatrix::new(m, dims.clone()),
            Err(Error::InvalidDensity(_))
        ));
        // Non-Hermitian.
        let m = ComplexMatrix::new(
            2,
            2,
            vec![
                C64::new(0.5, 0.0),
                C64::new(0.1, 0.0),
                C64::new(0.3, 0.0),
                C64::new(0.5, 0.0),
            ],
        )
        .unwrap();
        assert!(matches!(
            DensityMatrix::new(m, dims.clone()),
            Err(Error::NotHermitian { .. })
        ));
        // A fine one.
        let m = ComplexMatrix::from_diag(&[0.25, 0.75]).unwrap();
        assert!(DensityMatrix::new(m, dims).is_ok());
    }

    #[test]
    fn random_density_is_valid() {
        let mut rng = SeededRng::new(9);
        let dims = SubsystemDims::qubits(2);
        for _ in 0..10 {
            let rho = random_density_matrix(&dims, &mut rng).unwrap();
            assert!(DensityMatrix::new(rho.matrix().clone(), dims.clone()).is_ok());
        }
    }
}
