//! Statistical sanity of the samplers: Haar symmetry, unitary invariance
//! of Monte-Carlo distributions (KS test), and W-class invariants.
//!
//! All tests run on fixed seeds, so the statistical checks are
//! deterministic once verified.

mod common;

use common::{ks_statistic, random_local_unitary};
use monoscope_core::linalg::SubsystemDims;
use monoscope_core::{
    ggm, haar_random_pure, negativity, reduced_density, sample_w_class, three_tangle,
    ScoreParts, SeededRng,
};

fn mean_and_3sigma(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, 3.0 * (var / n).sqrt())
}

#[test]
fn haar_amplitude_moments() {
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::new(0x4a12);
    let n = 100_000;
    let mut amp0_sq = Vec::with_capacity(n);
    for _ in 0..n {
        let psi = haar_random_pure(&dims, &mut rng);
        amp0_sq.push(psi.amplitudes()[0].norm_sqr());
    }
    let (mean, band) = mean_and_3sigma(&amp0_sq);
    // Haar symmetry puts 1/8 of the weight on each basis amplitude.
    assert!(
        (mean - 0.125).abs() < band,
        "mean |a₀|² = {mean} not within {band} of 1/8"
    );
}

#[test]
fn haar_single_site_purity() {
    // Mean single-site purity of a Haar 2x4 bipartition is
    // (d_A + d_B)/(d_A d_B + 1) = 2/3; cross-checked against an
    // independent eigensolver before freezing.
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::new(0x9c1d);
    let n = 100_000;
    let mut purities = Vec::with_capacity(n);
    for _ in 0..n {
        let psi = haar_random_pure(&dims, &mut rng);
        let r = reduced_density(&psi, &[0]).unwrap();
        let m = r.matrix();
        let purity: f64 = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| m.at(i, j).norm_sqr())
            .sum();
        purities.push(purity);
    }
    let (mean, band) = mean_and_3sigma(&purities);
    let expect = 2.0 / 3.0;
    assert!(
        (mean - expect).abs() < band,
        "mean purity = {mean} not within {band} of {expect}"
    );
}

#[test]
fn haar_distribution_invariant_under_fixed_local_unitary() {
    let dims = SubsystemDims::qubits(3);
    let n = 10_000;
    let mut fixed_rng = SeededRng::new(0xFACE);
    let u = random_local_unitary(3, &mut fixed_rng);

    let mut rng_a = SeededRng::new(0xA0A0);
    let plain: Vec<f64> = (0..n)
        .map(|_| ggm(&haar_random_pure(&dims, &mut rng_a)).unwrap().value())
        .collect();
    let mut rng_b = SeededRng::new(0xB1B1);
    let rotated: Vec<f64> = (0..n)
        .map(|_| {
            let psi = haar_random_pure(&dims, &mut rng_b).apply_unitary(&u).unwrap();
            ggm(&psi).unwrap().value()
        })
        .collect();

    let d = ks_statistic(plain, rotated);
    // Two-sample KS critical value at significance 0.01:
    // c(α)·√((n+m)/(nm)) with c(0.01) ≈ 1.628.
    let critical = 1.628 * ((2 * n) as f64 / (n * n) as f64).sqrt();
    assert!(d < critical, "KS statistic {d} exceeds {critical}");
}

#[test]
fn w_class_samples_have_zero_tangle_and_entangled_pairs() {
    let mut rng = SeededRng::new(0x77AA);
    for _ in 0..1000 {
        let psi = sample_w_class(&mut rng).unwrap();
        assert!(three_tangle(&psi).unwrap() <= 1e-9);
    }
    // Pairwise reductions of canonical W-class states are entangled.
    for _ in 0..50 {
        let psi = sample_w_class(&mut rng).unwrap();
        for pair in [[0usize, 1], [0, 2], [1, 2]] {
            let rho = reduced_density(&psi, &pair).unwrap();
            let n = negativity(&rho, &[true, false]).unwrap();
            assert!(n > 0.0, "pair {pair:?} unexpectedly separable");
        }
    }
}

#[test]
fn raw_haar_draws_essentially_never_rejected() {
    // The GHZ-class rejection set (vanishing tangle or a pure local
    // marginal) has measure zero; record the observed rate on raw draws.
    let dims = SubsystemDims::qubits(3);
    let mut rng = SeededRng::new(0x3141);
    let n = 300_000;
    let mut rejected = 0usize;
    for _ in 0..n {
        let psi = haar_random_pure(&dims, &mut rng);
        if three_tangle(&psi).unwrap() <= 1e-9 {
            rejected += 1;
        }
    }
    assert_eq!(rejected, 0, "observed rejection rate {rejected}/{n}");
}

#[test]
fn haar_parts_nodal_symmetry_statistics() {
    // The three parties are exchangeable under Haar: the mean one-vs-rest
    // negativity must agree across nodal choices within 3σ.
    let dims = SubsystemDims::qubits(3);
    let n = 20_000;
    let mut means = Vec::new();
    for nodal in 0..3 {
        let mut rng = SeededRng::new(0xD15C + nodal as u64);
        let vals: Vec<f64> = (0..n)
            .map(|_| {
                let psi = haar_random_pure(&dims, &mut rng);
                ScoreParts::from_pure(&psi, nodal).unwrap().n_one_rest()
            })
            .collect();
        means.push(mean_and_3sigma(&vals));
    }
    for w in means.windows(2) {
        let ((m1, b1), (m2, b2)) = (w[0], w[1]);
        assert!((m1 - m2).abs() < b1 + b2, "{m1} vs {m2}");
    }
}
