//! Helpers shared by the integration tests: random unitaries composed from
//! plane rotations and a two-sample Kolmogorov-Smirnov statistic.

use monoscope_core::linalg::{ComplexMatrix, C64};
use monoscope_core::SeededRng;
use rand::Rng;

/// Random `n × n` unitary assembled from `3n²` random complex Givens
/// rotations. Not Haar-distributed, but exactly unitary up to round-off,
/// which is all the spectral tests need.
pub fn random_rotation_unitary(n: usize, rng: &mut SeededRng) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(n).unwrap();
    for _ in 0..3 * n * n {
        let p = rng.random_range(0..n);
        let mut q = rng.random_range(0..n);
        while q == p {
            q = rng.random_range(0..n);
        }
        let theta = rng.random::<f64>() * std::f64::consts::TAU;
        let phi = rng.random::<f64>() * std::f64::consts::TAU;
        let g = givens(n, p, q, theta, phi);
        u = u.matmul(&g).unwrap();
    }
    u
}

fn givens(n: usize, p: usize, q: usize, theta: f64, phi: f64) -> ComplexMatrix {
    let mut g = ComplexMatrix::identity(n).unwrap();
    let (s, c) = theta.sin_cos();
    g.set(p, p, C64::new(c, 0.0));
    g.set(q, q, C64::new(c, 0.0));
    g.set(p, q, -C64::from_polar(s, phi));
    g.set(q, p, C64::from_polar(s, -phi));
    g
}

/// Product unitary `u₀ ⊗ u₁ ⊗ ... ` acting one factor per qubit.
#[allow(dead_code)]
pub fn random_local_unitary(qubits: usize, rng: &mut SeededRng) -> ComplexMatrix {
    let mut u = random_rotation_unitary(2, rng);
    for _ in 1..qubits {
        let v = random_rotation_unitary(2, rng);
        u = monoscope_core::linalg::kron(&u, &v).unwrap();
    }
    u
}

/// Two-sample Kolmogorov-Smirnov statistic `max |F₁ − F₂|`.
#[allow(dead_code)]
pub fn ks_statistic(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_unstable_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_unstable_by(|x, y| x.partial_cmp(y).unwrap());
    let (n, m) = (a.len(), b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        if a[i] <= b[j] {
            i += 1;
        } else {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    d
}
