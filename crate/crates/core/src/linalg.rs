//! Dense complex linear algebra for small multiqubit systems: Kronecker
//! products, partial transpose/trace, and Hermitian eigenvalues via cyclic
//! Jacobi rotations.
//!
//! Subsystem index 0 is the slowest-varying (most significant) tensor
//! index throughout, so for qubits the basis label reads like a bit string
//! with qubit 0 in front.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

pub type C64 = Complex64;

/// Largest supported matrix dimension (two copies of a three-qubit state).
/// Anything bigger is handled by closed forms, never explicit matrices.
pub const MAX_DIM: usize = 64;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDim);
        }
        if rows > MAX_DIM || cols > MAX_DIM {
            return Err(Error::DimensionCap(rows.max(cols)));
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![C64::new(0.0, 0.0); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = C64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn from_diag(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut m = Self::zeros(n, n)?;
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = C64::new(d, 0.0);
        }
        Ok(m)
    }

    /// Outer product `v w†` of two complex vectors.
    pub fn outer(v: &[C64], w: &[C64]) -> Result<Self> {
        let mut entries = Vec::with_capacity(v.len() * w.len());
        for &a in v {
            for &b in w {
                entries.push(a * b.conj());
            }
        }
        Self::new(v.len(), w.len(), entries)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> C64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: C64) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols))
            .map(|i| self.entries[i * self.cols + i])
            .sum()
    }

    pub fn adjoint(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).conj());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn scaled(&self, f: f64) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= f;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                a_rows: self.rows,
                a_cols: self.cols,
                b_rows: other.rows,
                b_cols: other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                a_rows: self.rows,
                a_cols: self.cols,
                b_rows: other.rows,
                b_cols: other.cols,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols)?;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c) + a * other.at(k, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                a_rows: self.rows,
                a_cols: self.cols,
                b_rows: v.len(),
                b_cols: 1,
            });
        }
        let out = (0..self.rows)
            .map(|r| {
                v.iter()
                    .enumerate()
                    .map(|(c, x)| self.at(r, c) * x)
                    .sum()
            })
            .collect();
        Ok(out)
    }

    /// Largest absolute entry of `self - other`; matrices must be same shape.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest absolute entry of `h - h†`.
    pub fn hermiticity_deviation(&self) -> f64 {
        assert!(self.is_square());
        let n = self.rows;
        let mut dev: f64 = 0.0;
        for r in 0..n {
            for c in r..n {
                dev = dev.max((self.at(r, c) - self.at(c, r).conj()).norm());
            }
        }
        dev
    }
}

/// Ordered list of local Hilbert-space dimensions annotating a matrix or
/// state vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemDims(Vec<usize>);

impl SubsystemDims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::ZeroDim);
        }
        Ok(Self(dims))
    }

    /// `n` qubit subsystems.
    pub fn qubits(n: usize) -> Self {
        Self(vec![2; n])
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self, subsystem: usize) -> usize {
        self.0[subsystem]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Dims of two systems laid side by side (their tensor product).
    pub fn joined(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Strides of each subsystem index in the flat basis label
    /// (subsystem 0 slowest).
    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.0.len()];
        for i in (0..self.0.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.0[i + 1];
        }
        strides
    }

    fn check_matches(&self, dim: usize) -> Result<()> {
        if self.total() != dim {
            return Err(Error::DimsMismatch {
                product: self.total(),
                dim,
            });
        }
        Ok(())
    }
}

/// Real eigenvalues of a Hermitian matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn min(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Sum of the absolute values of the negative eigenvalues.
    pub fn negative_part(&self) -> f64 {
        // The empty float sum is -0.0; adding 0.0 clears the sign bit.
        self.eigenvalues
            .iter()
            .filter(|&&l| l < 0.0)
            .map(|l| -l)
            .sum::<f64>()
            + 0.0
    }

    pub fn abs_sum(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    let mut out = ComplexMatrix::zeros(rows, cols)?;
    for ar in 0..a.rows() {
        for ac in 0..a.cols() {
            let f = a.at(ar, ac);
            if f == C64::new(0.0, 0.0) {
                continue;
            }
            for br in 0..b.rows() {
                for bc in 0..b.cols() {
                    out.set(ar * b.rows() + br, ac * b.cols() + bc, f * b.at(br, bc));
                }
            }
        }
    }
    Ok(out)
}

fn check_square_with_dims(rho: &ComplexMatrix, dims: &SubsystemDims) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::NotSquare {
            rows: rho.rows(),
            cols: rho.cols(),
        });
    }
    dims.check_matches(rho.rows())
}

/// Transpose the indices of the masked subsystems, leaving the rest alone.
/// Preserves trace and Hermiticity and is an involution per mask.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    transpose_mask: &[bool],
) -> Result<ComplexMatrix> {
    check_square_with_dims(rho, dims)?;
    if transpose_mask.len() != dims.len() {
        return Err(Error::MaskLength {
            expected: dims.len(),
            got: transpose_mask.len(),
        });
    }
    let n = rho.rows();
    let strides = dims.strides();
    let mut out = ComplexMatrix::zeros(n, n)?;
    for r in 0..n {
        for c in 0..n {
            // Swap row/column digits of every masked subsystem.
            let mut src_r = r;
            let mut src_c = c;
            for (k, &masked) in transpose_mask.iter().enumerate() {
                if !masked {
                    continue;
                }
                let s = strides[k];
                let d = dims.dim(k);
                let rd = (r / s) % d;
                let cd = (c / s) % d;
                src_r = shift_digit(src_r, s, d, cd);
                src_c = shift_digit(src_c, s, d, rd);
            }
            out.set(r, c, rho.at(src_r, src_c));
        }
    }
    Ok(out)
}

#[inline]
fn shift_digit(index: usize, stride: usize, dim: usize, new_digit: usize) -> usize {
    let old_digit = (index / stride) % dim;
    index - old_digit * stride + new_digit * stride
}

/// Trace out every subsystem not in `keep`; kept subsystems stay in their
/// original relative order.
pub fn partial_trace(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    keep: &[usize],
) -> Result<ComplexMatrix> {
    check_square_with_dims(rho, dims)?;
    if keep.is_empty() {
        return Err(Error::EmptyKeep);
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    for w in keep.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateIndex(w[0]));
        }
    }
    for &k in &keep {
        if k >= dims.len() {
            return Err(Error::SubsystemIndex {
                index: k,
                count: dims.len(),
            });
        }
    }

    let n = rho.rows();
    let strides = dims.strides();
    let kept_dim: usize = keep.iter().map(|&k| dims.dim(k)).product();

    // For each flat basis label, split it into (kept digits, traced digits).
    let mut kept_part = vec![0usize; n];
    let mut traced_part = vec![0usize; n];
    for idx in 0..n {
        let mut kp = 0;
        let mut tp = 0;
        for (k, &stride) in strides.iter().enumerate() {
            let digit = (idx / stride) % dims.dim(k);
            if keep.contains(&k) {
                kp = kp * dims.dim(k) + digit;
            } else {
                tp = tp * dims.dim(k) + digit;
            }
        }
        kept_part[idx] = kp;
        traced_part[idx] = tp;
    }

    let mut out = ComplexMatrix::zeros(kept_dim, kept_dim)?;
    for r in 0..n {
        for c in 0..n {
            if traced_part[r] == traced_part[c] {
                let v = out.at(kept_part[r], kept_part[c]) + rho.at(r, c);
                out.set(kept_part[r], kept_part[c], v);
            }
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must be Hermitian within [`tol::HERMITICITY`]; the returned
/// spectrum is sorted descending. Robust and plenty fast at the supported
/// dimensions (≤ 64).
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Spectrum> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let deviation = h.hermiticity_deviation();
    if deviation > tol::HERMITICITY {
        return Err(Error::NotHermitian { deviation });
    }

    let n = h.rows();
    // Work on an exactly Hermitian copy so rotations see no asymmetry noise.
    let mut a = vec![C64::new(0.0, 0.0); n * n];
    for r in 0..n {
        a[r * n + r] = C64::new(h.at(r, r).re, 0.0);
        for c in (r + 1)..n {
            let v = (h.at(r, c) + h.at(c, r).conj()) * 0.5;
            a[r * n + c] = v;
            a[c * n + r] = v.conj();
        }
    }

    for _sweep in 0..tol::JACOBI_MAX_SWEEPS {
        let mut off_sq = 0.0;
        for r in 0..n {
            for c in (r + 1)..n {
                off_sq += a[r * n + c].norm_sqr();
            }
        }
        if (2.0 * off_sq).sqrt() < tol::JACOBI_OFF_DIAG {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, n, p, q);
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eigenvalues.sort_unstable_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(Spectrum { eigenvalues })
}

/// One Jacobi rotation annihilating `a[p][q]`.
///
/// Writing `a[p][q] = |g| e^{iφ}`, the unitary is the phase `diag(1, e^{-iφ})`
/// composed with the classic real rotation, so the 2x2 pivot block reduces to
/// the real symmetric case.
fn jacobi_rotate(a: &mut [C64], n: usize, p: usize, q: usize) {
    let g = a[p * n + q];
    let ag = g.norm();
    if ag == 0.0 {
        return;
    }
    let phase = g / ag;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * ag);
    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
    let t = sign / (theta.abs() + (1.0 + theta * theta).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    a[p * n + p] = C64::new(app - t * ag, 0.0);
    a[q * n + q] = C64::new(aqq + t * ag, 0.0);
    a[p * n + q] = C64::new(0.0, 0.0);
    a[q * n + p] = C64::new(0.0, 0.0);

    let phase_conj = phase.conj();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = akp * c - akq * s * phase_conj;
        let new_kq = akp * (s * phase) + akq * c;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp.conj();
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq.conj();
    }
}

/// Trace norm `Σ|λ|` of a Hermitian matrix.
pub fn trace_norm_hermitian(h: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(h)?.abs_sum())
}
