//! Truncated Fock-space primitives: ladder operators, displacement operators,
//! coherent and cat states.
//!
//! Everything works on a finite basis |0>..|N-1>. Displacement matrix entries
//! are the exact (untruncated) matrix elements in closed form; the truncated
//! generator exponential serves as the independent oracle in the test suite.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::math::{self, ln_factorial, ScaledLaguerreWalk};

use core::f64::consts::PI;

/// Physical parameters of the Rabi Hamiltonian, hbar = 1.
///
/// `delta` is half the qubit energy; `gbar = g/omega` and `dbar = delta/omega`
/// are the dimensionless ratios everything is plotted against.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    omega: f64,
    delta: f64,
    g: f64,
}

impl ModelParams {
    pub fn new(omega: f64, delta: f64, g: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::InvalidParams { reason: "omega must be positive and finite" });
        }
        if !(delta >= 0.0) || !delta.is_finite() {
            return Err(Error::InvalidParams { reason: "delta must be non-negative and finite" });
        }
        if !(g >= 0.0) || !g.is_finite() {
            return Err(Error::InvalidParams { reason: "g must be non-negative and finite" });
        }
        Ok(ModelParams { omega, delta, g })
    }

    /// Dimensionless parameters with omega = 1.
    pub fn dimensionless(dbar: f64, gbar: f64) -> Result<Self> {
        Self::new(1.0, dbar, gbar)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn gbar(&self) -> f64 {
        self.g / self.omega
    }

    pub fn dbar(&self) -> f64 {
        self.delta / self.omega
    }
}

/// Complex amplitudes over the truncated Fock basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector {
    amps: Vec<C64>,
}

impl FockVector {
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::DimensionTooSmall { required: 1, got: 0 });
        }
        Ok(FockVector { amps })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![C64::new(0.0, 0.0); dim])
    }

    /// The basis state |n>.
    pub fn basis_state(n: usize, dim: usize) -> Result<Self> {
        if dim <= n {
            return Err(Error::DimensionTooSmall { required: n + 1, got: dim });
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[n] = C64::new(1.0, 0.0);
        Self::new(amps)
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| C64::new(v, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.norm_sqr())
    }

    /// <self|other>.
    pub fn inner(&self, other: &FockVector) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amps {
                *a /= n;
            }
        }
        self
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        math::abs(self.norm_sqr() - 1.0) < tol
    }
}

/// Dense complex operator on the truncated space, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall { required: 1, got: 0 });
        }
        Ok(OperatorMatrix { dim, data: vec![C64::new(0.0, 0.0); dim * dim] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * dim + i] = C64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[C64] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn adjoint(&self) -> OperatorMatrix {
        let mut out = OperatorMatrix { dim: self.dim, data: vec![C64::new(0.0, 0.0); self.data.len()] };
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.data[c * self.dim + r] = self.entry(r, c).conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &OperatorMatrix) -> Result<OperatorMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: rhs.dim });
        }
        let n = self.dim;
        let mut out = OperatorMatrix::zeros(n)?;
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * rhs.data[k * n + c];
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        if self.dim != v.dim() {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.dim() });
        }
        let mut out = vec![C64::new(0.0, 0.0); self.dim];
        for (r, slot) in out.iter_mut().enumerate() {
            let row = self.row(r);
            *slot = row.iter().zip(v.amplitudes()).map(|(m, a)| m * a).sum();
        }
        FockVector::new(out)
    }

    /// max |M - M^dagger| over all entries.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                dev = dev.max((self.entry(r, c) - self.entry(c, r).conj()).norm());
            }
        }
        dev
    }

    /// max |(M^dagger M - I)_{rc}| restricted to rows/cols below `block`.
    pub fn unitarity_deviation(&self, block: usize) -> f64 {
        let b = block.min(self.dim);
        let mut dev: f64 = 0.0;
        for r in 0..b {
            for c in 0..b {
                let mut s = C64::new(0.0, 0.0);
                for k in 0..self.dim {
                    s += self.entry(k, r).conj() * self.entry(k, c);
                }
                let target = if r == c { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                dev = dev.max((s - target).norm());
            }
        }
        dev
    }
}

/// Annihilation, creation, and number operators on an N-dimensional basis.
pub fn ladder_matrices(dim: usize) -> Result<(OperatorMatrix, OperatorMatrix, OperatorMatrix)> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { required: 2, got: dim });
    }
    let mut a = OperatorMatrix::zeros(dim)?;
    let mut adag = OperatorMatrix::zeros(dim)?;
    let mut number = OperatorMatrix::zeros(dim)?;
    for n in 1..dim {
        let root = math::sqrt(n as f64);
        a.set(n - 1, n, C64::new(root, 0.0));
        adag.set(n, n - 1, C64::new(root, 0.0));
    }
    for n in 0..dim {
        number.set(n, n, C64::new(n as f64, 0.0));
    }
    Ok((a, adag, number))
}

/// Exact matrix elements <m|D(alpha)|n> of the displacement operator
/// D(alpha) = exp(alpha a^dagger - conj(alpha) a).
///
/// For m >= n (k = m - n):
///   sqrt(n!/m!) alpha^k e^{-|alpha|^2/2} L_n^{(k)}(|alpha|^2),
/// and the mirrored expression with (-conj(alpha))^k for m < n. Computed in
/// log-magnitude form per diagonal offset so large truncations cannot
/// overflow.
pub fn displacement_matrix_complex(alpha: C64, dim: usize) -> Result<OperatorMatrix> {
    if dim == 0 {
        return Err(Error::DimensionTooSmall { required: 1, got: 0 });
    }
    let r = alpha.norm();
    if r == 0.0 {
        return OperatorMatrix::identity(dim);
    }
    let mut out = OperatorMatrix::zeros(dim)?;
    let x = r * r;
    let ln_r = math::ln(r);
    let real_shift = alpha.im == 0.0;
    let theta = math::atan2(alpha.im, alpha.re);
    let lnfact: Vec<f64> = (0..dim).map(ln_factorial).collect();
    for k in 0..dim {
        let kf = k as f64;
        let (phase_lower, phase_upper) = if real_shift {
            // sign^k for the lower triangle, (-sign)^k for the upper: exact.
            let s = if alpha.re > 0.0 { 1.0 } else { -1.0 };
            let sk = if k % 2 == 0 { 1.0 } else { s };
            (C64::new(sk, 0.0), C64::new(if k % 2 == 0 { 1.0 } else { -s }, 0.0))
        } else {
            (C64::from_polar(1.0, kf * theta), C64::from_polar(1.0, kf * (PI - theta)))
        };
        let mut walk = ScaledLaguerreWalk::new(k, x);
        for j in 0..dim - k {
            let lg = walk.next_log();
            let ln_mag = -0.5 * x + kf * ln_r + 0.5 * (lnfact[j] - lnfact[j + k]) + lg.ln_mag;
            if ln_mag < -720.0 {
                continue;
            }
            let mag = lg.sign * math::exp(ln_mag);
            out.set(j + k, j, phase_lower * mag);
            if k > 0 {
                out.set(j, j + k, phase_upper * mag);
            }
        }
    }
    Ok(out)
}

/// Displacement by a real shift x: D(x) = exp(x (a^dagger - a)), real orthogonal.
pub fn displacement_matrix(shift: f64, dim: usize) -> Result<OperatorMatrix> {
    displacement_matrix_complex(C64::new(shift, 0.0), dim)
}

/// Normalized coherent state with real amplitude: c_n = e^{-alpha^2/2} alpha^n / sqrt(n!).
pub fn coherent_vector(alpha: f64, dim: usize) -> Result<FockVector> {
    if dim == 0 {
        return Err(Error::DimensionTooSmall { required: 1, got: 0 });
    }
    let mut amps = vec![C64::new(0.0, 0.0); dim];
    if alpha == 0.0 {
        amps[0] = C64::new(1.0, 0.0);
        return FockVector::new(amps);
    }
    let ln_a = math::ln(math::abs(alpha));
    let neg = alpha < 0.0;
    for (n, slot) in amps.iter_mut().enumerate() {
        let mag = math::exp(-0.5 * alpha * alpha + n as f64 * ln_a - 0.5 * ln_factorial(n));
        let sign = if neg && n % 2 == 1 { -1.0 } else { 1.0 };
        *slot = C64::new(sign * mag, 0.0);
    }
    FockVector::new(amps)
}

/// Even and odd field components of the cat states: the cosh and sinh parts
/// of e^{-gbar^2/2} e^{gbar a^dagger}|0>. Norms sum to one; supports are
/// disjoint by construction.
pub fn cat_field_parts(gbar: f64, dim: usize) -> Result<(FockVector, FockVector)> {
    let full = coherent_vector(gbar, dim)?;
    let mut sym = vec![C64::new(0.0, 0.0); dim];
    let mut antisym = vec![C64::new(0.0, 0.0); dim];
    for (n, &c) in full.amplitudes().iter().enumerate() {
        if n % 2 == 0 {
            sym[n] = c;
        } else {
            antisym[n] = c;
        }
    }
    Ok((FockVector::new(sym)?, FockVector::new(antisym)?))
}

/// Truncation-adequacy heuristic: a displacement (or coherent amplitude) of
/// magnitude `shift` wants N >= 4 shift^2 + 20. Violations degrade edge
/// entries but are not errors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationWarning {
    pub required: usize,
    pub got: usize,
}

pub fn truncation_warning(shift: f64, dim: usize) -> Option<TruncationWarning> {
    let required = math::ceil(4.0 * shift * shift + 20.0) as usize;
    if dim < required {
        Some(TruncationWarning { required, got: dim })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::abs;

    #[test]
    fn ladder_entries_match_definition() {
        let (a, adag, number) = ladder_matrices(4).unwrap();
        assert_eq!(a.entry(0, 1), C64::new(1.0, 0.0));
        assert!(abs(a.entry(2, 3).re - math::sqrt(3.0)) < 1e-15);
        assert_eq!(a.entry(1, 0), C64::new(0.0, 0.0));
        // number = a^dagger a exactly
        let prod = adag.matmul(&a).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(prod.entry(r, c), number.entry(r, c));
            }
        }
    }

    #[test]
    fn ladder_rejects_tiny_dim() {
        assert!(matches!(ladder_matrices(1), Err(Error::DimensionTooSmall { .. })));
    }

    #[test]
    fn displacement_zero_is_identity() {
        let d = displacement_matrix(0.0, 6).unwrap();
        let id = OperatorMatrix::identity(6).unwrap();
        assert_eq!(d, id);
    }

    #[test]
    fn displacement_vacuum_overlap() {
        // |<0|D(-2)|0>| = e^{-2}
        let d = displacement_matrix(-2.0, 64).unwrap();
        assert!(abs(d.entry(0, 0).re - math::exp(-2.0)) < 1e-12);
        assert_eq!(d.entry(0, 0).im, 0.0);
    }

    #[test]
    fn displacement_magnitude_symmetry() {
        // |D_{01}(1)| = |D_{10}(1)|
        let d = displacement_matrix(1.0, 32).unwrap();
        assert!(abs(d.entry(0, 1).norm() - d.entry(1, 0).norm()) < 1e-14);
    }

    #[test]
    fn coherent_matches_displacement_column_zero() {
        let alpha = 1.7;
        let v = coherent_vector(alpha, 48).unwrap();
        let d = displacement_matrix(alpha, 48).unwrap();
        for n in 0..48 {
            assert!((v.amplitudes()[n] - d.entry(n, 0)).norm() < 1e-10, "n={n}");
        }
    }

    #[test]
    fn coherent_basics() {
        let v = coherent_vector(0.0, 8).unwrap();
        assert_eq!(v.amplitudes()[0], C64::new(1.0, 0.0));
        let v = coherent_vector(2.0, 64).unwrap();
        assert!(v.is_normalized(1e-10));
        let mean: f64 =
            v.amplitudes().iter().enumerate().map(|(n, c)| n as f64 * c.norm_sqr()).sum();
        assert!(abs(mean - 4.0) < 1e-9);
    }

    #[test]
    fn cat_parts_disjoint_and_complete() {
        let (sym, anti) = cat_field_parts(2.0, 96).unwrap();
        assert_eq!(sym.inner(&anti).unwrap(), C64::new(0.0, 0.0));
        let total = sym.norm_sqr() + anti.norm_sqr();
        assert!(abs(total - 1.0) < 1e-10);
        // e^{-g^2} cosh(g^2) and sinh(g^2) split at gbar = 2
        assert!(abs(sym.norm_sqr() - 0.500167731313951) < 1e-12);
        assert!(abs(anti.norm_sqr() - 0.499832268686049) < 1e-12);
    }

    #[test]
    fn cat_parts_at_zero_coupling() {
        let (sym, anti) = cat_field_parts(0.0, 8).unwrap();
        assert_eq!(sym.amplitudes()[0], C64::new(1.0, 0.0));
        assert_eq!(anti.norm_sqr(), 0.0);
    }

    #[test]
    fn truncation_heuristic() {
        assert!(truncation_warning(2.0, 36).is_none());
        let w = truncation_warning(2.0, 30).unwrap();
        assert_eq!(w.required, 36);
        assert_eq!(w.got, 30);
    }

    #[test]
    fn params_validation() {
        assert!(ModelParams::new(1.0, 0.25, 0.7).is_ok());
        assert!(ModelParams::new(0.0, 0.25, 0.7).is_err());
        assert!(ModelParams::new(1.0, -0.1, 0.7).is_err());
        assert!(ModelParams::new(1.0, 0.25, -0.7).is_err());
        let p = ModelParams::new(2.0, 1.0, 0.5).unwrap();
        assert!(abs(p.gbar() - 0.25) < 1e-15);
        assert!(abs(p.dbar() - 0.5) < 1e-15);
    }
}
