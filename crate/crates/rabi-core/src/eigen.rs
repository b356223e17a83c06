//! Symmetric tridiagonal eigendecomposition by the implicit-shift QL method
//! (EISPACK tql2 lineage), with eigenvector accumulation.
//!
//! The chain Hamiltonians are tridiagonal by construction, so no reduction
//! step is needed. Eigenvalues come out ascending; eigenvector signs are fixed
//! deterministically (first component of largest magnitude made positive) so
//! downstream file output is byte-stable.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{abs, copysign, hypot};

const MAX_QL_ITERATIONS: usize = 64;

/// Eigenvalues (ascending) and orthonormal eigenvectors (column-major:
/// `vectors[k*dim..(k+1)*dim]` is the k-th eigenvector).
#[derive(Clone, Debug)]
pub struct TridiagonalEigen {
    pub dim: usize,
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

impl TridiagonalEigen {
    pub fn vector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.dim..(k + 1) * self.dim]
    }
}

/// Diagonalize the symmetric tridiagonal matrix with main diagonal `diag` and
/// off-diagonal `offdiag` (length dim - 1).
pub fn eigh_tridiagonal(diag: &[f64], offdiag: &[f64]) -> Result<TridiagonalEigen> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::DimensionTooSmall { required: 1, got: 0 });
    }
    if offdiag.len() + 1 != n {
        return Err(Error::DimensionMismatch { left: n, right: offdiag.len() + 1 });
    }
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(0.0);
    // column-major identity
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }

    for l in 0..n {
        let mut iter = 0;
        loop {
            // locate a negligible off-diagonal element
            let mut m = l;
            while m + 1 < n {
                let dd = abs(d[m]) + abs(d[m + 1]);
                if abs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_ITERATIONS {
                return Err(Error::EigenNonConvergence { level: l, iterations: iter });
            }
            // implicit shift from the 2x2 corner
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + copysign(r, g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // rotate eigenvector columns i and i+1
                let (head, tail) = z.split_at_mut((i + 1) * n);
                let zi = &mut head[i * n..];
                let zi1 = &mut tail[..n];
                for k in 0..n {
                    f = zi1[k];
                    zi1[k] = s * zi[k] + c * f;
                    zi[k] = c * zi[k] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // ascending order, stable under exact ties
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]).then(a.cmp(&b)));
    let mut values = Vec::with_capacity(n);
    let mut vectors = vec![0.0; n * n];
    for (k, &src) in order.iter().enumerate() {
        values.push(d[src]);
        vectors[k * n..(k + 1) * n].copy_from_slice(&z[src * n..(src + 1) * n]);
    }

    // deterministic sign: first component of largest magnitude is positive
    for k in 0..n {
        let col = &mut vectors[k * n..(k + 1) * n];
        let mut best = 0;
        for (i, &v) in col.iter().enumerate() {
            if abs(v) > abs(col[best]) {
                best = i;
            }
        }
        if col[best] < 0.0 {
            for v in col.iter_mut() {
                *v = -*v;
            }
        }
    }

    Ok(TridiagonalEigen { dim: n, values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(diag: &[f64], offdiag: &[f64], eig: &TridiagonalEigen) -> f64 {
        let n = diag.len();
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let v = eig.vector(k);
            for i in 0..n {
                let mut hv = diag[i] * v[i];
                if i > 0 {
                    hv += offdiag[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    hv += offdiag[i] * v[i + 1];
                }
                worst = worst.max(abs(hv - eig.values[k] * v[i]));
            }
        }
        worst
    }

    #[test]
    fn diagonal_matrix_is_its_own_spectrum() {
        let diag = [3.0, -1.0, 2.0, 0.5];
        let off = [0.0, 0.0, 0.0];
        let eig = eigh_tridiagonal(&diag, &off).unwrap();
        assert_eq!(eig.values, vec![-1.0, 0.5, 2.0, 3.0]);
    }

    #[test]
    fn two_by_two_exact() {
        // [[1, 2], [2, 1]] -> eigenvalues -1, 3
        let eig = eigh_tridiagonal(&[1.0, 1.0], &[2.0]).unwrap();
        assert!(abs(eig.values[0] + 1.0) < 1e-14);
        assert!(abs(eig.values[1] - 3.0) < 1e-14);
    }

    #[test]
    fn residual_and_orthonormality() {
        // harmonic chain with coupling
        let n = 60;
        let diag: Vec<f64> = (0..n).map(|i| i as f64 + if i % 2 == 0 { 0.25 } else { -0.25 }).collect();
        let off: Vec<f64> = (1..n).map(|i| 0.7 * (i as f64).sqrt()).collect();
        let eig = eigh_tridiagonal(&diag, &off).unwrap();
        let scale: f64 = diag.iter().map(|x| abs(*x)).fold(0.0, f64::max)
            + 2.0 * off.iter().map(|x| abs(*x)).fold(0.0, f64::max);
        assert!(residual(&diag, &off, &eig) < 1e-12 * scale);
        for a in 0..n {
            for b in a..n {
                let dot: f64 =
                    eig.vector(a).iter().zip(eig.vector(b)).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                assert!(abs(dot - target) < 1e-11, "gram ({a},{b}) = {dot}");
            }
        }
    }

    #[test]
    fn ascending_order() {
        let diag: Vec<f64> = (0..40).map(|i| ((i * 7919) % 13) as f64).collect();
        let off: Vec<f64> = (1..40).map(|i| ((i * 104729) % 5) as f64 * 0.3).collect();
        let eig = eigh_tridiagonal(&diag, &off).unwrap();
        for w in eig.values.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn sign_convention_is_deterministic() {
        let diag = [0.0, 1.0, 2.0, 3.0];
        let off = [0.5, 0.5, 0.5];
        let a = eigh_tridiagonal(&diag, &off).unwrap();
        let b = eigh_tridiagonal(&diag, &off).unwrap();
        assert_eq!(a.vectors, b.vectors);
        for k in 0..4 {
            let col = a.vector(k);
            let mut best = 0;
            for (i, &v) in col.iter().enumerate() {
                if abs(v) > abs(col[best]) {
                    best = i;
                }
            }
            assert!(col[best] > 0.0);
        }
    }
}
