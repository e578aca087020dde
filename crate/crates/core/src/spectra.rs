//! Dense symmetric eigensolver and the spectral quantities built on it.
//!
//! The solver is the cyclic Jacobi method: each sweep visits every
//! off-diagonal pair `(p, q)` once and annihilates it with a plane rotation.
//! For the small integer Laplacians handled here the method converges
//! quadratically and yields eigenvalues to a few ulps of `‖L‖`, which is what
//! the closed-form comparisons need.

use crate::error::{Error, Result};
use crate::graph::{Graph, LaplacianMatrix};
use crate::matrix::{dot, norm, DenseMatrix};

/// Relative off-diagonal mass at which Jacobi iteration stops.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Maximum number of full Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Largest entrywise asymmetry accepted by [`eigenvalues_sym`].
pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, `eigenvectors[i]` belongs to `eigenvalues[i]`.
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    /// Absolute bound on the eigenvalue error (Weyl: at most the remaining
    /// off-diagonal Frobenius mass, floored at the rounding level).
    pub residual_bound: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn lambda2(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    /// Builds a spectrum from a known multiset of eigenvalues.
    pub fn from_values(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Spectrum {
            eigenvalues,
            eigenvectors: None,
            residual_bound: 0.0,
            sweeps: 0,
        }
    }
}

/// All eigenvalues (and optionally eigenvectors) of a symmetric matrix.
pub fn eigenvalues_sym(m: &DenseMatrix, want_vectors: bool, tol: f64) -> Result<Spectrum> {
    eigenvalues_sym_capped(m, want_vectors, tol, MAX_SWEEPS)
}

pub fn eigenvalues_sym_capped(
    m: &DenseMatrix,
    want_vectors: bool,
    tol: f64,
    max_sweeps: usize,
) -> Result<Spectrum> {
    let n = m.order();
    if n == 0 {
        return Err(Error::TooFewVertices { required: 1, got: 0 });
    }
    let (asym, row, col) = m.max_asymmetry();
    if !(asym <= SYMMETRY_TOL) {
        return Err(Error::NotSymmetric { row, col, diff: asym });
    }

    let mut a = m.clone();
    // symmetrize exactly so the rotation below can mirror updates
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, avg);
            a.set(j, i, avg);
        }
    }
    let mut v = want_vectors.then(|| DenseMatrix::identity(n));
    let scale = a.frobenius_norm();
    let target = tol * scale;

    let mut sweeps = 0;
    let mut off = a.off_diagonal_norm();
    while off > target && off > 0.0 {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                // negligible next to both diagonal entries: drop it
                if sweeps > 4
                    && app.abs() + 100.0 * apq.abs() == app.abs()
                    && aqq.abs() + 100.0 * apq.abs() == aqq.abs()
                {
                    a.set(p, q, 0.0);
                    a.set(q, p, 0.0);
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a.set(k, p, new_p);
                    a.set(p, k, new_p);
                    a.set(k, q, new_q);
                    a.set(q, k, new_q);
                }
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v.get(k, p);
                        let vkq = v.get(k, q);
                        v.set(k, p, c * vkp - s * vkq);
                        v.set(k, q, s * vkp + c * vkq);
                    }
                }
            }
        }
        off = a.off_diagonal_norm();
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    let eigenvalues = order.iter().map(|&i| a.get(i, i)).collect();
    let eigenvectors = v.map(|v| order.iter().map(|&j| v.column(j)).collect());
    let rounding = 8.0 * n as f64 * f64::EPSILON * scale.max(f64::MIN_POSITIVE);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        residual_bound: off.max(rounding),
        sweeps,
    })
}

/// Laplacian spectrum of `g`.
pub fn laplacian_spectrum(g: &Graph, want_vectors: bool, tol: f64) -> Result<Spectrum> {
    eigenvalues_sym(g.laplacian().matrix(), want_vectors, tol)
}

/// Second-smallest Laplacian eigenvalue. Disconnected graphs yield a value
/// near zero rather than an error.
pub fn fiedler_value(g: &Graph, tol: f64) -> Result<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, got: n });
    }
    let spectrum = laplacian_spectrum(g, false, tol)?;
    Ok(spectrum.eigenvalues[1])
}

/// Unit eigenvector of `λ2`, orthogonalised against the all-ones vector.
/// Sign fixed so the first clearly non-zero entry is positive.
pub fn fiedler_vector(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, got: n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spectrum = laplacian_spectrum(g, true, tol)?;
    let mut x = spectrum
        .eigenvectors
        .expect("vectors were requested")
        .swap_remove(1);
    let mean = x.iter().sum::<f64>() / n as f64;
    x.iter_mut().for_each(|xi| *xi -= mean);
    let len = norm(&x);
    x.iter_mut().for_each(|xi| *xi /= len);
    if let Some(first) = x.iter().find(|xi| xi.abs() > 1e-9) {
        if *first < 0.0 {
            x.iter_mut().for_each(|xi| *xi = -*xi);
        }
    }
    Ok(x)
}

/// `xᵀLx / xᵀx`.
pub fn rayleigh_quotient(l: &LaplacianMatrix, x: &[f64]) -> Result<f64> {
    check_vector(l, x)?;
    let lx = l.matrix().mul_vec(x);
    Ok(dot(x, &lx) / dot(x, x))
}

/// `‖Lx - λx‖ / ‖x‖`.
pub fn embedding_residual(l: &LaplacianMatrix, x: &[f64], lambda: f64) -> Result<f64> {
    check_vector(l, x)?;
    let lx = l.matrix().mul_vec(x);
    let r: Vec<f64> = lx.iter().zip(x).map(|(a, b)| a - lambda * b).collect();
    Ok(norm(&r) / norm(x))
}

fn check_vector(l: &LaplacianMatrix, x: &[f64]) -> Result<()> {
    if x.len() != l.order() {
        return Err(Error::DimensionMismatch {
            expected: l.order(),
            got: x.len(),
        });
    }
    if x.iter().all(|&xi| xi == 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Laplacian spectrum of the join `G1 * G2` from the spectra of its parts:
/// `0`, `n1 + n2`, `λ_i(G1) + n2` for `i ≥ 2` and `λ_j(G2) + n1` for `j ≥ 2`.
pub fn join_spectrum(s1: &Spectrum, n1: usize, s2: &Spectrum, n2: usize) -> Result<Spectrum> {
    for (s, n) in [(s1, n1), (s2, n2)] {
        if n == 0 {
            return Err(Error::TooFewVertices { required: 1, got: 0 });
        }
        if s.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: s.len(),
            });
        }
        let smallest = s.eigenvalues[0];
        if smallest.abs() > s.residual_bound.max(1e-8) {
            return Err(Error::NotLaplacianSpectrum(smallest));
        }
    }
    let mut values = Vec::with_capacity(n1 + n2);
    values.push(0.0);
    values.extend(s1.eigenvalues[1..].iter().map(|l| l + n2 as f64));
    values.extend(s2.eigenvalues[1..].iter().map(|l| l + n1 as f64));
    values.push((n1 + n2) as f64);
    let mut out = Spectrum::from_values(values);
    out.residual_bound = s1.residual_bound.max(s2.residual_bound);
    Ok(out)
}

/// Largest gap between two multisets paired in sorted order; `None` when
/// their sizes differ.
pub fn multiset_max_gap(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    Some(
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
    )
}
