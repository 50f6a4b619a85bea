use nalgebra::{DMatrix, DVector};

use crate::error::{IepgError, Result};
use crate::graph::Graph;
use crate::matrix::{PatternedMatrix, DEFAULT_ZERO_TOL};

/// Irreducible tridiagonal matrix with positive off-diagonal and the given
/// distinct eigenvalues, by Lanczos on `diag(eigenvalues)` from the
/// normalized all-ones vector (full reorthogonalization).
pub fn jacobi_from_spectrum(eigenvalues: &[f64]) -> Result<PatternedMatrix> {
    let m = eigenvalues.len();
    if m == 0 {
        return Err(IepgError::domain("empty spectrum"));
    }
    if eigenvalues.iter().any(|x| !x.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    let mut vals = eigenvalues.to_vec();
    vals.sort_by(|a, b| a.total_cmp(b));
    let scale = vals.iter().fold(1.0f64, |s, x| s.max(x.abs()));
    if vals.windows(2).any(|w| w[1] - w[0] <= 1e-10 * scale) {
        return Err(IepgError::domain("eigenvalues of a Jacobi matrix must be distinct"));
    }
    let d = DVector::from_vec(vals);
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(m);
    let mut alpha = vec![0.0; m];
    let mut beta = vec![0.0; m.saturating_sub(1)];
    let mut q = DVector::from_element(m, 1.0 / (m as f64).sqrt());
    for k in 0..m {
        let mut w = d.component_mul(&q);
        alpha[k] = q.dot(&w);
        w -= &q * alpha[k];
        if k > 0 {
            w -= &basis[k - 1] * beta[k - 1];
        }
        basis.push(q.clone());
        // twice is enough
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&w);
                w -= b * c;
            }
        }
        if k + 1 < m {
            let nb = w.norm();
            if nb <= 1e-14 * scale {
                return Err(IepgError::NoConvergence("Lanczos broke down".into()));
            }
            beta[k] = nb;
            q = w / nb;
        }
    }
    let mut t = DMatrix::zeros(m, m);
    for k in 0..m {
        t[(k, k)] = alpha[k];
        if k + 1 < m {
            t[(k, k + 1)] = beta[k];
            t[(k + 1, k)] = beta[k];
        }
    }
    PatternedMatrix::with_pattern(t, &Graph::path(m), DEFAULT_ZERO_TOL)
}
