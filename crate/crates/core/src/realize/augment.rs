use nalgebra::DMatrix;

use super::jacobi::jacobi_from_spectrum;
use super::lift::{has_ssp, isospectral_lift};
use super::{RealizationResult, SolveOptions};
use crate::error::{IepgError, Result};
use crate::linalg;
use crate::matrix::{direct_sum, PatternedMatrix};

/// Adds a vertex adjacent to `alpha` and raises the multiplicity of `lambda`
/// by one, keeping the SSP.
///
/// Needs `A` with the SSP, `lambda` of multiplicity `k >= 1`, `|alpha| = k + 1`,
/// and every `k x k` minor of the eigenvector rows indexed by `alpha` nonzero.
pub fn augment(a: &PatternedMatrix, lambda: f64, alpha: &[usize], opts: &SolveOptions) -> Result<RealizationResult> {
    let n = a.order();
    if !has_ssp(a) {
        return Err(IepgError::hypothesis("the matrix does not have the SSP"));
    }
    let mut alpha = alpha.to_vec();
    alpha.sort_unstable();
    alpha.dedup();
    if let Some(&v) = alpha.iter().find(|&&v| v >= n) {
        return Err(IepgError::VertexOutOfRange { vertex: v, order: n });
    }
    let spec = a.spectrum();
    let (vals, vecs) = linalg::sym_eigen(a.matrix());
    let cols: Vec<usize> = (0..n).filter(|&i| (vals[i] - lambda).abs() <= spec.tol).collect();
    let k = cols.len();
    if k == 0 {
        return Err(IepgError::hypothesis(format!("{lambda} is not an eigenvalue")));
    }
    if alpha.len() != k + 1 {
        return Err(IepgError::hypothesis(format!("need {} neighbours for multiplicity {k}, got {}", k + 1, alpha.len())));
    }
    let rows_alpha = DMatrix::from_fn(k + 1, k, |r, c| vecs[(alpha[r], cols[c])]);
    for (drop, &row) in alpha.iter().enumerate() {
        let keep: Vec<usize> = (0..=k).filter(|&r| r != drop).collect();
        let sub = DMatrix::from_fn(k, k, |r, c| rows_alpha[(keep[r], c)]);
        let smin = linalg::singular_values(&sub).last().copied().unwrap_or(0.0);
        if smin <= 1e-8 {
            return Err(IepgError::hypothesis(format!(
                "eigenvector minor without row {} is singular (sigma_min {smin:e})",
                row + 1
            )));
        }
    }
    let seed = PatternedMatrix::new(direct_sum(a.matrix(), &DMatrix::from_element(1, 1, lambda)))?;
    let target = a.graph().add_vertex(&alpha)?;
    isospectral_lift(&seed, &target, opts)
}

/// A matrix on the cycle `C_n` with the given `n - 1` distinct eigenvalues
/// and the `index`-th of them (0-based, ascending) doubled.
pub fn cycle_double_eigenvalue(n: usize, eigenvalues: &[f64], index: usize, opts: &SolveOptions) -> Result<RealizationResult> {
    if n < 3 || eigenvalues.len() != n - 1 {
        return Err(IepgError::domain(format!("need n >= 3 and n - 1 eigenvalues, got n = {n} and {}", eigenvalues.len())));
    }
    if index >= n - 1 {
        return Err(IepgError::domain(format!("index {index} out of range")));
    }
    let jac = jacobi_from_spectrum(eigenvalues)?;
    let mut sorted = eigenvalues.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    augment(&jac, sorted[index], &[0, n - 2], opts)
}
