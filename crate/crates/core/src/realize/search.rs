use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::newton::{isospectral_newton, Constraints};
use super::{RealizationResult, SolveOptions};
use crate::error::{IepgError, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::matrix::{PatternedMatrix, DEFAULT_ZERO_TOL};

/// Unguided search for a matrix in `S(graph)` with the given eigenvalues
/// (listed with multiplicity): random orthogonal conjugates of the diagonal
/// matrix, projected onto the zero pattern. Failure says nothing about
/// realizability. The result is flagged `best_effort`; its certificate is
/// reported but not required.
pub fn realize_spectrum(graph: &Graph, eigenvalues: &[f64], opts: &SolveOptions) -> Result<RealizationResult> {
    let n = graph.order();
    if eigenvalues.len() != n {
        return Err(IepgError::domain(format!("need {n} eigenvalues, got {}", eigenvalues.len())));
    }
    if eigenvalues.iter().any(|x| !x.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    let d = DMatrix::from_diagonal(&DVector::from_column_slice(eigenvalues));
    let scale = linalg::max_abs(&d).max(1.0);
    let mut cons = Constraints::new(n);
    for (i, j) in graph.nonedges() {
        cons.zero(i, j);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut iterations = 0;
    let mut last_err = String::from("no attempt made");
    for attempt in 0..opts.restarts.max(1) {
        let q = linalg::random_orthogonal(n, &mut rng);
        let mut start = q.transpose() * &d * &q;
        linalg::symmetrize(&mut start);
        let out = isospectral_newton(&start, &cons, opts.max_iters, 1e-13 * scale);
        iterations += out.iterations;
        if !out.converged {
            last_err = format!("projection stalled at residual {:e}", out.residual);
            continue;
        }
        let mut m = out.matrix;
        for (i, j) in graph.nonedges() {
            m[(i, j)] = 0.0;
            m[(j, i)] = 0.0;
        }
        if graph.edges().iter().any(|&(i, j)| m[(i, j)].abs() <= 1e-7 * scale) {
            last_err = "an edge entry collapsed to zero".into();
            continue;
        }
        let pm = PatternedMatrix::with_pattern(m, graph, DEFAULT_ZERO_TOL)?;
        let mut r = RealizationResult::assemble(pm, graph, eigenvalues.to_vec(), opts, iterations, attempt);
        if r.spectral_residual > 1e-8 * scale {
            last_err = format!("spectrum drifted by {:e}", r.spectral_residual);
            continue;
        }
        r.best_effort = true;
        return Ok(r);
    }
    Err(IepgError::NoConvergence(last_err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_a_c5_matrix_with_simple_spectrum() {
        let g = Graph::cycle(5).unwrap();
        let r = realize_spectrum(&g, &[-2.0, -1.0, 0.0, 1.5, 3.0], &SolveOptions::default()).unwrap();
        assert_eq!(r.matrix.graph(), &g);
        assert!(r.best_effort);
        assert!(r.spectral_residual < 1e-8);
    }
}
