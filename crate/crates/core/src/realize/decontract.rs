//! Splitting a vertex into an edge while keeping the spectrum and adding one
//! large eigenvalue.
//!
//! Given `A` with the SSP and a partition `alpha ∪ beta` of the neighbours of
//! `v`, the graph `H` gets a new vertex `w` adjacent to `v` and to `beta`,
//! while `v` keeps `alpha`. Start from `A ⊕ [λ]` conjugated by
//! `exp(K)` with `K = [[0, -k], [kᵀ, 0]]` and `(λI - A) k = D a_v`, project
//! onto the linear conditions that make a 45° rotation of the `(v, w)` plane
//! produce the pattern of `H`, then rotate.

use nalgebra::{DMatrix, DVector};
use serde_json::{json, Value};

use super::newton::{conjugate, isospectral_newton, Constraints};
use super::{lift::has_ssp, RealizationResult, SolveOptions};
use crate::error::{IepgError, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::matrix::{direct_sum, permute_symmetric, PatternedMatrix, DEFAULT_ZERO_TOL};

#[derive(Clone, Debug, Default)]
pub struct DecontractOptions {
    pub solve: SolveOptions,
    /// Fixed auxiliary eigenvalue; by default `2ρ + 1` doubled until success.
    pub lambda: Option<f64>,
}

pub fn decontract(
    a: &PatternedMatrix,
    v: usize,
    alpha: &[usize],
    beta: &[usize],
    opts: &DecontractOptions,
) -> Result<RealizationResult> {
    let n = a.order();
    let g = a.graph();
    if v >= n {
        return Err(IepgError::VertexOutOfRange { vertex: v, order: n });
    }
    let mut split: Vec<usize> = alpha.iter().chain(beta).copied().collect();
    split.sort_unstable();
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    if split != nbrs {
        return Err(IepgError::domain("alpha and beta must partition the neighbours of v"));
    }
    if !has_ssp(a) {
        return Err(IepgError::hypothesis("the matrix does not have the SSP"));
    }
    // relabel so that v is last
    let mut to_new = vec![0; n];
    let mut next = 0;
    for (u, slot) in to_new.iter_mut().enumerate() {
        if u != v {
            *slot = next;
            next += 1;
        }
    }
    to_new[v] = n - 1;
    let ap = permute_symmetric(a.matrix(), &to_new);
    let gp = g.relabeled(&to_new);
    let alpha_p: Vec<usize> = alpha.iter().map(|&u| to_new[u]).collect();
    let beta_p: Vec<usize> = beta.iter().map(|&u| to_new[u]).collect();
    let vp = n - 1;
    let w = n;

    let mut hp = gp.add_vertex(&[vp])?;
    for &j in &beta_p {
        hp.set_edge(vp, j, false);
        hp.set_edge(w, j, true);
    }

    let eig = linalg::sym_eigenvalues(&ap);
    let rho = eig.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let schedule: Vec<f64> = match opts.lambda {
        Some(l) => vec![l],
        None => {
            let cap = 1024.0 * (rho + 1.0);
            let mut l = 2.0 * rho + 1.0;
            let mut s = Vec::new();
            while l <= cap {
                s.push(l);
                l *= 2.0;
            }
            s
        }
    };

    let mut d = DVector::zeros(n);
    for &j in alpha_p.iter().chain(std::iter::once(&vp)) {
        d[j] = 1.0;
    }
    for &j in &beta_p {
        d[j] = -1.0;
    }
    let rhs = d.component_mul(&ap.column(vp).into_owned());

    let mut cons = Constraints::new(n + 1);
    for j in 0..vp {
        if alpha_p.contains(&j) {
            cons.push(vec![(vp, j, 1.0), (w, j, -1.0)], 0.0);
        } else if beta_p.contains(&j) {
            cons.push(vec![(vp, j, 1.0), (w, j, 1.0)], 0.0);
        } else {
            cons.zero(vp, j);
            cons.zero(w, j);
        }
    }
    cons.push(vec![(vp, vp, 1.0), (w, vp, -1.0)], 0.0);
    for (i, j) in gp.nonedges() {
        if j < vp {
            cons.zero(i, j);
        }
    }

    let mut last_err = String::from("empty lambda schedule");
    let mut iterations = 0;
    for (attempt, &lambda) in schedule.iter().enumerate() {
        if !lambda.is_finite() {
            return Err(IepgError::NonFinite);
        }
        let shifted = DMatrix::identity(n, n) * lambda - &ap;
        let k = match shifted.clone().cholesky() {
            Some(ch) => ch.solve(&rhs),
            None => {
                last_err = format!("lambda {lambda} does not exceed the spectrum");
                continue;
            }
        };
        let mut kk = DMatrix::zeros(n + 1, n + 1);
        for i in 0..n {
            kk[(i, w)] = -k[i];
            kk[(w, i)] = k[i];
        }
        let a_lambda = direct_sum(&ap, &DMatrix::from_element(1, 1, lambda));
        let start = conjugate(&a_lambda, &kk);
        let scale = linalg::max_abs(&a_lambda).max(1.0);
        let out = isospectral_newton(&start, &cons, opts.solve.max_iters, 1e-13 * scale);
        iterations += out.iterations;
        if !out.converged {
            last_err = format!("projection stalled at residual {:e} for lambda {lambda}", out.residual);
            continue;
        }
        let c = out.matrix;
        if (c[(vp, vp)] - c[(w, w)]).abs() <= 1e-6 {
            last_err = format!("diagonal entries of the split pair coincide for lambda {lambda}");
            continue;
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut r = DMatrix::identity(n + 1, n + 1);
        r[(vp, vp)] = s;
        r[(vp, w)] = s;
        r[(w, vp)] = -s;
        r[(w, w)] = s;
        let mut rotated = &r * c * r.transpose();
        linalg::symmetrize(&mut rotated);
        for (i, j) in hp.nonedges() {
            rotated[(i, j)] = 0.0;
            rotated[(j, i)] = 0.0;
        }
        let floor = 1e-8 * scale;
        if hp.edges().iter().any(|&(i, j)| rotated[(i, j)].abs() <= floor) {
            last_err = format!("an edge entry vanished for lambda {lambda}");
            continue;
        }
        // back to the caller's labels, new vertex last
        let mut back = vec![0; n + 1];
        for u in 0..n {
            back[to_new[u]] = u;
        }
        back[w] = n;
        let final_matrix = permute_symmetric(&rotated, &back);
        let h = hp.relabeled(&back);
        let pm = PatternedMatrix::with_pattern(final_matrix, &h, DEFAULT_ZERO_TOL)?;
        let mut target = eig.clone();
        target.push(lambda);
        let mut result = RealizationResult::assemble(pm, &h, target, &opts.solve, iterations, attempt);
        result.lambda = Some(lambda);
        if result.spectral_residual > 1e-9 * scale {
            last_err = format!("spectrum drifted by {:e}", result.spectral_residual);
            continue;
        }
        if !result.certificate.holds {
            last_err = format!("result lacks the {} for lambda {lambda}", opts.solve.require);
            continue;
        }
        return Ok(result);
    }
    Err(IepgError::NoConvergence(last_err))
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub max_abs_solution: f64,
    pub bound: f64,
    pub lambda_min: f64,
    pub holds: bool,
}

impl BoundReport {
    pub fn to_json(&self) -> Value {
        json!({"max_abs_solution": self.max_abs_solution, "bound": self.bound, "lambda_min": self.lambda_min, "holds": self.holds})
    }
}

/// For positive definite `m`, the solution of `m x = b` satisfies
/// `max |x_i| <= sqrt(n) / λ_min(m) * max |b_i|`.
pub fn lambda_bound_check(m: &DMatrix<f64>, b: &DVector<f64>) -> Result<BoundReport> {
    let n = m.nrows();
    if m.ncols() != n || b.len() != n {
        return Err(IepgError::NotSquare(m.nrows(), m.ncols()));
    }
    let ch = m.clone().cholesky().ok_or_else(|| IepgError::domain("matrix is not positive definite"))?;
    let x = ch.solve(b);
    let lambda_min = linalg::sym_eigenvalues(m)[0];
    let bound = (n as f64).sqrt() / lambda_min * b.amax();
    let max_abs_solution = x.amax();
    Ok(BoundReport { max_abs_solution, bound, lambda_min, holds: max_abs_solution <= bound * (1.0 + 1e-12) })
}

/// Graph produced by splitting `v` with `beta` moving to the new vertex.
pub fn decontracted_graph(g: &Graph, v: usize, beta: &[usize]) -> Result<Graph> {
    let mut h = g.add_vertex(&[v])?;
    let w = g.order();
    for &j in beta {
        h.set_edge(v, j, false);
        h.set_edge(w, j, true);
    }
    Ok(h)
}
