//! Liberation of a nonzero pattern and isospectral lifting to a supergraph.
//!
//! Write Ψ for the verification matrix of `A` (rows indexed by the non-edges
//! of `G(A)`). New edges `N` can be switched on while every other non-edge
//! `Z` stays zero when the rows `Ψ_Z` are independent and `Ψ_N` restricted
//! to the null space of `Ψ_Z` has no zero row. A tangent direction with that
//! support is then followed and projected back onto the zero constraints.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde_json::{json, Value};

use super::newton::{conjugate, isospectral_newton, skew_from, Constraints};
use super::{RealizationResult, SolveOptions};
use crate::error::{IepgError, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::matrix::PatternedMatrix;
use crate::strong::{certify, has_property, select_rows, tangent_space, PropertyKind, RankOptions};

#[derive(Clone, Debug)]
pub struct LiberationReport {
    pub feasible: bool,
    pub reason: Option<String>,
    /// Non-edges of `G(A)` in lexicographic order.
    pub rows: Vec<(usize, usize)>,
    /// Image `Ψ k` over `rows`: nonzero exactly on the new edges when feasible.
    pub witness: Vec<f64>,
    /// Tangent coordinates `k` (SSP part only) producing the witness.
    pub direction: Option<DVector<f64>>,
    null_basis: Option<DMatrix<f64>>,
    new_rows: Option<DMatrix<f64>>,
}

impl LiberationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "feasible": self.feasible,
            "reason": self.reason,
            "rows": self.rows.iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
            "witness": self.witness,
        })
    }

    fn infeasible(rows: Vec<(usize, usize)>, why: &str) -> Self {
        let len = rows.len();
        LiberationReport {
            feasible: false,
            reason: Some(why.to_string()),
            rows,
            witness: vec![0.0; len],
            direction: None,
            null_basis: None,
            new_rows: None,
        }
    }

    /// Draws a direction whose image is nonzero on every new edge.
    fn draw(&self, rng: &mut ChaCha8Rng) -> Option<(DVector<f64>, DVector<f64>)> {
        let basis = self.null_basis.as_ref()?;
        let w = self.new_rows.as_ref()?;
        for _ in 0..16 {
            let c = DVector::from_fn(basis.ncols(), |_, _| StandardNormal.sample(rng));
            let x = w * &c;
            let big = x.amax();
            if big > 0.0 && x.iter().all(|v| v.abs() > 1e-6 * big) {
                return Some((basis * c, x));
            }
        }
        None
    }
}

fn normalize_pairs(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v: Vec<_> = pairs.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Decides whether the non-edges `new_edges` of `G(A)` can become edges while
/// the remaining non-edges stay zero, for the given property's tangent space.
pub fn liberation_feasible(
    a: &PatternedMatrix,
    kind: PropertyKind,
    new_edges: &[(usize, usize)],
    seed: u64,
) -> Result<LiberationReport> {
    let n = a.order();
    let rows = a.graph().nonedges();
    let new = normalize_pairs(new_edges);
    for &(i, j) in &new {
        if i == j || j >= n || a.graph().has_edge(i, j) {
            return Err(IepgError::domain(format!("({}, {}) is not a non-edge of the matrix graph", i + 1, j + 1)));
        }
    }
    let q = match kind {
        PropertyKind::Smp => Some(a.spectrum().clusters.len()),
        _ => None,
    };
    let ts = tangent_space(a.matrix(), kind, q);
    let zero_rows: Vec<(usize, usize)> = rows.iter().copied().filter(|p| !new.contains(p)).collect();
    let psi_z = select_rows(&ts, n, &zero_rows);
    let cert = certify(&psi_z, kind, n, q, None);
    if !cert.holds {
        return Ok(LiberationReport::infeasible(rows, "the rows that must stay zero are linearly dependent"));
    }
    let psi_n = select_rows(&ts, n, &new);
    let basis = linalg::trailing_right_vectors(&psi_z, ts.ncols() - zero_rows.len());
    let w = &psi_n * &basis;
    let scale = linalg::singular_values(&ts).first().copied().unwrap_or(1.0).max(1.0);
    if let Some(r) = (0..w.nrows()).find(|&r| w.row(r).norm() <= 1e-10 * scale) {
        let (i, j) = new[r];
        return Ok(LiberationReport::infeasible(
            rows,
            &format!("entry ({}, {}) cannot become nonzero while the others stay zero", i + 1, j + 1),
        ));
    }
    let mut report = LiberationReport {
        feasible: true,
        reason: None,
        rows: rows.clone(),
        witness: vec![0.0; rows.len()],
        direction: None,
        null_basis: Some(basis),
        new_rows: Some(w),
    };
    if new.is_empty() {
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (k, x) = report
        .draw(&mut rng)
        .ok_or_else(|| IepgError::NoConvergence("no direction with full support was found".into()))?;
    for (t, p) in new.iter().enumerate() {
        let pos = rows.iter().position(|r| r == p).expect("new edge is a row");
        report.witness[pos] = x[t];
    }
    report.direction = Some(k);
    Ok(report)
}

/// Moves `a` isospectrally to a matrix whose graph is exactly `target`, a
/// spanning supergraph of `G(a)`.
pub fn isospectral_lift(a: &PatternedMatrix, target: &Graph, opts: &SolveOptions) -> Result<RealizationResult> {
    let n = a.order();
    if target.order() != n || !a.graph().is_spanning_subgraph_of(target) {
        return Err(IepgError::PatternMismatch("target must be a spanning supergraph of the matrix graph".into()));
    }
    let eig = a.eigenvalues();
    if a.graph() == target {
        return Ok(RealizationResult::assemble(a.clone(), target, eig, opts, 0, 0));
    }
    let new: Vec<(usize, usize)> = target.edges().into_iter().filter(|&(i, j)| !a.graph().has_edge(i, j)).collect();
    let report = liberation_feasible(a, PropertyKind::Ssp, &new, opts.seed)?;
    if !report.feasible {
        return Err(IepgError::hypothesis(report.reason.unwrap_or_default()));
    }
    let mut cons = Constraints::new(n);
    for (i, j) in target.nonedges() {
        cons.zero(i, j);
    }
    let scale = linalg::max_abs(a.matrix()).max(1.0);
    let tol = 1e-13 * scale;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut total_iters = 0;
    let mut last_err = String::from("no attempt made");
    for attempt in 0..opts.restarts.max(1) {
        let (k, x) = if attempt == 0 {
            let k = report.direction.clone().expect("direction drawn for nonempty new edges");
            let x = DVector::from_iterator(new.len(), report.witness.iter().copied().filter(|v| *v != 0.0));
            (k, x)
        } else {
            match report.draw(&mut rng) {
                Some(d) => d,
                None => continue,
            }
        };
        let tau = (opts.step * scale * 0.5f64.powi(attempt as i32 / 2)).max(1e-6 * scale);
        let s = tau / x.amax();
        let start = conjugate(a.matrix(), &skew_from(n, &(&k * s)));
        let out = isospectral_newton(&start, &cons, opts.max_iters, tol);
        total_iters += out.iterations;
        if !out.converged {
            last_err = format!("projection stalled at residual {:e}", out.residual);
            continue;
        }
        let mut m = out.matrix;
        if opts.strict {
            for (i, j) in target.nonedges() {
                m[(i, j)] = 0.0;
                m[(j, i)] = 0.0;
            }
        }
        let floor = 1e-7 * scale;
        if target.edges().iter().any(|&(i, j)| m[(i, j)].abs() <= floor) {
            last_err = "an edge entry collapsed to zero".into();
            continue;
        }
        let pm = PatternedMatrix::with_pattern(m, target, crate::matrix::DEFAULT_ZERO_TOL)?;
        let result = RealizationResult::assemble(pm, target, eig.clone(), opts, total_iters, attempt);
        if result.spectral_residual > 1e-9 * scale {
            last_err = format!("spectrum drifted by {:e}", result.spectral_residual);
            continue;
        }
        if !result.certificate.holds {
            last_err = format!("result lacks the {}", opts.require);
            continue;
        }
        return Ok(result);
    }
    Err(IepgError::NoConvergence(last_err))
}

/// True when `a` has the SSP under default options.
pub(crate) fn has_ssp(a: &PatternedMatrix) -> bool {
    has_property(a, PropertyKind::Ssp, &RankOptions::default()).holds
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_lifts_to_a_path() {
        let d = PatternedMatrix::new(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0, 4.0]))).unwrap();
        let r = isospectral_lift(&d, &Graph::path(4), &SolveOptions::default()).unwrap();
        assert_eq!(r.matrix.graph(), &Graph::path(4));
        assert!(r.spectral_residual < 1e-10);
        assert!(r.certificate.holds);
    }

    #[test]
    fn identity_cannot_be_liberated() {
        let i = PatternedMatrix::new(DMatrix::identity(3, 3)).unwrap();
        let rep = liberation_feasible(&i, PropertyKind::Ssp, &[(0, 1)], 1).unwrap();
        assert!(!rep.feasible);
        let d = PatternedMatrix::new(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0]))).unwrap();
        let rep = liberation_feasible(&d, PropertyKind::Ssp, &[], 1).unwrap();
        assert!(rep.feasible);
        assert!(rep.witness.iter().all(|&x| x == 0.0));
        assert!(liberation_feasible(&d, PropertyKind::Ssp, &[(0, 0)], 1).is_err());
    }
}
