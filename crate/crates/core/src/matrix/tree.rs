//! Multiplicity facts for trees and odd unicyclic graphs.

use nalgebra::DMatrix;
use serde_json::{json, Value};

use super::{Oml, PatternedMatrix};
use crate::error::{IepgError, Result};
use crate::linalg;

/// A vertex whose removal raises the multiplicity of a repeated eigenvalue
/// by one while leaving it in at least three branches.
#[derive(Clone, Debug)]
pub struct ParterWiener {
    pub vertex: usize,
    pub multiplicity: usize,
    pub multiplicity_after_deletion: usize,
    /// Components of `T - v` that have `lambda` as an eigenvalue.
    pub branches_with_lambda: usize,
}

impl ParterWiener {
    pub fn to_json(&self) -> Value {
        json!({
            "vertex": self.vertex + 1,
            "multiplicity": self.multiplicity,
            "multiplicity_after_deletion": self.multiplicity_after_deletion,
            "branches_with_lambda": self.branches_with_lambda,
        })
    }
}

fn count_near(vals: &[f64], lambda: f64, tol: f64) -> usize {
    vals.iter().filter(|x| (*x - lambda).abs() <= tol).count()
}

fn principal(a: &DMatrix<f64>, idx: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(idx.len(), idx.len(), |i, j| a[(idx[i], idx[j])])
}

pub fn parter_wiener_vertex(a: &PatternedMatrix, lambda: f64, tol: Option<f64>) -> Result<ParterWiener> {
    let g = a.graph();
    if !g.is_tree() {
        return Err(IepgError::Unsupported("the graph of the matrix is not a tree".into()));
    }
    let spec = a.spectrum();
    let tol = tol.unwrap_or(spec.tol);
    let m = spec.multiplicity_of(lambda, Some(tol));
    if m < 2 {
        return Err(IepgError::hypothesis(format!("lambda has multiplicity {m}, need at least 2")));
    }
    for v in 0..g.order() {
        let rest = g.delete_vertex(v)?;
        let relabel: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
        let mut total = 0;
        let mut branches = 0;
        for comp in rest.components() {
            let idx: Vec<usize> = comp.iter().map(|&c| relabel[c]).collect();
            let k = count_near(&linalg::sym_eigenvalues(&principal(a.matrix(), &idx)), lambda, tol);
            total += k;
            if k > 0 {
                branches += 1;
            }
        }
        if branches >= 3 && total == m + 1 {
            return Ok(ParterWiener {
                vertex: v,
                multiplicity: m,
                multiplicity_after_deletion: total,
                branches_with_lambda: branches,
            });
        }
    }
    Err(IepgError::NoConvergence("no vertex met the branch condition at this tolerance".into()))
}

#[derive(Clone, Debug)]
pub struct ExtremeReport {
    pub kind: &'static str,
    pub oml: Oml,
    pub smallest_simple: bool,
    pub largest_simple: bool,
    /// Trees need both extremes simple, odd unicyclic graphs at least one.
    pub holds: bool,
}

impl ExtremeReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "oml": self.oml.0,
            "smallest_simple": self.smallest_simple,
            "largest_simple": self.largest_simple,
            "holds": self.holds,
        })
    }
}

pub fn extreme_simplicity_check(a: &PatternedMatrix) -> Result<ExtremeReport> {
    let g = a.graph();
    let kind = if g.is_tree() {
        "tree"
    } else if g.unicyclic_cycle_length().is_some_and(|l| l % 2 == 1) {
        "odd-unicyclic"
    } else {
        return Err(IepgError::Unsupported("graph is neither a tree nor odd unicyclic".into()));
    };
    let oml = a.oml();
    let smallest_simple = oml.0.first() == Some(&1);
    let largest_simple = oml.0.last() == Some(&1);
    let holds = if kind == "tree" { smallest_simple && largest_simple } else { smallest_simple || largest_simple };
    Ok(ExtremeReport { kind, oml, smallest_simple, largest_simple, holds })
}

#[derive(Clone, Debug)]
pub struct SignNormalized {
    /// Diagonal of the signature matrix D.
    pub signs: Vec<f64>,
    /// D A D.
    pub matrix: DMatrix<f64>,
    /// Off-diagonal edges left positive (at most one, on the cycle).
    pub positive_edges: Vec<(usize, usize)>,
}

/// Signature similarity making every off-diagonal entry negative along a
/// spanning tree. For a tree this makes all of them negative; for a
/// unicyclic graph at most one cycle edge stays positive.
pub fn sign_normalize(a: &PatternedMatrix) -> Result<SignNormalized> {
    let g = a.graph();
    if !(g.is_tree() || g.is_unicyclic()) {
        return Err(IepgError::Unsupported("graph is neither a tree nor unicyclic".into()));
    }
    let n = a.order();
    let mut signs = vec![0.0; n];
    signs[0] = 1.0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if signs[v] == 0.0 {
                signs[v] = -a.matrix()[(u, v)].signum() * signs[u];
                queue.push_back(v);
            }
        }
    }
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(signs.clone()));
    let matrix = &d * a.matrix() * &d;
    let positive_edges = g.edges().into_iter().filter(|&(i, j)| matrix[(i, j)] > 0.0).collect();
    Ok(SignNormalized { signs, matrix, positive_edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_center_is_parter_vertex() {
        // K_{1,3} with zero leaves: eigenvalue 0 of multiplicity 2
        let a = DMatrix::from_row_slice(4, 4, &[1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        let m = PatternedMatrix::new(a).unwrap();
        let pw = parter_wiener_vertex(&m, 0.0, None).unwrap();
        assert_eq!(pw.vertex, 0);
        assert_eq!((pw.multiplicity, pw.multiplicity_after_deletion, pw.branches_with_lambda), (2, 3, 3));
        assert!(parter_wiener_vertex(&m, 5.0, None).is_err());
    }

    #[test]
    fn sign_normalization_keeps_spectrum() {
        let a = DMatrix::from_row_slice(3, 3, &[0.0, 2.0, -1.0, 2.0, 1.0, 3.0, -1.0, 3.0, 0.5]);
        let m = PatternedMatrix::new(a.clone()).unwrap();
        let s = sign_normalize(&m).unwrap();
        assert!(s.positive_edges.len() <= 1);
        let before = linalg::sym_eigenvalues(&a);
        let after = linalg::sym_eigenvalues(&s.matrix);
        assert!(linalg::sorted_distance(&before, &after) < 1e-13);
        let r = extreme_simplicity_check(&m).unwrap();
        assert_eq!(r.kind, "odd-unicyclic");
        assert!(r.holds);
    }
}
