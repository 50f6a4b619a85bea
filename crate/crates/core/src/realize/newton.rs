//! Gauss-Newton on the isospectral manifold under linear constraints on the entries.

use nalgebra::{DMatrix, DVector};

use crate::linalg;
use crate::strong::{strict_pairs, tangent_space, upper_index, PropertyKind};

/// Linear conditions `rows * vect(M) = rhs` on the upper triangle of `M`.
#[derive(Clone, Debug)]
pub(crate) struct Constraints {
    n: usize,
    terms: Vec<Vec<(usize, usize, f64)>>,
    rhs: Vec<f64>,
}

impl Constraints {
    pub(crate) fn new(n: usize) -> Self {
        Constraints { n, terms: Vec::new(), rhs: Vec::new() }
    }

    /// Adds `sum coeff * M[i][j] = value`.
    pub(crate) fn push(&mut self, terms: Vec<(usize, usize, f64)>, value: f64) {
        let terms = terms.into_iter().map(|(i, j, c)| (i.min(j), i.max(j), c)).collect();
        self.terms.push(terms);
        self.rhs.push(value);
    }

    pub(crate) fn zero(&mut self, i: usize, j: usize) {
        self.push(vec![(i, j, 1.0)], 0.0);
    }

    pub(crate) fn len(&self) -> usize {
        self.rhs.len()
    }

    fn residual(&self, m: &DMatrix<f64>) -> DVector<f64> {
        DVector::from_iterator(
            self.len(),
            self.terms.iter().zip(&self.rhs).map(|(t, b)| t.iter().map(|&(i, j, c)| c * m[(i, j)]).sum::<f64>() - b),
        )
    }

    fn jacobian(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let ts = tangent_space(m, PropertyKind::Ssp, None);
        let mut j = DMatrix::zeros(self.len(), ts.ncols());
        for (r, t) in self.terms.iter().enumerate() {
            for &(a, b, c) in t {
                let row = ts.row(upper_index(self.n, a, b));
                let mut target = j.row_mut(r);
                target += row * c;
            }
        }
        j
    }
}

/// Skew matrix `sum coords[(k,l)] (E_kl - E_lk)` over strict pairs.
pub(crate) fn skew_from(n: usize, coords: &DVector<f64>) -> DMatrix<f64> {
    let mut s = DMatrix::zeros(n, n);
    for (idx, (k, l)) in strict_pairs(n).into_iter().enumerate() {
        s[(k, l)] += coords[idx];
        s[(l, k)] -= coords[idx];
    }
    s
}

/// `exp(-S) M exp(S)`, symmetrized.
pub(crate) fn conjugate(m: &DMatrix<f64>, s: &DMatrix<f64>) -> DMatrix<f64> {
    let q = s.clone().exp();
    let mut out = q.transpose() * m * &q;
    linalg::symmetrize(&mut out);
    out
}

#[derive(Clone, Debug)]
pub(crate) struct NewtonOutcome {
    pub matrix: DMatrix<f64>,
    pub iterations: usize,
    pub residual: f64,
    pub converged: bool,
}

pub(crate) fn isospectral_newton(start: &DMatrix<f64>, cons: &Constraints, max_iters: usize, tol: f64) -> NewtonOutcome {
    let n = start.nrows();
    let mut m = start.clone();
    let mut r = cons.residual(&m);
    let mut norm = r.amax();
    let mut it = 0;
    while it < max_iters && norm > tol {
        it += 1;
        let j = cons.jacobian(&m);
        let step = linalg::min_norm_solve(&j, &(-&r), 1e-12);
        let mut alpha = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let cand = conjugate(&m, &skew_from(n, &(&step * alpha)));
            let rc = cons.residual(&cand);
            if rc.norm() < r.norm() * (1.0 - 1e-4 * alpha) || rc.amax() <= tol {
                m = cand;
                r = rc;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        norm = r.amax();
        if !accepted {
            break;
        }
    }
    NewtonOutcome { matrix: m, iterations: it, residual: norm, converged: norm <= tol }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeroes_an_entry_and_keeps_spectrum() {
        let a = DMatrix::from_row_slice(3, 3, &[1.0, 0.5, 0.3, 0.5, 2.0, 0.4, 0.3, 0.4, 3.0]);
        let mut c = Constraints::new(3);
        c.zero(0, 2);
        let out = isospectral_newton(&a, &c, 50, 1e-14);
        assert!(out.converged);
        assert!(out.matrix[(0, 2)].abs() <= 1e-14);
        let d = linalg::sorted_distance(&linalg::sym_eigenvalues(&a), &linalg::sym_eigenvalues(&out.matrix));
        assert!(d < 1e-12);
    }
}
