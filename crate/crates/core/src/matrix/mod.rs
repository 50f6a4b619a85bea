//! Real symmetric matrices tied to the graph of their off-diagonal nonzeros,
//! spectra with tolerance clustering, and ordered multiplicity lists.

mod spectrum;
mod tree;

pub use spectrum::{default_cluster_tol, Cluster, Oml, Spectrum};
pub use tree::{
    extreme_simplicity_check, parter_wiener_vertex, sign_normalize, ExtremeReport, ParterWiener,
    SignNormalized,
};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{IepgError, Result};
use crate::graph::Graph;
use crate::linalg;

/// Off-diagonal entries with absolute value at or below this are zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-12;

/// Relative asymmetry accepted on input before mirroring the upper triangle.
pub const SYMMETRY_TOL: f64 = 1e-14;

#[derive(Clone, Debug)]
pub struct PatternedMatrix {
    a: DMatrix<f64>,
    graph: Graph,
}

/// Graph of the off-diagonal entries with `|a_ij| > zero_tol`.
pub fn graph_of(a: &DMatrix<f64>, zero_tol: f64) -> Graph {
    let n = a.nrows();
    let mut g = Graph::empty(n).expect("caller checked order");
    for i in 0..n {
        for j in i + 1..n {
            if a[(i, j)].abs() > zero_tol {
                g.set_edge(i, j, true);
            }
        }
    }
    g
}

fn validated(mut a: DMatrix<f64>) -> Result<DMatrix<f64>> {
    if a.nrows() != a.ncols() {
        return Err(IepgError::NotSquare(a.nrows(), a.ncols()));
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    Graph::empty(a.nrows())?;
    let scale = linalg::max_abs(&a).max(1.0);
    let n = a.nrows();
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            dev = dev.max((a[(i, j)] - a[(j, i)]).abs());
            a[(j, i)] = a[(i, j)];
        }
    }
    if dev > SYMMETRY_TOL * scale {
        return Err(IepgError::NotSymmetric(dev));
    }
    Ok(a)
}

impl PatternedMatrix {
    /// Infers the graph from the nonzero pattern.
    pub fn new(a: DMatrix<f64>) -> Result<Self> {
        Self::with_zero_tol(a, DEFAULT_ZERO_TOL)
    }

    pub fn with_zero_tol(a: DMatrix<f64>, zero_tol: f64) -> Result<Self> {
        let a = validated(a)?;
        let graph = graph_of(&a, zero_tol);
        Ok(PatternedMatrix { a, graph })
    }

    /// Requires the nonzero pattern to be exactly `g`.
    pub fn with_pattern(a: DMatrix<f64>, g: &Graph, zero_tol: f64) -> Result<Self> {
        let m = Self::with_zero_tol(a, zero_tol)?;
        if m.graph.order() != g.order() {
            return Err(IepgError::PatternMismatch(format!(
                "matrix order {} but graph order {}",
                m.graph.order(),
                g.order()
            )));
        }
        if m.graph != *g {
            let n = g.order();
            for i in 0..n {
                for j in i + 1..n {
                    if m.graph.has_edge(i, j) != g.has_edge(i, j) {
                        return Err(IepgError::PatternMismatch(format!(
                            "entry ({}, {}) is {:e} but the pair is {}an edge",
                            i + 1,
                            j + 1,
                            m.a[(i, j)],
                            if g.has_edge(i, j) { "" } else { "not " }
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(IepgError::NotSquare(n, rows.first().map_or(0, Vec::len)));
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.a
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.a.nrows()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::sym_eigenvalues(&self.a)
    }

    /// Spectrum clustered with the default tolerance.
    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_eigenvalues(self.eigenvalues(), None)
    }

    pub fn spectrum_with_tol(&self, tol: f64) -> Spectrum {
        Spectrum::from_eigenvalues(self.eigenvalues(), Some(tol))
    }

    pub fn oml(&self) -> Oml {
        self.spectrum().oml()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.order()).map(|i| self.a.row(i).iter().copied().collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixJson { n: self.order(), rows: self.rows() }).expect("plain data")
    }

    /// Accepts `{"n", "rows"}` or the compact `{"n", "upper"}`, the upper
    /// triangle with the diagonal in row-major order.
    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        if v.get("upper").is_some() && v.get("rows").is_none() {
            let u: UpperJson = serde_json::from_value(v.clone())?;
            let want = u.n * (u.n + 1) / 2;
            if u.upper.len() != want {
                return Err(IepgError::Parse(format!("expected {want} upper entries, found {}", u.upper.len())));
            }
            let mut a = DMatrix::zeros(u.n, u.n);
            let pairs = (0..u.n).flat_map(|i| (i..u.n).map(move |j| (i, j)));
            for ((i, j), &x) in pairs.zip(&u.upper) {
                a[(i, j)] = x;
                a[(j, i)] = x;
            }
            if u.upper.iter().any(|x| !x.is_finite()) {
                return Err(IepgError::NonFinite);
            }
            return Self::new(a);
        }
        let m: MatrixJson = serde_json::from_value(v.clone())?;
        if m.rows.len() != m.n {
            return Err(IepgError::Parse(format!("expected {} rows, found {}", m.n, m.rows.len())));
        }
        Self::from_rows(&m.rows)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json_value(&serde_json::from_str(s)?)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct UpperJson {
    n: usize,
    upper: Vec<f64>,
}

/// Affine map of `a` sending eigenvalue `l1` to `m1` and `l2` to `m2`:
/// `((m2 - m1)/(l2 - l1)) (a - l1 I) + m1 I`. The graph is unchanged and the
/// list is reversed exactly when the slope is negative.
pub fn scale_shift(a: &DMatrix<f64>, l1: f64, l2: f64, m1: f64, m2: f64) -> Result<DMatrix<f64>> {
    if [l1, l2, m1, m2].iter().any(|x| !x.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    if l1 == l2 || m1 == m2 {
        return Err(IepgError::domain("scale_shift needs l1 != l2 and m1 != m2"));
    }
    let s = (m2 - m1) / (l2 - l1);
    let n = a.nrows();
    Ok((a - DMatrix::identity(n, n) * l1) * s + DMatrix::identity(n, n) * m1)
}

pub fn negate(a: &DMatrix<f64>) -> DMatrix<f64> {
    -a
}

/// `a ⊕ b`.
pub fn direct_sum(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let (n, m) = (a.nrows(), b.nrows());
    let mut out = DMatrix::zeros(n + m, n + m);
    out.view_mut((0, 0), (n, n)).copy_from(a);
    out.view_mut((n, n), (m, m)).copy_from(b);
    out
}

/// Moves row/column `i` to position `map[i]`.
pub fn permute_symmetric(a: &DMatrix<f64>, map: &[usize]) -> DMatrix<f64> {
    let n = a.nrows();
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(map[i], map[j])] = a[(i, j)];
        }
    }
    out
}
