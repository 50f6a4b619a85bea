//! Strong spectral properties decided by the rank of a verification matrix.
//!
//! For a symmetric `A` with graph `G`, the tangent-space matrices have one
//! row per pair `(i, j)` with `i <= j` in lexicographic order (`vect`
//! order). Restricting the rows to the non-edges of `G` gives the
//! verification matrix, and the property holds exactly when that matrix has
//! full row rank.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde_json::{json, Value};

use crate::error::{IepgError, Result};
use crate::linalg;
use crate::matrix::{direct_sum, Oml, PatternedMatrix, Spectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropertyKind {
    Ssp,
    Smp,
    Sap,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 3] = [PropertyKind::Ssp, PropertyKind::Smp, PropertyKind::Sap];

    pub fn label(&self) -> &'static str {
        match self {
            PropertyKind::Ssp => "SSP",
            PropertyKind::Smp => "SMP",
            PropertyKind::Sap => "SAP",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PropertyKind {
    type Err = IepgError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SSP" => Ok(PropertyKind::Ssp),
            "SMP" => Ok(PropertyKind::Smp),
            "SAP" => Ok(PropertyKind::Sap),
            _ => Err(IepgError::UnknownName(s.to_string())),
        }
    }
}

/// Pairs `(i, j)` with `i <= j`, lexicographic.
pub fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Pairs `(k, l)` with `k < l`, lexicographic.
pub fn strict_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|k| (k + 1..n).map(move |l| (k, l))).collect()
}

/// Position of `(i, j)`, `i <= j`, in [`upper_pairs`].
pub fn upper_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

/// Position of `(k, l)`, `k < l`, in [`strict_pairs`].
pub fn strict_index(n: usize, k: usize, l: usize) -> usize {
    k * (n - 1) - k * k.saturating_sub(1) / 2 + (l - k - 1)
}

/// Upper triangle of a symmetric matrix, row by row.
pub fn vect(m: &DMatrix<f64>) -> Vec<f64> {
    upper_pairs(m.nrows()).into_iter().map(|(i, j)| m[(i, j)]).collect()
}

/// Number of distinct eigenvalues under the given clustering tolerance.
fn distinct_count(a: &DMatrix<f64>, cluster_tol: Option<f64>) -> usize {
    Spectrum::from_eigenvalues(linalg::sym_eigenvalues(a), cluster_tol).clusters.len()
}

/// Tangent-space matrix of the given kind. For SMP, `q` defaults to the
/// number of distinct eigenvalues.
pub fn tangent_space(a: &DMatrix<f64>, kind: PropertyKind, q: Option<usize>) -> DMatrix<f64> {
    let n = a.nrows();
    let rows = upper_pairs(n);
    let cols_of = |c: &DMatrix<f64>| -> Vec<f64> { rows.iter().map(|&(i, j)| c[(i, j)]).collect() };
    let mut columns: Vec<Vec<f64>> = Vec::new();
    match kind {
        PropertyKind::Ssp | PropertyKind::Smp => {
            for (k, l) in strict_pairs(n) {
                // [A, K] with K = E_kl - E_lk
                let mut c = DMatrix::zeros(n, n);
                for i in 0..n {
                    c[(i, l)] += a[(i, k)];
                    c[(i, k)] -= a[(i, l)];
                    c[(k, i)] -= a[(l, i)];
                    c[(l, i)] += a[(k, i)];
                }
                columns.push(cols_of(&c));
            }
            if kind == PropertyKind::Smp {
                let q = q.unwrap_or_else(|| distinct_count(a, None));
                let mut p = DMatrix::identity(n, n);
                for _ in 0..q {
                    columns.push(cols_of(&p));
                    p = &p * a;
                }
            }
        }
        PropertyKind::Sap => {
            for k in 0..n {
                for l in 0..n {
                    // A E_kl + E_lk A
                    let mut c = DMatrix::zeros(n, n);
                    for i in 0..n {
                        c[(i, l)] += a[(i, k)];
                        c[(l, i)] += a[(k, i)];
                    }
                    columns.push(cols_of(&c));
                }
            }
        }
    }
    let ncols = columns.len();
    DMatrix::from_fn(rows.len(), ncols, |r, c| columns[c][r])
}

/// Rows of the tangent-space matrix at the non-edges of the graph of `a`.
pub fn verification_matrix(a: &PatternedMatrix, kind: PropertyKind, q: Option<usize>) -> DMatrix<f64> {
    let ts = tangent_space(a.matrix(), kind, q);
    select_rows(&ts, a.order(), &a.graph().nonedges())
}

pub(crate) fn select_rows(ts: &DMatrix<f64>, n: usize, pairs: &[(usize, usize)]) -> DMatrix<f64> {
    let idx: Vec<usize> = pairs.iter().map(|&(i, j)| upper_index(n, i, j)).collect();
    DMatrix::from_fn(idx.len(), ts.ncols(), |r, c| ts[(idx[r], c)])
}

/// Rows of the tangent-space matrix built directly from commutators: row
/// `(i, j)` of the SSP matrix holds the strictly-upper entries of `A X - X A`
/// with `X = E_ij + E_ji`, SMP appends `(A^p)_ij`, and the SAP row holds
/// every entry of `A X`.
pub fn tangent_rows_commutator(a: &DMatrix<f64>, kind: PropertyKind, q: Option<usize>) -> DMatrix<f64> {
    rows_commutator(a, kind, q, &upper_pairs(a.nrows()))
}

/// Verification matrix built through [`tangent_rows_commutator`].
pub fn verification_rows_commutator(a: &PatternedMatrix, kind: PropertyKind, q: Option<usize>) -> DMatrix<f64> {
    rows_commutator(a.matrix(), kind, q, &a.graph().nonedges())
}

fn rows_commutator(a: &DMatrix<f64>, kind: PropertyKind, q: Option<usize>, pairs: &[(usize, usize)]) -> DMatrix<f64> {
    let n = a.nrows();
    let q = match kind {
        PropertyKind::Smp => q.unwrap_or_else(|| distinct_count(a, None)),
        _ => 0,
    };
    let mut powers = Vec::with_capacity(q);
    let mut p = DMatrix::<f64>::identity(n, n);
    for _ in 0..q {
        powers.push(p.clone());
        p = &p * a;
    }
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(pairs.len());
    for &(i, j) in pairs {
        let mut x = DMatrix::<f64>::zeros(n, n);
        x[(i, j)] += 1.0;
        x[(j, i)] += 1.0;
        let ax = a * &x;
        let row: Vec<f64> = match kind {
            PropertyKind::Ssp | PropertyKind::Smp => {
                let c = &ax - &x * a;
                let mut r: Vec<f64> = strict_pairs(n).into_iter().map(|(k, l)| c[(k, l)]).collect();
                r.extend(powers.iter().map(|pw| pw[(i, j)]));
                r
            }
            PropertyKind::Sap => (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).map(|(k, l)| ax[(k, l)]).collect(),
        };
        rows.push(row);
    }
    let ncols = match kind {
        PropertyKind::Sap => n * n,
        _ => n * n.saturating_sub(1) / 2 + q,
    };
    DMatrix::from_fn(rows.len(), ncols, |r, c| rows[r][c])
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RankOptions {
    /// Absolute threshold on the p-th singular value; default `max(p, c) * eps * sigma_1`.
    pub rank_tol: Option<f64>,
    /// Clustering tolerance used to count distinct eigenvalues for SMP.
    pub cluster_tol: Option<f64>,
}

/// Outcome of a full-row-rank test, with the numbers that decided it.
#[derive(Clone, Debug, PartialEq)]
pub struct PropertyCertificate {
    pub property: PropertyKind,
    pub n: usize,
    /// Number of non-edges, i.e. rows of the verification matrix.
    pub p: usize,
    pub columns: usize,
    /// p-th largest singular value (zero when p exceeds the column count, absent when p = 0).
    pub sigma_p: Option<f64>,
    pub sigma_1: f64,
    pub threshold: f64,
    pub holds: bool,
    /// Distinct eigenvalue count used for SMP.
    pub q: Option<usize>,
}

impl PropertyCertificate {
    /// `sigma_p / threshold`; infinite when there is nothing to check.
    pub fn margin(&self) -> f64 {
        match self.sigma_p {
            None => f64::INFINITY,
            Some(s) if self.threshold > 0.0 => s / self.threshold,
            Some(s) => {
                if s > 0.0 {
                    f64::INFINITY
                } else {
                    0.0
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "property": self.property.label(),
            "p": self.p,
            "sigma_p": self.sigma_p,
            "threshold": self.threshold,
            "holds": self.holds,
            "n": self.n,
            "columns": self.columns,
            "sigma_1": self.sigma_1,
        });
        if let Some(q) = self.q {
            v["q"] = json!(q);
        }
        v
    }
}

pub fn has_property(a: &PatternedMatrix, kind: PropertyKind, opts: &RankOptions) -> PropertyCertificate {
    let q = match kind {
        PropertyKind::Smp => Some(distinct_count(a.matrix(), opts.cluster_tol)),
        _ => None,
    };
    let ver = verification_matrix(a, kind, q);
    certify(&ver, kind, a.order(), q, opts.rank_tol)
}

pub(crate) fn certify(ver: &DMatrix<f64>, kind: PropertyKind, n: usize, q: Option<usize>, rank_tol: Option<f64>) -> PropertyCertificate {
    let (p, c) = (ver.nrows(), ver.ncols());
    let sv = linalg::singular_values(ver);
    let sigma_1 = sv.first().copied().unwrap_or(0.0);
    let threshold = rank_tol.unwrap_or(p.max(c) as f64 * f64::EPSILON * sigma_1);
    let sigma_p = if p == 0 { None } else { Some(sv.get(p - 1).copied().unwrap_or(0.0)) };
    let holds = match sigma_p {
        None => true,
        Some(s) => s > threshold,
    };
    PropertyCertificate { property: kind, n, p, columns: c, sigma_p, sigma_1, threshold, holds, q }
}

/// Lower bound on the edge count of any graph admitting an SSP matrix with this list.
pub fn ssp_edge_lower_bound(oml: &Oml) -> usize {
    oml.0.iter().map(|m| m * m.saturating_sub(1) / 2).sum()
}

/// Comparison of `TS(A ⊕ [λ])` with the block form `[[TS(A), 0], [0, A - λI], [0, 0]]`.
#[derive(Clone, Debug)]
pub struct BlockCheck {
    pub max_deviation: f64,
    pub holds: bool,
}

pub fn ts_block_structure_check(a: &DMatrix<f64>, lambda: f64) -> BlockCheck {
    let n = a.nrows();
    let big = direct_sum(a, &DMatrix::from_element(1, 1, lambda));
    let ts_big = tangent_space(&big, PropertyKind::Ssp, None);
    let ts = tangent_space(a, PropertyKind::Ssp, None);
    let m = n + 1;
    let mut rows: Vec<(usize, usize)> = upper_pairs(n);
    rows.extend((0..n).map(|i| (i, n)));
    rows.push((n, n));
    let mut cols: Vec<(usize, usize)> = strict_pairs(n);
    cols.extend((0..n).map(|i| (i, n)));
    let top = ts.nrows();
    let left = ts.ncols();
    let mut dev = 0.0f64;
    for (r, &(i, j)) in rows.iter().enumerate() {
        for (c, &(k, l)) in cols.iter().enumerate() {
            let got = ts_big[(upper_index(m, i, j), strict_index(m, k, l))];
            let want = if r < top && c < left {
                ts[(r, c)]
            } else if r >= top && r < top + n && c >= left {
                a[(r - top, c - left)] - if r - top == c - left { lambda } else { 0.0 }
            } else {
                0.0
            };
            dev = dev.max((got - want).abs());
        }
    }
    let scale = linalg::max_abs(a).max(lambda.abs()).max(1.0);
    BlockCheck { max_deviation: dev, holds: dev <= 1e-12 * scale }
}
