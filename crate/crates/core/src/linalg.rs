//! Small dense helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::Rng;
use rand_distr::StandardNormal;

/// Singular values, largest first. Empty for an empty matrix.
pub(crate) fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// The `count` right singular vectors with the smallest singular values.
pub(crate) fn trailing_right_vectors(m: &DMatrix<f64>, count: usize) -> DMatrix<f64> {
    let c = m.ncols();
    if count == 0 {
        return DMatrix::zeros(c, 0);
    }
    if m.nrows() == 0 {
        return DMatrix::identity(c, c).columns(c - count, count).into_owned();
    }
    let rows = m.nrows().max(c);
    let mut padded = DMatrix::zeros(rows, c);
    padded.view_mut((0, 0), (m.nrows(), c)).copy_from(m);
    let svd = padded.svd(false, true);
    let vt = svd.v_t.expect("requested");
    let mut idx: Vec<usize> = (0..c).collect();
    idx.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let cols: Vec<DVector<f64>> = idx[c - count..].iter().map(|&i| vt.row(i).transpose()).collect();
    DMatrix::from_columns(&cols)
}

/// Minimum-norm least-squares solution of `j x = r`, dropping singular
/// values below `rel_tol * sigma_max`.
pub(crate) fn min_norm_solve(j: &DMatrix<f64>, r: &DVector<f64>, rel_tol: f64) -> DVector<f64> {
    if j.nrows() == 0 || j.ncols() == 0 {
        return DVector::zeros(j.ncols());
    }
    let svd = j.clone().svd(true, true);
    let smax = svd.singular_values.max();
    svd.solve(r, (rel_tol * smax).max(f64::MIN_POSITIVE)).expect("both factors computed")
}

/// Eigenvalues ascending with matching eigenvector columns.
pub(crate) fn sym_eigen(a: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = a.nrows();
    if n == 0 {
        return (Vec::new(), DMatrix::zeros(0, 0));
    }
    let eig = SymmetricEigen::new(a.clone());
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let vals = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = DMatrix::from_columns(&idx.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect::<Vec<_>>());
    (vals, vecs)
}

pub(crate) fn sym_eigenvalues(a: &DMatrix<f64>) -> Vec<f64> {
    if a.nrows() == 0 {
        return Vec::new();
    }
    let mut v: Vec<f64> = a.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(|x, y| x.total_cmp(y));
    v
}

/// Haar-distributed orthogonal matrix from the QR factorization of a Gaussian matrix.
pub(crate) fn random_orthogonal<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

pub(crate) fn symmetrize(a: &mut DMatrix<f64>) {
    let n = a.nrows();
    for i in 0..n {
        for j in i + 1..n {
            let m = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = m;
            a[(j, i)] = m;
        }
    }
}

pub(crate) fn max_abs(a: &DMatrix<f64>) -> f64 {
    a.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Largest pairwise gap between two sorted lists of equal length.
pub(crate) fn sorted_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}
