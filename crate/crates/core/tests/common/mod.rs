//! Independent oracles and generators shared by the integration suites.
#![allow(dead_code)]

use iepg::graph::Graph;
use iepg::{PatternedMatrix, PropertyKind};
use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random labelled tree from a random attachment sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let perm = permutation(rng, n);
    Graph::from_edges(n, &edges).unwrap().relabeled(&perm)
}

/// Odd cycle with trees hanging off it.
pub fn random_odd_unicyclic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let max_len = if n % 2 == 1 { n } else { n - 1 };
    let len = 2 * rng.gen_range(1..=(max_len - 1) / 2) + 1;
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    for v in len..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let perm = permutation(rng, n);
    Graph::from_edges(n, &edges).unwrap().relabeled(&perm)
}

pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Symmetric matrix with pattern `g`, off-diagonal magnitudes in [0.2, 2].
pub fn random_matrix<R: Rng>(rng: &mut R, g: &Graph) -> PatternedMatrix {
    let n = g.order();
    let mut a = DMatrix::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = rng.gen_range(-2.0..2.0);
    }
    for (i, j) in g.edges() {
        let mag = rng.gen_range(0.2..2.0);
        let x = if rng.gen_bool(0.5) { mag } else { -mag };
        a[(i, j)] = x;
        a[(j, i)] = x;
    }
    PatternedMatrix::with_pattern(a, g, 1e-12).unwrap()
}

fn rank(m: &DMatrix<f64>, rel: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().fold(0.0f64, |a, &b| a.max(b));
    sv.iter().filter(|&&s| s > rel * top.max(1.0)).count()
}

/// Decides a strong property from its definition: the only symmetric `X`
/// vanishing on the diagonal and the edges with `[A, X] = 0` (SSP), with in
/// addition `tr(A^k X) = 0` (SMP), or with `A X = 0` (SAP) is zero.
pub fn property_by_definition(a: &PatternedMatrix, kind: PropertyKind) -> bool {
    let n = a.order();
    let am = a.matrix();
    let free = a.graph().nonedges();
    if free.is_empty() {
        return true;
    }
    let mut cols: Vec<Vec<f64>> = Vec::new();
    for &(i, j) in &free {
        let mut x = DMatrix::zeros(n, n);
        x[(i, j)] = 1.0;
        x[(j, i)] = 1.0;
        let mut col: Vec<f64> = Vec::new();
        match kind {
            PropertyKind::Ssp => col.extend((am * &x - &x * am).iter()),
            PropertyKind::Smp => {
                col.extend((am * &x - &x * am).iter());
                let mut pow = DMatrix::identity(n, n);
                for _ in 0..n {
                    col.push((&pow * &x).trace());
                    pow = &pow * am;
                }
            }
            PropertyKind::Sap => col.extend((am * &x).iter()),
        }
        cols.push(col);
    }
    let m = DMatrix::from_fn(cols[0].len(), cols.len(), |r, c| cols[c][r]);
    rank(&m, 1e-10) == free.len()
}

/// Is `h` a minor of `g`? Enumerates every way to delete vertices and
/// split the rest into `|h|` connected branch sets, then looks for `h` as a
/// spanning subgraph of the quotient by trying all vertex orders.
pub fn minor_by_branch_sets(h: &Graph, g: &Graph) -> bool {
    let (k, n) = (h.order(), g.order());
    if k > n || h.size() > g.size() {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut label = vec![0usize; n];
    search(h, g, 0, 0, &mut label)
}

// label 0 deletes a vertex; blocks are numbered in order of first use
fn search(h: &Graph, g: &Graph, v: usize, used: usize, label: &mut Vec<usize>) -> bool {
    let k = h.order();
    if k - used > g.order() - v {
        return false;
    }
    if v == g.order() {
        return used == k && quotient_contains(h, g, label);
    }
    for l in 0..=(used + 1).min(k) {
        label[v] = l;
        if search(h, g, v + 1, used.max(l), label) {
            return true;
        }
    }
    false
}

fn quotient_contains(h: &Graph, g: &Graph, label: &[usize]) -> bool {
    let k = h.order();
    for b in 1..=k {
        let members: Vec<usize> = (0..g.order()).filter(|&v| label[v] == b).collect();
        if !g.induced(&members).is_connected() {
            return false;
        }
    }
    let mut adj = vec![vec![false; k]; k];
    let mut size = 0;
    for (u, v) in g.edges() {
        let (a, b) = (label[u], label[v]);
        if a > 0 && b > 0 && a != b && !adj[a - 1][b - 1] {
            adj[a - 1][b - 1] = true;
            adj[b - 1][a - 1] = true;
            size += 1;
        }
    }
    if size < h.size() {
        return false;
    }
    let hedges = h.edges();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        if hedges.iter().all(|&(x, y)| adj[perm[x]][perm[y]]) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
