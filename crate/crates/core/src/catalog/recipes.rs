//! Turning catalog entries into matrices with prescribed spectra.
//!
//! With the SSP: realize the list on a minimal spanning subgraph (printed
//! family, scaled all-ones matrix, cycle augmentation or a direct sum over
//! components), relabel it into the target graph and lift isospectrally to
//! the full pattern. Without the SSP: the star construction, or an unguided
//! search flagged as best effort.

use nalgebra::{DMatrix, DVector};

use super::{attainable, catalog, Mode};
use crate::error::{IepgError, Result};
use crate::graph::{find_subgraph_embedding, is_isomorphic, named_graph, Graph};
use crate::matrix::{graph_of, permute_symmetric, Oml, PatternedMatrix, DEFAULT_ZERO_TOL};
use crate::realize::{
    cycle_double_eigenvalue, family_for_targets, isospectral_lift, realize_spectrum, RealizationResult, SolveOptions,
};

fn expand(oml: &Oml, targets: &[f64]) -> Vec<f64> {
    oml.0.iter().zip(targets).flat_map(|(&m, &t)| std::iter::repeat_n(t, m)).collect()
}

fn check_targets(oml: &Oml, targets: &[f64]) -> Result<()> {
    if targets.iter().any(|x| !x.is_finite()) {
        return Err(IepgError::NonFinite);
    }
    if targets.len() != oml.0.len() {
        return Err(IepgError::domain(format!("{oml} needs {} distinct values, got {}", oml.0.len(), targets.len())));
    }
    if targets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(IepgError::domain("target values must be strictly increasing"));
    }
    Ok(())
}

/// `K_{1,n-1}` (centre 0) with list `(1, n-2, 1)` and distinct values `targets`.
pub fn star_matrix(n: usize, targets: &[f64]) -> Result<DMatrix<f64>> {
    if n < 3 || targets.len() != 3 {
        return Err(IepgError::domain("star construction needs n >= 3 and three values"));
    }
    let (t1, t2, t3) = (targets[0], targets[1], targets[2]);
    let k = (n - 1) as f64;
    let b = ((t2 - t1) * (t3 - t2) / k).sqrt();
    let mut m = DMatrix::from_diagonal_element(n, n, t2);
    m[(0, 0)] = t1 + t3 - t2;
    for i in 1..n {
        m[(0, i)] = b;
        m[(i, 0)] = b;
    }
    Ok(m)
}

/// Moves `m` into the labels of `g` along a spanning embedding and lifts it
/// to the exact pattern of `g`.
fn embed_and_lift(m: &DMatrix<f64>, g: &Graph, opts: &SolveOptions) -> Result<DMatrix<f64>> {
    let h = graph_of(m, DEFAULT_ZERO_TOL);
    let map = find_subgraph_embedding(&h, g)
        .filter(|_| h.order() == g.order())
        .ok_or_else(|| IepgError::PatternMismatch(format!("{h} is not a spanning subgraph of {g}")))?;
    let p = permute_symmetric(m, &map);
    if graph_of(&p, DEFAULT_ZERO_TOL) == *g {
        return Ok(p);
    }
    let seed = PatternedMatrix::new(p)?;
    Ok(isospectral_lift(&seed, g, opts)?.matrix.into_matrix())
}

/// Realizes `oml` with values `targets` on the minimal graph `graph_name`
/// using the named recipe. The result's graph is isomorphic to the named
/// graph; the flag reports a best-effort search.
pub fn realize_minimal(
    graph_name: &str,
    recipe: &str,
    oml: &Oml,
    targets: &[f64],
    opts: &SolveOptions,
) -> Result<(DMatrix<f64>, bool)> {
    check_targets(oml, targets)?;
    let h = named_graph(graph_name)?;
    let n = h.order();
    if oml.order() != n {
        return Err(IepgError::domain(format!("{oml} does not have order {n}")));
    }
    let m = match recipe {
        "J" => {
            if oml.0 != [n - 1, 1] {
                return Err(IepgError::domain(format!("all-ones recipe gives ({},1), not {oml}", n - 1)));
            }
            let (t1, t2) = (targets[0], targets[1]);
            DMatrix::from_element(n, n, (t2 - t1) / n as f64) + DMatrix::identity(n, n) * t1
        }
        "cycle" => {
            let doubled: Vec<usize> = (0..oml.0.len()).filter(|&i| oml.0[i] == 2).collect();
            if doubled.len() != 1 || oml.0.iter().any(|&m| m > 2) {
                return Err(IepgError::domain(format!("cycle recipe doubles one value, not {oml}")));
            }
            cycle_double_eigenvalue(n, targets, doubled[0], opts)?.matrix.into_matrix()
        }
        "block" => return block(&h, oml, targets, Mode::Ssp, opts),
        "star" => star_matrix(n, targets)?,
        "search" => {
            let r = realize_spectrum(&h, &expand(oml, targets), opts)?;
            return Ok((r.matrix.into_matrix(), true));
        }
        family => family_for_targets(family, targets)?.matrix.into_matrix(),
    };
    Ok((m, false))
}

/// Realizes an SSP-attainable list on `g` with the SSP.
fn realize_ssp(g: &Graph, oml: &Oml, targets: &[f64], opts: &SolveOptions) -> Result<DMatrix<f64>> {
    let n = g.order();
    if oml.is_simple() {
        let d = DMatrix::from_diagonal(&DVector::from_column_slice(targets));
        if g.size() == 0 {
            return Ok(d);
        }
        return Ok(isospectral_lift(&PatternedMatrix::new(d)?, g, opts)?.matrix.into_matrix());
    }
    if !g.is_connected() {
        return Ok(block(g, oml, targets, Mode::Ssp, opts)?.0);
    }
    let mut candidates: Vec<_> = catalog()
        .minimal_for(oml)
        .into_iter()
        .filter_map(|(m, rev)| {
            let h = named_graph(&m.graph).ok()?;
            (h.order() == n && find_subgraph_embedding(&h, g).is_some()).then_some((m, rev, is_isomorphic(&h, g)))
        })
        .collect();
    candidates.sort_by_key(|(m, rev, iso)| (!iso, m.recipe == "block", *rev));
    let mut last = IepgError::NotAttainable(format!("{oml} on {g} with the SSP"));
    for (m, rev, _) in candidates {
        let attempt = if rev {
            let t: Vec<f64> = targets.iter().rev().map(|x| -x).collect();
            realize_minimal(&m.graph, &m.recipe, &oml.reversed(), &t, opts).map(|(a, b)| (-a, b))
        } else {
            realize_minimal(&m.graph, &m.recipe, oml, targets, opts)
        };
        match attempt.and_then(|(a, _)| embed_and_lift(&a, g, opts)) {
            Ok(a) => return Ok(a),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn realize_any(g: &Graph, oml: &Oml, targets: &[f64], opts: &SolveOptions) -> Result<(DMatrix<f64>, bool)> {
    if attainable(g, Mode::Ssp)?.contains(oml) {
        return Ok((realize_ssp(g, oml, targets, opts)?, false));
    }
    if !g.is_connected() {
        return block(g, oml, targets, Mode::Any, opts);
    }
    let entry = catalog().entry(g).ok_or_else(|| IepgError::Unsupported(format!("{g} is not in the catalog")))?;
    let extra = entry
        .any_only
        .iter()
        .find(|a| &a.oml == oml)
        .ok_or_else(|| IepgError::NotAttainable(format!("{oml} on {}", entry.name)))?;
    match extra.recipe.as_str() {
        "star" => Ok((embed_and_lift(&star_matrix(g.order(), targets)?, g, opts)?, false)),
        "search" => {
            let r = realize_spectrum(g, &expand(oml, targets), opts)?;
            Ok((r.matrix.into_matrix(), true))
        }
        other => Err(IepgError::Unsupported(format!("unknown recipe {other}"))),
    }
}

/// Direct sum over the components of `g`, splitting the target values
/// among them. With the SSP every value belongs to one component.
fn block(g: &Graph, oml: &Oml, targets: &[f64], mode: Mode, opts: &SolveOptions) -> Result<(DMatrix<f64>, bool)> {
    let comps = g.components();
    let graphs: Vec<Graph> = comps.iter().map(|c| g.induced(c)).collect();
    let lists: Vec<Vec<Oml>> = graphs.iter().map(|c| attainable(c, mode)).collect::<Result<_>>()?;
    let k = oml.0.len();
    let mut counts = vec![0usize; k];
    let mut choice: Vec<(usize, Vec<usize>)> = Vec::new();
    if !assign(0, &lists, &oml.0, mode, &mut counts, &mut choice) {
        return Err(IepgError::NotAttainable(format!("{oml} on {g} in {mode} mode")));
    }
    let mut m = DMatrix::zeros(g.order(), g.order());
    let mut best_effort = false;
    for (ci, (li, idx)) in choice.iter().enumerate() {
        let l = &lists[ci][*li];
        let t: Vec<f64> = idx.iter().map(|&i| targets[i]).collect();
        let (sub, be) = match mode {
            Mode::Ssp => (realize_ssp(&graphs[ci], l, &t, opts)?, false),
            Mode::Any => realize_any(&graphs[ci], l, &t, opts)?,
        };
        best_effort |= be;
        for (a, &u) in comps[ci].iter().enumerate() {
            for (b, &v) in comps[ci].iter().enumerate() {
                m[(u, v)] = sub[(a, b)];
            }
        }
    }
    Ok((m, best_effort))
}

fn assign(
    ci: usize,
    lists: &[Vec<Oml>],
    target: &[usize],
    mode: Mode,
    counts: &mut [usize],
    choice: &mut Vec<(usize, Vec<usize>)>,
) -> bool {
    if ci == lists.len() {
        return counts == target;
    }
    let k = target.len();
    for (li, l) in lists[ci].iter().enumerate() {
        let need = l.0.len();
        for mask in 0u32..1 << k {
            if mask.count_ones() as usize != need {
                continue;
            }
            let idx: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
            let fits = idx.iter().zip(&l.0).all(|(&i, &m)| {
                counts[i] + m <= target[i] && (mode == Mode::Any || counts[i] == 0)
            });
            if !fits {
                continue;
            }
            for (&i, &m) in idx.iter().zip(&l.0) {
                counts[i] += m;
            }
            choice.push((li, idx.clone()));
            if assign(ci + 1, lists, target, mode, counts, choice) {
                return true;
            }
            choice.pop();
            for (&i, &m) in idx.iter().zip(&l.0) {
                counts[i] -= m;
            }
        }
    }
    false
}

/// Runs the stored construction for `(g, oml)` with distinct values
/// `targets` and checks the outcome. Lists attainable only without the SSP
/// are realized in [`Mode::Any`]; a best-effort search is flagged as such.
pub fn spectrally_arbitrary_demo(
    g: &Graph,
    oml: &Oml,
    targets: &[f64],
    mode: Mode,
    opts: &SolveOptions,
) -> Result<RealizationResult> {
    check_targets(oml, targets)?;
    if oml.order() != g.order() {
        return Err(IepgError::domain(format!("{oml} does not have order {}", g.order())));
    }
    if !attainable(g, mode)?.contains(oml) {
        return Err(IepgError::NotAttainable(format!("{oml} is not attainable by {g} in {mode} mode")));
    }
    let (m, best_effort) = match mode {
        Mode::Ssp => (realize_ssp(g, oml, targets, opts)?, false),
        Mode::Any => realize_any(g, oml, targets, opts)?,
    };
    let pm = PatternedMatrix::with_pattern(m, g, DEFAULT_ZERO_TOL)?;
    let mut r = RealizationResult::assemble(pm, g, expand(oml, targets), opts, 0, 0);
    r.best_effort = best_effort;
    let scale = targets.iter().fold(1.0f64, |s, x| s.max(x.abs()));
    if r.spectral_residual > 1e-8 * scale {
        return Err(IepgError::NoConvergence(format!("spectral residual {:e}", r.spectral_residual)));
    }
    if &r.achieved.oml() != oml {
        return Err(IepgError::NoConvergence(format!("achieved list {} instead of {oml}", r.achieved.oml())));
    }
    Ok(r)
}
