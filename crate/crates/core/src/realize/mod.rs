//! Constructive realizations: printed families, Jacobi matrices,
//! isospectral lifts to supergraphs, augmentation by a vertex, and
//! decontraction of a vertex into an edge.
//!
//! Every construction moves along the isospectral manifold
//! `M -> exp(-S) M exp(S)` with `S` skew-symmetric, so spectra are preserved
//! up to rounding, and every returned matrix carries a property certificate.

mod augment;
mod decontract;
mod families;
mod jacobi;
mod lift;
mod newton;
mod search;

pub use augment::{augment, cycle_double_eigenvalue};
pub use decontract::{decontract, decontracted_graph, lambda_bound_check, BoundReport, DecontractOptions};
pub use families::{
    b12_graph, build_family, family_for_targets, m1_pair, solve_m1, solve_m4, Family, FamilyMatrix, M1Solution, FAMILY_NAMES,
};
pub use jacobi::jacobi_from_spectrum;
pub use lift::{isospectral_lift, liberation_feasible, LiberationReport};
pub use search::realize_spectrum;

use serde_json::{json, Value};

use crate::graph::Graph;
use crate::linalg;
use crate::matrix::{PatternedMatrix, Spectrum};
use crate::strong::{has_property, PropertyCertificate, PropertyKind, RankOptions};

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub seed: u64,
    /// Newton iterations per attempt.
    pub max_iters: usize,
    /// Attempts with fresh random directions and smaller steps.
    pub restarts: usize,
    /// Size of the initial tangent step relative to `max(1, max |a_ij|)`.
    pub step: f64,
    /// Zero the off-pattern entries of the final matrix exactly.
    pub strict: bool,
    pub rank: RankOptions,
    /// Property the result must have.
    pub require: PropertyKind,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seed: 0x5eed,
            max_iters: 100,
            restarts: 20,
            step: 0.1,
            strict: true,
            rank: RankOptions::default(),
            require: PropertyKind::Ssp,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RealizationResult {
    pub matrix: PatternedMatrix,
    pub target_graph: Graph,
    /// Sorted eigenvalues the construction was meant to reproduce.
    pub target_eigenvalues: Vec<f64>,
    pub achieved: Spectrum,
    /// Largest gap between sorted target and achieved eigenvalues.
    pub spectral_residual: f64,
    pub certificate: PropertyCertificate,
    pub iterations: usize,
    pub restarts: usize,
    pub converged: bool,
    /// Auxiliary eigenvalue used by decontraction.
    pub lambda: Option<f64>,
    /// Produced by an unguided numerical search.
    pub best_effort: bool,
}

impl RealizationResult {
    pub(crate) fn assemble(
        matrix: PatternedMatrix,
        target_graph: &Graph,
        mut target_eigenvalues: Vec<f64>,
        opts: &SolveOptions,
        iterations: usize,
        restarts: usize,
    ) -> RealizationResult {
        target_eigenvalues.sort_by(|a, b| a.total_cmp(b));
        let achieved = matrix.spectrum();
        let spectral_residual = linalg::sorted_distance(&target_eigenvalues, &achieved.eigenvalues);
        let certificate = has_property(&matrix, opts.require, &opts.rank);
        RealizationResult {
            converged: matrix.graph() == target_graph,
            matrix,
            target_graph: target_graph.clone(),
            target_eigenvalues,
            achieved,
            spectral_residual,
            certificate,
            iterations,
            restarts,
            lambda: None,
            best_effort: false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matrix": self.matrix.to_json(),
            "graph": self.target_graph.to_json(),
            "oml": self.achieved.oml().0,
            "spectrum": self.achieved.to_json(),
            "target_eigenvalues": self.target_eigenvalues,
            "spectral_residual": self.spectral_residual,
            "certificate": self.certificate.to_json(),
            "iterations": self.iterations,
            "restarts": self.restarts,
            "converged": self.converged,
            "lambda": self.lambda,
            "best_effort": self.best_effort,
        })
    }
}
