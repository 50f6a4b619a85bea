//! Inverse eigenvalue problem of a graph.
//!
//! Graphs, symmetric matrices with a prescribed off-diagonal zero pattern,
//! the strong spectral properties (SSP, SMP, SAP) decided by the rank of a
//! verification matrix, constructive realizations (isospectral lifts,
//! augmentation, decontraction) and a verified catalog of ordered
//! multiplicity lists for small graphs.
//!
//! Vertices are 0-based everywhere in the library. The JSON formats and the
//! command line use 1-based labels.

pub mod catalog;
pub mod error;
pub mod graph;
pub(crate) mod linalg;
pub mod matrix;
pub mod realize;
pub mod strong;

pub use matrix::{Oml, PatternedMatrix, Spectrum};
pub use strong::{PropertyCertificate, PropertyKind};

pub use error::{IepgError, Result};
pub use graph::Graph;


