//! Ridge spectral sparsification of weighted graphs.
//!
//! The central object is a randomized re-weighted sub-graph that preserves the
//! Laplacian quadratic form up to a multiplicative error `eps` and an additive
//! ridge error `eps * gamma`. Sparsifiers are built shard-by-shard over a
//! binary merge tree: at every internal node two partial sparsifiers are
//! merged and re-sampled against ridge effective resistances estimated on the
//! merged graph, so the edge budget stays proportional to the graph's
//! effective dimension instead of its edge count.
//!
//! The crate is organized as:
//!
//! - [`graph`] — immutable weighted graphs, generators, edge-list I/O;
//! - [`linalg`] — preconditioned CG for SDD systems plus a dense
//!   eigendecomposition oracle used for verification;
//! - [`resistance`] — exact and sketched ridge effective resistances and the
//!   effective dimension;
//! - [`sparsify`] — the sparsifier structure, merge/resparsify step, and the
//!   degree-capped and uniform sampling baselines;
//! - [`scheduler`] — merge-tree construction and deterministic parallel
//!   execution with round accounting;
//! - [`learn`] — Laplacian smoothing, harmonic-function labeling, transductive
//!   regression, spectral-clustering cost, and the error-bound calculators;
//! - [`verify`] — dense ground-truth checks for every probabilistic claim.
//!
//! All randomness flows through [`rng::SeedStream`], so results are
//! reproducible bit-for-bit regardless of worker count or scheduling order.

pub mod error;
pub mod graph;
pub mod learn;
pub mod linalg;
pub mod resistance;
pub mod rng;
pub mod scheduler;
pub mod sparsify;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeVector, Graph};
pub use linalg::{DenseOracle, SolverConfig, DENSE_CAP};
pub use resistance::ResistanceEstimates;
pub use scheduler::{MergeTree, RunStats, SparsifyConfig, TreeShape};
pub use sparsify::{MergeStats, Sparsifier};
pub use verify::SparsifierReport;
