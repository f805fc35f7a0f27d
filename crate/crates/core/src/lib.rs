//! Verification toolkit for spectral conditions on star-factors.
//!
//! The crate builds the extremal graph families `K_{mb-1} ∨ (K_{n-(m+1)b+1} ∪ bK_1)`
//! and friends, computes adjacency, signless Laplacian and distance spectral
//! radii, decides `{K_{1,j}: m ≤ j ≤ 2m}`-factor existence and isolated
//! toughness exactly on small graphs, and checks the polynomial identities and
//! inequality chains that tie these quantities together.
//!
//! Modules:
//!
//! - [`graph`]: bitset graphs, constructors, edge-list I/O.
//! - [`spectral`]: dense matrices, eigensolvers, bounds, quotient matrices.
//! - [`polynomials`]: exact integer polynomials and certified root brackets.
//! - [`factors`]: star-factor search, deficiency and isolated toughness.
//! - [`harness`]: verification suites, randomized probes and reports.

pub mod error;
pub mod factors;
pub mod graph;
pub mod harness;
pub mod polynomials;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{BlockLabeling, ExtremalParams, Graph, LabeledPartition, VertexSet};
