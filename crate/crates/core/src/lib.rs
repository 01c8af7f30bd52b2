//! Exact and randomized solvers for the minimum restrained domination
//! problem.
//!
//! A restrained dominating set of a graph is a vertex set `D` such that every
//! vertex outside `D` has at least one neighbor in `D` and at least one
//! neighbor outside `D`; the restrained domination number `γ_r` is the size
//! of a smallest such set. The crate provides:
//!
//! - [`graph`]: the graph type, file format, and certificate checks;
//! - [`oracle`]: an exhaustive solver for small graphs, the ground truth
//!   everything else is tested against;
//! - [`block`]: a cut-tree dynamic program for block graphs;
//! - [`threshold`], [`cograph`], [`chain`]: closed-form solvers for those
//!   classes;
//! - [`reductions`]: generators and desk-scale verifiers for two hardness
//!   constructions (exact cover by 3-sets, and pendant-path augmentation);
//! - [`randomized`]: a probabilistic upper bound and the sampling algorithm
//!   attaining it in expectation.

pub mod block;
pub mod chain;
pub mod cograph;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod randomized;
pub mod reductions;
pub mod threshold;

pub use error::Error;
pub use graph::{Graph, Method, RdsResult, VertexSet};
