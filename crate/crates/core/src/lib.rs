//! Exact combinatorial algebra for edge ideals of finite simple graphs:
//! class detectors, the generator order on powers, even-connections and
//! colon graphs, polarization, and two independent Betti-number oracles.
//!
//! All kernels are exact (no floating point) and deterministic. Data-parallel
//! scans use rayon when the `parallel` feature (default) is enabled and a
//! multi-thread pool is active; otherwise the hand-written sequential paths
//! run, with identical results.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod classes;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod monomial;
pub mod order;
mod par;

pub use error::{Error, Result};
pub use graph::{Graph, CycleWitness};
pub use monomial::{edge_ideal, Monomial, MonomialIdeal, Polarization, VariableContext};
pub use par::sequential_build;
