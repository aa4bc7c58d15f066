//! Core engine for modeling transport through a two-level gate as thermal
//! operations on a resource-theoretic footing.
//!
//! The library provides:
//! - validated density matrices, thermal contexts and entropy functionals
//!   ([`state`]);
//! - the one-parameter family of two-level Gibbs-stochastic maps, their Kraus
//!   representations and covariance checks ([`thermal`]);
//! - thermomajorization curves and feasibility checks for population
//!   transitions ([`majorization`]);
//! - Renyi divergences, generalized free energies and the asymmetry monotone
//!   ([`monotones`]);
//! - transport scenarios: yield and entropy-production reports for the
//!   channel, a work-battery feasibility rule for the pump, and a coherent
//!   ladder-reservoir embedding that converts pump output into a coherently
//!   driven gate ([`scenarios`], [`embedding`]);
//! - parameter sweeps with deterministic CSV output, parallelized when the
//!   `parallel` feature (default) is enabled ([`sweep`]).

pub use nalgebra;
pub use num_complex;

pub mod embedding;
pub mod error;
pub mod majorization;
pub mod monotones;
pub mod scenarios;
pub mod state;
pub mod sweep;
pub mod thermal;

pub use error::CoreError;
pub use state::{
    relative_entropy, relative_entropy_of_coherence, trace_distance, von_neumann_entropy,
    DensityMatrix, GibbsContext, PopulationVector,
};
