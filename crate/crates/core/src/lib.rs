//! Minimum entropy set cover.
//!
//! Given a ground set `1..=n` and a covering family of sets, a cover assigns
//! every element to one set containing it; its entropy is that of the
//! induced class-size distribution. This crate provides:
//!
//! - [`system`], [`cover`], [`entropy`]: instances, covers, entropy, KL
//!   divergence and the size/divergence/mass decomposition of a cover's
//!   entropy.
//! - [`solvers`]: the BiasedGreedy(δ) family (δ = 0 is Greedy, δ = 1 is
//!   Biased), an exact branch-and-bound oracle, and certificates checking
//!   `Ent(BG) ≤ Ent(OPT) + log₂ f − β log₂(β/e)` at runtime.
//! - [`coloring`]: minimum entropy graph coloring through the implicit set
//!   cover over maximal independent sets, with the α ≤ 3 closed form for `f`
//!   and two entropy-reducing heuristics.
//! - [`generators`]: seeded instances and graphs, plus the 8-vertex example
//!   fixture.
//! - [`experiment`]: δ sweeps and the Biased/Greedy phase transition at
//!   `f = e`, written as CSV and SVG.
//!
//! ```
//! use mesc::{solvers, SetSystem};
//!
//! let system = SetSystem::new(4, vec![vec![1, 2, 3], vec![3, 4]]).unwrap();
//! let (cover, _) = solvers::biased(&system).unwrap();
//! assert_eq!(cover.assignment(), &[1, 1, 1, 2]);
//! let cert = solvers::certify(&system, 1.0, solvers::DEFAULT_BUDGET).unwrap();
//! assert!(cert.holds);
//! ```

pub mod coloring;
pub mod cover;
pub mod entropy;
pub mod error;
pub mod exec;
pub mod experiment;
pub mod generators;
pub mod solvers;
pub mod system;

pub use cover::CoverAssignment;
pub use entropy::{
    entropy_decomposition, entropy_of_cover, entropy_of_sizes, kl_divergence, Distribution,
    EntropyDecomposition,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use system::{validate, SetSystem, ValidationReport, Violation};
