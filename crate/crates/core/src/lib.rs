//! Exact symmetric and quasi-symmetric invariants of discrete polymatroids.
//!
//! - [`pmcore`]: rank tables, axiom checks, graph and vector constructors, minors
//! - [`schur`]: Schur-basis symmetric functions with degree truncation
//! - [`invariants`]: `P`, `H(q,t)`, `G`, rank generating function, Tutte, Rees series
//! - [`qsym`]: quasi-symmetric functions in the `M`, `P`, `U` bases
//! - [`special`]: the maps `tau`, `xi`, `theta` and the characters `zeta`, `gamma`
//! - [`polytope`]: base polytopes and valuative checks
//! - [`registry`]: named invariants selectable at runtime
//! - [`corpus`]: bundled example polymatroids and decompositions
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod pmcore;
pub mod polytope;
pub mod qsym;
pub mod registry;
pub mod rational;
pub mod schur;
pub mod special;
mod text;

pub use error::{Error, Result};
