//! Knot and link invariants of piecewise-linear spatial embeddings of small
//! complete graphs, with exact checks of the integer identities that tie
//! a₂ sums to linking-number sums, and the stick census of rectilinear K6
//! and K7.
//!
//! The pipeline is:
//!
//! 1. [`graph`] enumerates cycles, disjoint cycle pairs and the labeled
//!    K5 / K3,3 / D4 subgraph families.
//! 2. [`geometry`] holds exact rational embeddings and projects them along a
//!    generic direction, producing every crossing of the graph diagram.
//! 3. [`diagram`] restricts that crossing set to a cycle or cycle pair and
//!    yields a combinatorial [`diagram::LinkDiagram`].
//! 4. [`invariants`] evaluates linking numbers, the Conway coefficient `a2`
//!    (Seifert matrix route and skein route), the Simon invariant and the
//!    α-invariant.
//! 5. [`theorems`] assembles per-embedding reports and evaluates the identities.

pub mod diagram;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod invariants;
pub mod theorems;

pub use error::{Error, Result};
