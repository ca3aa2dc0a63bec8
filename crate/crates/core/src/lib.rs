//! Exact Kostant partition functions of types A and C.
//!
//! A Kostant partition function `K_G(a)` counts the ways to write an integer
//! vector `a` as a nonnegative integer combination of the roots attached to
//! the edges of a signed multigraph `G`. Equivalently it counts nonnegative
//! integer `a`-flows on `G`, where negative edges carry fluid from the smaller
//! to the larger vertex and positive edges (and loops) leak fluid away.
//!
//! The crate provides:
//!
//! - [`graph`]: signed multigraphs, their roots, and the hypothesis checks for
//!   the divisibility identities relating `K_G` and `K_{G-e}`;
//! - [`flow`]: two independent exact counters plus a lexicographic flow
//!   enumerator;
//! - [`identities`]: cross-multiplied verification of the identities and a
//!   seeded generator of graphs satisfying their hypotheses;
//! - [`bijection`]: partial flows and the fibration of flows over them;
//! - [`cli`]: the `kostant` command-line front end.

pub mod bijection;
pub mod catalan;
pub mod cli;
pub mod error;
pub mod flow;
pub mod graph;
pub mod identities;
pub mod io;

pub use error::{Error, Result};
pub use flow::{count, Backend, FlowVector};
pub use graph::{Edge, GraphKind, NetflowVector, Sign, SignedMultigraph, Theorem};
