//! Parameter theory and exact verification engine for strongly regular
//! graphs with no triangles (SRNT graphs).
//!
//! An SRNT graph is regular of degree `k`, adjacent vertices have no common
//! neighbours and non-adjacent vertices have exactly `c` of them, with
//! `k >= 3` and `k > c >= 1`. The crate covers:
//!
//! * [`params`]: every derived parameter of a pair `(k, c)` or `(q, c)`,
//!   with integrality, Krein and degree-bound feasibility tests;
//! * [`enumerate`]: systematic listing of feasible parameter sets for a
//!   fixed positive eigenvalue `q`, and vertex-count bounds;
//! * [`linked`]: the one-parameter family of pairs `(X, X')` where `X'` is
//!   the second subconstituent of `X` at every vertex;
//! * [`engine`]: exact checks of the defining axioms and of the
//!   subconstituent block identities on concrete graphs;
//! * [`constructions`]: the six known SRNT graphs, including the
//!   `S(3,6,22)` design that three of them are built from.
//!
//! All arithmetic is exact. Parameter computations use checked `i128`;
//! matrix computations use checked `i64`. The crate is `no_std` and needs
//! only `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bitset;
pub mod constructions;
pub mod engine;
pub mod enumerate;
mod error;
pub mod graph;
pub mod linked;
pub mod matrix;
pub mod params;

pub use arith::{Int, Rational};
pub use error::{Error, Result};
pub use graph::Graph;
pub use params::{derive_from_kc, derive_from_qc, Condition, FeasibilityReport, ParamSet};
