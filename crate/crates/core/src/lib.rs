//! Exact-arithmetic computational algebra for lower bounds on the number of
//! 1-periodic orbits of a non-degenerate Hamiltonian system.
//!
//! The crate is organized around a small set of carriers:
//!
//! * [`linalg`] — dense matrices over prime fields and the integers
//!   (rank, kernels, Smith normal form);
//! * [`group`] — finite groups as multiplication tables, structural
//!   predicates and the minimal generator count d(G);
//! * [`presentation`] — group presentations, word arithmetic, Fox
//!   derivatives and homology with local coefficients;
//! * [`coset`] — Todd–Coxeter coset enumeration;
//! * [`rep`] / [`meataxe`] — modular representations and the chop of the
//!   regular module into irreducibles;
//! * [`novikov`] — truncated arithmetic in Novikov completions R((T));
//! * [`complex`] — free graded chain complexes over group rings, folding
//!   and homology;
//! * [`bounds`] — the bound formulas (δ(G), per-degree μ bounds, per-index
//!   orbit-count reports).
//!
//! The crate is `no_std` (with `alloc`); everything is deterministic given
//! the explicit seeds that the randomized routines accept.

#![cfg_attr(not(test), no_std)]
// index-based loops stay: this is dense matrix code and the indices are
// the mathematics
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod bounds;
pub mod complex;
pub mod coset;
pub mod group;
pub mod linalg;
pub mod meataxe;
pub mod novikov;
pub mod presentation;
pub mod rep;
pub mod rng;

pub use bounds::{delta, orbit_report, BoundsReport, DeltaBreakdown, ManifoldDescriptor};
pub use complex::{GradedComplex, Grading, GroupRingMatrix};
pub use group::FiniteGroup;
pub use linalg::{IntegerMatrix, PrimeFieldMatrix};
pub use novikov::{NovikovContext, NovikovSeries};
pub use presentation::{LinearRep, Presentation, Word};
pub use rep::Representation;
