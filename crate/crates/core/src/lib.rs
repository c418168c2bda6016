//! Exact crossing statistics over pattern-avoiding permutations.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`perm`]: permutations, arc-diagram statistics, symmetries, insertion;
//! * [`pattern`]: classical pattern containment and avoidance classes;
//! * [`qpoly`]: exact polynomials in `q`, truncated series in `z`,
//!   rational functions and continued fractions;
//! * [`distribution`]: distribution polynomials and coefficient triangles;
//! * [`identities`]: brute-force verification of crossing identities.
#![no_std]

extern crate alloc;

pub mod distribution;
pub mod error;
pub mod identities;
pub mod pattern;
pub mod perm;
pub mod qpoly;
pub mod report;

pub use distribution::{BruteForce, DistributionSource, RowIndex, RowSelector, Statistic, Triangle};
pub use error::{Error, Result};
pub use pattern::{avoids, enumerate, occurrences, ClassSelector, PatternSet};
pub use perm::{ArcSide, CrossingPair, Permutation, StatProfile, Symmetry};
pub use qpoly::{BiPoly, QPoly, QSeries, RationalGf};
pub use report::{CheckReport, Counterexample, Status};
