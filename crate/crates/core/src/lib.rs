//! Exact computations on permutation polytopes.
//!
//! A permutation group G of degree n embeds into the space of n x n
//! matrices by sending each element to its permutation matrix; the convex
//! hull of those points is the permutation polytope of G. This crate builds
//! such groups (eager, capped closure), computes orbits, stabilizers,
//! barycenters, and affine dimensions exactly, and decides which subgroups
//! span faces of the polytope by two independent routes: a combinatorial
//! criterion through orbit partitions and a geometric one through an exact
//! rational simplex solver. [`face::verify_theorem`] cross-checks the two
//! on every subgroup at once.
//!
//! All arithmetic is exact; there is not a float in sight.

pub mod error;
pub mod face;
pub mod group;
pub mod lp;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod polytope;
pub mod rational;

pub use error::{Error, Result};
pub use face::{FaceCertificate, SubgroupRecord, TheoremReport};
pub use group::PermGroup;
pub use lp::{LinearProgram, LpResult, Relation};
pub use matrix::RationalMatrix;
pub use partition::SetPartition;
pub use perm::Permutation;
pub use rational::Rational;
