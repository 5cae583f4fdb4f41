//! Exact computations with metric graphs of groups and the Lipschitz metric
//! on their deformation spaces.
//!
//! A marked metric graph of groups encodes a cocompact group action on a
//! metric simplicial tree. This crate provides:
//!
//! - core data structures for graphs of groups with trivial, finite, or
//!   infinite-cyclic vertex groups, and Britton-style normal forms for loop
//!   words ([`word`]);
//! - an independent brute-force oracle that computes translation lengths by
//!   minimizing displacement over a ball of the covering tree ([`oracle`]);
//! - deformation moves (collapse, expansion, folds, twists), the modular
//!   homomorphism and an integer-index invariant ([`moves`], [`invariants`]);
//! - the asymmetric Lipschitz distance between marked graphs of groups, with
//!   exact witness certificates ([`gmap`], [`optimal`], [`distance`],
//!   [`candidates`]);
//! - geodesic paths realized by rescaling followed by equivariant folding
//!   ([`geodesic`]);
//! - displacement functions of automorphisms, train track maps and stretch
//!   factors ([`dynamics`]).
//!
//! All lengths and stretch factors are exact rationals; floating point only
//! appears in presentation-layer logarithms and in Perron-Frobenius
//! eigenvector approximation (where irrational values are unavoidable).

pub mod candidates;
pub mod distance;
pub mod dynamics;
pub mod error;
pub mod format;
pub mod geodesic;
pub mod gmap;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod moves;
pub mod optimal;
pub mod oracle;
pub mod rational;
pub mod word;

pub use error::Error;
pub use rational::Rat;

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
