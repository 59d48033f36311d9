//! Exact domination laboratory for uniform hypergraphs.
//!
//! The crate computes all four domination quantities of a hypergraph
//! exactly (plain, s-dominating, s-tuple dominating, distance-l
//! dominating), generates the extremal construction families those
//! quantities are tight on (disjoint edges, projective designs over prime
//! fields with optional arc-based padding, cyclic edge chains, spider
//! overlays), runs exhaustive extremal searches at desk scale with
//! isomorphism pruning, and certifies every claimed bound with either an
//! exhaustive sweep or an independent brute-force oracle.
//!
//! Entry points:
//! - [`hypergraph::Hypergraph`] and [`vertex_set::VertexSet`]: the shared
//!   representation (neighborhoods, Berge distances, balls).
//! - [`domination`]: predicates, exact branch-and-bound solver, oracle.
//! - [`geometry`] and [`constructions`]: the generator families.
//! - [`tree`]: tree j-radius, exact and constructive, plus enumeration.
//! - [`matching`]: connected maximal matchings and the constructive
//!   distance dominator built on them.
//! - [`extremal`]: minimum-order searches and the closed-form bound tables.
//! - [`verify`]: the acceptance checks behind `hyperdom verify`.

pub mod constructions;
pub mod domination;
pub mod extremal;
pub mod geometry;
pub mod hypergraph;
pub mod matching;
pub mod rng;
pub mod tree;
pub mod verify;
pub mod vertex_set;

pub use domination::{DominationVariant, SolveResult, SolverConfig};
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;
