//! Computation with finite connectivity spaces.
//!
//! A connectivity space is a finite carrier together with a family of
//! "connected" subsets that contains `∅` and is closed under unions of
//! members sharing a point. This crate validates and generates such
//! structures, decomposes them into irreducible connected sets and their
//! generic graph, computes the connectivity index, and implements the
//! categorical constructions on them: pushforward and pullback, finite
//! limits and colimits, quotients and subspaces, the tensor product and
//! hom-spaces, homotopy over finite time spaces, and the smash product of
//! pointed spaces.
//!
//! Subsets are bitmasks over at most 64 points; families are stored
//! explicitly and guarded by the process-wide [`Limits`].

pub mod analysis;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod generation;
pub mod limits;
pub mod pointed;
pub mod space;
pub mod subset;

pub use analysis::{
    brunnian_closure, generic_graph, graph_report, index, irreducibles, is_distinguished,
    is_irreducible_space, is_reducible, omega, space_from_generic_graph, GenericGraph,
    GraphReport, IndexReport,
};
pub use constructions::{Diagram, HomSpace, Partition, PointMap};
pub use error::{Error, Result};
pub use generation::{generate, phi, structure_join, structure_meet};
pub use limits::Limits;
pub use pointed::PointedConnSpace;
pub use space::{canonical_form, connected_components, is_isomorphic, validate, ConnSpace, GroundSet};
pub use subset::{Subset, SubsetFamily};
