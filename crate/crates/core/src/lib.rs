//! Exact combinatorics of vanishing cycles on cubic surfaces.
//!
//! The Picard lattice of a smooth cubic surface is I^{1,6} with hyperplane
//! class h = 3e0 - e1 - ... - e6. Its 72 roots (classes of square -2
//! orthogonal to h) form an E6 root system, and each one is a difference of
//! two skew lines among the 27. A degeneration to a surface with ADE
//! singularities has local monodromy W(R_e), the reflection group of the
//! effective roots, and the primitive vanishing cycles that survive in the
//! limit are the W(R_e)-orbits on the 72 roots.
//!
//! Modules:
//! - [`lattice`]: pairing, hyperplane class, root enumeration.
//! - [`lines`]: the 27 lines and their incidence graph.
//! - [`weyl`]: reflections, group closure, orbits, sub-root systems, ADE
//!   recognition and embedding.
//! - [`atlas`]: orbit counts for all 21 singularity configurations and the
//!   Z/3 monodromy around an Eckardt point.
//!
//! All arithmetic is over the integers (rationals for a few linear solves).

pub mod atlas;
pub mod config;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod lines;
pub mod weyl;

pub use config::{AdeType, Family, SubsystemConfig};
pub use error::{AtlasError, Result};
pub use lattice::{
    enumerate_roots, hyperplane_class, is_root, pair, root_system, simple_roots, LatticeVector,
    Root, RootSystem72,
};
pub use lines::{
    decompose_root, enumerate_lines, incidence, incidence_graph, root_from_pair, skew_pairs,
    IncidenceGraph, Line, LineLabel,
};
pub use weyl::{
    classify, close_subsystem, generate_group, orbit_max, orbits, picard_lefschetz_word, realize,
    reflect, simple_system, ClosedSubsystem, Perm, ReflectionGroup, WeylElement,
};
