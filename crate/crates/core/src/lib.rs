//! Exact integer lattice computations for automorphisms of complex 2-tori:
//! the induced action on `H^2 ≅ U^3`, invariant and coinvariant lattices,
//! discriminant forms, existence criteria for p-elementary lattices, and a
//! catalog of worked examples that can be re-verified from scratch.

pub mod action;
pub mod catalog;
pub mod classification;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod selfcheck;
