//! Combinatorial diagram calculus for four-manifolds with boundary.
//!
//! The crate models three related kinds of diagrams, all drawn on compact
//! oriented surfaces with a shared boundary (the *binding*):
//!
//! * three-sector Heegaard-style diagrams describing closed pieces of a
//!   three-manifold decomposition ([`triheeg`]),
//! * four-sector diagrams (a central surface plus three outer surfaces)
//!   describing four-manifolds with boundary ([`ptri`]),
//! * shadow diagrams describing embedded surfaces in such four-manifolds
//!   ([`shadow`]).
//!
//! Surfaces are stored as oriented polygonal 2-complexes ([`cell`]); moves
//! are face-walk surgeries; homological invariants come from integer Smith
//! normal form ([`homology`]).  Serialization, canonical forms, enumeration,
//! and rendering live in [`format`], [`canon`], [`enumerate`], and
//! [`render`]; the `pseudotri` binary exposes everything as subcommands.

pub mod canon;
pub mod cell;
pub mod curve;
pub mod diagram;
pub mod enumerate;
pub mod format;
pub mod homology;
pub mod models;
pub mod moves3;
pub mod moves4;
pub mod ptri;
pub mod render;
pub mod report;
pub mod shadow;
pub mod slide3;
pub mod surface;
pub mod triheeg;
pub mod zoo;
