//! Finite phi-class geometries and simple matroids, with mechanically
//! checked correspondences between the two.
//!
//! The crate has three layers:
//!
//! * a subset kernel over ground sets of at most 16 labeled elements
//!   ([`sets`]);
//! * the two structure theories: phi-class systems with common regions,
//!   phi-prime/axial/maximal predicates, phi-dimension and the five
//!   generalized geometrical axioms ([`whitehead`]), and matroids with
//!   their cryptomorphic views ([`matroid`]);
//! * the translations between them with every obligation re-verified on
//!   the concrete instance ([`correspondence`]), a catalog of named
//!   instances including a searched-for counterexample ([`catalog`]),
//!   and a text file format plus CLI ([`instance`], [`cli`]).
//!
//! Everything is exhaustive and deterministic: checkers report the first
//! counterexample in canonical subset order, so a failing run is
//! reproducible with a single query.

pub mod catalog;
pub mod cli;
pub mod correspondence;
pub mod error;
pub mod instance;
pub mod matroid;
pub mod report;
pub mod sets;
pub mod whitehead;

pub use error::{Error, IndependenceAxiom, Result};
pub use instance::{parse_instance, Instance, InstanceFile, InstanceKind};
pub use matroid::{intersection_closure, same_flat_lattice, ClosureTable, Matroid};
pub use report::{Check, Verdict, Witness};
pub use sets::{GroundSet, Subset, SubsetFamily};
pub use whitehead::{AxiomReport, PhiSystem, PropertyReport, PropositionId};
