//! Commuting graphs of finite semigroups and groups.
//!
//! The crate works with finite magmas given by their multiplication
//! ([`CayleyTable`]) and simple graphs ([`SimpleGraph`]). On top of those it
//! provides:
//!
//! * the commuting graph of a semigroup ([`commuting::commuting_graph`]),
//! * explicit constructions of groups and of semigroups realizing a given
//!   graph ([`construct`]),
//! * necessary conditions for realizability with checkable witnesses
//!   ([`obstruction`]),
//! * a pruned exhaustive search over multiplication tables that decides
//!   realizability at small orders ([`search`]),
//! * a verification suite that recomputes the known decompositions
//!   ([`verify`]).

pub mod algebra;
pub mod commuting;
pub mod construct;
pub mod equivalence;
pub mod graph;
pub mod obstruction;
pub mod search;
pub mod table;
pub mod verify;

pub use commuting::{commuting_graph, CommutingGraph};
pub use equivalence::{find_equivalence, EquivalenceCertificate, EquivalenceKind};
pub use graph::{Decomposition, GraphSpec, SimpleGraph};
pub use obstruction::{Obstruction, Verdict};
pub use table::{CayleyTable, ElementId, MagmaClass, TableError};
