//! Book numbers of graphs and exact Turán values for books at small
//! order gaps.
//!
//! The book B_p is p triangles glued along one shared edge. This crate
//! computes book numbers, decides B_p-freeness from either side of the
//! complement identity, evaluates the closed-form values of ex(n, B_p)
//! for n − p between 2 and 6 (with the known exceptional cells),
//! constructs the extremal families and witness graphs behind those
//! values, and certifies everything at desk scale by isomorph-free
//! exhaustive search.
//!
//! Module map:
//! - [`graph`]: bit-row graph values, constructors, complement/union/join.
//! - [`graph6`]: bit-exact graph6 text interchange.
//! - [`canon`]: exact canonical labeling and isomorphism testing.
//! - [`books`]: book numbers and freeness decisions.
//! - [`structure`]: structural predicates on complements of extremal graphs.
//! - [`catalog`]: closed-form values, gadget constants, extremal families.
//! - [`search`]: branch-and-bound and full-enumeration ground truth.
//! - [`cache`]: text persistence of search records.

pub mod books;
pub mod cache;
pub mod canon;
pub mod catalog;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod structure;

pub use books::{book_number, is_book_free, BookWitness};
pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use graph::{DegreeSequence, Graph, GraphError};
pub use search::{SearchConfig, SearchMode, TuranRecord};
