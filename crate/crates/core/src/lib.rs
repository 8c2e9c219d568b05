//! Hosoya index computation and extremal checks for unicyclic graphs.
//!
//! * [`graph`]: simple undirected graphs and structural queries.
//! * [`edge_list`]: the plain-text graph format.
//! * [`fib`]: exact Fibonacci numbers and identities.
//! * [`hosoya`]: Hosoya index and matching polynomial.
//! * [`canon`]: canonical codes for trees and unicyclic graphs.
//! * [`enumerate`]: isomorphism-free generation.
//! * [`families`]: named families and their closed forms.
//! * [`verify`]: the executable checks and their reports.

pub mod canon;
pub mod edge_list;
pub mod enumerate;
pub mod families;
pub mod fib;
pub mod graph;
pub mod hosoya;
pub mod verify;

pub use fib::{fib, fib_nat, BigNat};
pub use graph::{Girth, Graph, GraphError, VertexId};
pub use hosoya::{hosoya, matching_polynomial, MatchingPolynomial};
