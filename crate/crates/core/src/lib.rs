//! cubelat-core: exact combinatorics of cubical polytopes and the graph
//! machinery needed to machine-check their connectivity properties.
//!
//! The crate is organised bottom-up:
//!
//! * [`complex`] — polytopal complexes over integer vertex ids: purity,
//!   stars, antistars, induced subcomplexes, graphs, facet-ridge dual
//!   graphs and facet-ridge path search.
//! * [`cube`] — faces of the 0–1 d-cube as ternary words, plus the two
//!   explicit cube-complex constructions (antistar of a face, and the
//!   spanning codimension-2 subcomplex left after deleting a vertex and
//!   some of its neighbours).
//! * [`connectivity`] — flow-based vertex connectivity, Menger witnesses
//!   and exhaustive minimum-separator enumeration with classification.
//! * [`polytope`] — construction and validation of combinatorial cubical
//!   polytopes: hypercubes, connected sums, chains, file instances.
//! * [`verify`] — the claim harness: one operation per connectivity claim,
//!   each producing a structured pass/fail report with witnesses.

pub mod complex;
pub mod connectivity;
pub mod cube;
pub mod polytope;
pub mod verify;

pub use complex::{ComplexError, DualGraph, Face, Graph, PolytopalComplex, VertexId};
pub use connectivity::{ConnectivityError, EnumerationLimits, SeparatorReport};
pub use cube::{CubeCutsetSpec, CubeError, CubeWord, Letter};
pub use polytope::{CubicalPolytope, PolytopeError, RecognitionFailure, VertexCensus};
pub use verify::{Outcome, VerificationReport, VerifyConfig};
