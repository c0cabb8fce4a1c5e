//! Closed neighborhood ideals of finite simple graphs.
//!
//! For a graph `G` on vertices `x1..xn`, the closed neighborhood ideal
//! `NI(G)` is generated, one monomial per vertex `w`, by the product of
//! the variables in the closed neighborhood `N[w]`. This crate builds
//! those ideals (plus edge ideals and t-path ideals), computes graded
//! Betti tables of the quotient `R/I` from first principles over a prime
//! field, and derives Castelnuovo-Mumford regularity and projective
//! dimension from the table.
//!
//! Two independent engines compute every table: an induced-subcomplex
//! homology sum over the Stanley-Reisner complex, and a Taylor-complex
//! Tor computation indexed by subsets of the minimal generators. They
//! must agree entry by entry; the test suites enforce this.
//!
//! The [`verify`] module packages the quantitative facts this machinery
//! is meant to certify (regularity equals matching number on forests, the
//! matching-number lower bound for all graphs, cycle/wheel projective
//! dimension closed forms, Betti splittings at simplicial vertices) as
//! named, seeded, machine-readable suites over enumerated graph families.

pub mod bits;
pub mod error;
pub mod graph;
pub mod matching;
pub mod domination;
pub mod enumerate;
pub mod monomial;
pub mod linalg;
pub mod simplicial;
pub mod betti;
pub mod verify;
pub mod cache;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph, StructureReport};
pub use monomial::{Monomial, MonomialIdeal};
pub use simplicial::{HomologyProfile, SimplicialComplex};
pub use betti::{BettiTable, ShiftReport, SplitReport};
pub use verify::SuiteReport;

/// Size guards for the exhaustive kernels. All are overridable at the
/// call sites that take an explicit limit; these are the defaults the
/// convenience wrappers use.
pub mod guards {
    /// Max vertex count for 2^n subset searches (dominating sets,
    /// Stanley-Reisner facets, dominance complex).
    pub const SUBSET_SEARCH_MAX: usize = 24;
    /// Max vertex count for exact chromatic / clique cover search.
    pub const CLIQUE_COVER_MAX: usize = 16;
    /// Max vertex count for full labeled-graph enumeration.
    pub const GRAPH_ENUM_MAX: usize = 7;
    /// Max vertex count for labeled tree enumeration.
    pub const TREE_ENUM_MAX: usize = 12;
    /// Max ambient variables for the induced-subcomplex Betti engine.
    pub const HOCHSTER_MAX_VARS: usize = 20;
    /// Max minimal generators for the Taylor-complex Betti engine.
    pub const TAYLOR_MAX_GENS: usize = 12;
    /// Face-count budget for homology of an explicit complex.
    pub const FACE_BUDGET: usize = 1 << 24;
}
