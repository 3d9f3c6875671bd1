//! Total vertex product irregularity strength (tvps) toolkit.
//!
//! A total labeling assigns a positive integer to every vertex and every
//! edge of a graph. The product degree of a vertex is its own label times
//! the labels of its incident edges; a labeling is product-irregular when
//! all product degrees are pairwise distinct, and its strength is the
//! largest label used. `tvps(G)` is the least strength over all
//! product-irregular labelings of `G`.
//!
//! The crate provides:
//!
//! * graph generators for the families of interest (cycles, paths, grids,
//!   toroidal grids, complete and complete multipartite graphs) plus the
//!   Cartesian product ([`graph`]);
//! * the labeling data model with an exact, arbitrary-precision
//!   irregularity verifier ([`labeling`]);
//! * closed-form and enumeration lower bounds together with the greedy
//!   strength-at-most-n construction ([`bounds`]);
//! * constructive cycle labelers: optimal small tables, the inductive
//!   ceil(n/3) and ceil(n/4) extensions, and the prime-chain construction
//!   for large cycles, with path / Hamiltonian derivations ([`cycles`]);
//! * composition of factor labelings over disjoint prime supports into
//!   grid and toroidal-grid labelings ([`compose`]);
//! * a branch-and-bound oracle computing exact `tvps` on small instances
//!   ([`solver`]);
//! * a command-line front end ([`cli`]).
//!
//! Every labeling produced by the crate is passed through the verifier
//! before it is returned; nothing is emitted unverified.

pub mod bounds;
pub mod cli;
pub mod compose;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod primes;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{cartesian_product, Family, FamilyTag, Graph, VertexIndexer};
pub use labeling::{CycleSequence, ProductDegreeMap, TotalLabeling};
