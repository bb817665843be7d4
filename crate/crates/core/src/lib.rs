//! Dominance complexes of graphs and the objects around them.
//!
//! The crate builds the dominance complex `D(G)` (sets whose complement is
//! dominating), independence complexes of graphs and hypergraphs, combinatorial
//! Alexander duals, suspensions, the bipartite double `G^⋈` and cross-polytope
//! boundaries. Reduced homology is computed over Z2 with bit-packed Gaussian
//! elimination, and [`verify`] checks the bound
//! `conn_Z2(D(G)) + 2 <= τ(G)` together with the facts it rests on.
//!
//! All vertex subsets are [`VertexSet`] bitsets over a fixed ground set
//! `{0, .., n-1}` with `n <= 128`.

pub mod bitset;
pub mod cli;
pub mod complex;
pub mod gf2;
pub mod graph;
pub mod homology;
pub mod hypergraph;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use complex::{ComplexError, ComplexKind, SimplicialComplex, SimplicialVertexMap};
pub use gf2::GF2Matrix;
pub use graph::{Family, Graph, GraphError};
pub use homology::{BettiProfile, ExtInt};
pub use hypergraph::{Hypergraph, Involution};
