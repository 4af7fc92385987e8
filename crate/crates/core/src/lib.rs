//! Lagrangians of uniform hypergraphs, compression and symmetrization
//! operators, forbidden-subgraph detection and small exhaustive searches.

pub mod error;
pub mod hypergraph;

pub use error::{Error, Result};
pub use hypergraph::{Edge, Hypergraph};
pub mod freeness;
pub mod lagrangian;
pub mod search;
pub mod suite;
