//! Cops and Robber on hypergraphs.
//!
//! The crate is organised around one value type, [`Hypergraph`], and the
//! operations the game needs on it:
//!
//! - [`hypergraph`]: neighbourhoods, the 2-section, connectivity and the two
//!   vertex-deletion operators;
//! - [`dismantle`]: corner elimination and dismantling certificates;
//! - [`solver`]: the exact k-cop game solver, optimal strategies and match play;
//! - [`strategies`]: scripted cop and robber strategies for specific families;
//! - [`construct`]: generators for hypertrees, multipartite hypergraphs,
//!   Cartesian products, prisms and basic graphs;
//! - [`format`], [`bounds`] and [`suite`]: file formats, the product
//!   lower-bound inequality and the verification suites used by the CLI.

pub mod bounds;
pub mod construct;
pub mod dismantle;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod solver;
pub mod strategies;
pub mod suite;

pub use error::{Error, FormatCode, Result};
pub use hypergraph::{Graph, Hypergraph, NeighborSet, Vertex};
