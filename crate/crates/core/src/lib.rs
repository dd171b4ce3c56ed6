//! Chromatic Ramsey numbers of small graphs.
//!
//! The pipeline: take a graph, compute its minimal homomorphic images by
//! contracting independent sets, then find the smallest clique order whose
//! every 2-edge-coloring holds one of those images monochromatically. For
//! 2- and 3-chromatic inputs that search is exhaustive in-house; for
//! 4-chromatic inputs it walks user-supplied Ramsey(4,4) catalogs level by
//! level. The derived two-color extremal density `1 - 1/(value - 1)` rides
//! along in every report.
//!
//! Supporting cast: exact chromatic/clique/independence/girth invariants on
//! bit-matrix graphs, a graph6 codec, canonical labeling, an exact rational
//! simplex for fractional chromatic numbers, and the tensor-product, clique
//! join, hypergraph, and matching-iteration constructions the numbers are
//! probed with.

pub mod canon;
pub mod constructions;
pub mod dataset;
pub mod error;
pub mod family;
pub mod fractional;
pub mod graph;
pub mod graph6;
pub mod homo;
pub mod invariants;
pub mod ramsey;
pub mod simplex;

pub use error::{Error, Result};
pub use family::GraphFamily;
pub use fractional::Rational;
pub use graph::{Girth, Graph, MAX_VERTICES};
