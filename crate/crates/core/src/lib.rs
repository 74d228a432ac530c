//! Closed graphs: labelings in which two edges leaving (or entering) a common
//! vertex force an edge between their far endpoints.
//!
//! The crate recognizes closed labelings, decomposes closed graphs into
//! distance layers, counts and lists every closed labeling through the
//! exchangeability quotient, enumerates all closed graphs with given layer
//! sizes, and checks exact clustering-coefficient bounds. Brute-force oracles
//! ([`search::Oracle`], [`census::census_total_bruteforce`]) back each count.

pub mod census;
pub mod cli;
pub mod closedness;
pub mod clustering;
pub mod edge_list;
pub mod error;
pub mod exchange;
pub mod graph;
pub mod search;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::{Graph, Labeling, VertexSet};
