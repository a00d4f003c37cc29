//! Exact Steiner k-diameter computation and the extremal function `e_k(n, ℓ, d)`: the minimum
//! number of edges of a connected graph of order `n` with maximum degree exactly `ℓ` and Steiner
//! k-diameter at most `d`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`canon`]: bit-matrix graphs, distances, canonical labeling;
//! * [`steiner`]: Steiner distance and the eccentricity / radius / diameter built on it;
//! * [`families`]: constructors for the named graph families the extremal bounds rely on;
//! * [`enumerate`]: isomorph-free generation of connected graphs by canonical augmentation;
//! * [`extremal`]: the ascending edge-count search for `e_k(n, ℓ, d)`;
//! * [`verify`]: a registry of closed-form claims checked against the exhaustive search;
//! * [`graph6`] and [`report`]: interchange formats.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod steiner;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, DistanceMatrix, ExtendedNat, Graph};
