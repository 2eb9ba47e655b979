//! Spectra of glued graphs.
//!
//! Oriented graphs carry two Laplacians: the vertex-indexed even Laplacian
//! Δ⁺ = 𝓘𝓘ᵗ and the edge-indexed odd Laplacian Δ⁻ = 𝓘ᵗ𝓘. This crate glues
//! graphs along a shared subgraph or across bridge edges, assembles the
//! Laplacians of the result from the pieces, and computes the exact
//! characteristic polynomial of the glued graph from polynomials of the
//! pieces. Around that sit numeric spectra, spanning-tree counts, Cheeger
//! constants and a free-particle quantum walk.
//!
//! Characteristic polynomials follow the convention `det(M - λI)` and have
//! arbitrary-precision integer coefficients.

pub mod charpoly;
pub mod checks;
pub mod closed_forms;
pub mod eigen;
pub mod error;
pub mod gluing;
pub mod graph;
pub mod io;
pub mod laplacian;
pub mod matrix;
pub mod matrix_gluing;
pub mod poly;
pub mod quantum;
pub mod random;
pub mod spectral;
pub mod spectral_gluing;

pub use error::{Error, Result};
pub use gluing::{BridgeSpec, GluedGraph, InterfaceSpec};
pub use graph::{Edge, OrientedGraph};
pub use matrix::IntMatrix;
pub use poly::IntPoly;
