//! Combinatorial Morse theory on the sphere.
//!
//! The crate models Morse-Smale graphs of excellent Morse functions on S²
//! as combinatorial maps, and builds the machinery around them:
//!
//! - [`complex`]: rotation-system graphs, validation, faces, canonical forms;
//! - [`moves`]: the six fundamental moves with their cancellations, move
//!   enumeration, and search over canonical codes;
//! - [`persistence`]: decorated graphs, sublevel barcodes by boundary
//!   reduction over GF(2), merge trees, contour trees, graph and homological
//!   equivalence;
//! - [`slices`]: height-embedded spheres as event histories on nesting
//!   forests, nesting posets, the zigzag of posets, level-set barcodes, and
//!   poset equivalence;
//! - [`realize`]: counting and enumerating embedding histories that realize
//!   a barcode, and the barcode -> Reeb graph -> history constructions;
//! - [`io`] / [`dot`]: the JSON file formats and DOT rendering.
//!
//! Everything is scalar-generic over [`Scalar`] (ordering plus slicing-point
//! generation); [`Value`] and the `*64` aliases pin the default `f64` choice.

pub mod complex;
pub mod dot;
pub mod error;
pub mod io;
pub mod moves;
pub mod persistence;
pub mod realize;
pub mod scalar;
pub mod slices;

mod barcode;

pub use barcode::{Bar, BarMatch, Barcode, BarcodeFlavor, Death, Endpoint, EndpointType};
pub use complex::{CanonicalCode, EdgeKind, Face, GraphSpec, MorseIndex, MsGraph, Orientation, ValidationReport};
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default scalar for files and the CLI.
pub type Value = f64;

pub type Barcode64 = Barcode<Value>;
pub type DecoratedMsGraph64 = persistence::DecoratedMsGraph<Value>;
pub type EmbeddingHistory64 = slices::EmbeddingHistory<Value>;
pub type ReebGraph64 = persistence::ReebGraph<Value>;
pub type MergeTree64 = persistence::MergeTree<Value>;
