//! Laplacian spectra of planar graph families, separator certificates and
//! the inequality checks built on them.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x <= y)` also rejects NaN

pub mod corpus;
pub mod embeddings;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod separators;
pub mod spectra;
pub mod verify;

pub use embeddings::{certify, PlanarPoint, SeparatorCertificate};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{ComponentPartition, Graph, LaplacianMatrix, VertexSet};
pub use matrix::DenseMatrix;
pub use separators::MaximalOuterplanarGraph;
pub use spectra::{fiedler_value, laplacian_spectrum, Spectrum};
