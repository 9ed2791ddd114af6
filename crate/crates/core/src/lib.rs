//! Construction and verification of minimal prime graphs: graphs whose
//! complement is triangle-free and 3-colorable, and which lose that property
//! when any edge is deleted.

pub mod automorphism;
pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod circulant;
pub mod cliques;
pub mod coloring;
mod error;
pub mod generation;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod perm;
pub mod products;
pub mod reseminant;
pub mod scalar;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::{EdgeList, Graph};
pub use matrix::Matrix;
pub use perm::Permutation;
pub use reseminant::{DuplicationVector, TwinPartition};
pub use scalar::{Field, Scalar};

pub type IntMatrix = Matrix<i64>;
pub type RationalMatrix = Matrix<num_rational::Rational64>;
pub type RealMatrix = Matrix<f64>;
