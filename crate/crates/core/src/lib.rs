//! Braid groups acting on arcs in the punctured disk: an exact word
//! problem, arcs as algebra and as drawings, the complex of disjoint arc
//! tuples with certified paths, and homomorphisms between braid groups.

pub mod arc;
pub mod braid;
pub mod complex;
pub mod error;
pub mod geometry;
pub mod morphism;
pub mod suite;
pub mod word_problem;

pub use arc::{Arc, ArcOracle};
pub use braid::{BraidWord, Permutation};
pub use complex::{EdgePath, RawPath, Vertex};
pub use error::{Error, Result};
pub use geometry::{ArcCode, ArcDiagram, TupleDiagram};
pub use morphism::{MorphismImages, MorphismKind, MorphismSpec};
pub use word_problem::{Backend, Solver};
