//! Exact-arithmetic workbench for finite-dimensional anticommutative
//! algebras: structure constants over the rationals, an identity engine
//! that decides multilinear identities by exhaustion, a subspace calculus
//! (powers, Lie kernel, ideals, quotients), and constructors for free
//! anticommutative algebras, central extensions and a reference zoo.

pub mod algebra;
pub mod classify;
pub mod constructor;
pub mod error;
pub mod format;
pub mod identity;
pub mod lab;
pub mod scalar;
pub mod sparse;
pub mod subspace;
pub mod suite;

pub use algebra::{element_equal, Algebra, AlgebraBuilder, BilinearForm, Element};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use sparse::SparseVec;
pub use subspace::Subspace;
