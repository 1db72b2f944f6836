//! Exact computations with holonomy algebras of pseudo-quaternionic-Kählerian
//! spaces: matrix Lie algebras inside `sp(1) ⊕ sp(r,s)`, spaces of algebraic
//! curvature tensors, prolongations and Berger closures, all over ℚ.

pub mod berger;
pub mod cache;
pub mod context;
pub mod curvature;
pub mod error;
pub mod exactlin;
pub mod harness;
pub mod liealg;
pub mod prolong;
pub mod quatspace;

pub use error::{Error, Result};
