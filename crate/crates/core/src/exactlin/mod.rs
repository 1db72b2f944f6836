//! Exact arithmetic over ℚ: scalars, dense matrices, sparse elimination and
//! canonical subspaces.

mod matrix;
mod rational;
mod sparse;
mod subspace;

pub use matrix::{inertia, rref, RealMatrix};
pub use rational::Rational;
pub use sparse::{Echelon, Rref, SparseVec};
pub use subspace::{BasisSolver, Subspace};
