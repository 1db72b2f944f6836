//! Quaternions, quaternionic matrices and the realified Hermitian space.

mod qmatrix;
mod quaternion;
mod space;

pub use qmatrix::QuatMatrix;
pub use quaternion::Quaternion;
pub use space::QuaternionicSpace;
