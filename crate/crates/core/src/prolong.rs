//! First and second prolongations of linear Lie algebras `𝔤 ⊂ gl(V)`.
//!
//! An element `S` of the first prolongation is a linear map `V → 𝔤` with
//! `S(x)y = S(y)x`, stored by coefficients `s[x·dim 𝔤 + k]` so that
//! `S(e_x) = Σₖ s[x·dim 𝔤 + k]·Aₖ`. An element `T` of the second
//! prolongation is a map `V → 𝔤⁽¹⁾` with `T(x)(y) = T(y)(x)`, stored as
//! `u[x·dim 𝔤⁽¹⁾ + j]` over the canonical basis of `𝔤⁽¹⁾`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Echelon, Rational, RealMatrix, SparseVec, Subspace};
use crate::liealg::LieAlgebra;

/// A linear Lie algebra acting on `ℝᵈ`, given by independent `d × d`
/// matrices.
#[derive(Clone, Debug)]
pub struct LinearAlgebra {
    dim_v: usize,
    basis: Vec<RealMatrix>,
}

impl LinearAlgebra {
    /// Spans the given matrices; dependent generators are dropped.
    pub fn spanned_by(dim_v: usize, gens: &[RealMatrix]) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.rows() != dim_v || g.cols() != dim_v) {
            return Err(Error::DimensionMismatch {
                expected: dim_v,
                found: bad.rows(),
            });
        }
        let span = Subspace::span_of_sparse(
            gens.iter().map(RealMatrix::to_sparse).collect::<Vec<_>>().iter(),
            dim_v * dim_v,
        );
        Ok(LinearAlgebra {
            dim_v,
            basis: span
                .basis()
                .iter()
                .map(|f| RealMatrix::from_vec(dim_v, dim_v, f.clone()))
                .collect(),
        })
    }

    /// `𝔤|_V` for an algebra preserving `V`.
    pub fn restricted(algebra: &LieAlgebra, v: &Subspace) -> Result<Self> {
        let basis = algebra.restrict_to(v)?;
        Ok(LinearAlgebra { dim_v: v.dim(), basis })
    }

    /// All of `gl(d, ℝ)`.
    pub fn full_gl(d: usize) -> Self {
        let basis = (0..d * d)
            .map(|i| {
                let mut m = RealMatrix::zeros(d, d);
                m[(i / d, i % d)] = Rational::ONE;
                m
            })
            .collect();
        LinearAlgebra { dim_v: d, basis }
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RealMatrix] {
        &self.basis
    }

    pub fn contains(&self, m: &RealMatrix) -> bool {
        let span = Subspace::span_of_sparse(
            self.basis.iter().map(RealMatrix::to_sparse).collect::<Vec<_>>().iter(),
            self.dim_v * self.dim_v,
        );
        span.contains_vector(m.as_slice())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProlongationSpace {
    pub order: u8,
    pub dim_v: usize,
    /// Dimension of the value space: `dim 𝔤` for order 1, `dim 𝔤⁽¹⁾` for
    /// order 2.
    pub value_dim: usize,
    pub space: Subspace,
}

impl ProlongationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// `𝔤⁽¹⁾ = {S: V → 𝔤 : S(x)y = S(y)x}`.
pub fn first_prolongation(g: &LinearAlgebra) -> ProlongationSpace {
    let (d, k) = (g.dim_v(), g.dim());
    let mut ech = Echelon::new(d * k);
    for x in 0..d {
        for y in x + 1..d {
            for i in 0..d {
                // Σₖ s[x,k] A_k[i,y] − s[y,k] A_k[i,x] = 0
                let pairs = g
                    .basis()
                    .iter()
                    .enumerate()
                    .flat_map(|(kk, a)| [(x * k + kk, a[(i, y)].clone()), (y * k + kk, -&a[(i, x)])]);
                ech.insert(SparseVec::from_pairs(pairs));
            }
        }
    }
    ProlongationSpace {
        order: 1,
        dim_v: d,
        value_dim: k,
        space: Subspace::kernel_of(ech),
    }
}

/// `𝔤⁽²⁾ = {T: V → 𝔤⁽¹⁾ : T(x)(y) = T(y)(x)}`, given `𝔤⁽¹⁾`.
pub fn second_prolongation(g: &LinearAlgebra, first: &ProlongationSpace) -> ProlongationSpace {
    let (d, k) = (g.dim_v(), g.dim());
    let p = first.dim();
    if p == 0 {
        return ProlongationSpace {
            order: 2,
            dim_v: d,
            value_dim: 0,
            space: Subspace::zero(0),
        };
    }
    let s = first.space.basis();
    let mut ech = Echelon::new(d * p);
    for x in 0..d {
        for y in x + 1..d {
            for kk in 0..k {
                // Σⱼ u[x,j] S_j[y,k] − u[y,j] S_j[x,k] = 0
                let pairs = s
                    .iter()
                    .enumerate()
                    .flat_map(|(j, sj)| [(x * p + j, sj[y * k + kk].clone()), (y * p + j, -&sj[x * k + kk])]);
                ech.insert(SparseVec::from_pairs(pairs));
            }
        }
    }
    ProlongationSpace {
        order: 2,
        dim_v: d,
        value_dim: p,
        space: Subspace::kernel_of(ech),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_glq, build_h0, build_sp};
    use crate::quatspace::QuaternionicSpace;
    use std::sync::Arc;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Brute-force check of `S(x)y = S(y)x` on a stored element.
    fn is_symmetric(g: &LinearAlgebra, s: &[Rational]) -> bool {
        let (d, k) = (g.dim_v(), g.dim());
        let at = |x: usize| RealMatrix::linear_combination(&s[x * k..(x + 1) * k], g.basis());
        (0..d).all(|x| (0..d).all(|y| at(x).column(y) == at(y).column(x)))
    }

    #[test]
    fn full_gl_matches_symmetric_tensor_counts() {
        for d in 1..=3 {
            let gl = LinearAlgebra::full_gl(d);
            let p1 = first_prolongation(&gl);
            // S²V* ⊗ V and S³V* ⊗ V
            assert_eq!(p1.dim(), binom(d + 1, 2) * d);
            let p2 = second_prolongation(&gl, &p1);
            assert_eq!(p2.dim(), binom(d + 2, 3) * d);
            for s in p1.space.basis() {
                assert!(is_symmetric(&gl, s));
            }
        }
        let gl2 = LinearAlgebra::full_gl(2);
        let p1 = first_prolongation(&gl2);
        assert_eq!(p1.dim(), 6);
        assert_eq!(second_prolongation(&gl2, &p1).dim(), 8);
    }

    #[test]
    fn quaternionic_gl_is_rigid() {
        for r in [1, 2] {
            let sp = Arc::new(QuaternionicSpace::new(r, r, r).unwrap());
            let w = sp.isotropic_subspace_w().unwrap();
            let gl = LinearAlgebra::restricted(&build_glq(&sp).unwrap(), &w).unwrap();
            assert_eq!(gl.dim(), 4 * r * r);
            let p1 = first_prolongation(&gl);
            assert_eq!(p1.dim(), 0);
            assert_eq!(second_prolongation(&gl, &p1).dim(), 0);
        }
    }

    #[test]
    fn sp1_plus_gl1h_on_w() {
        let sp = Arc::new(QuaternionicSpace::new(1, 1, 1).unwrap());
        let w = sp.isotropic_subspace_w().unwrap();
        let g = LinearAlgebra::restricted(&build_h0(&sp).unwrap(), &w).unwrap();
        assert_eq!(g.dim(), 7);
        let p1 = first_prolongation(&g);
        // co(4): the first prolongation is ℝ⁴.
        assert_eq!(p1.dim(), 4);
        assert_eq!(second_prolongation(&g, &p1).dim(), 0);
    }

    #[test]
    fn restriction_requires_invariance() {
        let sp = Arc::new(QuaternionicSpace::new(1, 1, 1).unwrap());
        let w = sp.isotropic_subspace_w().unwrap();
        let full = build_sp(&sp).unwrap();
        assert!(matches!(
            LinearAlgebra::restricted(&full, &w),
            Err(Error::DoesNotPreserve)
        ));
    }

    #[test]
    fn monotone_in_the_algebra() {
        let sp = Arc::new(QuaternionicSpace::new(1, 1, 1).unwrap());
        let w = sp.isotropic_subspace_w().unwrap();
        let small = LinearAlgebra::restricted(&build_glq(&sp).unwrap(), &w).unwrap();
        let mid = LinearAlgebra::restricted(&build_h0(&sp).unwrap(), &w).unwrap();
        let big = LinearAlgebra::full_gl(4);
        let dims: Vec<usize> = [&small, &mid, &big]
            .iter()
            .map(|g| first_prolongation(g).dim())
            .collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{dims:?}");
        assert!(small.basis().iter().all(|m| big.contains(m)));
    }
}
