use serde::{Deserialize, Serialize};

use super::matrix::RealMatrix;
use super::rational::Rational;
use super::sparse::{Echelon, SparseVec};
use crate::error::{Error, Result};

/// A linear subspace of ℚⁿ stored by its canonical (RREF) basis.
///
/// Because the basis is canonical, two subspaces are equal exactly when
/// their stored bases are entrywise equal.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSubspace")]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

#[derive(Deserialize)]
struct RawSubspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl TryFrom<RawSubspace> for Subspace {
    type Error = Error;

    fn try_from(raw: RawSubspace) -> Result<Self> {
        let canon = Subspace::span_of(&raw.basis, raw.ambient_dim)?;
        if canon.basis != raw.basis {
            return Err(Error::Parse("subspace basis is not in canonical form".into()));
        }
        Ok(canon)
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Rational::ZERO; ambient_dim];
                v[i] = Rational::ONE;
                v
            })
            .collect();
        Subspace {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span_of(vectors: &[Vec<Rational>], ambient_dim: usize) -> Result<Self> {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            ech.insert(SparseVec::from_dense(v));
        }
        Ok(Self::from_echelon(ech))
    }

    pub fn span_of_sparse<'a, I>(vectors: I, ambient_dim: usize) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            ech.insert(v.clone());
        }
        Self::from_echelon(ech)
    }

    pub fn from_echelon(ech: Echelon) -> Self {
        let n = ech.ncols();
        let rref = ech.into_rref();
        Subspace {
            ambient_dim: n,
            basis: rref.rows.iter().map(|r| r.to_dense(n)).collect(),
            pivots: rref.pivots,
        }
    }

    /// Kernel of `m`.
    pub fn nullspace(m: &RealMatrix) -> Self {
        let mut ech = Echelon::new(m.cols());
        for i in 0..m.rows() {
            ech.insert(SparseVec::from_dense(m.row(i)));
        }
        Self::kernel_of(ech)
    }

    /// Kernel of the row space accumulated in `ech`.
    pub fn kernel_of(ech: Echelon) -> Self {
        let n = ech.ncols();
        let kernel = ech.into_rref().kernel_vectors();
        Self::span_of_sparse(kernel.iter(), n)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Rational> = self.pivots.iter().map(|p| v[*p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r = r.sub_mul(c, x);
                }
            }
        }
        residual.iter().all(Rational::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis == other.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let all: Vec<Vec<Rational>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span_of(&all, self.ambient_dim)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // x = Σ aᵢ uᵢ = Σ bⱼ vⱼ: solve [U^T | -V^T] (a, b) = 0.
        let (p, q) = (self.dim(), other.dim());
        let n = self.ambient_dim;
        let mut m = RealMatrix::zeros(n, p + q);
        for (i, u) in self.basis.iter().enumerate() {
            for k in 0..n {
                m[(k, i)] = u[k].clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for k in 0..n {
                m[(k, p + j)] = -&v[k];
            }
        }
        let ker = Subspace::nullspace(&m);
        let vecs: Vec<Vec<Rational>> = ker
            .basis
            .iter()
            .map(|ab| {
                let mut x = vec![Rational::ZERO; n];
                for (a, u) in ab[..p].iter().zip(&self.basis) {
                    for (xk, uk) in x.iter_mut().zip(u) {
                        *xk += &(a * uk);
                    }
                }
                x
            })
            .collect();
        Subspace::span_of(&vecs, n)
    }
}

/// Solves for coordinates against an arbitrary (non-canonical) linearly
/// independent family.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    ambient_dim: usize,
    span: Subspace,
    /// `transform[j]` expresses canonical basis vector `j` in the family.
    transform: Vec<Vec<Rational>>,
}

impl BasisSolver {
    pub fn new(family: &[Vec<Rational>], ambient_dim: usize) -> Result<Self> {
        let k = family.len();
        // Row-reduce [family | I_k]; the right block of the top rows is the
        // change of basis.
        let width = ambient_dim + k;
        let mut ech = Echelon::new(width);
        for (i, v) in family.iter().enumerate() {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            let mut pairs: Vec<(usize, Rational)> = v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(c, x)| (c, x.clone()))
                .collect();
            pairs.push((ambient_dim + i, Rational::ONE));
            ech.insert(SparseVec::from_pairs(pairs));
        }
        let rref = ech.into_rref();
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        let mut transform = Vec::new();
        for (row, p) in rref.rows.iter().zip(&rref.pivots) {
            if *p >= ambient_dim {
                return Err(Error::LinearlyDependent);
            }
            let dense = row.to_dense(width);
            basis.push(dense[..ambient_dim].to_vec());
            transform.push(dense[ambient_dim..].to_vec());
            pivots.push(*p);
        }
        Ok(BasisSolver {
            ambient_dim,
            span: Subspace {
                ambient_dim,
                basis,
                pivots,
            },
            transform,
        })
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn len(&self) -> usize {
        self.transform.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transform.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Coefficients `c` with `v = Σ cᵢ familyᵢ`, or `None` if `v` is outside
    /// the span.
    pub fn solve(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let y = self.span.coordinates(v)?;
        let k = self.transform.len();
        let mut c = vec![Rational::ZERO; k];
        for (yj, tj) in y.iter().zip(&self.transform) {
            if yj.is_zero() {
                continue;
            }
            for (ci, t) in c.iter_mut().zip(tj) {
                if !t.is_zero() {
                    *ci += &(yj * t);
                }
            }
        }
        Some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|x| Rational::from_int(*x)).collect()
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Subspace::nullspace(&RealMatrix::identity(3)).dim(), 0);
        assert_eq!(Subspace::nullspace(&RealMatrix::zeros(2, 5)).dim(), 5);
        let k = Subspace::nullspace(&RealMatrix::from_ints(&[&[1, 1]]));
        assert_eq!(k.basis(), &[v(&[1, -1])]);
    }

    #[test]
    fn span_examples() {
        assert!(Subspace::span_of(&[], 4).unwrap().is_zero());
        assert_eq!(Subspace::span_of(&[v(&[1, 0]), v(&[2, 0])], 2).unwrap().dim(), 1);
        assert_eq!(
            Subspace::span_of(&[v(&[1, 0]), v(&[0, 1])], 2).unwrap(),
            Subspace::full(2)
        );
        assert!(Subspace::span_of(&[v(&[1])], 2).is_err());
    }

    #[test]
    fn equality_and_containment() {
        let a = Subspace::span_of(&[v(&[1, 0])], 2).unwrap();
        let b = Subspace::span_of(&[v(&[2, 0])], 2).unwrap();
        assert!(a.equals(&b).unwrap());
        let full = Subspace::full(2);
        assert!(full.contains(&a).unwrap());
        assert!(!full.equals(&a).unwrap());
        assert!(Subspace::zero(3).equals(&Subspace::zero(3)).unwrap());
        let err = a.equals(&Subspace::zero(3)).unwrap_err();
        assert_eq!(err.to_string(), "ambient dimension mismatch (2 vs 3)");
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span_of(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let b = Subspace::span_of(&[v(&[0, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.basis(), &[v(&[0, 1, 0])]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(3));
    }

    #[test]
    fn basis_solver_roundtrip() {
        let fam = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let s = BasisSolver::new(&fam, 3).unwrap();
        assert_eq!(s.solve(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(s.solve(&v(&[1, 0, 0])), None);
        assert!(matches!(
            BasisSolver::new(&[v(&[1, 2]), v(&[2, 4])], 2),
            Err(Error::LinearlyDependent)
        ));
    }
}
