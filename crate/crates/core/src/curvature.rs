//! Algebraic curvature tensors with values in a matrix Lie algebra.
//!
//! A tensor `R: Λ²ℝⁿ → 𝔤` is stored by its coefficients over the algebra
//! basis on each basis bivector `(a, b)`, `a < b`, in lexicographic order:
//! `R(e_a, e_b) = Σₖ coeffs[biv(a,b)·dim 𝔤 + k]·Bₖ`. Antisymmetry is
//! structural.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Echelon, Rational, RealMatrix, SparseVec, Subspace};
use crate::liealg::{build_algebra, build_h0, LieAlgebra};
use crate::quatspace::QuaternionicSpace;

/// Number of basis bivectors of ℝⁿ.
pub fn bivector_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographic index of `(a, b)`, `a < b`.
pub fn bivector_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Iterates `(a, b)` with `a < b` in index order.
pub fn bivectors(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

#[derive(Clone)]
pub struct CurvatureElement {
    algebra: Arc<LieAlgebra>,
    coeffs: Vec<Rational>,
}

impl fmt::Debug for CurvatureElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nnz = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        f.debug_struct("CurvatureElement")
            .field("algebra", &self.algebra.name())
            .field("nonzero_coeffs", &nnz)
            .finish()
    }
}

impl PartialEq for CurvatureElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_span(&other.algebra)
            && self.algebra.dim() == other.algebra.dim()
            && self.coeffs == other.coeffs
    }
}

impl CurvatureElement {
    pub fn from_coeffs(algebra: Arc<LieAlgebra>, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = bivector_count(algebra.space().real_dim()) * algebra.dim();
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(CurvatureElement { algebra, coeffs })
    }

    pub fn zero(algebra: Arc<LieAlgebra>) -> Self {
        let len = bivector_count(algebra.space().real_dim()) * algebra.dim();
        CurvatureElement {
            algebra,
            coeffs: vec![Rational::ZERO; len],
        }
    }

    /// Expresses the matrix-valued tensor `values[biv]` over `algebra`.
    pub fn from_values(algebra: Arc<LieAlgebra>, values: &[RealMatrix]) -> Result<Self> {
        let n = algebra.space().real_dim();
        if values.len() != bivector_count(n) {
            return Err(Error::DimensionMismatch {
                expected: bivector_count(n),
                found: values.len(),
            });
        }
        let mut coeffs = Vec::with_capacity(values.len() * algebra.dim());
        for v in values {
            let c = algebra
                .coordinates(v)
                .ok_or_else(|| Error::NotInAlgebra(algebra.name().to_string()))?;
            coeffs.extend(c);
        }
        Ok(CurvatureElement { algebra, coeffs })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn space(&self) -> &QuaternionicSpace {
        self.algebra.space()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn n(&self) -> usize {
        self.space().real_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Algebra coordinates of `R(e_a, e_b)`, `a < b`.
    pub fn bivector_coeffs(&self, a: usize, b: usize) -> &[Rational] {
        let d = self.algebra.dim();
        let i = bivector_index(self.n(), a, b);
        &self.coeffs[i * d..(i + 1) * d]
    }

    /// `R(e_a, e_b)` as a matrix, for any `a, b`.
    pub fn value(&self, a: usize, b: usize) -> RealMatrix {
        let n = self.n();
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => RealMatrix::zeros(n, n),
            std::cmp::Ordering::Less => self.algebra.element(self.bivector_coeffs(a, b)),
            std::cmp::Ordering::Greater => -&self.algebra.element(self.bivector_coeffs(b, a)),
        }
    }

    /// All `R(e_a, e_b)`, `a < b`, in bivector order.
    pub fn values(&self) -> Vec<RealMatrix> {
        bivectors(self.n()).map(|(a, b)| self.value(a, b)).collect()
    }

    pub fn scale(&self, f: &Rational) -> Self {
        CurvatureElement {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, other: &CurvatureElement) -> Result<Self> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        Ok(CurvatureElement {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Re-expresses the tensor over a larger algebra.
    pub fn embed(&self, target: &Arc<LieAlgebra>) -> Result<CurvatureElement> {
        let change: Vec<Vec<Rational>> = self
            .algebra
            .basis()
            .iter()
            .map(|b| {
                target
                    .coordinates(b)
                    .ok_or_else(|| Error::NotInAlgebra(target.name().to_string()))
            })
            .collect::<Result<_>>()?;
        let (d, e) = (self.algebra.dim(), target.dim());
        let nb = bivector_count(self.n());
        let mut out = vec![Rational::ZERO; nb * e];
        for biv in 0..nb {
            for (k, row) in change.iter().enumerate() {
                let c = &self.coeffs[biv * d + k];
                if c.is_zero() {
                    continue;
                }
                for (j, t) in row.iter().enumerate() {
                    if !t.is_zero() {
                        out[biv * e + j] += &(c * t);
                    }
                }
            }
        }
        CurvatureElement::from_coeffs(target.clone(), out)
    }

    /// First triple `a < b < c` where `R(a,b)c + R(b,c)a + R(c,a)b ≠ 0`.
    pub fn bianchi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        let vals = self.values();
        let v = |a: usize, b: usize| &vals[bivector_index(n, a, b)];
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let (ab, bc, ac) = (v(a, b), v(b, c), v(a, c));
                    for d in 0..n {
                        let s = &(&ab[(d, c)] + &bc[(d, a)]) - &ac[(d, b)];
                        if !s.is_zero() {
                            return Some((a, b, c));
                        }
                    }
                }
            }
        }
        None
    }

    /// First quadruple violating `η(R(X,Y)Z,U) = η(R(Z,U)X,Y)`.
    pub fn pair_symmetry_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.n();
        let eta = self.space().eta();
        // lowered[biv][(d, c)] = η(R(e_a,e_b)e_c, e_d)
        let lowered: Vec<RealMatrix> = self.values().iter().map(|m| eta * m).collect();
        let low = |a: usize, b: usize, c: usize, d: usize| -> Rational {
            match a.cmp(&b) {
                std::cmp::Ordering::Equal => Rational::ZERO,
                std::cmp::Ordering::Less => lowered[bivector_index(n, a, b)][(d, c)].clone(),
                std::cmp::Ordering::Greater => -&lowered[bivector_index(n, b, a)][(d, c)],
            }
        };
        for a in 0..n {
            for b in a + 1..n {
                for c in 0..n {
                    for d in c + 1..n {
                        if low(a, b, c, d) != low(c, d, a, b) {
                            return Some((a, b, c, d));
                        }
                    }
                }
            }
        }
        None
    }

    /// `Ric(Y, Z) = tr(X ↦ R(X,Y)Z)`.
    pub fn ricci(&self) -> RealMatrix {
        let n = self.n();
        let mut ric = RealMatrix::zeros(n, n);
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let m = self.value(x, y);
                for z in 0..n {
                    let v = &m[(x, z)];
                    if !v.is_zero() {
                        ric[(y, z)] += v;
                    }
                }
            }
        }
        ric
    }

    /// Trace of the Ricci form raised by `η⁻¹`.
    pub fn scalar(&self) -> Rational {
        let eta_inv = self.space().eta().inverse().expect("η is non-degenerate");
        (&eta_inv * &self.ricci()).trace()
    }

    /// `(A·R)(X,Y) = [A, R(X,Y)] − R(AX,Y) − R(X,AY)` as raw matrices, in
    /// bivector order.
    pub fn act_values(&self, a: &RealMatrix) -> Vec<RealMatrix> {
        let n = self.n();
        let vals: Vec<RealMatrix> = (0..n * n).map(|i| self.value(i / n, i % n)).collect();
        let v = |x: usize, y: usize| &vals[x * n + y];
        bivectors(n)
            .map(|(x, y)| {
                let mut out = a.commutator(v(x, y));
                for c in 0..n {
                    let acx = &a[(c, x)];
                    if !acx.is_zero() {
                        out = &out - &v(c, y).scale(acx);
                    }
                    let acy = &a[(c, y)];
                    if !acy.is_zero() {
                        out = &out - &v(x, c).scale(acy);
                    }
                }
                out
            })
            .collect()
    }

    /// The infinitesimal action of `a` on the tensor, expressed over the same
    /// algebra.
    pub fn act(&self, a: &RealMatrix) -> Result<CurvatureElement> {
        CurvatureElement::from_values(self.algebra.clone(), &self.act_values(a))
    }
}

/// Sign convention for `X ∧ Y` as an endomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WedgeConvention {
    /// `(X∧Y)Z = η(X,Z)Y − η(Y,Z)X`
    PlusXz,
    /// `(X∧Y)Z = η(Y,Z)X − η(X,Z)Y`
    PlusYz,
}

/// Convention under which `R₀` satisfies the first Bianchi identity.
pub const R0_CONVENTION: WedgeConvention = WedgeConvention::PlusYz;

/// Matrix of `x ∧ y` under the given convention.
pub fn wedge(eta: &RealMatrix, x: &[Rational], y: &[Rational], conv: WedgeConvention) -> RealMatrix {
    let n = x.len();
    let ex = eta.mul_vec(x);
    let ey = eta.mul_vec(y);
    // (u ⊗ ηv)Z = η(v,Z) u
    let outer = |u: &[Rational], ev: &[Rational]| {
        let mut m = RealMatrix::zeros(n, n);
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !ev[j].is_zero() {
                    m[(i, j)] = &u[i] * &ev[j];
                }
            }
        }
        m
    };
    match conv {
        WedgeConvention::PlusXz => &outer(y, &ex) - &outer(x, &ey),
        WedgeConvention::PlusYz => &outer(x, &ey) - &outer(y, &ex),
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; n];
    v[i] = Rational::ONE;
    v
}

/// `R₀(X,Y) = ½ Σ_α η(X,I_αY) I_α + ¼(X∧Y + Σ_α I_αX ∧ I_αY)` on basis
/// bivectors, as raw matrices.
pub fn r0_values(space: &QuaternionicSpace, conv: WedgeConvention) -> Vec<RealMatrix> {
    let n = space.real_dim();
    let eta = space.eta();
    let half = Rational::new(1, 2);
    let quarter = Rational::new(1, 4);
    let structure = space.structure();
    let lowered: Vec<RealMatrix> = structure.iter().map(|i| eta * *i).collect();
    bivectors(n)
        .map(|(a, b)| {
            let (x, y) = (unit(n, a), unit(n, b));
            let mut m = wedge(eta, &x, &y, conv);
            for i in structure {
                m = &m + &wedge(eta, &i.column(a), &i.column(b), conv);
            }
            let mut out = m.scale(&quarter);
            for (i, low) in structure.iter().zip(&lowered) {
                let c = &low[(a, b)];
                if !c.is_zero() {
                    out = &out + &i.scale(&(c * &half));
                }
            }
            out
        })
        .collect()
}

/// `R₀` over `sp(1) ⊕ sp(r,s)`.
pub fn build_r0(space: &Arc<QuaternionicSpace>) -> Result<CurvatureElement> {
    build_r0_with(space, R0_CONVENTION)
}

pub fn build_r0_with(space: &Arc<QuaternionicSpace>, conv: WedgeConvention) -> Result<CurvatureElement> {
    let algebra = Arc::new(build_algebra("sp1+sp", space)?);
    CurvatureElement::from_values(algebra, &r0_values(space, conv))
}

/// `𝓡(𝔤)`: the kernel of the first Bianchi map on `Hom(Λ²ℝⁿ, 𝔤)`.
#[derive(Clone)]
pub struct CurvatureSpace {
    algebra: Arc<LieAlgebra>,
    kernel: Subspace,
}

impl fmt::Debug for CurvatureSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CurvatureSpace")
            .field("algebra", &self.algebra.name())
            .field("dim", &self.dim())
            .finish()
    }
}

/// JSON form `{algebra, dim, basis}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurvatureSpaceRecord {
    pub algebra: String,
    pub dim: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl CurvatureSpace {
    /// Rebuilds a space from stored coefficient vectors, checking shape,
    /// canonical form and the Bianchi identity of every vector.
    pub fn from_basis(algebra: Arc<LieAlgebra>, basis: &[Vec<Rational>]) -> Result<Self> {
        let len = bivector_count(algebra.space().real_dim()) * algebra.dim();
        let kernel = Subspace::span_of(basis, len)?;
        if kernel.basis() != basis {
            return Err(Error::Parse("curvature basis is not canonical".into()));
        }
        let space = CurvatureSpace { algebra, kernel };
        if space.elements().iter().any(|r| r.bianchi_violation().is_some()) {
            return Err(Error::Parse("stored curvature basis violates Bianchi".into()));
        }
        Ok(space)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    /// The space as a subspace of the coefficient space `ℝ^{(n choose 2)·dim 𝔤}`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn element(&self, i: usize) -> CurvatureElement {
        CurvatureElement {
            algebra: self.algebra.clone(),
            coeffs: self.kernel.basis()[i].clone(),
        }
    }

    pub fn elements(&self) -> Vec<CurvatureElement> {
        (0..self.dim()).map(|i| self.element(i)).collect()
    }

    pub fn contains(&self, r: &CurvatureElement) -> bool {
        r.coeffs.len() == self.kernel.ambient_dim() && self.kernel.contains_vector(&r.coeffs)
    }

    /// The space re-expressed inside the coefficient space of a larger
    /// algebra.
    pub fn embed(&self, target: &Arc<LieAlgebra>) -> Result<Subspace> {
        let vecs: Vec<Vec<Rational>> = self
            .elements()
            .iter()
            .map(|r| r.embed(target).map(|e| e.coeffs))
            .collect::<Result<_>>()?;
        let len = bivector_count(target.space().real_dim()) * target.dim();
        Subspace::span_of(&vecs, len)
    }

    pub fn to_record(&self) -> CurvatureSpaceRecord {
        CurvatureSpaceRecord {
            algebra: self.algebra.name().to_string(),
            dim: self.dim(),
            basis: self.kernel.basis().to_vec(),
        }
    }
}

/// Computes `𝓡(𝔤)` by streamed elimination of the first Bianchi system:
/// for each triple `a < b < c` and output index `d`,
/// `R(a,b)[d,c] + R(b,c)[d,a] − R(a,c)[d,b] = 0`.
pub fn bianchi_kernel(algebra: &Arc<LieAlgebra>) -> CurvatureSpace {
    let n = algebra.space().real_dim();
    let dim = algebra.dim();
    // columns[k][c] = nonzero entries (d, B_k[d,c]) of column c of B_k
    let columns: Vec<Vec<Vec<(usize, Rational)>>> = algebra
        .basis()
        .iter()
        .map(|b| {
            (0..n)
                .map(|c| {
                    (0..n)
                        .filter(|d| !b[(*d, c)].is_zero())
                        .map(|d| (d, b[(d, c)].clone()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let unknowns = bivector_count(n) * dim;
    let mut ech = Echelon::new(unknowns);
    let mut rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                rows.clear();
                let terms = [
                    (bivector_index(n, a, b), c, false),
                    (bivector_index(n, b, c), a, false),
                    (bivector_index(n, a, c), b, true),
                ];
                for (biv, col, negate) in terms {
                    for (k, cols) in columns.iter().enumerate() {
                        for (d, v) in &cols[col] {
                            let v = if negate { -v } else { v.clone() };
                            rows.entry(*d).or_default().push((biv * dim + k, v));
                        }
                    }
                }
                for (_, pairs) in std::mem::take(&mut rows) {
                    ech.insert(SparseVec::from_pairs(pairs));
                }
            }
        }
    }
    CurvatureSpace {
        algebra: algebra.clone(),
        kernel: Subspace::kernel_of(ech),
    }
}

/// The generator of the one-dimensional `𝓡(𝔥₀)` on the split space, with
/// leading coefficient 1.
pub fn build_r1(space: &Arc<QuaternionicSpace>) -> Result<CurvatureElement> {
    let h0 = Arc::new(build_h0(space)?);
    r1_from(&bianchi_kernel(&h0))
}

/// `R₁` from an already computed `𝓡(𝔥₀)`.
pub fn r1_from(rh0: &CurvatureSpace) -> Result<CurvatureElement> {
    if rh0.dim() != 1 {
        return Err(Error::UnexpectedCurvatureDim {
            expected: 1,
            found: rh0.dim(),
        });
    }
    // The canonical basis vector already has leading entry 1.
    Ok(rh0.element(0))
}

/// Outcome of the degenerate-pair vanishing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum DegenerateCheck {
    Pass {
        elements: usize,
    },
    Vacuous,
    /// `R(e_a, e_b)e_c ≠ 0` for basis element `element`.
    Fail {
        element: usize,
        witness: (usize, usize, usize),
    },
}

/// Checks `R(p, X) = 0` for `p ∈ W, X ∈ E` and `R(X, Y)p = 0` for
/// `X, Y ∈ E, p ∈ W` on each given tensor.
pub fn restrict_check_degenerate(elements: &[CurvatureElement]) -> DegenerateCheck {
    let Some(first) = elements.first() else {
        return DegenerateCheck::Vacuous;
    };
    let space = first.space();
    let (w, e) = (space.w_range(), space.e_range());
    if w.is_empty() || e.is_empty() {
        return DegenerateCheck::Vacuous;
    }
    let n = space.real_dim();
    for (idx, r) in elements.iter().enumerate() {
        for p in w.clone() {
            for x in e.clone() {
                let m = r.value(p, x);
                for c in 0..n {
                    if (0..n).any(|d| !m[(d, c)].is_zero()) {
                        return DegenerateCheck::Fail {
                            element: idx,
                            witness: (p, x, c),
                        };
                    }
                }
            }
        }
        for x in e.clone() {
            for y in e.clone().filter(|y| *y > x) {
                let m = r.value(x, y);
                for p in w.clone() {
                    if (0..n).any(|d| !m[(d, p)].is_zero()) {
                        return DegenerateCheck::Fail {
                            element: idx,
                            witness: (x, y, p),
                        };
                    }
                }
            }
        }
    }
    DegenerateCheck::Pass {
        elements: elements.len(),
    }
}

/// Candidate values of `∇R`: linear maps `T: ℝⁿ → 𝓡(𝔤)` with
/// `T(X)(Y,Z) + T(Y)(Z,X) + T(Z)(X,Y) = 0`, as a subspace of
/// `ℝ^{n·dim 𝓡(𝔤)}` indexed `x·dim 𝓡 + j`.
pub fn derivative_space(rspace: &CurvatureSpace) -> Subspace {
    let n = rspace.algebra().space().real_dim();
    let dr = rspace.dim();
    let dg = rspace.algebra().dim();
    let unknowns = n * dr;
    if dr == 0 {
        return Subspace::zero(0);
    }
    let elements = rspace.elements();
    let mut ech = Echelon::new(unknowns);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                // T(a)(b,c) + T(b)(c,a) + T(c)(a,b), coordinate k of 𝔤
                let terms = [(a, b, c, false), (b, a, c, true), (c, a, b, false)];
                let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dg];
                for (x, y, z, negate) in terms {
                    for (j, r) in elements.iter().enumerate() {
                        for (k, v) in r.bivector_coeffs(y, z).iter().enumerate() {
                            if !v.is_zero() {
                                rows[k].push((x * dr + j, if negate { -v } else { v.clone() }));
                            }
                        }
                    }
                }
                for pairs in rows {
                    ech.insert(SparseVec::from_pairs(pairs));
                }
            }
        }
    }
    Subspace::kernel_of(ech)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(r: usize, s: usize, t: usize) -> Arc<QuaternionicSpace> {
        Arc::new(QuaternionicSpace::new(r, s, t).unwrap())
    }

    fn alg(name: &str, sp: &Arc<QuaternionicSpace>) -> Arc<LieAlgebra> {
        Arc::new(build_algebra(name, sp).unwrap())
    }

    #[test]
    fn bivector_indexing() {
        let n = 5;
        for (i, (a, b)) in bivectors(n).enumerate() {
            assert_eq!(bivector_index(n, a, b), i);
        }
        assert_eq!(bivectors(n).count(), bivector_count(n));
    }

    #[test]
    fn r0_convention_is_frozen() {
        let sp = space(1, 1, 1);
        let r0 = build_r0(&sp).unwrap();
        assert_eq!(r0.bianchi_violation(), None);
        assert_eq!(r0.pair_symmetry_violation(), None);
        // The other sign still lands in the algebra but breaks Bianchi.
        let bad = build_r0_with(&sp, WedgeConvention::PlusXz).unwrap();
        assert!(bad.bianchi_violation().is_some());
    }

    #[test]
    fn r0_ricci_is_proportional_to_eta() {
        for (r, s, t) in [(1, 1, 1), (1, 2, 1), (1, 0, 0)] {
            let sp = space(r, s, t);
            let r0 = build_r0(&sp).unwrap();
            let ric = r0.ricci();
            let pos = sp.eta().as_slice().iter().position(|v| !v.is_zero()).unwrap();
            let c = &ric.as_slice()[pos] / &sp.eta().as_slice()[pos];
            assert_eq!(ric, sp.eta().scale(&c));
            // Ric = (2 + N/4) η with N the real dimension.
            let n = sp.real_dim() as i64;
            assert_eq!(c, Rational::new(8 + n, 4));
        }
    }

    #[test]
    fn r0_scalar_value() {
        // scal(R₀) = N(N+8)/4 = 4n(n+2), n = r + s.
        let r0 = build_r0(&space(1, 1, 1)).unwrap();
        assert_eq!(r0.scalar(), Rational::from_int(32));
        let r0 = build_r0(&space(1, 2, 1)).unwrap();
        assert_eq!(r0.scalar(), Rational::from_int(60));
    }

    #[test]
    fn zero_element_basics() {
        let sp = space(1, 1, 1);
        let z = CurvatureElement::zero(alg("sp1+sp", &sp));
        assert!(z.ricci().is_zero());
        assert!(z.act(&sp.structure()[0].clone()).unwrap().is_zero());
        let r0 = build_r0(&sp).unwrap();
        assert!(r0.act(&RealMatrix::zeros(8, 8)).unwrap().is_zero());
    }

    #[test]
    fn r0_is_invariant() {
        let sp = space(1, 1, 1);
        let r0 = build_r0(&sp).unwrap();
        for a in r0.algebra().basis() {
            assert!(r0.act(a).unwrap().is_zero());
        }
    }

    #[test]
    fn small_kernels() {
        let sp = space(1, 1, 1);
        assert_eq!(bianchi_kernel(&alg("glq", &sp)).dim(), 0);
        let rh0 = bianchi_kernel(&alg("h0", &sp));
        assert_eq!(rh0.dim(), 1);
        let r1 = r1_from(&rh0).unwrap();
        let first = r1.coeffs().iter().find(|c| !c.is_zero()).unwrap();
        assert!(first.is_one());
    }

    #[test]
    fn degenerate_check_negative_control() {
        let sp = space(1, 2, 1);
        let a = alg("sp1+sp_w", &sp);
        let n = sp.real_dim();
        // Put a nonzero value on a (W, E) bivector.
        let mut coeffs = vec![Rational::ZERO; bivector_count(n) * a.dim()];
        let biv = bivector_index(n, 0, sp.e_range().start);
        coeffs[biv * a.dim() + 3] = Rational::ONE;
        let bad = CurvatureElement::from_coeffs(a.clone(), coeffs).unwrap();
        assert!(bad.bianchi_violation().is_some());
        match restrict_check_degenerate(&[bad]) {
            DegenerateCheck::Fail { element, witness } => {
                assert_eq!(element, 0);
                assert_eq!((witness.0, witness.1), (0, sp.e_range().start));
            }
            other => panic!("expected failure, got {other:?}"),
        }
        assert_eq!(restrict_check_degenerate(&[]), DegenerateCheck::Vacuous);
        let split = space(1, 1, 1);
        let z = CurvatureElement::zero(alg("sp1+sp_w", &split));
        assert_eq!(restrict_check_degenerate(&[z]), DegenerateCheck::Vacuous);
    }

    #[test]
    fn derivative_space_of_trivial_curvature() {
        let sp = space(1, 1, 1);
        let rg = bianchi_kernel(&alg("glq", &sp));
        assert!(derivative_space(&rg).is_zero());
    }
}
