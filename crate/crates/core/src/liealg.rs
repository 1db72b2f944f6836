//! Matrix Lie algebras inside `gl(4m, ℝ)`: `sp(r,s)`, its parabolic
//! subalgebra `sp(r,s)_W`, `sp(1)`, the block algebra `gl(t,ℍ)` and their
//! direct sums.
//!
//! Basis enumeration order is fixed. Block matrices are listed as
//! `C, B, A, X` (and then `D, Y` for the full `sp(r,s)`), each block in
//! row-major entry order, each entry in quaternion component order
//! `1, i, j, k`. So `sp(r,s)_W` is a prefix of `sp(r,s)`.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::{BasisSolver, Echelon, Rational, RealMatrix, SparseVec, Subspace};
use crate::quatspace::{QuatMatrix, Quaternion, QuaternionicSpace};

/// Names accepted by [`build_algebra`].
pub const REGISTRY: [&str; 7] = ["sp", "sp_w", "sp1", "glq", "h0", "sp1+sp", "sp1+sp_w"];

#[derive(Clone)]
pub struct LieAlgebra {
    name: String,
    space: Arc<QuaternionicSpace>,
    basis: Vec<RealMatrix>,
    solver: BasisSolver,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("r", &self.space.r())
            .field("s", &self.space.s())
            .field("t", &self.space.t())
            .finish()
    }
}

impl Serialize for LieAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LieAlgebra", 3)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

fn flatten(m: &RealMatrix) -> Vec<Rational> {
    m.as_slice().to_vec()
}

impl LieAlgebra {
    /// Wraps a linearly independent family of `n × n` matrices. Closure is
    /// not checked here; see [`LieAlgebra::closure_violation`].
    pub fn from_basis(name: impl Into<String>, space: Arc<QuaternionicSpace>, basis: Vec<RealMatrix>) -> Result<Self> {
        let n = space.real_dim();
        if let Some(bad) = basis.iter().find(|b| b.rows() != n || b.cols() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.rows(),
            });
        }
        let flat: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
        let solver = BasisSolver::new(&flat, n * n)?;
        Ok(LieAlgebra {
            name: name.into(),
            space,
            basis,
            solver,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &Arc<QuaternionicSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RealMatrix] {
        &self.basis
    }

    /// The algebra as a subspace of `ℝ^{n²}` (row-major flattening).
    pub fn span(&self) -> &Subspace {
        self.solver.span()
    }

    /// Coordinates of `m` over the basis, or `None` if `m ∉ 𝔤`.
    pub fn coordinates(&self, m: &RealMatrix) -> Option<Vec<Rational>> {
        if m.rows() != self.space.real_dim() || m.cols() != self.space.real_dim() {
            return None;
        }
        self.solver.solve(m.as_slice())
    }

    pub fn contains(&self, m: &RealMatrix) -> bool {
        self.coordinates(m).is_some()
    }

    /// `Σ cₖ Bₖ`.
    pub fn element(&self, coeffs: &[Rational]) -> RealMatrix {
        RealMatrix::linear_combination(coeffs, &self.basis)
    }

    /// First basis pair whose bracket leaves the span.
    pub fn closure_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if !self.contains(&self.basis[i].commutator(&self.basis[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Whether every basis element satisfies `ηB + Bᵗη = 0`.
    pub fn is_metric_compatible(&self) -> bool {
        let eta = self.space.eta();
        self.basis
            .iter()
            .all(|b| (&(eta * b) + &(&b.transpose() * eta)).is_zero())
    }

    /// Span equality inside `gl(n, ℝ)`.
    pub fn same_span(&self, other: &LieAlgebra) -> bool {
        self.span() == other.span()
    }

    /// `self ⊆ other` as subspaces of `gl(n, ℝ)`.
    pub fn is_subalgebra_of(&self, other: &LieAlgebra) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// True iff `B·v ∈ V` for every basis element `B` and basis vector `v`.
    pub fn preserves_subspace(&self, v: &Subspace) -> Result<bool> {
        if v.ambient_dim() != self.space.real_dim() {
            return Err(Error::AmbientMismatch(v.ambient_dim(), self.space.real_dim()));
        }
        Ok(self
            .basis
            .iter()
            .all(|b| v.basis().iter().all(|x| v.contains_vector(&b.mul_vec(x)))))
    }

    /// `{A ∈ 𝔤 : A·V ⊆ V}`, solved as a linear condition on coordinates.
    pub fn stabilizer(&self, v: &Subspace, name: impl Into<String>) -> Result<LieAlgebra> {
        let n = self.space.real_dim();
        if v.ambient_dim() != n {
            return Err(Error::AmbientMismatch(v.ambient_dim(), n));
        }
        // Rows of `ann` span the annihilator of V under the dot product.
        let vmat = RealMatrix::from_rows(if v.is_zero() {
            vec![vec![Rational::ZERO; n]]
        } else {
            v.basis().to_vec()
        });
        let ann = Subspace::nullspace(&vmat);
        let d = self.dim();
        let mut ech = Echelon::new(d);
        for x in v.basis() {
            let images: Vec<Vec<Rational>> = self.basis.iter().map(|b| b.mul_vec(x)).collect();
            for a in ann.basis() {
                let row = images
                    .iter()
                    .enumerate()
                    .map(|(k, img)| (k, a.iter().zip(img).map(|(p, q)| p * q).sum::<Rational>()));
                ech.insert(SparseVec::from_pairs(row));
            }
        }
        let coeffs = Subspace::kernel_of(ech);
        let basis = coeffs.basis().iter().map(|c| self.element(c)).collect();
        LieAlgebra::from_basis(name, self.space.clone(), basis)
    }

    /// Matrices of the basis restricted to an invariant subspace `V`,
    /// written in the canonical basis of `V`, reduced to a linearly
    /// independent spanning family of `𝔤|_V`.
    pub fn restrict_to(&self, v: &Subspace) -> Result<Vec<RealMatrix>> {
        if !self.preserves_subspace(v)? {
            return Err(Error::DoesNotPreserve);
        }
        let d = v.dim();
        let mut ech = Echelon::new(d * d);
        for b in &self.basis {
            let mut m = RealMatrix::zeros(d, d);
            for (j, x) in v.basis().iter().enumerate() {
                let c = v.coordinates(&b.mul_vec(x)).expect("V is invariant");
                for (i, ci) in c.into_iter().enumerate() {
                    m[(i, j)] = ci;
                }
            }
            ech.insert(m.to_sparse());
        }
        let span = Subspace::from_echelon(ech);
        Ok(span
            .basis()
            .iter()
            .map(|f| RealMatrix::from_vec(d, d, f.clone()))
            .collect())
    }
}

/// `a ⊕ b`: concatenated bases, after checking the summands share the
/// space, intersect trivially and commute elementwise.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra> {
    let (sa, sb) = (a.space(), b.space());
    if (sa.r(), sa.s(), sa.t()) != (sb.r(), sb.s(), sb.t()) {
        return Err(Error::NotDirectSum("summands live on different spaces".into()));
    }
    for (i, x) in a.basis().iter().enumerate() {
        for (j, y) in b.basis().iter().enumerate() {
            if !x.commutator(y).is_zero() {
                return Err(Error::NotDirectSum(format!(
                    "basis elements {i} of {} and {j} of {} do not commute",
                    a.name(),
                    b.name()
                )));
            }
        }
    }
    let basis: Vec<RealMatrix> = a.basis().iter().chain(b.basis()).cloned().collect();
    LieAlgebra::from_basis(format!("{}+{}", a.name(), b.name()), a.space.clone(), basis)
        .map_err(|_| Error::NotDirectSum("summands intersect nontrivially".into()))
}

/// Skew-Hermitian `t × t` quaternionic matrices in enumeration order:
/// entries `(i, j)` with `i ≤ j` row-major; diagonal entries take the
/// imaginary units, off-diagonal entries all four components.
fn skew_hermitian_basis(t: usize) -> Vec<Vec<(usize, usize, Quaternion)>> {
    let mut out = Vec::new();
    for i in 0..t {
        for j in i..t {
            let comps = if i == j { 1..4 } else { 0..4 };
            for c in comps {
                let u = Quaternion::unit(c);
                if i == j {
                    out.push(vec![(i, i, u)]);
                } else {
                    let partner = -&u.conj();
                    out.push(vec![(i, j, u), (j, i, partner)]);
                }
            }
        }
    }
    out
}

/// Quaternionic block offsets `(P, E, Q)` of the Witt basis.
struct Blocks {
    t: usize,
    k: usize,
    m: usize,
    r0: usize,
}

impl Blocks {
    fn of(space: &QuaternionicSpace) -> Self {
        let k = space.r0() + space.s0();
        Blocks {
            t: space.t(),
            k,
            m: space.quat_dim(),
            r0: space.r0(),
        }
    }

    fn p(&self, i: usize) -> usize {
        i
    }

    fn e(&self, i: usize) -> usize {
        self.t + i
    }

    fn q(&self, i: usize) -> usize {
        self.t + self.k + i
    }

    /// Diagonal sign `E_{r₀,s₀}` of the `e` block.
    fn sign(&self, i: usize) -> Rational {
        if i < self.r0 {
            Rational::from_int(-1)
        } else {
            Rational::ONE
        }
    }

    fn build(&self, entries: &[(usize, usize, Quaternion)]) -> RealMatrix {
        let mut q = QuatMatrix::zeros(self.m, self.m);
        for (i, j, v) in entries {
            let cur = q.get(*i, *j).clone();
            q.set(*i, *j, &cur + v);
        }
        q.realify()
    }

    /// `C` blocks: `A[P,P] = C`, `A[Q,Q] = −C̄ᵗ`.
    fn c_block(&self) -> Vec<RealMatrix> {
        let mut out = Vec::new();
        for i in 0..self.t {
            for j in 0..self.t {
                for c in 0..4 {
                    let u = Quaternion::unit(c);
                    out.push(self.build(&[(self.p(i), self.p(j), u.clone()), (self.q(j), self.q(i), -&u.conj())]));
                }
            }
        }
        out
    }

    /// `B ∈ S(t,ℍ)` in the upper-right block `A[P,Q]`.
    fn b_block(&self) -> Vec<RealMatrix> {
        skew_hermitian_basis(self.t)
            .into_iter()
            .map(|e| {
                let placed: Vec<_> = e.into_iter().map(|(i, j, u)| (self.p(i), self.q(j), u)).collect();
                self.build(&placed)
            })
            .collect()
    }

    /// `D ∈ S(t,ℍ)` in the lower-left block `A[Q,P]`.
    fn d_block(&self) -> Vec<RealMatrix> {
        skew_hermitian_basis(self.t)
            .into_iter()
            .map(|e| {
                let placed: Vec<_> = e.into_iter().map(|(i, j, u)| (self.q(i), self.p(j), u)).collect();
                self.build(&placed)
            })
            .collect()
    }

    /// `A ∈ sp(r₀,s₀)`, written as `E_{r₀,s₀}·S` with `S` skew-Hermitian.
    fn a_block(&self) -> Vec<RealMatrix> {
        skew_hermitian_basis(self.k)
            .into_iter()
            .map(|e| {
                let placed: Vec<_> = e
                    .into_iter()
                    .map(|(i, j, u)| (self.e(i), self.e(j), u.scale(&self.sign(i))))
                    .collect();
                self.build(&placed)
            })
            .collect()
    }

    /// `X` in `A[E,Q]` with its partner `−(E X̄)ᵗ` in `A[P,E]`.
    fn x_block(&self) -> Vec<RealMatrix> {
        let mut out = Vec::new();
        for i in 0..self.k {
            for j in 0..self.t {
                for c in 0..4 {
                    let u = Quaternion::unit(c);
                    let partner = (-&u.conj()).scale(&self.sign(i));
                    out.push(self.build(&[(self.e(i), self.q(j), u), (self.p(j), self.e(i), partner)]));
                }
            }
        }
        out
    }

    /// `Y` in `A[E,P]` with its partner `−(E Ȳ)ᵗ` in `A[Q,E]`.
    fn y_block(&self) -> Vec<RealMatrix> {
        let mut out = Vec::new();
        for i in 0..self.k {
            for j in 0..self.t {
                for c in 0..4 {
                    let u = Quaternion::unit(c);
                    let partner = (-&u.conj()).scale(&self.sign(i));
                    out.push(self.build(&[(self.e(i), self.p(j), u), (self.q(j), self.e(i), partner)]));
                }
            }
        }
        out
    }
}

/// `sp(r,s)`: ℍ-linear maps skew for the quaternionic Hermitian form.
pub fn build_sp(space: &Arc<QuaternionicSpace>) -> Result<LieAlgebra> {
    let b = Blocks::of(space);
    let mut basis = b.c_block();
    basis.extend(b.b_block());
    basis.extend(b.a_block());
    basis.extend(b.x_block());
    basis.extend(b.d_block());
    basis.extend(b.y_block());
    LieAlgebra::from_basis("sp", space.clone(), basis)
}

/// `sp(1)`, spanned by the structure operators.
pub fn build_sp1(space: &Arc<QuaternionicSpace>) -> Result<LieAlgebra> {
    let basis = space.structure().into_iter().cloned().collect();
    LieAlgebra::from_basis("sp1", space.clone(), basis)
}

/// `sp(r,s)_W`, the stabilizer of `W` in `sp(r,s)`.
pub fn build_sp_parabolic(space: &Arc<QuaternionicSpace>) -> Result<LieAlgebra> {
    if space.t() == 0 {
        return Err(Error::NoIsotropicSubspace("sp(r,s)_W"));
    }
    let b = Blocks::of(space);
    let mut basis = b.c_block();
    basis.extend(b.b_block());
    basis.extend(b.a_block());
    basis.extend(b.x_block());
    LieAlgebra::from_basis("sp_w", space.clone(), basis)
}

fn require_split(space: &QuaternionicSpace, what: &str) -> Result<()> {
    if space.r() == space.s() && space.s() == space.t() && space.t() >= 1 {
        Ok(())
    } else {
        Err(Error::InvalidSignature(format!(
            "{what} requires r = s = t >= 1, got ({}, {}, {})",
            space.r(),
            space.s(),
            space.t()
        )))
    }
}

/// `{diag(C, −C̄ᵗ) : C ∈ Mat(r,ℍ)}` on the split space `r = s = t`.
pub fn build_glq(space: &Arc<QuaternionicSpace>) -> Result<LieAlgebra> {
    require_split(space, "glq")?;
    LieAlgebra::from_basis("glq", space.clone(), Blocks::of(space).c_block())
}

/// `𝔥₀ = sp(1) ⊕ glq`.
pub fn build_h0(space: &Arc<QuaternionicSpace>) -> Result<LieAlgebra> {
    require_split(space, "h0")?;
    let mut h0 = direct_sum(&build_sp1(space)?, &build_glq(space)?)?;
    h0.name = "h0".into();
    h0.space = space.clone();
    Ok(h0)
}

/// Builds a registered algebra by CLI name.
pub fn build_algebra(name: &str, space: &Arc<QuaternionicSpace>) -> Result<LieAlgebra> {
    match name {
        "sp" => build_sp(space),
        "sp_w" => build_sp_parabolic(space),
        "sp1" => build_sp1(space),
        "glq" => build_glq(space),
        "h0" => build_h0(space),
        "sp1+sp" => direct_sum(&build_sp1(space)?, &build_sp(space)?),
        "sp1+sp_w" => direct_sum(&build_sp1(space)?, &build_sp_parabolic(space)?),
        other => Err(Error::UnknownAlgebra(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(r: usize, s: usize, t: usize) -> Arc<QuaternionicSpace> {
        Arc::new(QuaternionicSpace::new(r, s, t).unwrap())
    }

    /// Oracle for `sp(r,s)`: the kernel of `Āᵗ G + G A = 0` over all
    /// quaternionic `m × m` matrices, with `A` parameterized by its 4m²
    /// real components and mapped to `gl(4m,ℝ)` by realification.
    fn sp_oracle(sp: &QuaternionicSpace) -> Subspace {
        let m = sp.quat_dim();
        let unknowns = 4 * m * m;
        let param = |idx: usize| {
            let (entry, c) = (idx / 4, idx % 4);
            let mut a = QuatMatrix::zeros(m, m);
            a.set(entry / m, entry % m, Quaternion::unit(c));
            a
        };
        let mut g = QuatMatrix::zeros(m, m);
        for a in 0..m {
            for b in 0..m {
                g.set(a, b, Quaternion::real(Rational::from_int(sp.hermitian_gram(a, b))));
            }
        }
        // Each unknown contributes a quaternionic m×m matrix to the
        // condition; the condition's 4m² real components are the equations.
        let images: Vec<Vec<Rational>> = (0..unknowns)
            .map(|u| {
                let a = param(u);
                let cond = &a.conj_transpose() * &g;
                let rhs = &g * &a;
                let mut out = Vec::with_capacity(4 * m * m);
                for i in 0..m {
                    for j in 0..m {
                        let q = cond.get(i, j) + rhs.get(i, j);
                        out.extend(q.components().into_iter().cloned());
                    }
                }
                out
            })
            .collect();
        let mut mat = RealMatrix::zeros(4 * m * m, unknowns);
        for (u, col) in images.iter().enumerate() {
            for (row, v) in col.iter().enumerate() {
                mat[(row, u)] = v.clone();
            }
        }
        let kernel = Subspace::nullspace(&mat);
        let n = sp.real_dim();
        let realified: Vec<Vec<Rational>> = kernel
            .basis()
            .iter()
            .map(|coeffs| {
                let mut a = QuatMatrix::zeros(m, m);
                for (idx, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (entry, comp) = (idx / 4, idx % 4);
                    let (i, j) = (entry / m, entry % m);
                    let cur = a.get(i, j).clone();
                    a.set(i, j, &cur + &Quaternion::unit(comp).scale(c));
                }
                a.realify().as_slice().to_vec()
            })
            .collect();
        Subspace::span_of(&realified, n * n).unwrap()
    }

    #[test]
    fn sp_matches_oracle() {
        for ((r, s, t), dim) in [((1, 1, 1), 10), ((1, 2, 1), 21), ((1, 1, 0), 10), ((2, 1, 1), 21)] {
            let sp = space(r, s, t);
            let alg = build_sp(&sp).unwrap();
            assert_eq!(alg.dim(), dim);
            assert_eq!(alg.dim(), (r + s) * (2 * (r + s) + 1));
            let oracle = sp_oracle(&sp);
            assert_eq!(oracle.dim(), dim);
            assert_eq!(alg.span(), &oracle, "sp{:?}", (r, s, t));
            assert!(alg.is_metric_compatible());
            assert_eq!(alg.closure_violation(), None);
        }
    }

    #[test]
    fn sp1_brackets_and_centralizes_sp() {
        let sp = space(1, 2, 1);
        let sp1 = build_sp1(&sp).unwrap();
        assert_eq!(sp1.dim(), 3);
        let [i1, i2, i3] = sp.structure();
        assert_eq!(i1.commutator(i2), i3.scale(&Rational::from_int(2)));
        assert_eq!(i2.commutator(i3), i1.scale(&Rational::from_int(2)));
        assert_eq!(i3.commutator(i1), i2.scale(&Rational::from_int(2)));
        let full = build_sp(&sp).unwrap();
        for a in sp1.basis() {
            for b in full.basis() {
                assert!(a.commutator(b).is_zero());
            }
        }
    }

    #[test]
    fn parabolic_is_stabilizer_of_w() {
        for ((r, s, t), dim) in [
            ((1, 1, 1), 7),
            ((1, 2, 1), 14),
            ((2, 2, 2), 26),
            ((2, 3, 1), 4 + 3 + 21 + 12),
        ] {
            let sp = space(r, s, t);
            let pw = build_sp_parabolic(&sp).unwrap();
            let k = (r - t) + (s - t);
            assert_eq!(pw.dim(), dim);
            assert_eq!(pw.dim(), 4 * t * t + 2 * t * t + t + k * (2 * k + 1) + 4 * t * k);
            let w = sp.isotropic_subspace_w().unwrap();
            assert!(pw.preserves_subspace(&w).unwrap());
            let stab = build_sp(&sp).unwrap().stabilizer(&w, "stab").unwrap();
            assert!(stab.same_span(&pw), "{:?}", (r, s, t));
            assert_eq!(pw.closure_violation(), None);
            assert!(pw.is_metric_compatible());
        }
        assert!(build_sp_parabolic(&space(1, 1, 0)).is_err());
    }

    #[test]
    fn full_sp_does_not_preserve_w() {
        let sp = space(1, 1, 1);
        let full = build_sp(&sp).unwrap();
        let w = sp.isotropic_subspace_w().unwrap();
        assert!(!full.preserves_subspace(&w).unwrap());
        // the witness is a D-block element, with nonzero lower-left block
        let witness = full
            .basis()
            .iter()
            .find(|b| !w.basis().iter().all(|x| w.contains_vector(&b.mul_vec(x))))
            .unwrap();
        assert!(sp.w1_range().any(|i| sp.w_range().any(|j| !witness[(i, j)].is_zero())));
    }

    #[test]
    fn glq_and_h0() {
        for (r, dim) in [(1, 4), (2, 16)] {
            let sp = space(r, r, r);
            let glq = build_glq(&sp).unwrap();
            assert_eq!(glq.dim(), dim);
            assert!(glq.is_subalgebra_of(&build_sp_parabolic(&sp).unwrap()));
            let h0 = build_h0(&sp).unwrap();
            assert_eq!(h0.dim(), 3 + dim);
            assert_eq!(h0.closure_violation(), None);
            assert!(h0.is_metric_compatible());
            assert!(h0.preserves_subspace(&sp.isotropic_subspace_w().unwrap()).unwrap());
            assert!(h0.preserves_subspace(&sp.dual_w1().unwrap()).unwrap());
        }
        assert!(build_glq(&space(1, 2, 1)).is_err());
        assert!(build_h0(&space(2, 2, 1)).is_err());
    }

    #[test]
    fn direct_sums() {
        let sp = space(1, 1, 1);
        assert_eq!(build_algebra("sp1+sp", &sp).unwrap().dim(), 13);
        assert_eq!(build_algebra("sp1+sp_w", &sp).unwrap().dim(), 10);
        assert_eq!(build_algebra("sp1+sp_w", &space(1, 2, 1)).unwrap().dim(), 17);
        let full = build_sp(&sp).unwrap();
        let err = direct_sum(&full, &build_glq(&sp).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotDirectSum(_)));
        assert!(err.to_string().starts_with("not a direct sum"));
        assert!(matches!(build_algebra("nosuch", &sp), Err(Error::UnknownAlgebra(_))));
    }

    #[test]
    fn restriction_to_w() {
        let sp = space(1, 1, 1);
        let w = sp.isotropic_subspace_w().unwrap();
        assert_eq!(build_glq(&sp).unwrap().restrict_to(&w).unwrap().len(), 4);
        assert_eq!(build_h0(&sp).unwrap().restrict_to(&w).unwrap().len(), 7);
        assert!(matches!(
            build_sp(&sp).unwrap().restrict_to(&w),
            Err(Error::DoesNotPreserve)
        ));
    }
}
