use std::ops::Range;

use serde::Serialize;

use super::quaternion::Quaternion;
use crate::error::{Error, Result};
use crate::exactlin::{Rational, RealMatrix, Subspace};

/// Realified pseudo-quaternionic-Hermitian space ℍ^{r,s} ≅ ℝ^{4r,4s}.
///
/// Quaternionic basis order is `p₁..p_t, e₁..e_{r₀+s₀}, q₁..q_t` with
/// `r₀ = r − t`, `s₀ = s − t`. The only nonzero Hermitian pairings are
/// `g(pᵢ,qᵢ) = g(qᵢ,pᵢ) = 1`, `g(eᵢ,eᵢ) = −1` for `i ≤ r₀` and `+1`
/// afterwards. Each quaternionic basis vector `u` contributes the real
/// vectors `u, u·i, u·j, u·k`.
///
/// ℍᵐ is a right ℍ-module: ℍ-linear maps act on the left, and the structure
/// operators `I₁, I₂, I₃` are right multiplication by `−i, −j, −k`. With
/// that sign `I₃ = I₁I₂ = −I₂I₁` holds (plain right multiplication by
/// `i, j, k` would give `I₁I₂ = −I₃`).
#[derive(Clone, Debug, Serialize)]
pub struct QuaternionicSpace {
    r: usize,
    s: usize,
    t: usize,
    eta: RealMatrix,
    #[serde(rename = "I1")]
    i1: RealMatrix,
    #[serde(rename = "I2")]
    i2: RealMatrix,
    #[serde(rename = "I3")]
    i3: RealMatrix,
    labels: Vec<String>,
    #[serde(skip)]
    hermitian_gram: Vec<i64>,
}

impl QuaternionicSpace {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self> {
        if r + s == 0 {
            return Err(Error::InvalidSignature("r + s must be at least 1".into()));
        }
        if t > r.min(s) {
            return Err(Error::InvalidSignature(format!(
                "isotropic dimension t = {t} exceeds min(r, s) = {}",
                r.min(s)
            )));
        }
        let (r0, s0) = (r - t, s - t);
        let m = r + s;
        let k = r0 + s0;

        let mut labels = Vec::with_capacity(m);
        labels.extend((1..=t).map(|i| format!("p{i}")));
        labels.extend((1..=k).map(|i| format!("e{i}")));
        labels.extend((1..=t).map(|i| format!("q{i}")));

        let mut gram = vec![0i64; m * m];
        for i in 0..t {
            gram[i * m + (t + k + i)] = 1;
            gram[(t + k + i) * m + i] = 1;
        }
        for i in 0..k {
            gram[(t + i) * m + (t + i)] = if i < r0 { -1 } else { 1 };
        }

        // η = Re g: for real Hermitian entries η(u·a, v·b) = g(u,v)·⟨a,b⟩.
        let n = 4 * m;
        let mut eta = RealMatrix::zeros(n, n);
        for a in 0..m {
            for b in 0..m {
                let g = gram[a * m + b];
                if g != 0 {
                    for c in 0..4 {
                        eta[(4 * a + c, 4 * b + c)] = Rational::from_int(g);
                    }
                }
            }
        }

        let structure = |unit: usize| {
            let block = (-&Quaternion::unit(unit)).right_matrix();
            let mut out = RealMatrix::zeros(n, n);
            for l in 0..m {
                for a in 0..4 {
                    for b in 0..4 {
                        out[(4 * l + a, 4 * l + b)] = block[(a, b)].clone();
                    }
                }
            }
            out
        };

        Ok(QuaternionicSpace {
            r,
            s,
            t,
            eta,
            i1: structure(1),
            i2: structure(2),
            i3: structure(3),
            labels,
            hermitian_gram: gram,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn r0(&self) -> usize {
        self.r - self.t
    }

    pub fn s0(&self) -> usize {
        self.s - self.t
    }

    /// Quaternionic dimension `r + s`.
    pub fn quat_dim(&self) -> usize {
        self.r + self.s
    }

    pub fn real_dim(&self) -> usize {
        4 * (self.r + self.s)
    }

    pub fn eta(&self) -> &RealMatrix {
        &self.eta
    }

    /// `I₁, I₂, I₃`.
    pub fn structure(&self) -> [&RealMatrix; 3] {
        [&self.i1, &self.i2, &self.i3]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Hermitian Gram entry `g(u_a, u_b)` on quaternionic basis vectors.
    pub fn hermitian_gram(&self, a: usize, b: usize) -> i64 {
        self.hermitian_gram[a * self.quat_dim() + b]
    }

    /// `η(x, y)`.
    pub fn pairing(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let ey = self.eta.mul_vec(y);
        x.iter().zip(&ey).map(|(a, b)| a * b).sum()
    }

    /// Real index range of the `p` vectors (spanning W).
    pub fn w_range(&self) -> Range<usize> {
        0..4 * self.t
    }

    /// Real index range of the `e` vectors (spanning E).
    pub fn e_range(&self) -> Range<usize> {
        4 * self.t..4 * (self.t + self.r0() + self.s0())
    }

    /// Real index range of the `q` vectors (spanning W₁).
    pub fn w1_range(&self) -> Range<usize> {
        let start = 4 * (self.t + self.r0() + self.s0());
        start..start + 4 * self.t
    }

    fn coordinate_span(&self, range: Range<usize>) -> Subspace {
        let n = self.real_dim();
        let vecs: Vec<Vec<Rational>> = range
            .map(|i| {
                let mut v = vec![Rational::ZERO; n];
                v[i] = Rational::ONE;
                v
            })
            .collect();
        Subspace::span_of(&vecs, n).expect("coordinate vectors have ambient length")
    }

    /// The isotropic subspace W spanned by the `p` vectors.
    pub fn isotropic_subspace_w(&self) -> Result<Subspace> {
        if self.t == 0 {
            return Err(Error::NoIsotropicSubspace("W"));
        }
        Ok(self.coordinate_span(self.w_range()))
    }

    /// The non-degenerate complement E spanned by the `e` vectors.
    pub fn complement_e(&self) -> Subspace {
        self.coordinate_span(self.e_range())
    }

    /// The isotropic Witt partner W₁ spanned by the `q` vectors.
    pub fn dual_w1(&self) -> Result<Subspace> {
        if self.t == 0 {
            return Err(Error::NoIsotropicSubspace("W1"));
        }
        Ok(self.coordinate_span(self.w1_range()))
    }

    /// Gram matrix of η restricted to a subspace, in its canonical basis.
    pub fn restricted_gram(&self, v: &Subspace) -> RealMatrix {
        let b = v.basis();
        let mut out = RealMatrix::zeros(b.len(), b.len());
        for (i, x) in b.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[(i, j)] = self.pairing(x, y);
            }
        }
        out
    }
}
