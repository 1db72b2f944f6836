use std::ops::Mul;

use super::quaternion::Quaternion;
use crate::exactlin::RealMatrix;

/// Dense quaternionic matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QuatMatrix {
            rows,
            cols,
            data: vec![Quaternion::zero(); rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Quaternion>) -> Self {
        assert_eq!(data.len(), rows * cols);
        QuatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, q: Quaternion) {
        self.data[i * self.cols + j] = q;
    }

    /// `Āᵗ`.
    pub fn conj_transpose(&self) -> Self {
        let mut out = QuatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        QuatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| -q).collect(),
        }
    }

    /// Real matrix of `v ↦ A·v` on ℍⁿ viewed as a right ℍ-module.
    ///
    /// Entry `(l, j)` becomes the 4×4 block of left multiplication by
    /// `A[l][j]`; the real basis lists `u, u·i, u·j, u·k` per quaternionic
    /// basis vector `u`.
    pub fn realify(&self) -> RealMatrix {
        let mut out = RealMatrix::zeros(4 * self.rows, 4 * self.cols);
        for l in 0..self.rows {
            for j in 0..self.cols {
                let q = self.get(l, j);
                if q.is_zero() {
                    continue;
                }
                let block = q.left_matrix();
                for a in 0..4 {
                    for b in 0..4 {
                        out[(4 * l + a, 4 * j + b)] = block[(a, b)].clone();
                    }
                }
            }
        }
        out
    }
}

impl<'a> Mul<&'a QuatMatrix> for &'a QuatMatrix {
    type Output = QuatMatrix;
    fn mul(self, rhs: &'a QuatMatrix) -> QuatMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = QuatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Quaternion::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;
    use proptest::prelude::*;

    fn quat() -> impl Strategy<Value = Quaternion> {
        prop::array::uniform4(-4i64..=4).prop_map(|[w, x, y, z]| Quaternion::from_ints(w, x, y, z))
    }

    fn qmat(n: usize) -> impl Strategy<Value = QuatMatrix> {
        prop::collection::vec(quat(), n * n).prop_map(move |d| QuatMatrix::from_vec(n, n, d))
    }

    #[test]
    fn realify_scalars() {
        let one = QuatMatrix::from_vec(1, 1, vec![Quaternion::one()]);
        assert_eq!(one.realify(), RealMatrix::identity(4));
        let i = QuatMatrix::from_vec(1, 1, vec![Quaternion::unit(1)]).realify();
        assert_eq!(&i * &i, RealMatrix::identity(4).scale(&Rational::from_int(-1)));
    }

    proptest! {
        #[test]
        fn realify_is_multiplicative(a in qmat(2), b in qmat(2)) {
            prop_assert_eq!((&a * &b).realify(), &a.realify() * &b.realify());
        }

        #[test]
        fn conj_transpose_reverses_products(a in qmat(2), b in qmat(2)) {
            prop_assert_eq!((&a * &b).conj_transpose(), &b.conj_transpose() * &a.conj_transpose());
        }

        #[test]
        fn realify_scalar_is_injective(a in quat(), b in quat()) {
            let ra = QuatMatrix::from_vec(1, 1, vec![a.clone()]).realify();
            let rb = QuatMatrix::from_vec(1, 1, vec![b.clone()]).realify();
            prop_assert_eq!(ra == rb, a == b);
        }
    }
}
