use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use super::sparse::{Echelon, SparseVec};

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        RealMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RealMatrix::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        RealMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| Rational::from_int(*v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &RealMatrix) -> RealMatrix {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Flattened row-major copy as a sparse vector.
    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.data)
    }

    pub fn from_sparse(rows: usize, cols: usize, v: &SparseVec) -> Self {
        RealMatrix::from_vec(rows, cols, v.to_dense(rows * cols))
    }

    /// `Σ cᵢ Mᵢ` for equally shaped matrices.
    pub fn linear_combination(coeffs: &[Rational], mats: &[RealMatrix]) -> RealMatrix {
        assert_eq!(coeffs.len(), mats.len());
        let (r, c) = mats.first().map_or((0, 0), |m| (m.rows, m.cols));
        let mut out = RealMatrix::zeros(r, c);
        for (k, m) in coeffs.iter().zip(mats) {
            if k.is_zero() {
                continue;
            }
            for (o, x) in out.data.iter_mut().zip(&m.data) {
                if !x.is_zero() {
                    *o += &(k * x);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse by Gauss–Jordan on `[A | I]`; `None` when singular.
    pub fn inverse(&self) -> Option<RealMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = RealMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::ONE;
        }
        let (red, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = RealMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

/// Inertia `(negative, positive, zero)` of a symmetric matrix, by congruent
/// diagonalization.
pub fn inertia(m: &RealMatrix) -> (usize, usize, usize) {
    assert!(m.is_square());
    assert_eq!(m, &m.transpose(), "inertia needs a symmetric matrix");
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..m.rows).collect();
    let (mut neg, mut pos) = (0, 0);
    while !active.is_empty() {
        let pivot = match active.iter().position(|&i| !a[(i, i)].is_zero()) {
            Some(p) => p,
            None => {
                // Zero diagonal: fold a partner into row/column i so the
                // new diagonal entry is 2·a[i][j].
                let found = active
                    .iter()
                    .enumerate()
                    .find_map(|(pi, &i)| active.iter().find(|&&j| !a[(i, j)].is_zero()).map(|&j| (pi, i, j)));
                let Some((pi, i, j)) = found else { break };
                let n = a.rows;
                for k in 0..n {
                    let v = a[(j, k)].clone();
                    a[(i, k)] += &v;
                }
                for k in 0..n {
                    let v = a[(k, j)].clone();
                    a[(k, i)] += &v;
                }
                pi
            }
        };
        let i = active.remove(pivot);
        let d = a[(i, i)].clone();
        if d.signum() < 0 {
            neg += 1;
        } else {
            pos += 1;
        }
        for &j in &active {
            let f = &a[(j, i)] / &d;
            if f.is_zero() {
                continue;
            }
            for &k in &active {
                let v = a[(j, k)].sub_mul(&f, &a[(i, k)]);
                a[(j, k)] = v;
            }
            a[(j, i)] = Rational::ZERO;
        }
        for &k in &active {
            a[(i, k)] = Rational::ZERO;
        }
    }
    (neg, pos, m.rows - neg - pos)
}

/// Reduced row echelon form with leftmost pivot selection, plus the pivot
/// columns.
pub fn rref(m: &RealMatrix) -> (RealMatrix, Vec<usize>) {
    let mut ech = Echelon::new(m.cols);
    for i in 0..m.rows {
        ech.insert(SparseVec::from_dense(m.row(i)));
    }
    let red = ech.into_rref();
    let mut out = RealMatrix::zeros(m.rows, m.cols);
    for (i, row) in red.rows.iter().enumerate() {
        for (c, v) in row.entries() {
            out[(i, *c)] = v.clone();
        }
    }
    (out, red.pivots)
}

impl std::ops::Index<(usize, usize)> for RealMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a RealMatrix> for &'a RealMatrix {
    type Output = RealMatrix;
    fn mul(self, rhs: &'a RealMatrix) -> RealMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = RealMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a RealMatrix> for &'a RealMatrix {
    type Output = RealMatrix;
    fn add(self, rhs: &'a RealMatrix) -> RealMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a RealMatrix> for &'a RealMatrix {
    type Output = RealMatrix;
    fn sub(self, rhs: &'a RealMatrix) -> RealMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RealMatrix {
    type Output = RealMatrix;
    fn neg(self) -> RealMatrix {
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RealMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RealMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[Rational]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return Err(D::Error::custom("ragged matrix rows"));
        }
        Ok(RealMatrix::from_rows(rows))
    }
}
