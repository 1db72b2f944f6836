use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactlin::{Rational, RealMatrix};

/// Quaternion `w + x·i + y·j + z·k` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(w.into(), x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    /// `1, i, j, k` for `c = 0..4`.
    pub fn unit(c: usize) -> Self {
        let mut q = [0i64; 4];
        q[c] = 1;
        Quaternion::from_ints(q[0], q[1], q[2], q[3])
    }

    pub fn real(r: Rational) -> Self {
        Quaternion::new(r, Rational::ZERO, Rational::ZERO, Rational::ZERO)
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn from_components(c: [Rational; 4]) -> Self {
        let [w, x, y, z] = c;
        Quaternion { w, x, y, z }
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Quaternion::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }

    /// 4×4 matrix of `v ↦ self·v` in the basis `1, i, j, k`.
    pub fn left_matrix(&self) -> RealMatrix {
        Self::matrix_of(|e| self * &e)
    }

    /// 4×4 matrix of `v ↦ v·self` in the basis `1, i, j, k`.
    pub fn right_matrix(&self) -> RealMatrix {
        Self::matrix_of(|e| &e * self)
    }

    fn matrix_of(f: impl Fn(Quaternion) -> Quaternion) -> RealMatrix {
        let mut m = RealMatrix::zeros(4, 4);
        for c in 0..4 {
            let image = f(Quaternion::unit(c));
            for (r, v) in image.components().into_iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &'a Quaternion) -> Quaternion {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion {
            w: a * e - b * f - c * g - d * h,
            x: a * f + b * e + c * h - d * g,
            y: a * g - b * h + c * e + d * f,
            z: a * h + b * g - c * f + d * e,
        }
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, o: &'a Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &'a Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}
