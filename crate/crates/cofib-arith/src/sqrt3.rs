use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::scalar::{qi, Q};

/// a + b√3
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt3 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt3 {
    pub fn new(a: Q, b: Q) -> Self {
        QSqrt3 { a, b }
    }

    pub fn rational(a: Q) -> Self {
        QSqrt3 { a, b: Q::zero() }
    }

    pub fn zero() -> Self {
        Self::rational(Q::zero())
    }

    pub fn one() -> Self {
        Self::rational(Q::one())
    }

    pub fn conjugate(&self) -> Self {
        QSqrt3 { a: self.a, b: -self.b }
    }

    /// a² − 3b²
    pub fn norm(&self) -> Q {
        self.a * self.a - qi(3) * self.b * self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(QSqrt3 { a: c.a / n, b: c.b / n })
    }
}

impl Add for QSqrt3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QSqrt3 { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QSqrt3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QSqrt3 { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for QSqrt3 {
    type Output = Self;
    fn neg(self) -> Self {
        QSqrt3 { a: -self.a, b: -self.b }
    }
}

impl Mul for QSqrt3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        QSqrt3 { a: self.a * o.a + qi(3) * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat2Sqrt3(pub [[QSqrt3; 2]; 2]);

impl Mat2Sqrt3 {
    pub fn identity() -> Self {
        let (o, z) = (QSqrt3::one(), QSqrt3::zero());
        Mat2Sqrt3([[o, z], [z, o]])
    }

    pub fn from_rational(m: &Matrix<2>) -> Self {
        Mat2Sqrt3(m.0.map(|r| r.map(QSqrt3::rational)))
    }

    pub fn det(&self) -> QSqrt3 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat2Sqrt3([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().inverse()?;
        let m = &self.0;
        Some(Mat2Sqrt3([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]]))
    }

    pub fn apply(&self, v: [QSqrt3; 2]) -> [QSqrt3; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn is_orthogonal(&self) -> bool {
        self.inverse() == Some(self.transpose())
    }
}

impl Mul for Mat2Sqrt3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Mat2Sqrt3([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use proptest::prelude::*;

    #[test]
    fn inverse_exact() {
        let x = QSqrt3::new(qi(2), qi(1));
        assert_eq!(x * x.inverse().unwrap(), QSqrt3::one());
        let d = Mat2Sqrt3([[QSqrt3::one(), QSqrt3::rational(q(-1, 2))], [QSqrt3::zero(), QSqrt3::new(qi(0), q(1, 2))]]);
        assert_eq!(d * d.inverse().unwrap(), Mat2Sqrt3::identity());
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in 1i64..5) {
            let x = QSqrt3::new(qi(a), q(b, d));
            let y = QSqrt3::new(q(c, d), qi(b));
            prop_assert_eq!(x * x.conjugate(), QSqrt3::rational(x.norm()));
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        }
    }
}
