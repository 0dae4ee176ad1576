use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use crate::linalg::{nullspace, solve};
use crate::matrix::{Matrix, Vector};
use crate::ArithError;

/// x -> t + m x
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineMap<const N: usize> {
    pub t: Vector<N>,
    pub m: Matrix<N>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FixedSpace<const N: usize> {
    Empty,
    Flat { point: Vector<N>, directions: Vec<Vector<N>> },
}

impl<const N: usize> FixedSpace<N> {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            FixedSpace::Empty => None,
            FixedSpace::Flat { directions, .. } => Some(directions.len()),
        }
    }
}

impl<const N: usize> AffineMap<N> {
    pub fn new(t: Vector<N>, m: Matrix<N>) -> Result<Self, ArithError> {
        if m.det().is_zero() {
            return Err(ArithError::Singular);
        }
        Ok(AffineMap { t, m })
    }

    pub fn identity() -> Self {
        AffineMap { t: Vector::zero(), m: Matrix::identity() }
    }

    pub fn translation(t: Vector<N>) -> Self {
        AffineMap { t, m: Matrix::identity() }
    }

    pub fn linear(m: Matrix<N>) -> Self {
        assert!(!m.det().is_zero(), "singular linear part");
        AffineMap { t: Vector::zero(), m }
    }

    pub fn with(t: Vector<N>, m: Matrix<N>) -> Self {
        assert!(!m.det().is_zero(), "singular linear part");
        AffineMap { t, m }
    }

    pub fn apply(&self, x: &Vector<N>) -> Vector<N> {
        self.t + self.m.apply(x)
    }

    pub fn inverse(&self) -> Self {
        let mi = self.m.inverse().expect("invertible linear part");
        AffineMap { t: -(mi * self.t), m: mi }
    }

    pub fn conj(&self, g: &Self) -> Self {
        *self * *g * self.inverse()
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc * base)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_translation(&self) -> bool {
        self.m == Matrix::identity()
    }

    /// Least n in 1..=bound with f^n = identity.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut p = *self;
        for n in 1..=bound {
            if p.is_identity() {
                return Some(n);
            }
            p = p * *self;
        }
        None
    }

    /// Solution set of (I - m) x = t.
    pub fn fixed_space(&self) -> FixedSpace<N> {
        let a = (Matrix::identity() - self.m).rows();
        match solve(&a, &self.t.0, N) {
            None => FixedSpace::Empty,
            Some(p) => FixedSpace::Flat {
                point: Vector::from_slice(&p),
                directions: nullspace(&a, N).iter().map(|d| Vector::from_slice(d)).collect(),
            },
        }
    }
}

impl<const N: usize> Mul for AffineMap<N> {
    type Output = Self;
    fn mul(self, g: Self) -> Self {
        AffineMap { t: self.t + self.m * g.t, m: self.m * g.m }
    }
}

impl<const N: usize> fmt::Display for AffineMap<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.t, self.m)
    }
}
