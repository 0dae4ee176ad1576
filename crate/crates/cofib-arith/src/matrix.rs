use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{fmt_q, is_integer, qi, Q};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vector<const N: usize>(pub [Q; N]);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Matrix<const N: usize>(pub [[Q; N]; N]);

impl<const N: usize> Vector<N> {
    pub fn zero() -> Self {
        Vector([Q::zero(); N])
    }

    pub fn from_ints(v: [i64; N]) -> Self {
        Vector(v.map(qi))
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = Q::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_integer)
    }

    pub fn scale(&self, k: Q) -> Self {
        Vector(self.0.map(|x| x * k))
    }

    pub fn dot(&self, o: &Self) -> Q {
        (0..N).map(|i| self.0[i] * o.0[i]).sum()
    }

    pub fn to_vec(&self) -> Vec<Q> {
        self.0.to_vec()
    }

    pub fn from_slice(s: &[Q]) -> Self {
        let mut v = Self::zero();
        v.0.copy_from_slice(&s[..N]);
        v
    }
}

impl<const N: usize> Add for Vector<N> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..N {
            r.0[i] += o.0[i];
        }
        r
    }
}

impl<const N: usize> Sub for Vector<N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const N: usize> Neg for Vector<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Vector(self.0.map(|x| -x))
    }
}

impl<const N: usize> Matrix<N> {
    pub fn zero() -> Self {
        Matrix([[Q::zero(); N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = Q::one();
        }
        m
    }

    pub fn scalar(k: Q) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = k;
        }
        m
    }

    pub fn from_ints(rows: [[i64; N]; N]) -> Self {
        Matrix(rows.map(|r| r.map(qi)))
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i].copy_from_slice(&rows[i][..N]);
        }
        m
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector<N> {
        let mut v = Vector::zero();
        for i in 0..N {
            v.0[i] = self.0[i][j];
        }
        v
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|r| r.iter().all(is_integer))
    }

    pub fn trace(&self) -> Q {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn det(&self) -> Q {
        let mut a = self.0;
        let mut det = Q::one();
        for c in 0..N {
            let Some(p) = (c..N).find(|&r| !a[r][c].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for r in c + 1..N {
                let f = a[r][c] / a[c][c];
                for k in c..N {
                    let v = a[c][k];
                    a[r][k] -= f * v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.0;
        let mut inv = Self::identity().0;
        for c in 0..N {
            let p = (c..N).find(|&r| !a[r][c].is_zero())?;
            a.swap(p, c);
            inv.swap(p, c);
            let d = a[c][c];
            for k in 0..N {
                a[c][k] /= d;
                inv[c][k] /= d;
            }
            for r in 0..N {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c];
                    for k in 0..N {
                        let (x, y) = (a[c][k], inv[c][k]);
                        a[r][k] -= f * x;
                        inv[r][k] -= f * y;
                    }
                }
            }
        }
        Some(Matrix(inv))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc * *self)
    }

    /// Least n in 1..=bound with M^n = I.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let id = Self::identity();
        let mut p = *self;
        for n in 1..=bound {
            if p == id {
                return Some(n);
            }
            p = p * *self;
        }
        None
    }

    pub fn apply(&self, v: &Vector<N>) -> Vector<N> {
        let mut r = Vector::zero();
        for i in 0..N {
            r.0[i] = (0..N).map(|j| self.0[i][j] * v.0[j]).sum();
        }
        r
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = (0..N).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        m
    }
}

impl<const N: usize> Mul<Vector<N>> for Matrix<N> {
    type Output = Vector<N>;
    fn mul(self, v: Vector<N>) -> Vector<N> {
        self.apply(&v)
    }
}

impl<const N: usize> Neg for Matrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Matrix(self.0.map(|r| r.map(|x| -x)))
    }
}

impl<const N: usize> Add for Matrix<N> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] += o.0[i][j];
            }
        }
        m
    }
}

impl<const N: usize> Sub for Matrix<N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const N: usize> fmt::Display for Vector<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(fmt_q).collect();
        write!(f, "{}", s.join(","))
    }
}

impl<const N: usize> fmt::Display for Matrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|r| r.iter().map(fmt_q).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", s.join(";"))
    }
}
