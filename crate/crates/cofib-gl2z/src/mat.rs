use std::fmt;
use std::ops::{Mul, Neg};

use cofib_arith::{qi, Matrix};

use crate::Gl2zError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GlMat(pub [[i64; 2]; 2]);

pub const I: GlMat = GlMat([[1, 0], [0, 1]]);
pub const NEG_I: GlMat = GlMat([[-1, 0], [0, -1]]);
pub const A: GlMat = GlMat([[-1, 0], [0, 1]]);
pub const B: GlMat = GlMat([[-1, 1], [0, 1]]);
pub const C: GlMat = GlMat([[0, 1], [1, 0]]);
/// AC
pub const S: GlMat = GlMat([[0, -1], [1, 0]]);
/// BA
pub const T: GlMat = GlMat([[1, 1], [0, 1]]);
/// BC, order 6
pub const H: GlMat = GlMat([[1, -1], [1, 0]]);
/// (BC)², order 3
pub const R: GlMat = GlMat([[0, -1], [1, -1]]);

impl GlMat {
    pub fn new(rows: [[i64; 2]; 2]) -> Result<Self, Gl2zError> {
        let m = GlMat(rows);
        match m.det() {
            1 | -1 => Ok(m),
            d => Err(Gl2zError::NotUnimodular(d)),
        }
    }

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> i64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn inv(&self) -> Self {
        let m = &self.0;
        let d = self.det();
        GlMat([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]])
    }

    pub fn conj(&self, k: &Self) -> Self {
        *self * *k * self.inv()
    }

    pub fn pow(&self, n: i64) -> Self {
        let b = if n < 0 { self.inv() } else { *self };
        (0..n.unsigned_abs()).fold(I, |acc, _| acc * b)
    }

    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut p = *self;
        for n in 1..=bound {
            if p == I {
                return Some(n);
            }
            p = p * *self;
        }
        None
    }

    pub fn apply(&self, v: [i64; 2]) -> [i64; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().flatten().map(|x| x.abs()).max().unwrap()
    }

    pub fn to_matrix(&self) -> Matrix<2> {
        Matrix(self.0.map(|r| r.map(qi)))
    }

    pub fn from_matrix(m: &Matrix<2>) -> Result<Self, Gl2zError> {
        if !m.is_integral() {
            return Err(Gl2zError::NotIntegral);
        }
        GlMat::new(m.0.map(|r| r.map(|x| x.to_integer())))
    }
}

impl Mul for GlMat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        GlMat([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Neg for GlMat {
    type Output = Self;
    fn neg(self) -> Self {
        GlMat(self.0.map(|r| r.map(|x| -x)))
    }
}

impl fmt::Display for GlMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "{},{};{},{}", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Closure of a generating set under multiplication, for finite groups.
pub fn closure(gens: &[GlMat], bound: usize) -> Option<Vec<GlMat>> {
    let mut elems = vec![I];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = elems[i] * *g;
            if !elems.contains(&p) {
                elems.push(p);
                if elems.len() > bound {
                    return None;
                }
            }
        }
        i += 1;
    }
    elems.sort();
    Some(elems)
}
