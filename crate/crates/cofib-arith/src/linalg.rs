use num_traits::{One, Zero};

use crate::scalar::{lcm_denoms, Q};

pub type QMat = Vec<Vec<Q>>;

/// Reduced row echelon form and pivot columns.
pub fn rref(a: &QMat, cols: usize) -> (QMat, Vec<usize>) {
    let mut m: QMat = a.iter().map(|r| r[..cols].to_vec()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(p, row);
        let d = m[row][c];
        for x in m[row].iter_mut() {
            *x /= d;
        }
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in 0..cols {
                    let v = m[row][k];
                    m[r][k] -= f * v;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

pub fn rank(a: &QMat, cols: usize) -> usize {
    rref(a, cols).1.len()
}

pub fn nullspace(a: &QMat, cols: usize) -> QMat {
    let (m, pivots) = rref(a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f];
            }
            v
        })
        .collect()
}

/// Particular solution of a x = b, or None when inconsistent.
pub fn solve(a: &QMat, b: &[Q], cols: usize) -> Option<Vec<Q>> {
    let aug: QMat = a
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut r = r[..cols].to_vec();
            r.push(bi);
            r
        })
        .collect();
    let (m, pivots) = rref(&aug, cols + 1);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][cols];
    }
    Some(x)
}

pub fn transpose(a: &QMat, cols: usize) -> QMat {
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Whether v lies in the rational span of gens.
pub fn in_span(gens: &QMat, v: &[Q]) -> bool {
    let n = v.len();
    if gens.is_empty() {
        return v.iter().all(|x| x.is_zero());
    }
    solve(&transpose(gens, n), v, gens.len()).is_some()
}

/// Basis of the span of gens (rows of the reduced echelon form).
pub fn span_basis(gens: &QMat, cols: usize) -> QMat {
    rref(gens, cols).0
}

/// Integer rows whose common kernel is exactly span(gens).
pub fn integral_annihilator(gens: &QMat, cols: usize) -> Vec<Vec<i64>> {
    let rows = if gens.is_empty() {
        (0..cols)
            .map(|i| {
                let mut v = vec![Q::zero(); cols];
                v[i] = Q::one();
                v
            })
            .collect()
    } else {
        nullspace(gens, cols)
    };
    rows.iter().map(|r| to_primitive(r)).collect()
}

/// Scale a rational vector to a primitive integer vector.
pub fn to_primitive(v: &[Q]) -> Vec<i64> {
    let l = lcm_denoms(v);
    let ints: Vec<i64> = v.iter().map(|x| (x * l).to_integer()).collect();
    let g = ints.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g == 0 {
        ints
    } else {
        ints.iter().map(|x| x / g).collect()
    }
}
