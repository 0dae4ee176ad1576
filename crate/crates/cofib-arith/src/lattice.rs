use num_integer::Integer;
use num_traits::Zero;

use crate::scalar::{lcm_denoms, qi, Q};

/// Row-style Hermite normal form: echelon, positive pivots, entries above a pivot in [0, pivot).
pub fn hnf(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let mut out: Vec<Vec<i64>> = Vec::new();
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (0..m.len()).filter(|&r| m[r][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&r| m[r][c].abs()).unwrap();
            for &r in &nz {
                if r != p {
                    let f = Integer::div_floor(&m[r][c], &m[p][c]);
                    for k in 0..cols {
                        let v = m[p][k];
                        m[r][k] -= f * v;
                    }
                }
            }
        }
        if let Some(p) = (0..m.len()).find(|&r| m[r][c] != 0) {
            let mut row = m.remove(p);
            if row[c] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            for prev in out.iter_mut() {
                let f = Integer::div_floor(&prev[c], &row[c]);
                for k in 0..cols {
                    prev[k] -= f * row[k];
                }
            }
            out.push(row);
        }
        m.retain(|r| r.iter().any(|&x| x != 0));
    }
    out
}

/// Basis of the integer kernel {z ∈ ℤ^cols : a z = 0}.
pub fn integer_kernel(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let r = a.len();
    let rows: Vec<Vec<i64>> = (0..cols)
        .map(|j| {
            let mut row: Vec<i64> = a.iter().map(|ai| ai[j]).collect();
            row.extend((0..cols).map(|k| (k == j) as i64));
            row
        })
        .collect();
    hnf(&rows, r + cols)
        .into_iter()
        .filter(|row| row[..r].iter().all(|&x| x == 0))
        .map(|row| row[r..].to_vec())
        .collect()
}

fn pivot(row: &[Q]) -> usize {
    row.iter().position(|x| !x.is_zero()).expect("nonzero row")
}

/// A finitely generated subgroup of Q^dim, stored as a canonical rational Hermite basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<Q>>,
}

impl Lattice {
    pub fn from_generators(dim: usize, gens: &[Vec<Q>]) -> Self {
        let basis = Self::hermite(dim, gens);
        let basis = Self::hermite(dim, &basis);
        Lattice { dim, basis }
    }

    pub fn standard(dim: usize) -> Self {
        let gens: Vec<Vec<Q>> = (0..dim).map(|i| (0..dim).map(|j| qi((i == j) as i64)).collect()).collect();
        Self::from_generators(dim, &gens)
    }

    fn hermite(dim: usize, gens: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let d = lcm_denoms(gens.iter().flatten());
        let ints: Vec<Vec<i64>> = gens.iter().map(|g| g.iter().map(|x| (x * d).to_integer()).collect()).collect();
        hnf(&ints, dim).into_iter().map(|r| r.into_iter().map(|x| Q::new(x, d)).collect()).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn join(&self, more: &[Vec<Q>]) -> Self {
        let mut g = self.basis.clone();
        g.extend_from_slice(more);
        Self::from_generators(self.dim, &g)
    }

    /// Canonical representative of v modulo the lattice.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for row in &self.basis {
            let p = pivot(row);
            let f = (v[p] / row[p]).floor();
            for k in 0..self.dim {
                v[k] -= f * row[k];
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Some lattice vector whose first coordinates equal prefix.
    pub fn lift_prefix(&self, prefix: &[Q]) -> Option<Vec<Q>> {
        let k = prefix.len();
        let mut cur = vec![Q::zero(); self.dim];
        let mut rows = self.basis.iter().peekable();
        for c in 0..k {
            match rows.peek() {
                Some(r) if pivot(r) == c => {
                    let r = rows.next().unwrap();
                    let f = (prefix[c] - cur[c]) / r[c];
                    if !f.is_integer() {
                        return None;
                    }
                    for j in 0..self.dim {
                        cur[j] += f * r[j];
                    }
                }
                _ => {
                    if cur[c] != prefix[c] {
                        return None;
                    }
                }
            }
        }
        Some(cur)
    }

    /// The sublattice of vectors whose first k coordinates vanish.
    pub fn zero_prefix(&self, k: usize) -> Self {
        let rows: Vec<Vec<Q>> = self.basis.iter().filter(|r| pivot(r) >= k).cloned().collect();
        Lattice { dim: self.dim, basis: rows }
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}
