use std::collections::BTreeMap;

use cofib_arith::lattice::integer_kernel;
use cofib_arith::linalg::to_primitive;
use cofib_arith::{AffineMap, Lattice, Matrix, Vector};

use crate::SpaceGroupError;

#[derive(Clone, Debug)]
pub struct SpaceGroup<const N: usize> {
    gens: Vec<AffineMap<N>>,
    reps: BTreeMap<Matrix<N>, AffineMap<N>>,
    lattice: Lattice,
}

pub fn max_point_group_order(n: usize) -> usize {
    match n {
        1 => 2,
        2 => 12,
        _ => 48,
    }
}

impl<const N: usize> SpaceGroup<N> {
    /// Point group by closure with one coset representative per linear part;
    /// the lattice from the Schreier generators (g r_P) r_{gP}⁻¹.
    pub fn new(gens: Vec<AffineMap<N>>) -> Result<Self, SpaceGroupError> {
        if gens.is_empty() {
            return Err(SpaceGroupError::Empty);
        }
        let bound = max_point_group_order(N);
        let mut reps: BTreeMap<Matrix<N>, AffineMap<N>> = BTreeMap::new();
        reps.insert(Matrix::identity(), AffineMap::identity());
        let mut order = vec![Matrix::identity()];
        let mut i = 0;
        while i < order.len() {
            let r = reps[&order[i]];
            for g in &gens {
                let p = *g * r;
                if let std::collections::btree_map::Entry::Vacant(e) = reps.entry(p.m) {
                    e.insert(p);
                    order.push(p.m);
                    if order.len() > bound {
                        return Err(SpaceGroupError::NotCrystallographic(bound));
                    }
                }
            }
            i += 1;
        }
        let mut trans = Vec::new();
        for r in reps.values() {
            for g in &gens {
                let p = *g * *r;
                let s = p * reps[&p.m].inverse();
                trans.push(s.t.to_vec());
            }
        }
        let lattice = Lattice::from_generators(N, &trans);
        if lattice.rank() < N {
            return Err(SpaceGroupError::NotCocompact { rank: lattice.rank(), dim: N });
        }
        Ok(SpaceGroup { gens, reps, lattice })
    }

    pub fn generators(&self) -> &[AffineMap<N>] {
        &self.gens
    }

    pub fn point_group(&self) -> Vec<Matrix<N>> {
        self.reps.keys().copied().collect()
    }

    pub fn point_group_order(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_rep(&self, m: &Matrix<N>) -> Option<&AffineMap<N>> {
        self.reps.get(m)
    }

    pub fn coset_reps(&self) -> impl Iterator<Item = &AffineMap<N>> {
        self.reps.values()
    }

    pub fn translation_lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn lattice_basis(&self) -> Vec<Vector<N>> {
        self.lattice.basis().iter().map(|b| Vector::from_slice(b)).collect()
    }

    pub fn contains(&self, f: &AffineMap<N>) -> bool {
        match self.reps.get(&f.m) {
            None => false,
            Some(r) => self.lattice.contains(&(*f * r.inverse()).t.0),
        }
    }

    /// Canonical representative of a translation modulo the lattice.
    pub fn reduce_translation(&self, v: &Vector<N>) -> Vector<N> {
        Vector::from_slice(&self.lattice.reduce(&v.0))
    }

    /// Translations of the lattice fixed by the whole point group.
    pub fn center(&self) -> Vec<AffineMap<N>> {
        let basis = self.lattice.basis();
        // z ↦ Σ z_i b_i; impose (P − I) Σ z_i b_i = 0 for all P
        let mut eqs: Vec<Vec<i64>> = Vec::new();
        for p in self.reps.keys() {
            let d = *p - Matrix::identity();
            for row in 0..N {
                let coeffs: Vec<_> = basis.iter().map(|b| (0..N).map(|k| d.0[row][k] * b[k]).sum()).collect();
                if coeffs.iter().any(|c: &cofib_arith::Q| *c != cofib_arith::qi(0)) {
                    eqs.push(to_primitive(&coeffs));
                }
            }
        }
        integer_kernel(&eqs, basis.len())
            .iter()
            .map(|z| {
                let mut v = Vector::zero();
                for (zi, b) in z.iter().zip(basis) {
                    v = v + Vector::from_slice(b).scale(cofib_arith::qi(*zi));
                }
                AffineMap::translation(v)
            })
            .collect()
    }

    /// The group h G h⁻¹.
    pub fn conjugate(&self, h: &AffineMap<N>) -> Self {
        SpaceGroup::new(self.gens.iter().map(|g| h.conj(g)).collect()).expect("conjugate of a space group")
    }

    /// Whether every generator of other lies in self.
    pub fn contains_group(&self, other: &SpaceGroup<N>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }
}
