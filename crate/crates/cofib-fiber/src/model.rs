use std::sync::OnceLock;

use cofib_arith::{q, AffineMap, Matrix, Vector};
use cofib_gl2z::amalgam::{hex_group, square_group};
use cofib_spacegroup::{normalizes, SpaceGroup, WallpaperType};

/// The standard fiber group with the data the classifier needs.
pub struct FiberModel {
    pub ty: WallpaperType,
    pub group: SpaceGroup<2>,
    /// Basis of the identity component of Aff(M), a group of translations.
    pub t_cont: Vec<Vector<2>>,
    /// Linear parts of Aff(M) inside ⟨A,C⟩ and ⟨B,C⟩ respectively.
    pub vertex_linears: [Vec<Matrix<2>>; 2],
}

impl FiberModel {
    fn new(ty: WallpaperType) -> Self {
        use WallpaperType::*;
        let group = ty.standard_group();
        let t_cont = match ty {
            Torus => vec![Vector::unit(0), Vector::unit(1)],
            StarCross => vec![Vector::from_ints([1, 1])],
            CrossCross | StarStar => vec![Vector::unit(0)],
            _ => vec![],
        };
        let pg = group.point_group();
        let keeps_pg = |k: &Matrix<2>| {
            let ki = k.inverse().unwrap();
            pg.iter().all(|p| pg.contains(&(*k * *p * ki)))
        };
        let lin = |els: &[cofib_gl2z::GlMat]| -> Vec<Matrix<2>> {
            els.iter().map(|g| g.to_matrix()).filter(|k| keeps_pg(k)).collect()
        };
        FiberModel { ty, group, t_cont, vertex_linears: [lin(square_group()), lin(hex_group())] }
    }

    /// ○ and 2222 have infinite Out(M); their classification goes through the vertex groups.
    pub fn is_vertexed(&self) -> bool {
        matches!(self.ty, WallpaperType::Torus | WallpaperType::Pillow)
    }

    /// Least n ≤ bound with fⁿ ∈ M.
    pub fn order_mod_m(&self, f: &AffineMap<2>, bound: u32) -> Option<u32> {
        let mut p = *f;
        for n in 1..=bound {
            if self.group.contains(&p) {
                return Some(n);
            }
            p = p * *f;
        }
        None
    }

    /// Whether the linear part has finite order modulo the point group of M.
    pub fn out_finite(&self, m: &Matrix<2>) -> bool {
        let pg = self.group.point_group();
        let mut p = *m;
        (0..12).any(|_| {
            let hit = pg.contains(&p);
            p = p * *m;
            hit
        })
    }

    /// Representative of f modulo M: least linear part in the coset P·f, translation reduced mod the lattice.
    pub fn canonical(&self, f: &AffineMap<2>) -> AffineMap<2> {
        let g = self.group.coset_reps().map(|r| *r * *f).min_by_key(|g| g.m).unwrap();
        AffineMap::with(self.group.reduce_translation(&g.t), g.m)
    }

    pub fn same_mod_m(&self, f: &AffineMap<2>, g: &AffineMap<2>) -> bool {
        self.group.contains(&(*f * g.inverse()))
    }

    /// Elements t + K of Aff(M) with t on the 1/den grid and K in a vertex group.
    pub fn grid_elements(&self, den: i64, vertex: usize) -> Vec<AffineMap<2>> {
        let mut out = Vec::new();
        for k in &self.vertex_linears[vertex] {
            for a in 0..den {
                for b in 0..den {
                    let f = AffineMap::with(Vector([q(a, den), q(b, den)]), *k);
                    if normalizes(&self.group, &f) && self.order_mod_m(&f, 12).is_some() {
                        out.push(f);
                    }
                }
            }
        }
        out
    }
}

pub fn model(ty: WallpaperType) -> &'static FiberModel {
    static M: [OnceLock<FiberModel>; 17] = [const { OnceLock::new() }; 17];
    M[ty as usize].get_or_init(|| FiberModel::new(ty))
}
