use std::fmt;
use std::str::FromStr;

use cofib_arith::linalg::{integral_annihilator, transpose};
use cofib_arith::{q, qi, AffineMap, Matrix, Vector};
use cofib_gl2z::torsion::class_by_invariants;
use cofib_gl2z::{GlMat, TorsionClass};

use crate::{SpaceGroup, SpaceGroupError};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum WallpaperType {
    Torus,
    Pillow,
    StarStar,
    CrossCross,
    StarCross,
    Star2222,
    TwoTwoStar,
    TwoTwoCross,
    TwoStar22,
    Four42,
    Star442,
    FourStar2,
    Three33,
    Star333,
    ThreeStar3,
    Six32,
    Star632,
}

use WallpaperType::*;

impl WallpaperType {
    pub const ALL: [WallpaperType; 17] = [
        Torus,
        Pillow,
        StarStar,
        CrossCross,
        StarCross,
        Star2222,
        TwoTwoStar,
        TwoTwoCross,
        TwoStar22,
        Four42,
        Star442,
        FourStar2,
        Three33,
        Star333,
        ThreeStar3,
        Six32,
        Star632,
    ];

    pub fn it_number(&self) -> u32 {
        *self as u32 + 1
    }

    pub fn from_it_number(n: u32) -> Option<Self> {
        Self::ALL.get((n as usize).checked_sub(1)?).copied()
    }

    pub fn conway(&self) -> &'static str {
        match self {
            Torus => "○",
            Pillow => "2222",
            StarStar => "∗∗",
            CrossCross => "××",
            StarCross => "∗×",
            Star2222 => "∗2222",
            TwoTwoStar => "22∗",
            TwoTwoCross => "22×",
            TwoStar22 => "2∗22",
            Four42 => "442",
            Star442 => "∗442",
            FourStar2 => "4∗2",
            Three33 => "333",
            Star333 => "∗333",
            ThreeStar3 => "3∗3",
            Six32 => "632",
            Star632 => "∗632",
        }
    }

    pub fn hermann_mauguin(&self) -> &'static str {
        [
            "p1", "p2", "pm", "pg", "cm", "pmm", "pmg", "pgg", "cmm", "p4", "p4m", "p4g", "p3", "p3m1", "p31m", "p6",
            "p6m",
        ][*self as usize]
    }

    pub fn point_group_order(&self) -> usize {
        [1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 8, 8, 3, 6, 6, 6, 12][*self as usize]
    }

    /// Generators in square coordinates with lattice ℤ².
    pub fn standard_generators(&self) -> Vec<AffineMap<2>> {
        let lin = |m: [[i64; 2]; 2]| AffineMap::linear(Matrix::from_ints(m));
        let aff = |a: (i64, i64), b: (i64, i64), m: [[i64; 2]; 2]| {
            AffineMap::with(Vector([q(a.0, a.1), q(b.0, b.1)]), Matrix::from_ints(m))
        };
        let a = [[-1, 0], [0, 1]];
        let neg_a = [[1, 0], [0, -1]];
        let c = [[0, 1], [1, 0]];
        let neg_c = [[0, -1], [-1, 0]];
        let neg_i = [[-1, 0], [0, -1]];
        let ac = [[0, -1], [1, 0]];
        let r = [[0, -1], [1, -1]];
        let bc = [[1, -1], [1, 0]];
        let mut gens =
            vec![AffineMap::translation(Vector([qi(1), qi(0)])), AffineMap::translation(Vector([qi(0), qi(1)]))];
        gens.extend(match self {
            Torus => vec![],
            Pillow => vec![lin(neg_i)],
            StarStar => vec![lin(neg_a)],
            CrossCross => vec![aff((1, 2), (0, 1), neg_a)],
            StarCross => vec![lin(c)],
            Star2222 => vec![lin(a), lin(neg_a)],
            TwoTwoStar => vec![lin(neg_i), aff((1, 2), (0, 1), a)],
            TwoTwoCross => vec![lin(neg_i), aff((1, 2), (1, 2), a)],
            TwoStar22 => vec![lin(neg_i), lin(c)],
            Four42 => vec![lin(ac)],
            Star442 => vec![lin(ac), lin(a)],
            FourStar2 => vec![lin(ac), aff((1, 2), (1, 2), a)],
            Three33 => vec![lin(r)],
            Star333 => vec![lin(r), lin(neg_c)],
            ThreeStar3 => vec![lin(r), lin(c)],
            Six32 => vec![lin(bc)],
            Star632 => vec![lin(bc), lin(c)],
        });
        gens
    }

    pub fn standard_group(&self) -> SpaceGroup<2> {
        SpaceGroup::new(self.standard_generators()).expect("standard wallpaper group")
    }
}

impl fmt::Display for WallpaperType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.conway())
    }
}

impl FromStr for WallpaperType {
    type Err = SpaceGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('*', "∗").replace('x', "×").replace("o", "○");
        for t in Self::ALL {
            if t.conway() == norm || t.hermann_mauguin() == s.trim() {
                return Ok(t);
            }
        }
        Err(SpaceGroupError::UnknownType(s.to_string()))
    }
}

/// Whether some element of the coset t + ℤ² + P (P a reflection) has a fixed line.
fn coset_has_mirror(rep: &AffineMap<2>) -> bool {
    let d = Matrix::identity() - rep.m;
    let w = integral_annihilator(&transpose(&d.rows(), 2), 2);
    let w = &w[0];
    (qi(w[0]) * rep.t.0[0] + qi(w[1]) * rep.t.0[1]).is_integer()
}

fn to_gl(m: &Matrix<2>) -> GlMat {
    GlMat::from_matrix(m).expect("integral point group in lattice coordinates")
}

/// Wallpaper type from point-group class, orientation content and mirror tests.
pub fn identify_wallpaper(g: &SpaceGroup<2>) -> WallpaperType {
    let basis = g.lattice_basis();
    let phi = Matrix([[basis[0].0[0], basis[1].0[0]], [basis[0].0[1], basis[1].0[1]]]);
    let phi = AffineMap::linear(phi);
    let h = g.conjugate(&phi.inverse());
    let pg = h.point_group();
    let reflections: Vec<&Matrix<2>> = pg.iter().filter(|m| m.det() == qi(-1)).collect();
    let mirrors = |m: &Matrix<2>| coset_has_mirror(h.coset_rep(m).unwrap());
    let class = |m: &Matrix<2>| class_by_invariants(&to_gl(m)).unwrap();
    match (pg.len(), reflections.is_empty()) {
        (1, _) => Torus,
        (2, true) => Pillow,
        (2, false) => match class(reflections[0]) {
            TorsionClass::C => StarCross,
            _ if mirrors(reflections[0]) => StarStar,
            _ => CrossCross,
        },
        (4, true) => Four42,
        (4, false) => {
            if class(reflections[0]) == TorsionClass::C {
                TwoStar22
            } else {
                match reflections.iter().filter(|m| mirrors(m)).count() {
                    2 => Star2222,
                    1 => TwoTwoStar,
                    _ => TwoTwoCross,
                }
            }
        }
        (8, _) => {
            let axial = reflections.iter().find(|m| class(m) == TorsionClass::A).unwrap();
            if mirrors(axial) {
                Star442
            } else {
                FourStar2
            }
        }
        (3, _) => Three33,
        (6, true) => Six32,
        (6, false) => {
            let p = reflections[0];
            let rot = pg.iter().find(|m| m.order(3) == Some(3)).unwrap();
            let fixed = integral_annihilator(&(Matrix::identity() - *p).rows(), 2);
            let v = Vector::from_ints([fixed[0][0], fixed[0][1]]);
            let rv = rot.apply(&v);
            let det = v.0[0] * rv.0[1] - v.0[1] * rv.0[0];
            if det * det == qi(1) {
                ThreeStar3
            } else {
                Star333
            }
        }
        _ => Star632,
    }
}
