use std::fmt;

use cofib_arith::{qi, AffineMap, Matrix, Vector, Q};
use cofib_spacegroup::{identify_wallpaper, SpaceGroup, WallpaperType};

use crate::FibrationError;

/// An isometry x ↦ εx + t of the line V⊥.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BaseMap {
    pub eps: i64,
    pub t: Q,
}

impl BaseMap {
    pub fn identity() -> Self {
        BaseMap { eps: 1, t: qi(0) }
    }

    pub fn compose(&self, o: &BaseMap) -> BaseMap {
        BaseMap { eps: self.eps * o.eps, t: qi(self.eps) * o.t + self.t }
    }

    pub fn inverse(&self) -> BaseMap {
        BaseMap { eps: self.eps, t: -qi(self.eps) * self.t }
    }
}

impl fmt::Display for BaseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}", if self.eps < 0 { "-" } else { "" }, self.t)
    }
}

/// Splits a block-diagonal affinity of E³ into its actions on V = span(e₁, e₂) and V⊥ = span(e₃).
pub fn split(g: &AffineMap<3>) -> Option<(AffineMap<2>, BaseMap)> {
    let m = &g.m.0;
    if m[0][2] != qi(0) || m[1][2] != qi(0) || m[2][0] != qi(0) || m[2][1] != qi(0) {
        return None;
    }
    let eps = if m[2][2] == qi(1) {
        1
    } else if m[2][2] == qi(-1) {
        -1
    } else {
        return None;
    };
    let fiber = AffineMap::with(Vector([g.t.0[0], g.t.0[1]]), Matrix([[m[0][0], m[0][1]], [m[1][0], m[1][1]]]));
    Some((fiber, BaseMap { eps, t: g.t.0[2] }))
}

/// The block-diagonal affinity with the given actions on V and V⊥.
pub fn join(fiber: &AffineMap<2>, base: &BaseMap) -> AffineMap<3> {
    let (m, t) = (&fiber.m.0, &fiber.t.0);
    let z = qi(0);
    AffineMap::with(
        Vector([t[0], t[1], base.t]),
        Matrix([[m[0][0], m[0][1], z], [m[1][0], m[1][1], z], [z, z, qi(base.eps)]]),
    )
}

/// An affinity φ of V with φ N φ⁻¹ equal to the standard group of N's type.
pub fn standard_frame(n: &SpaceGroup<2>) -> Result<(WallpaperType, AffineMap<2>), FibrationError> {
    let ty = identify_wallpaper(n);
    let std = ty.standard_group();
    let same = |g: &SpaceGroup<2>| g.contains_group(&std) && std.contains_group(g);
    if same(n) {
        return Ok((ty, AffineMap::identity()));
    }
    let b = n.lattice_basis();
    let p = AffineMap::linear(Matrix([[b[0].0[0], b[1].0[0]], [b[0].0[1], b[1].0[1]]]));
    let base = n.conjugate(&p.inverse());
    let r = -2i64..=2;
    for a in r.clone() {
        for bb in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if (a * d - bb * c).abs() != 1 {
                        continue;
                    }
                    let x = Matrix::from_ints([[a, bb], [c, d]]);
                    for u0 in 0..12 {
                        for u1 in 0..12 {
                            let h = AffineMap::with(Vector([Q::new(u0, 12), Q::new(u1, 12)]), x);
                            if same(&base.conjugate(&h)) {
                                return Ok((ty, h * p.inverse()));
                            }
                        }
                    }
                }
            }
        }
    }
    Err(FibrationError::NoStandardFrame(ty))
}
