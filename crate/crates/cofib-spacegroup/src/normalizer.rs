use cofib_arith::{qi, AffineMap};

use crate::{SpaceGroup, WallpaperType};

/// Direct test: f g f⁻¹ and f⁻¹ g f lie in the group for every generator g.
pub fn normalizes(group: &SpaceGroup<2>, f: &AffineMap<2>) -> bool {
    let fi = f.inverse();
    group.generators().iter().all(|g| group.contains(&f.conj(g)) && group.contains(&fi.conj(g)))
}

/// Closed forms for the standard ○, 2222, ∗×, ×× and ∗∗ groups.
pub fn in_normalizer_closed(ty: WallpaperType, f: &AffineMap<2>) -> Option<bool> {
    let m = &f.m;
    let b = &f.t.0;
    let unimodular = m.is_integral() && m.det() * m.det() == qi(1);
    let is = |rows: [[i64; 2]; 2]| *m == cofib_arith::Matrix::from_ints(rows);
    let sign_or = |rows: [[i64; 2]; 2]| {
        is([[1, 0], [0, 1]]) || is([[-1, 0], [0, -1]]) || is(rows) || *m == -cofib_arith::Matrix::from_ints(rows)
    };
    Some(match ty {
        WallpaperType::Torus => unimodular,
        WallpaperType::Pillow => unimodular && (b[0] * 2).is_integer() && (b[1] * 2).is_integer(),
        WallpaperType::StarCross => (b[0] - b[1]).is_integer() && sign_or([[0, 1], [1, 0]]),
        WallpaperType::CrossCross | WallpaperType::StarStar => (b[1] * 2).is_integer() && sign_or([[1, 0], [0, -1]]),
        _ => return None,
    })
}

pub fn in_normalizer(ty: WallpaperType, f: &AffineMap<2>) -> bool {
    in_normalizer_closed(ty, f).unwrap_or_else(|| normalizes(&ty.standard_group(), f))
}
