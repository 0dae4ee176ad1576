pub mod classes;
pub mod engine;
pub mod hex;
pub mod model;
pub mod names;
mod preferred;
pub mod torus;

use cofib_arith::linalg::solve;
use cofib_arith::{AffineMap, Matrix, Vector};
use cofib_gl2z::Gl2zError;
use cofib_spacegroup::{in_normalizer, WallpaperType};

pub use classes::{
    all_classes, class_of_names, classify_cyclic, classify_pair, element_class, pair_class, NamedAffinityClass,
    PairClass, PairKind,
};
pub use engine::{classifier, Key, Mode};
pub use model::{model, FiberModel};
pub use names::{affinity_rep, dictionary, NameEntry};
pub use torus::{torus_involution_name, torus_pair_names};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiberError {
    #[error("no affinity named `{name}` for fiber {fiber}")]
    UnknownName { fiber: WallpaperType, name: String },
    #[error("{map} does not normalize the {fiber} group")]
    NotNormalizing { fiber: WallpaperType, map: AffineMap<2> },
    #[error("affinity of order greater than 2 for fiber {fiber}")]
    NotInvolution { fiber: WallpaperType },
    #[error("the pair generates an infinite subgroup of Out for fiber {fiber}")]
    InfiniteDihedral { fiber: WallpaperType },
    #[error("{map} has infinite order modulo the {fiber} group")]
    InfiniteOrder { fiber: WallpaperType, map: AffineMap<2> },
    #[error("class outside the enumerated model of {fiber}")]
    OutsideModel { fiber: WallpaperType },
    #[error("`{a}` and `{b}` are not mutually inverse for fiber {fiber}")]
    NotInversePair { fiber: WallpaperType, a: String, b: String },
    #[error(transparent)]
    Gl2z(#[from] Gl2zError),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OutValue {
    /// ○: the linear part.
    Gl2(Matrix<2>),
    /// 2222: translation modulo ℤ² in the ½-grid and the linear part modulo ±I.
    Pillow { k: Vector<2>, pgl: Matrix<2> },
    /// Other fibers: the named component of Aff(M).
    Component(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OutRepresentative {
    pub fiber: WallpaperType,
    pub value: OutValue,
}

/// Image of f in the fiber's model of Out(M).
pub fn out_image(ty: WallpaperType, f: &AffineMap<2>) -> Result<OutRepresentative, FiberError> {
    use WallpaperType::*;
    if !in_normalizer(ty, f) {
        return Err(FiberError::NotNormalizing { fiber: ty, map: *f });
    }
    let m = model(ty);
    let value = match ty {
        Torus => OutValue::Gl2(f.m),
        Pillow => {
            let c = m.canonical(f);
            OutValue::Pillow { k: c.t, pgl: c.m }
        }
        _ => {
            let allowed: &[&str] = match ty {
                StarCross => &["idt.", "2-rot."],
                CrossCross | StarStar => &["idt.", "c-ref.", "v-ref.", "2-rot."],
                _ => &[],
            };
            let key = engine::key_of(m, Mode::Cyclic, &[*f]).0;
            let name = dictionary(ty)
                .iter()
                .filter(|e| allowed.is_empty() || allowed.contains(&e.name.as_str()))
                .find(|e| engine::key_of(m, Mode::Cyclic, &[e.rep]).0 == key)
                .ok_or(FiberError::OutsideModel { fiber: ty })?;
            OutValue::Component(name.name.clone())
        }
    };
    Ok(OutRepresentative { fiber: ty, value })
}

/// Whether k ∈ Im(K − I), so that k + K is conjugate to K by a translation.
pub fn translationally_reducible(k: &Vector<2>, m: &Matrix<2>) -> bool {
    let d = *m - Matrix::identity();
    solve(&d.rows(), &k.to_vec(), 2).is_some()
}

/// Class name of an affinity with f² ∈ M.
pub fn classify_involution(ty: WallpaperType, f: &AffineMap<2>) -> Result<NamedAffinityClass, FiberError> {
    if !in_normalizer(ty, f) {
        return Err(FiberError::NotNormalizing { fiber: ty, map: *f });
    }
    if model(ty).order_mod_m(f, 2).is_none() {
        return Err(FiberError::NotInvolution { fiber: ty });
    }
    if ty == WallpaperType::Torus {
        let name = torus_involution_name(f)?;
        return Ok(NamedAffinityClass { fiber: ty, name: name.to_string(), representative: affinity_rep(ty, name)? });
    }
    element_class(ty, f)
}

/// Class name of any finite-order affinity.
pub fn classify_element(ty: WallpaperType, f: &AffineMap<2>) -> Result<NamedAffinityClass, FiberError> {
    if !in_normalizer(ty, f) {
        return Err(FiberError::NotNormalizing { fiber: ty, map: *f });
    }
    element_class(ty, f)
}
