use cofib_fiber::{affinity_rep, class_of_names, classify_element, PairClass, PairKind};
use cofib_spacegroup::WallpaperType::{self, *};

use crate::pipeline::IsoType;
use crate::FibrationError;

type Deformation =
    (WallpaperType, IsoType, WallpaperType, [(&'static str, &'static str); 2], (&'static str, &'static str));

/// Rows whose pair is not αβ-adjusted from the actions but fixed by an affine deformation.
/// The actions alone do not separate the two D₃ rows over ○, so the quotient is part of the key.
pub const DEFORMATIONS: [Deformation; 4] = [
    (Pillow, IsoType::D(3), Star632, [("ref.", "ref."), ("3-rot.", "3-rot.")], ("2-aff.", "d-ref.")),
    (Torus, IsoType::D(3), Star333, [("o-ref.", "ref."), ("3-rot.", "3-rot.")], ("e-ref.", "m-aff.")),
    (Torus, IsoType::D(3), ThreeStar3, [("n-ref.", "ref."), ("3-rot.", "3-rot.")], ("n-aff.", "d-ref.")),
    (Torus, IsoType::D(6), Star632, [("m-ref.", "ref."), ("6-rot.", "6-rot.")], ("m-aff.", "d-ref.")),
];

/// The deformation-dictionary pair for the given actions, matched by affinity class.
pub fn deformation_pair(
    ty: WallpaperType,
    iso: IsoType,
    quotient: WallpaperType,
    actions: &[(String, String)],
) -> Result<Option<PairClass>, FibrationError> {
    for (fiber, group, q, acts, pair) in DEFORMATIONS {
        if fiber != ty || group != iso || q != quotient || acts.len() != actions.len() {
            continue;
        }
        let mut all = true;
        for ((f, b), (g, c)) in acts.iter().zip(actions) {
            let named = classify_element(ty, &affinity_rep(ty, f)?)?.name;
            all &= named == *g && b == c;
        }
        if all {
            return Ok(Some(class_of_names(ty, PairKind::Dihedral, pair.0, pair.1)?));
        }
    }
    Ok(None)
}
