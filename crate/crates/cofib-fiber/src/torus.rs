use cofib_arith::{AffineMap, Q};
use cofib_gl2z::mat::{closure, A, B, C, I, NEG_I};
use cofib_gl2z::{finite_order_class, vertex_embedding, GlMat, TorsionClass};
use cofib_spacegroup::WallpaperType;

use crate::FiberError;

fn not_involution() -> FiberError {
    FiberError::NotInvolution { fiber: WallpaperType::Torus }
}

fn gl(f: &AffineMap<2>) -> Result<GlMat, FiberError> {
    Ok(GlMat::from_matrix(&f.m)?)
}

fn conj_by(x: GlMat, f: &AffineMap<2>) -> AffineMap<2> {
    AffineMap::linear(x.to_matrix()).conj(f)
}

fn is_involution(f: &AffineMap<2>) -> bool {
    let s = *f * *f;
    s.is_translation() && s.t.is_integral()
}

fn half(x: Q) -> bool {
    !x.is_integer()
}

/// Involution classes of ○ by case analysis on the linear part.
pub fn torus_involution_name(f: &AffineMap<2>) -> Result<&'static str, FiberError> {
    if !is_involution(f) {
        return Err(not_involution());
    }
    let (cls, x) = finite_order_class(&gl(f)?)?;
    // x f x⁻¹ = t + (class representative)
    let t = conj_by(x, f).t;
    Ok(match cls {
        TorsionClass::Identity if t.is_integral() => "idt.",
        TorsionClass::Identity => "h-rot.",
        TorsionClass::NegIdentity => "2-rot.",
        // Im(A − I) = ℚe₁, so only the e₂ offset is an invariant
        TorsionClass::A if half(t.0[1]) => "v-grf.",
        TorsionClass::A => "h-ref.",
        TorsionClass::C => "d-ref.",
        _ => return Err(not_involution()),
    })
}

fn sorted(a: &'static str, b: &'static str) -> (&'static str, &'static str) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Name of a translation of order 2 modulo ℤ² in the standard frame.
fn translation_name(f: &AffineMap<2>) -> &'static str {
    match (half(f.t.0[0]), half(f.t.0[1])) {
        (true, false) => "h-rot.",
        (false, true) => "v-rot.",
        _ => "2-sym.",
    }
}

/// Conjugate so that f has linear part A = diag(−1, 1).
fn to_axial(f: &AffineMap<2>) -> Result<GlMat, FiberError> {
    let (cls, x) = finite_order_class(&gl(f)?)?;
    debug_assert_eq!(cls, TorsionClass::A);
    Ok(x)
}

/// Representatives of the classes of unordered pairs of involutions of ○ whose product has
/// finite order in GL(2,ℤ), by the case tree on H = ⟨K, L⟩.
pub fn torus_pair_names(f: &AffineMap<2>, g: &AffineMap<2>) -> Result<(&'static str, &'static str), FiberError> {
    if !is_involution(f) || !is_involution(g) {
        return Err(not_involution());
    }
    let (k, l) = (gl(f)?, gl(g)?);
    let same = (*f * g.inverse()).is_translation() && (*f * g.inverse()).t.is_integral();
    if same {
        let n = torus_involution_name(f)?;
        return Ok((n, n));
    }
    let fid = k == I && f.t.is_integral();
    let gid = l == I && g.t.is_integral();
    if fid || gid {
        let other = if fid { g } else { f };
        return Ok(("idt.", torus_involution_name(other)?));
    }
    let h = closure(&[k, l], 12).ok_or(FiberError::InfiniteDihedral { fiber: WallpaperType::Torus })?;
    let reflection_class = |m: &GlMat| finite_order_class(m).map(|c| c.0);
    Ok(match h.len() {
        1 => ("h-rot.", "v-rot."),
        2 => {
            let nontrivial = if k != I { k } else { l };
            match reflection_class(&nontrivial)? {
                TorsionClass::NegIdentity if k == l => ("2-rot.", "2-rot."),
                TorsionClass::NegIdentity => ("h-rot.", "2-rot."),
                TorsionClass::A if k == l => {
                    let x = to_axial(f)?;
                    let (f2, g2) = (conj_by(x, f), conj_by(x, g));
                    let name = |m: &AffineMap<2>| if half(m.t.0[1]) { "v-grf." } else { "h-ref." };
                    sorted(name(&f2), name(&g2))
                }
                TorsionClass::A => {
                    let (tr, refl) = if k == I { (f, g) } else { (g, f) };
                    // x refl x⁻¹ has linear part −A = diag(1, −1) after the extra C
                    let x = C * to_axial(refl)?;
                    let (t2, r2) = (conj_by(x, tr), conj_by(x, refl));
                    (translation_name(&t2), if half(r2.t.0[0]) { "h-grf." } else { "v-ref." })
                }
                TorsionClass::C if k == l => ("d-ref.", "d-ref."),
                TorsionClass::C => {
                    let (tr, refl) = if k == I { (f, g) } else { (g, f) };
                    let (_, x) = finite_order_class(&gl(refl)?)?;
                    let t2 = conj_by(x, tr);
                    (if half(t2.t.0[0]) && half(t2.t.0[1]) { "2-sym." } else { "v-rot." }, "d-ref.")
                }
                _ => return Err(not_involution()),
            }
        }
        4 => {
            let refl = if k != NEG_I { k } else { l };
            match reflection_class(&refl)? {
                TorsionClass::A if k == NEG_I || l == NEG_I => {
                    let other = if k == NEG_I { g } else { f };
                    let x = to_axial(other)?;
                    ("2-rot.", if half(conj_by(x, other).t.0[1]) { "v-grf." } else { "h-ref." })
                }
                TorsionClass::A => {
                    let x = to_axial(f)?;
                    let (f2, g2) = (conj_by(x, f), conj_by(x, g));
                    // f2 = k + A, g2 = ℓ + (−A); the offsets k₂ and ℓ₁ are swapped by C
                    match (half(f2.t.0[1]), half(g2.t.0[0])) {
                        (false, false) => ("h-ref.", "v-ref."),
                        (true, true) => ("v-grf.'", "h-grf.′"),
                        _ => ("v-ref.′", "v-grf."),
                    }
                }
                TorsionClass::C if k == NEG_I || l == NEG_I => ("2-rot.", "d-ref."),
                TorsionClass::C => ("d-ref.", "e-ref."),
                _ => return Err(not_involution()),
            }
        }
        8 => {
            let axial = if reflection_class(&k)? == TorsionClass::A { f } else { g };
            let (_, x) = vertex_embedding(&[k, l])?;
            let mut a2 = conj_by(x, axial);
            if gl(&a2)? == -A {
                a2 = conj_by(C, &a2);
            }
            (if half(a2.t.0[1]) { "v-grf." } else { "h-ref." }, "d-ref.")
        }
        6 => {
            let (_, x) = vertex_embedding(&[k, l])?;
            let mut image = closure(&[x.conj(&k), x.conj(&l)], 12).unwrap();
            let mut first = closure(&[B * C * B, C], 12).unwrap();
            image.sort();
            first.sort();
            // the two dihedral subgroups of order 6 are normal in the hexagonal vertex group
            if image == first {
                ("n-aff.", "d-ref.")
            } else {
                ("e-ref.", "m-aff.")
            }
        }
        12 => ("m-aff.", "d-ref."),
        _ => return Err(FiberError::InfiniteDihedral { fiber: WallpaperType::Torus }),
    })
}
