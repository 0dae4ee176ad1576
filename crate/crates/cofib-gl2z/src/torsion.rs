use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::amalgam::{hex_group, square_group, Vertex};
use crate::mat::{closure, GlMat, A, B, C, H, I, NEG_I, R};
use crate::Gl2zError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TorsionClass {
    Identity,
    NegIdentity,
    A,
    C,
    /// (BC)²
    R,
    AC,
    BC,
}

impl TorsionClass {
    pub const ALL: [TorsionClass; 7] = [
        TorsionClass::Identity,
        TorsionClass::NegIdentity,
        TorsionClass::A,
        TorsionClass::C,
        TorsionClass::R,
        TorsionClass::AC,
        TorsionClass::BC,
    ];

    pub fn representative(&self) -> GlMat {
        match self {
            TorsionClass::Identity => I,
            TorsionClass::NegIdentity => NEG_I,
            TorsionClass::A => A,
            TorsionClass::C => C,
            TorsionClass::R => R,
            TorsionClass::AC => A * C,
            TorsionClass::BC => H,
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            TorsionClass::Identity => 1,
            TorsionClass::NegIdentity | TorsionClass::A | TorsionClass::C => 2,
            TorsionClass::R => 3,
            TorsionClass::AC => 4,
            TorsionClass::BC => 6,
        }
    }
}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TorsionClass::Identity => "I",
            TorsionClass::NegIdentity => "-I",
            TorsionClass::A => "A",
            TorsionClass::C => "C",
            TorsionClass::R => "(BC)^2",
            TorsionClass::AC => "AC",
            TorsionClass::BC => "BC",
        };
        write!(f, "{s}")
    }
}

fn primitive_kernel(m: [[i64; 2]; 2]) -> [i64; 2] {
    // kernel of a rank-one integer matrix
    let row = if m[0] != [0, 0] { m[0] } else { m[1] };
    let v = [-row[1], row[0]];
    let g = gcd(v[0], v[1]);
    [v[0] / g, v[1] / g]
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Class from order, determinant, trace and the eigenbasis test.
pub fn class_by_invariants(k: &GlMat) -> Result<TorsionClass, Gl2zError> {
    let ord = k.order(12).ok_or(Gl2zError::InfiniteOrder(*k))?;
    Ok(match (ord, k.det()) {
        (1, _) => TorsionClass::Identity,
        (2, 1) => TorsionClass::NegIdentity,
        (2, _) => {
            let m = k.0;
            let plus = primitive_kernel([[m[0][0] - 1, m[0][1]], [m[1][0], m[1][1] - 1]]);
            let minus = primitive_kernel([[m[0][0] + 1, m[0][1]], [m[1][0], m[1][1] + 1]]);
            if (plus[0] * minus[1] - plus[1] * minus[0]).abs() == 1 {
                TorsionClass::A
            } else {
                TorsionClass::C
            }
        }
        (3, _) => TorsionClass::R,
        (4, _) => TorsionClass::AC,
        (6, _) => TorsionClass::BC,
        _ => return Err(Gl2zError::InfiniteOrder(*k)),
    })
}

/// Reduce the positive form [[a, b], [b, c]] by Lagrange–Gauss; returns (reduced form, P) with Pᵀ Q P reduced.
fn reduce_form(mut q: [i64; 3]) -> ([i64; 3], GlMat) {
    let mut p = I;
    loop {
        let [a, b, c] = q;
        if a > c {
            q = [c, b, a];
            p = p * C;
            continue;
        }
        if 2 * b.abs() > a {
            let k = (2 * b + a).div_euclid(2 * a);
            q = [a, b - k * a, c - 2 * k * b + k * k * a];
            p = p * GlMat([[1, -k], [0, 1]]);
            continue;
        }
        break;
    }
    if q[1] > 0 {
        q[1] = -q[1];
        p = p * A;
    }
    (q, p)
}

/// A conjugator X with X S X⁻¹ inside ⟨A,C⟩ or ⟨B,C⟩, via an invariant positive form.
pub fn vertex_embedding(s: &[GlMat]) -> Result<(Vertex, GlMat), Gl2zError> {
    let group = closure(s, 12).ok_or(Gl2zError::NotFiniteGroup)?;
    let mut form = [0i64; 3];
    for h in &group {
        let m = h.0;
        form[0] += m[0][0] * m[0][0] + m[1][0] * m[1][0];
        form[1] += m[0][0] * m[0][1] + m[1][0] * m[1][1];
        form[2] += m[0][1] * m[0][1] + m[1][1] * m[1][1];
    }
    let (_, p) = reduce_form(form);
    let x = p.inv();
    let image: Vec<GlMat> = group.iter().map(|h| x.conj(h)).collect();
    if image.iter().all(|g| square_group().contains(g)) {
        Ok((Vertex::Square, x))
    } else if image.iter().all(|g| hex_group().contains(g)) {
        Ok((Vertex::Hex, x))
    } else {
        Err(Gl2zError::NotFiniteGroup)
    }
}

/// For each finite-order element of the vertex groups, a conjugator onto its class representative.
fn vertex_witnesses() -> &'static HashMap<GlMat, (TorsionClass, GlMat)> {
    static W: OnceLock<HashMap<GlMat, (TorsionClass, GlMat)>> = OnceLock::new();
    W.get_or_init(|| {
        // BFS over conjugates of each representative, conjugating by A, B, C
        let mut out = HashMap::new();
        for cls in TorsionClass::ALL {
            let rep = cls.representative();
            let mut seen: HashMap<GlMat, GlMat> = HashMap::from([(rep, I)]);
            let mut queue = VecDeque::from([rep]);
            while let Some(k) = queue.pop_front() {
                let y = seen[&k];
                for g in [A, B, C] {
                    let k2 = g.conj(&k);
                    if k2.max_abs() <= 3 && !seen.contains_key(&k2) {
                        // g y rep y⁻¹ g⁻¹ = k2
                        seen.insert(k2, g * y);
                        queue.push_back(k2);
                    }
                }
            }
            for (k, y) in seen {
                if square_group().contains(&k) || hex_group().contains(&k) {
                    out.insert(k, (cls, y.inv()));
                }
            }
        }
        out
    })
}

/// Class of K together with X such that X K X⁻¹ is the class representative.
pub fn finite_order_class(k: &GlMat) -> Result<(TorsionClass, GlMat), Gl2zError> {
    if k.order(12).is_none() {
        return Err(Gl2zError::InfiniteOrder(*k));
    }
    let (_, x) = vertex_embedding(&[*k])?;
    let h = x.conj(k);
    let (cls, y) = vertex_witnesses()[&h];
    Ok((cls, y * x))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Centralizer {
    Whole,
    Finite(Vec<GlMat>),
}

impl Centralizer {
    pub fn contains(&self, g: &GlMat) -> bool {
        match self {
            Centralizer::Whole => true,
            Centralizer::Finite(v) => v.contains(g),
        }
    }
}

pub fn centralizer_finite(k: &GlMat) -> Result<Centralizer, Gl2zError> {
    let (cls, x) = finite_order_class(k)?;
    let gens: Vec<GlMat> = match cls {
        TorsionClass::Identity | TorsionClass::NegIdentity => return Ok(Centralizer::Whole),
        TorsionClass::A => vec![NEG_I, A],
        TorsionClass::C => vec![NEG_I, C],
        TorsionClass::AC => vec![A * C],
        TorsionClass::R | TorsionClass::BC => vec![H],
    };
    let xi = x.inv();
    let mut elems: Vec<GlMat> = closure(&gens, 12).unwrap().iter().map(|c| xi.conj(c)).collect();
    elems.sort();
    Ok(Centralizer::Finite(elems))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DetSet {
    Plus,
    Minus,
    Any,
}

impl DetSet {
    pub fn allows(&self, d: i64) -> bool {
        match self {
            DetSet::Plus => d == 1,
            DetSet::Minus => d == -1,
            DetSet::Any => true,
        }
    }
}

/// Some X with X K X⁻¹ = L and allowed determinant; None is certified by the centralizer.
pub fn conjugators_det(k: &GlMat, l: &GlMat, dets: DetSet) -> Result<Option<GlMat>, Gl2zError> {
    let (ck, xk) = finite_order_class(k)?;
    let (cl, xl) = finite_order_class(l)?;
    if ck != cl {
        return Ok(None);
    }
    let x0 = xl.inv() * xk;
    debug_assert_eq!(x0.conj(k), *l);
    let cands: Vec<GlMat> = match centralizer_finite(k)? {
        Centralizer::Whole => vec![I, A],
        Centralizer::Finite(v) => v,
    };
    Ok(cands.iter().map(|c| x0 * *c).find(|x| dets.allows(x.det())))
}

/// Some X conjugating K1 to L1 and K2 to L2 simultaneously.
pub fn pair_conjugators_det(
    src: (&GlMat, &GlMat),
    dst: (&GlMat, &GlMat),
    dets: DetSet,
) -> Result<Option<GlMat>, Gl2zError> {
    let Some(x0) = conjugators_det(src.0, dst.0, DetSet::Any)? else {
        return Ok(None);
    };
    match centralizer_finite(src.0)? {
        Centralizer::Whole => conjugators_det(src.1, dst.1, dets),
        Centralizer::Finite(cent) => {
            Ok(cent.iter().map(|c| x0 * *c).find(|x| dets.allows(x.det()) && x.conj(src.1) == *dst.1))
        }
    }
}

/// Conjugacy modulo ±I (in PGL(2,ℤ)); determinants are well defined in dimension two.
pub fn projective_conjugators_det(k: &GlMat, l: &GlMat, dets: DetSet) -> Result<Option<GlMat>, Gl2zError> {
    for t in [*l, -*l] {
        if let Some(x) = conjugators_det(k, &t, dets)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn projective_pair_conjugators_det(
    src: (&GlMat, &GlMat),
    dst: (&GlMat, &GlMat),
    dets: DetSet,
) -> Result<Option<GlMat>, Gl2zError> {
    for t0 in [*dst.0, -*dst.0] {
        for t1 in [*dst.1, -*dst.1] {
            if let Some(x) = pair_conjugators_det(src, (&t0, &t1), dets)? {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}
