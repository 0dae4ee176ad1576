use std::fmt;

use cofib_arith::qi;
use cofib_gl2z::{
    conjugators_det, pair_conjugators_det, projective_conjugators_det, projective_pair_conjugators_det, DetSet, GlMat,
};
use cofib_spacegroup::WallpaperType;

use crate::pipeline::{FibrationRecord, GeometricGenerators};
use crate::FibrationError;

/// Images in Out(N) ≅ GL(2,ℤ) (or PGL(2,ℤ) when projective) of the positively oriented generator
/// of Γ/N ≅ C∞, or of its Coxeter pair in increasing order when Γ/N ≅ D∞.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReducedKind {
    Cyclic(GlMat),
    Dihedral(GlMat, GlMat),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReducedRecord {
    pub kind: ReducedKind,
    pub projective: bool,
}

impl ReducedRecord {
    pub fn cyclic(k: GlMat) -> Self {
        ReducedRecord { kind: ReducedKind::Cyclic(k), projective: false }
    }

    pub fn dihedral(a: GlMat, b: GlMat) -> Self {
        ReducedRecord { kind: ReducedKind::Dihedral(a, b), projective: false }
    }

    pub fn projective(self) -> Self {
        ReducedRecord { projective: true, ..self }
    }

    /// The record of the mirror image σΓσ with σ reversing V⊥.
    pub fn mirror(&self) -> Self {
        let kind = match self.kind {
            ReducedKind::Cyclic(k) => ReducedKind::Cyclic(k.inv()),
            ReducedKind::Dihedral(a, b) => ReducedKind::Dihedral(b, a),
        };
        ReducedRecord { kind, ..*self }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub case: &'static str,
    pub query: String,
    pub conjugator: Option<GlMat>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.conjugator {
            Some(x) => write!(f, "{}: {} = {}", self.case, self.query, x),
            None => write!(f, "{}: {} = none", self.case, self.query),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub enantiomorphic: bool,
    pub certificates: [Certificate; 2],
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.enantiomorphic { "enantiomorphic" } else { "not enantiomorphic" })?;
        for c in &self.certificates {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

fn cyclic_query(k: &GlMat, l: &GlMat, dets: DetSet, projective: bool) -> Result<Option<GlMat>, FibrationError> {
    Ok(if projective { projective_conjugators_det(k, l, dets)? } else { conjugators_det(k, l, dets)? })
}

fn pair_query(
    src: (&GlMat, &GlMat),
    dst: (&GlMat, &GlMat),
    dets: DetSet,
    projective: bool,
) -> Result<Option<GlMat>, FibrationError> {
    Ok(if projective {
        projective_pair_conjugators_det(src, dst, dets)?
    } else {
        pair_conjugators_det(src, dst, dets)?
    })
}

/// An orientation-preserving conjugacy either preserves both V and V⊥ orientations (the generator
/// images correspond under det +1) or reverses both (the generator goes to its inverse, the
/// Coxeter pair to its reverse, under det −1).
pub fn check_enantiomorphic(r1: &ReducedRecord, r2: &ReducedRecord) -> Result<Verdict, FibrationError> {
    if r1.projective != r2.projective {
        return Err(FibrationError::NotReduced("records over different fibers".into()));
    }
    let p = r1.projective;
    let sign = |d: DetSet| if d == DetSet::Plus { "+1" } else { "-1" };
    let certificates = match (r1.kind, r2.kind) {
        (ReducedKind::Cyclic(k), ReducedKind::Cyclic(l)) => {
            let li = l.inv();
            [(DetSet::Plus, "orientation-preserving", l), (DetSet::Minus, "orientation-reversing", li)].map(
                |(d, case, target)| {
                    let conjugator = cyclic_query(&k, &target, d, p);
                    (case, format!("conjugators_det({k}, {target}, {{{}}})", sign(d)), conjugator)
                },
            )
        }
        (ReducedKind::Dihedral(a, b), ReducedKind::Dihedral(c, d)) => {
            [(DetSet::Plus, "orientation-preserving", (c, d)), (DetSet::Minus, "orientation-reversing", (d, c))].map(
                |(s, case, t)| {
                    let conjugator = pair_query((&a, &b), (&t.0, &t.1), s, p);
                    (case, format!("pair_conjugators_det(({a}, {b}), ({}, {}), {{{}}})", t.0, t.1, sign(s)), conjugator)
                },
            )
        }
        _ => return Err(FibrationError::NotReduced("a cyclic and a dihedral record".into())),
    };
    let mut out = Vec::new();
    for (case, query, c) in certificates {
        let query = if p { query.replace("conjugators", "projective_conjugators") } else { query };
        out.push(Certificate { case, query, conjugator: c? });
    }
    let enantiomorphic = out.iter().all(|c| c.conjugator.is_none());
    let [a, b]: [Certificate; 2] = out.try_into().unwrap();
    Ok(Verdict { enantiomorphic, certificates: [a, b] })
}

/// Reduced data of an orientation-preserving record over ○ or 2222.
pub fn reduced_record(rec: &FibrationRecord) -> Result<ReducedRecord, FibrationError> {
    let projective = match rec.fiber {
        WallpaperType::Torus => false,
        WallpaperType::Pillow => true,
        other => return Err(FibrationError::NotReduced(format!("Out({other}) is not represented in GL(2,ℤ)"))),
    };
    if rec.complement.is_dihedral() || rec.structure.coset_reps.iter().any(|g| g.m.det() != qi(1)) {
        return Err(FibrationError::NotReduced("the group has orientation-reversing elements".into()));
    }
    let gl = |f: &cofib_arith::AffineMap<2>| GlMat::from_matrix(&f.m).map_err(FibrationError::from);
    let kind = match &rec.geometric {
        GeometricGenerators::Cyclic(f) => ReducedKind::Cyclic(gl(f)?),
        GeometricGenerators::Dihedral(a, b) => ReducedKind::Dihedral(gl(a)?, gl(b)?),
    };
    Ok(ReducedRecord { kind, projective })
}
