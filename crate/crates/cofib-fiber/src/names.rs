use std::sync::OnceLock;

use cofib_arith::{q, qi, AffineMap, Matrix, Vector, Q};
use cofib_spacegroup::WallpaperType::{self, *};

use crate::FiberError;

#[derive(Clone, Debug)]
pub struct NameEntry {
    pub name: String,
    pub rep: AffineMap<2>,
    /// Hexagonal-coordinate name bound to a square-coordinate conjugate.
    pub alias: bool,
}

const I2: [[i64; 2]; 2] = [[1, 0], [0, 1]];
const NEG_I: [[i64; 2]; 2] = [[-1, 0], [0, -1]];
const A: [[i64; 2]; 2] = [[-1, 0], [0, 1]];
const NEG_A: [[i64; 2]; 2] = [[1, 0], [0, -1]];
const B: [[i64; 2]; 2] = [[-1, 1], [0, 1]];
const C: [[i64; 2]; 2] = [[0, 1], [1, 0]];
const NEG_C: [[i64; 2]; 2] = [[0, -1], [-1, 0]];
const AC: [[i64; 2]; 2] = [[0, -1], [1, 0]];
const CA: [[i64; 2]; 2] = [[0, 1], [-1, 0]];
const BC: [[i64; 2]; 2] = [[1, -1], [1, 0]];
const BC2: [[i64; 2]; 2] = [[0, -1], [1, -1]];
const BCB: [[i64; 2]; 2] = [[-1, 0], [-1, 1]];

fn aff(t: (Q, Q), m: [[i64; 2]; 2]) -> AffineMap<2> {
    AffineMap::with(Vector([t.0, t.1]), Matrix::from_ints(m))
}

fn half(a: i64, b: i64) -> (Q, Q) {
    (q(a, 2), q(b, 2))
}

const O: (i64, i64) = (0, 0);

struct Builder(Vec<NameEntry>);

impl Builder {
    fn add(&mut self, name: &str, t: (i64, i64), m: [[i64; 2]; 2]) -> &mut Self {
        self.push(name, aff(half(t.0, t.1), m), false)
    }

    fn push(&mut self, name: &str, rep: AffineMap<2>, alias: bool) -> &mut Self {
        self.0.push(NameEntry { name: name.to_string(), rep, alias });
        self
    }

    fn alias(&mut self, name: &str, target: &str) -> &mut Self {
        let rep = self.0.iter().find(|e| e.name == target).expect("alias target").rep;
        self.push(name, rep, true)
    }
}

fn build(ty: WallpaperType) -> Vec<NameEntry> {
    let mut b = Builder(Vec::new());
    b.add("idt.", O, I2);
    let third = aff((q(2, 3), q(1, 3)), I2);
    match ty {
        Star632 => {}
        Six32 | ThreeStar3 => {
            b.add("c-ref.", O, if ty == Six32 { C } else { NEG_I });
        }
        Three33 => {
            let c_ref = aff((qi(0), qi(0)), NEG_C);
            let t_ref = aff((qi(0), qi(0)), C);
            let t_ref2 = t_ref * third;
            b.push("c-ref.", c_ref, false)
                .push("t-ref.", t_ref, false)
                .add("2-rot.", O, NEG_I)
                .push("3-rot.", third, false)
                .push("6-sym.", c_ref * third, false)
                .push("t-ref.′", t_ref2, false)
                .push("2-rot.′", c_ref * t_ref2, false);
        }
        Star333 => {
            let t_ref = aff((qi(0), qi(0)), NEG_I);
            b.push("t-ref.", t_ref, false).push("3-rot.", third, false).push("t-ref.′", t_ref * third, false);
        }
        FourStar2 => {
            b.add("c-ref.", O, A);
        }
        Star442 => {
            b.add("t-ref.", (1, 1), I2);
        }
        Four42 => {
            b.add("2-rot.", (1, 1), I2).add("c-ref.", O, A).add("t-ref.", (1, 1), A);
        }
        TwoStar22 => {
            b.add("2-rot.", (1, 1), I2).add("d-ref.", O, A).add("c-ref.", (1, 1), A);
        }
        TwoTwoStar => {
            b.add("c-ref.", O, NEG_A).add("2-rot.", (0, 1), I2).add("m-ref.", (0, 1), NEG_A);
        }
        TwoTwoCross | Star2222 => {
            b.add("m-ref.", (1, 0), A).add("m-ref.′", (0, 1), NEG_A);
            if ty == TwoTwoCross {
                b.add("d-ref.", O, C).add("d-ref.′", (1, 1), NEG_C).add("2-rot.", (1, 1), NEG_I).add(
                    "4-rot.",
                    (0, 1),
                    CA,
                );
            } else {
                let m_ref = aff(half(1, 0), A);
                b.add("2-rot.", (1, 1), I2).add("d-ref.", O, C).add("d-ref.′", (1, 1), NEG_C);
                b.push("4-rot.", aff((qi(0), qi(0)), C) * m_ref, false);
            }
        }
        StarCross => {
            b.add("c-ref.", (1, 1), I2).add("2-rot.", O, NEG_I).add("2-rot.′", (1, 1), NEG_I);
        }
        CrossCross => {
            b.add("m-ref.", (1, 0), I2)
                .add("2-sym.", (0, 1), I2)
                .add("c-ref.", (0, 1), NEG_A)
                .add("v-ref.", O, A)
                .add("2-rot.", (0, 1), NEG_I)
                .add("v-ref.′", O, NEG_I)
                .add("2-rot.′", (1, 1), NEG_I);
        }
        StarStar => {
            b.add("c-ref.", (0, 1), I2)
                .add("2-sym.", (1, 0), I2)
                .add("g-ref.", (1, 1), I2)
                .add("v-ref.", O, NEG_I)
                .add("2-rot.", (0, 1), NEG_I)
                .add("v-ref.′", (1, 0), NEG_I)
                .add("2-rot.′", (1, 1), NEG_I);
        }
        Pillow => {
            b.add("c-rot.", (1, 1), I2)
                .add("m-rot.", (1, 0), I2)
                .add("m-rot.′", (0, 1), I2)
                .add("c-ref.", O, A)
                .add("m-ref.", (1, 0), A)
                .add("m-ref.′", (0, 1), A)
                .add("2-sym.", (1, 1), A)
                .add("d-ref.", O, C)
                .add("d-ref.′", (1, 1), C)
                .add("d-rot.", O, AC)
                .add("d-rot.′", (1, 1), AC)
                .add("4-rot.", (1, 0), AC)
                .add("4-sym.", (1, 0), C)
                .add("3-aff.", O, BC)
                .add("2-aff.", O, B);
            b.alias("ref.", "2-aff.").alias("ref.′", "d-ref.").alias("3-rot.", "3-aff.").alias("4-cyc.", "4-sym.");
        }
        Torus => {
            b.add("h-rot.", (1, 0), I2)
                .add("v-rot.", (0, 1), I2)
                .add("2-sym.", (1, 1), I2)
                .add("2-rot.", O, NEG_I)
                .add("h-ref.", O, A)
                .add("v-grf.", (0, 1), A)
                .add("v-ref.", O, NEG_A)
                .add("h-grf.", (1, 0), NEG_A)
                .add("d-ref.", O, C)
                .add("e-ref.", O, NEG_C)
                .add("4-rot.", O, AC)
                .add("4-sym.", (0, 1), C)
                .add("3-aff.", O, BC2)
                .add("6-aff.", O, BC)
                .add("m-aff.", O, B)
                .add("n-aff.", O, BCB);
            // decorations multiply on the left by h-rot., v-rot., 2-sym.
            let base: Vec<NameEntry> = b.0.iter().skip(1).cloned().collect();
            for (mark, t) in [("'", (1, 0)), ("′", (0, 1)), ("″", (1, 1))] {
                for e in &base {
                    b.push(&format!("{}{mark}", e.name), aff(half(t.0, t.1), I2) * e.rep, false);
                }
            }
            b.alias("l-ref.", "d-ref.")
                .alias("m-ref.", "m-aff.")
                .alias("n-ref.", "n-aff.")
                .alias("o-ref.", "e-ref.")
                .alias("3-rot.", "3-aff.")
                .alias("6-rot.", "6-aff.");
        }
    }
    b.0
}

pub fn dictionary(ty: WallpaperType) -> &'static [NameEntry] {
    static D: [OnceLock<Vec<NameEntry>>; 17] = [const { OnceLock::new() }; 17];
    D[ty as usize].get_or_init(|| build(ty))
}

fn normalize(name: &str) -> String {
    name.trim().replace("^-1", "⁻¹").replace("''", "″")
}

/// Representative of a named affinity; a trailing ⁻¹ inverts.
pub fn affinity_rep(ty: WallpaperType, name: &str) -> Result<AffineMap<2>, FiberError> {
    let n = normalize(name);
    let (base, inv) = match n.strip_suffix("⁻¹") {
        Some(b) => (b.to_string(), true),
        None => (n.clone(), false),
    };
    let lookup = |s: &str| dictionary(ty).iter().find(|e| e.name == s).map(|e| e.rep);
    let rep = lookup(&base)
        .or_else(|| if ty != Torus { lookup(&base.replace('\'', "′")) } else { None })
        .ok_or_else(|| FiberError::UnknownName { fiber: ty, name: name.to_string() })?;
    Ok(if inv { rep.inverse() } else { rep })
}

pub fn display_index(ty: WallpaperType, name: &str) -> usize {
    let base = name.strip_suffix("⁻¹").unwrap_or(name);
    dictionary(ty).iter().position(|e| e.name == base).unwrap_or(usize::MAX)
}
