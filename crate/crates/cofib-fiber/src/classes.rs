use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use cofib_arith::AffineMap;
use cofib_spacegroup::WallpaperType;

use crate::engine::{classifier, key_of, Key, Mode};
use crate::model::model;
use crate::names::{affinity_rep, dictionary};
use crate::preferred::TABLE_PAIRS;
use crate::FiberError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedAffinityClass {
    pub fiber: WallpaperType,
    pub name: String,
    pub representative: AffineMap<2>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PairKind {
    Cyclic,
    Dihedral,
}

impl PairKind {
    pub fn mode(self) -> Mode {
        match self {
            PairKind::Cyclic => Mode::Cyclic,
            PairKind::Dihedral => Mode::Pair,
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Cyclic => "cyclic",
            PairKind::Dihedral => "dihedral",
        })
    }
}

/// A class of C∞ or D∞ classifying data; equality is by class, not by display names.
#[derive(Clone, Debug)]
pub struct PairClass {
    pub fiber: WallpaperType,
    pub kind: PairKind,
    pub members: [NamedAffinityClass; 2],
    pub asterisk: bool,
    pub key: Key,
}

impl PairClass {
    pub fn names(&self) -> (&str, &str) {
        (&self.members[0].name, &self.members[1].name)
    }
}

impl PartialEq for PairClass {
    fn eq(&self, o: &Self) -> bool {
        self.fiber == o.fiber && self.kind == o.kind && self.key == o.key
    }
}

impl Eq for PairClass {}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}{}", self.members[0].name, self.members[1].name, if self.asterisk { "∗" } else { "" })
    }
}

fn table_pairs(ty: WallpaperType, kind: PairKind) -> impl Iterator<Item = (&'static str, &'static str)> {
    TABLE_PAIRS.lines().filter_map(move |l| {
        let c: Vec<&str> = l.split('\t').collect();
        (c[0].parse::<WallpaperType>().ok() == Some(ty) && c[1] == kind.to_string()).then_some((c[2], c[3]))
    })
}

fn inverse_name(name: &str) -> String {
    match name.strip_suffix("⁻¹") {
        Some(b) => b.to_string(),
        None => format!("{name}⁻¹"),
    }
}

type NameMap = HashMap<Key, (String, String)>;

/// Display names of every class, preferring the tables' labels and then dictionary order.
fn names(ty: WallpaperType, mode: Mode) -> &'static NameMap {
    static N: [[OnceLock<NameMap>; 3]; 17] = [const { [const { OnceLock::new() }; 3] }; 17];
    N[ty as usize][mode as usize].get_or_init(|| {
        let cl = classifier(ty, mode);
        let m = model(ty);
        let dict = dictionary(ty);
        let mut out: NameMap = HashMap::new();
        let offer = |a: &str, b: &str, out: &mut NameMap| {
            let (Ok(f), Ok(g)) = (affinity_rep(ty, a), affinity_rep(ty, b)) else { return };
            let tuple = if mode == Mode::Pair { vec![f, g] } else { vec![f] };
            if let Ok(root) = cl.classify(&tuple) {
                out.entry(root).or_insert_with(|| (a.to_string(), b.to_string()));
            }
        };
        match mode {
            Mode::Single => {
                for e in dict {
                    offer(&e.name, &e.name, &mut out);
                }
                for e in dict {
                    let n = inverse_name(&e.name);
                    offer(&n, &n, &mut out);
                }
            }
            Mode::Cyclic => {
                for (a, b) in table_pairs(ty, PairKind::Cyclic) {
                    offer(a, b, &mut out);
                }
                for e in dict {
                    let b = if m.order_mod_m(&e.rep, 2).is_some() { e.name.clone() } else { inverse_name(&e.name) };
                    offer(&e.name, &b, &mut out);
                }
            }
            Mode::Pair => {
                for (a, b) in table_pairs(ty, PairKind::Dihedral) {
                    offer(a, b, &mut out);
                }
                for (i, e) in dict.iter().enumerate() {
                    for f in &dict[i..] {
                        offer(&e.name, &f.name, &mut out);
                    }
                }
            }
        }
        out
    })
}

fn named(ty: WallpaperType, name: &str) -> NamedAffinityClass {
    NamedAffinityClass { fiber: ty, name: name.to_string(), representative: affinity_rep(ty, name).unwrap() }
}

fn fallback(ty: WallpaperType, f: &AffineMap<2>) -> NamedAffinityClass {
    NamedAffinityClass { fiber: ty, name: format!("({f})"), representative: *f }
}

/// The pair class with a given root.
pub fn pair_class(ty: WallpaperType, kind: PairKind, root: &Key) -> PairClass {
    let cl = classifier(ty, kind.mode());
    let members = match names(ty, kind.mode()).get(root) {
        Some((a, b)) => [named(ty, a), named(ty, b)],
        None => {
            let rep = cl.representative(root);
            let second = match kind {
                PairKind::Dihedral => rep[1],
                PairKind::Cyclic => rep[0].inverse(),
            };
            [fallback(ty, &rep[0]), fallback(ty, &second)]
        }
    };
    PairClass { fiber: ty, kind, members, asterisk: kind == PairKind::Dihedral && cl.asterisk(root), key: root.clone() }
}

/// Name of the conjugacy class of a single affinity.
pub fn element_class(ty: WallpaperType, f: &AffineMap<2>) -> Result<NamedAffinityClass, FiberError> {
    let root = classifier(ty, Mode::Single).classify(&[*f])?;
    Ok(match names(ty, Mode::Single).get(&root) {
        Some((a, _)) => named(ty, a),
        None => fallback(ty, f),
    })
}

pub fn classify_cyclic(ty: WallpaperType, f: &AffineMap<2>) -> Result<PairClass, FiberError> {
    let root = classifier(ty, Mode::Cyclic).classify(&[*f])?;
    Ok(pair_class(ty, PairKind::Cyclic, &root))
}

pub fn classify_pair(ty: WallpaperType, f: &AffineMap<2>, g: &AffineMap<2>) -> Result<PairClass, FiberError> {
    let root = classifier(ty, Mode::Pair).classify(&[*f, *g])?;
    Ok(pair_class(ty, PairKind::Dihedral, &root))
}

/// Class of a pair given by names; a cyclic pair must be mutually inverse up to the identity component.
pub fn class_of_names(ty: WallpaperType, kind: PairKind, a: &str, b: &str) -> Result<PairClass, FiberError> {
    let f = affinity_rep(ty, a)?;
    let g = affinity_rep(ty, b)?;
    match kind {
        PairKind::Cyclic => {
            let m = model(ty);
            if key_of(m, Mode::Cyclic, &[g]).0 != key_of(m, Mode::Cyclic, &[f.inverse()]).0 {
                return Err(FiberError::NotInversePair { fiber: ty, a: a.to_string(), b: b.to_string() });
            }
            classify_cyclic(ty, &f)
        }
        PairKind::Dihedral => classify_pair(ty, &f, &g),
    }
}

/// All classes of the given kind, with display names.
pub fn all_classes(ty: WallpaperType, kind: PairKind) -> Vec<PairClass> {
    classifier(ty, kind.mode()).classes().map(|r| pair_class(ty, kind, r)).collect()
}
