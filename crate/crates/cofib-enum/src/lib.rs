use std::fmt;

use cofib_arith::Q;
use cofib_fiber::names::display_index;
use cofib_fiber::{all_classes, model, Key, NamedAffinityClass, PairClass, PairKind};
use cofib_spacegroup::WallpaperType::{self, *};

/// An element of Isom(C∞, M) or Isom(D∞, M) given by a classifying pair.
#[derive(Clone, Debug)]
pub struct ClassifyingPair {
    pub fiber: WallpaperType,
    pub kind: PairKind,
    pub members: [NamedAffinityClass; 2],
    pub asterisk: bool,
    /// Reduced translation invariant of the class when M has continuous translations.
    pub parameter: Option<Vec<Q>>,
    pub key: Key,
}

impl ClassifyingPair {
    pub fn names(&self) -> (&str, &str) {
        (&self.members[0].name, &self.members[1].name)
    }
}

impl PartialEq for ClassifyingPair {
    fn eq(&self, o: &Self) -> bool {
        self.fiber == o.fiber && self.kind == o.kind && self.key == o.key
    }
}

impl Eq for ClassifyingPair {}

impl PartialEq<PairClass> for ClassifyingPair {
    fn eq(&self, o: &PairClass) -> bool {
        self.fiber == o.fiber && self.kind == o.kind && self.key == o.key
    }
}

impl From<PairClass> for ClassifyingPair {
    fn from(p: PairClass) -> Self {
        let parameter = (!model(p.fiber).t_cont.is_empty()).then(|| p.key.trans.clone());
        ClassifyingPair {
            fiber: p.fiber,
            kind: p.kind,
            members: p.members,
            asterisk: p.asterisk,
            parameter,
            key: p.key,
        }
    }
}

impl fmt::Display for ClassifyingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.names();
        write!(f, "{{{a}, {b}}}{}", if self.asterisk { "∗" } else { "" })
    }
}

fn enumerate(ty: WallpaperType, kind: PairKind) -> Vec<ClassifyingPair> {
    let mut out: Vec<ClassifyingPair> = all_classes(ty, kind).into_iter().map(ClassifyingPair::from).collect();
    out.sort_by_cached_key(|p| {
        let (a, b) = p.names();
        (display_index(ty, a), display_index(ty, b), a.to_string(), b.to_string())
    });
    out
}

/// Isom(C∞, M): pairs {α, α⁻¹} up to conjugacy in Aff(M).
pub fn enum_cyclic(ty: WallpaperType) -> Vec<ClassifyingPair> {
    enumerate(ty, PairKind::Cyclic)
}

/// Isom(D∞, M): unordered pairs of affinities of order at most 2 modulo M.
pub fn enum_dihedral(ty: WallpaperType) -> Vec<ClassifyingPair> {
    enumerate(ty, PairKind::Dihedral)
}

/// Counts (C∞, D∞) stated in the prose; ∗∗, ∗2222, 22∗ and 2∗22 have none.
pub fn stated_counts(ty: WallpaperType) -> Option<(usize, usize)> {
    Some(match ty {
        Star632 => (1, 1),
        Six32 | ThreeStar3 | FourStar2 | Star442 => (2, 3),
        Star333 => (3, 4),
        Three33 => (6, 13),
        Four42 => (4, 10),
        TwoTwoCross => (5, 12),
        StarCross => (2, 6),
        CrossCross => (4, 21),
        Pillow => (10, 44),
        Torus => (7, 34),
        StarStar | Star2222 | TwoTwoStar | TwoStar22 => return None,
    })
}
