use std::collections::HashMap;
use std::fmt;

use cofib_arith::{qi, AffineMap, Matrix, Vector, Q};
use cofib_enum::ClassifyingPair;
use cofib_fiber::{classify_cyclic, classify_element, classify_pair, model, NamedAffinityClass, PairClass};
use cofib_spacegroup::{identify_wallpaper, SpaceGroup, WallpaperType};

use crate::deform::deformation_pair;
use crate::split::{join, split, standard_frame, BaseMap};
use crate::FibrationError;

pub const MAX_STRUCTURE_ORDER: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Base {
    O,
    I,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::O => "O",
            Base::I => "I",
        })
    }
}

impl std::str::FromStr for Base {
    type Err = FibrationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "O" => Ok(Base::O),
            "I" => Ok(Base::I),
            other => Err(FibrationError::Malformed(format!("base `{other}` is neither O nor I"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IsoType {
    C(usize),
    D(usize),
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::C(n) => write!(f, "C{n}"),
            IsoType::D(n) => write!(f, "D{n}"),
        }
    }
}

impl std::str::FromStr for IsoType {
    type Err = FibrationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FibrationError::Malformed(format!("group `{s}`"));
        let n = s.get(1..).and_then(|n| n.parse().ok()).ok_or_else(bad)?;
        match s.chars().next() {
            Some('C') => Ok(IsoType::C(n)),
            Some('D') => Ok(IsoType::D(n)),
            _ => Err(bad()),
        }
    }
}

/// Γ with N given by generator indices; V = span(e₁, e₂).
#[derive(Clone, Debug)]
pub struct FibrationInput {
    pub gamma: SpaceGroup<3>,
    pub normal_gens: Vec<usize>,
}

/// N restricted to V, with its type and a frame carrying it to the standard group.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub group: SpaceGroup<2>,
    pub ty: WallpaperType,
    pub frame: AffineMap<2>,
}

impl Fiber {
    /// An affinity of V/N in the standard coordinates of the fiber type.
    pub fn standardize(&self, f: &AffineMap<2>) -> AffineMap<2> {
        self.frame.conj(f)
    }
}

impl FibrationInput {
    pub fn new(gamma: SpaceGroup<3>, normal_gens: Vec<usize>) -> Self {
        FibrationInput { gamma, normal_gens }
    }

    /// Checks block form, that N lives on V, completeness of its lattice and normality.
    pub fn fiber(&self) -> Result<Fiber, FibrationError> {
        let gens = self.gamma.generators();
        for (i, g) in gens.iter().enumerate() {
            if split(g).is_none() {
                return Err(FibrationError::NotBlockDiagonal(i));
            }
        }
        let mut n_gens = Vec::new();
        for &i in &self.normal_gens {
            let g = gens.get(i).ok_or_else(|| FibrationError::Malformed(format!("no generator {i}")))?;
            let (f, b) = split(g).unwrap();
            if b != BaseMap::identity() {
                return Err(FibrationError::NormalOutsideV(i));
            }
            n_gens.push(f);
        }
        let group = SpaceGroup::new(n_gens).map_err(|_| FibrationError::NotComplete)?;
        for (i, g) in gens.iter().enumerate() {
            let (gf, _) = split(g).unwrap();
            for n in group.generators() {
                if !group.contains(&gf.conj(n)) || !group.contains(&gf.inverse().conj(n)) {
                    return Err(FibrationError::NotNormal(i));
                }
            }
        }
        let (ty, frame) = standard_frame(&group)?;
        Ok(Fiber { group, ty, frame })
    }
}

/// K = N⊥: period c₀ of its translations along e₃ and the offset d of a reflection x ↦ −x + d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub period: Q,
    pub reflection: Option<Q>,
}

impl Complement {
    pub fn generators(&self) -> Vec<AffineMap<3>> {
        let id = AffineMap::identity();
        let mut out = vec![join(&id, &BaseMap { eps: 1, t: self.period })];
        if let Some(d) = self.reflection {
            out.push(join(&id, &BaseMap { eps: -1, t: d }));
        }
        out
    }

    pub fn is_dihedral(&self) -> bool {
        self.reflection.is_some()
    }

    /// Canonical representative of b modulo K.
    pub fn reduce(&self, b: &BaseMap) -> BaseMap {
        let mut b = *b;
        if let (Some(d), -1) = (self.reflection, b.eps) {
            // b = ρ ∘ (x + u) with ρ = −x + d
            b = BaseMap { eps: 1, t: d - b.t };
        }
        let r = b.t / self.period;
        BaseMap { eps: b.eps, t: (r - r.floor()) * self.period }
    }

    pub fn contains(&self, b: &BaseMap) -> bool {
        self.reduce(b) == BaseMap::identity()
    }
}

pub fn orthogonal_complement_group(gamma: &SpaceGroup<3>) -> Result<Complement, FibrationError> {
    let lat = gamma.translation_lattice();
    let line = lat.zero_prefix(2);
    let period = match line.basis() {
        [b] => {
            if b[2] < qi(0) {
                -b[2]
            } else {
                b[2]
            }
        }
        _ => return Err(FibrationError::ComplementNotCocompact),
    };
    let sigma = Matrix::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -1]]);
    let reflection = gamma.coset_rep(&sigma).and_then(|r| {
        let lam = lat.lift_prefix(&[-r.t.0[0], -r.t.0[1]])?;
        Some(r.t.0[2] + lam[2])
    });
    Ok(Complement { period, reflection })
}

/// Γ/NK by coset enumeration, keyed by the fiber affinity modulo N and the base map modulo K.
#[derive(Clone, Debug)]
pub struct StructureGroupData {
    pub coset_reps: Vec<AffineMap<3>>,
    pub table: Vec<Vec<usize>>,
    pub iso_type: IsoType,
    /// Standardized fiber affinity and reduced base map of each coset.
    pub fibers: Vec<AffineMap<2>>,
    pub bases: Vec<BaseMap>,
    /// Generators of Γ/NK chosen greedily in generator order, as coset indices.
    pub generators: Vec<usize>,
}

impl StructureGroupData {
    pub fn order(&self) -> usize {
        self.coset_reps.len()
    }

    fn element_order(&self, i: usize) -> usize {
        let (mut x, mut n) = (i, 1);
        while x != 0 {
            x = self.table[x][i];
            n += 1;
        }
        n
    }
}

type CosetKey = (AffineMap<2>, BaseMap);

fn coset_key(fiber: &Fiber, k: &Complement, g: &AffineMap<3>) -> CosetKey {
    let (f, b) = split(g).expect("block-diagonal element");
    (model(fiber.ty).canonical(&fiber.standardize(&f)), k.reduce(&b))
}

pub fn structure_group(
    input: &FibrationInput,
    fiber: &Fiber,
    k: &Complement,
) -> Result<StructureGroupData, FibrationError> {
    let gens = input.gamma.generators();
    let mut reps = vec![AffineMap::identity()];
    let mut index: HashMap<CosetKey, usize> = HashMap::from([(coset_key(fiber, k, &reps[0]), 0)]);
    let mut i = 0;
    while i < reps.len() {
        for g in gens {
            let y = reps[i] * *g;
            let key = coset_key(fiber, k, &y);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                e.insert(reps.len());
                reps.push(y);
                if reps.len() > MAX_STRUCTURE_ORDER {
                    return Err(FibrationError::IndexTooLarge);
                }
            }
        }
        i += 1;
    }
    let idx = |g: &AffineMap<3>| index[&coset_key(fiber, k, g)];
    let table: Vec<Vec<usize>> = reps.iter().map(|a| reps.iter().map(|b| idx(&(*a * *b))).collect()).collect();
    let keys: Vec<CosetKey> = reps.iter().map(|g| coset_key(fiber, k, g)).collect();
    let mut data = StructureGroupData {
        coset_reps: reps,
        table,
        iso_type: IsoType::C(1),
        fibers: keys.iter().map(|k| k.0).collect(),
        bases: keys.iter().map(|k| k.1).collect(),
        generators: Vec::new(),
    };
    let n = data.order();
    let cyclic = (0..n).any(|i| data.element_order(i) == n);
    data.iso_type = match (k.is_dihedral(), cyclic) {
        (false, true) => IsoType::C(n),
        (true, _) if n == 1 => IsoType::C(1),
        _ => IsoType::D(n / 2),
    };
    let mut span = vec![0usize];
    for g in gens {
        let c = idx(g);
        if span.contains(&c) {
            continue;
        }
        data.generators.push(c);
        let mut j = 0;
        span.push(c);
        while j < span.len() {
            for &h in &data.generators.clone() {
                let p = data.table[span[j]][h];
                if !span.contains(&p) {
                    span.push(p);
                }
            }
            j += 1;
        }
    }
    Ok(data)
}

/// Name of the induced map on V⊥/K.
pub fn base_action(b: &BaseMap, k: &Complement) -> String {
    let r = k.reduce(b);
    if r == BaseMap::identity() {
        "idt.".into()
    } else if r.eps < 0 || k.is_dihedral() {
        "ref.".into()
    } else {
        format!("{}-rot.", (r.t / k.period).denom())
    }
}

/// Class of the induced affinity of V/N.
pub fn fiber_action(g: &AffineMap<3>, fiber: &Fiber) -> Result<NamedAffinityClass, FibrationError> {
    let (f, _) = split(g).ok_or(FibrationError::NotBlockDiagonal(0))?;
    Ok(classify_element(fiber.ty, &fiber.standardize(&f))?)
}

/// Types of V/(Γ/K) and V⊥/(Γ/N).
pub fn quotient_bases(
    input: &FibrationInput,
    k: &Complement,
    s: &StructureGroupData,
) -> Result<(WallpaperType, Base), FibrationError> {
    let restricted: Vec<AffineMap<2>> = input.gamma.generators().iter().map(|g| split(g).unwrap().0).collect();
    let q = SpaceGroup::new(restricted)?;
    let reflects = k.is_dihedral() || s.bases.iter().any(|b| b.eps < 0);
    Ok((identify_wallpaper(&q), if reflects { Base::I } else { Base::O }))
}

/// Generators of Γ/N read off its action on V⊥: the positive translation generator, or the
/// Coxeter pair of reflections in increasing order of their fixed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometricGenerators {
    Cyclic(AffineMap<2>),
    Dihedral(AffineMap<2>, AffineMap<2>),
}

pub fn geometric_generators(k: &Complement, s: &StructureGroupData) -> Result<GeometricGenerators, FibrationError> {
    let c0 = k.period;
    let modc = |x: Q| {
        let r = x / c0;
        (r - r.floor()) * c0
    };
    let mut translations: Vec<(Q, AffineMap<2>)> = vec![(c0, AffineMap::identity())];
    let mut reflections: Vec<(Q, AffineMap<2>)> = Vec::new();
    for (f, b) in s.fibers.iter().zip(&s.bases) {
        let (tr, rf) =
            if b.eps > 0 { (&mut translations, &mut reflections) } else { (&mut reflections, &mut translations) };
        tr.push((modc(b.t), *f));
        if let Some(d) = k.reflection {
            let t = if b.eps > 0 { b.t + d } else { b.t - d };
            rf.push((modc(t), *f));
        }
    }
    let tau = translations.iter().map(|x| x.0).filter(|t| *t > qi(0)).min().unwrap();
    let lookup = |list: &[(Q, AffineMap<2>)], t: Q| -> Result<AffineMap<2>, FibrationError> {
        let hits: Vec<&AffineMap<2>> = list.iter().filter(|x| x.0 == modc(t)).map(|x| &x.1).collect();
        match hits.split_first() {
            Some((first, rest)) if rest.iter().all(|h| h == first) => Ok(**first),
            Some(_) => Err(FibrationError::NotComplete),
            None => Err(FibrationError::Malformed("missing element of Γ/N".into())),
        }
    };
    if reflections.is_empty() {
        let f = if tau == c0 { AffineMap::identity() } else { lookup(&translations, tau)? };
        return Ok(GeometricGenerators::Cyclic(f));
    }
    let s0 = reflections.iter().map(|x| x.0).min().unwrap();
    Ok(GeometricGenerators::Dihedral(lookup(&reflections, s0)?, lookup(&reflections, s0 + tau)?))
}

#[derive(Clone, Debug)]
pub struct FibrationRecord {
    pub it_number: Option<u32>,
    pub fiber: WallpaperType,
    pub fiber_base: Base,
    pub complement: Complement,
    pub structure: StructureGroupData,
    pub group: IsoType,
    pub quotients: (WallpaperType, Base),
    pub actions: Vec<(String, String)>,
    pub pair: ClassifyingPair,
    pub deformation: bool,
    pub geometric: GeometricGenerators,
}

impl FibrationRecord {
    pub fn actions_string(&self) -> String {
        self.actions.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for FibrationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.it_number {
            write!(f, "{n}\t")?;
        }
        write!(
            f,
            "({}, {})\t{}\t({}, {})\t{}\t{}",
            self.fiber,
            self.fiber_base,
            self.group,
            self.quotients.0,
            self.quotients.1,
            self.actions_string(),
            self.pair
        )
    }
}

/// The pair by the recipe on structure-group generators of shape (α, ref.), (γ, n-rot.).
fn recipe_pair(
    ty: WallpaperType,
    k: &Complement,
    s: &StructureGroupData,
    quotient_base: Base,
) -> Result<PairClass, FibrationError> {
    let n = s.order();
    let id = AffineMap::identity();
    let rotation = |steps: Q| (0..n).find(|&i| s.bases[i].eps > 0 && s.bases[i].t == steps);
    Ok(match quotient_base {
        Base::O => {
            let g = if n == 1 { 0 } else { rotation(k.period / qi(n as i64)).ok_or(FibrationError::NotComplete)? };
            classify_cyclic(ty, &s.fibers[g])?
        }
        Base::I if k.is_dihedral() => match n {
            1 => classify_pair(ty, &id, &id)?,
            2 => classify_pair(ty, &id, &s.fibers[1])?,
            _ => {
                return Err(FibrationError::Unsupported("dihedral complement with structure group of order > 2".into()))
            }
        },
        Base::I => {
            let reflecting = |i: &usize| s.bases[*i].eps < 0;
            let a = *s.generators.iter().find(|i| reflecting(i)).unwrap_or(&(0..n).find(|i| reflecting(i)).unwrap());
            let alpha = s.fibers[a];
            if n == 2 {
                classify_pair(ty, &alpha, &alpha)?
            } else {
                let g = rotation(k.period / qi(n as i64 / 2)).ok_or(FibrationError::NotComplete)?;
                classify_pair(ty, &alpha, &(alpha.inverse() * s.fibers[g]))?
            }
        }
    })
}

fn geometric_pair(ty: WallpaperType, g: &GeometricGenerators) -> Result<PairClass, FibrationError> {
    Ok(match g {
        GeometricGenerators::Cyclic(f) => classify_cyclic(ty, f)?,
        GeometricGenerators::Dihedral(a, b) => classify_pair(ty, a, b)?,
    })
}

/// The full pipeline from Γ and N to the table row.
pub fn analyze(input: &FibrationInput, it_number: Option<u32>) -> Result<FibrationRecord, FibrationError> {
    let fiber = input.fiber()?;
    let k = orthogonal_complement_group(&input.gamma)?;
    let s = structure_group(input, &fiber, &k)?;
    let quotients = quotient_bases(input, &k, &s)?;
    let mut actions = Vec::new();
    for &c in &s.generators {
        let f = classify_element(fiber.ty, &s.fibers[c])?;
        actions.push((f.name, base_action(&s.bases[c], &k)));
    }
    if actions.is_empty() {
        actions.push(("idt.".to_string(), "idt.".to_string()));
    }
    let geometric = geometric_generators(&k, &s)?;
    let direct = geometric_pair(fiber.ty, &geometric)?;
    let recipe = recipe_pair(fiber.ty, &k, &s, quotients.1)?;
    if recipe != direct {
        return Err(FibrationError::RouteMismatch { recipe: recipe.to_string(), direct: direct.to_string() });
    }
    let (pair, deformation) = match deformation_pair(fiber.ty, s.iso_type, quotients.0, &actions)? {
        Some(p) => (p, true),
        None => (recipe, false),
    };
    Ok(FibrationRecord {
        it_number,
        fiber: fiber.ty,
        fiber_base: if k.is_dihedral() { Base::I } else { Base::O },
        complement: k,
        group: s.iso_type,
        structure: s,
        quotients,
        actions,
        pair: pair.into(),
        deformation,
        geometric,
    })
}

/// M × C∞ or M × D∞ in standard coordinates; N is given by the first generators.
pub fn build_product(ty: WallpaperType, base: Base) -> FibrationInput {
    let mut gens: Vec<AffineMap<3>> = ty.standard_generators().iter().map(|g| join(g, &BaseMap::identity())).collect();
    let n = gens.len();
    gens.push(AffineMap::translation(Vector([qi(0), qi(0), qi(1)])));
    if base == Base::I {
        gens.push(AffineMap::linear(Matrix::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -1]])));
    }
    FibrationInput::new(SpaceGroup::new(gens).expect("product group"), (0..n).collect())
}

/// A group realizing a classifying pair: ⟨M, (α, −x), (αβ, x + 1)⟩ for a dihedral pair
/// and ⟨M, (α, x + 1)⟩ for a cyclic one.
pub fn witness(pair: &ClassifyingPair) -> FibrationInput {
    let ty = pair.fiber;
    let (a, b) = (pair.members[0].representative, pair.members[1].representative);
    let mut gens: Vec<AffineMap<3>> = ty.standard_generators().iter().map(|g| join(g, &BaseMap::identity())).collect();
    let n = gens.len();
    let step = BaseMap { eps: 1, t: qi(1) };
    match pair.kind {
        cofib_fiber::PairKind::Cyclic => gens.push(join(&a, &step)),
        cofib_fiber::PairKind::Dihedral => {
            gens.push(join(&a, &BaseMap { eps: -1, t: qi(0) }));
            gens.push(join(&(a * b), &step));
        }
    }
    FibrationInput::new(SpaceGroup::new(gens).expect("witness group"), (0..n).collect())
}
