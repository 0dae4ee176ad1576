use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use cofib_arith::linalg::{integral_annihilator, nullspace};
use cofib_arith::{qi, AffineMap, Lattice, Matrix, Q};
use cofib_gl2z::{vertex_embedding, GlMat};
use cofib_spacegroup::{in_normalizer, WallpaperType};

use crate::model::{model, FiberModel};
use crate::FiberError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    /// One affinity up to conjugacy.
    Single,
    /// One affinity of finite order up to conjugacy and inversion, modulo the identity component.
    Cyclic,
    /// An unordered pair of involutions up to simultaneous conjugacy.
    Pair,
}

impl Mode {
    fn index(self) -> usize {
        self as usize
    }
}

/// Canonical linear parts and translation data reduced modulo the conjugation subspace and the lattice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Key {
    pub lin: Vec<Matrix<2>>,
    pub trans: Vec<Q>,
}

fn grid_den(ty: WallpaperType, mode: Mode) -> i64 {
    use WallpaperType::*;
    match (ty, mode) {
        (Torus, Mode::Single) | (StarCross | CrossCross | StarStar, Mode::Single) => 12,
        (Torus, Mode::Cyclic) => 1,
        (Torus | Pillow | StarCross | CrossCross | StarStar, _) => 2,
        _ => 6,
    }
}

/// Translations ((I−K)t, (I−L)t, …) for t in the identity component, plus the collapse
/// directions (0, τ) with τ in E_K⁻ ∩ E_L⁻ ∩ T for pairs.
fn conjugation_subspace(m: &FiberModel, mode: Mode, lin: &[Matrix<2>]) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let mut gens = Vec::new();
    for t in &m.t_cont {
        match mode {
            Mode::Cyclic => gens.push(t.to_vec()),
            _ => gens.push(lin.iter().flat_map(|k| (Matrix::identity() - *k).apply(t).to_vec()).collect()),
        }
    }
    let mut collapse = Vec::new();
    if mode == Mode::Pair && !m.t_cont.is_empty() {
        let mut eqs: Vec<Vec<Q>> = Vec::new();
        for k in lin {
            let p = *k + Matrix::identity();
            for r in 0..2 {
                eqs.push(m.t_cont.iter().map(|t| p.apply(t).0[r]).collect());
            }
        }
        for c in nullspace(&eqs, m.t_cont.len()) {
            let mut tau = vec![qi(0); 2];
            for (cj, t) in c.iter().zip(&m.t_cont) {
                tau[0] += *cj * t.0[0];
                tau[1] += *cj * t.0[1];
            }
            let mut v = vec![qi(0); 2 * lin.len() - 2];
            v.extend(tau);
            collapse.push(v);
        }
    }
    (gens, collapse)
}

/// Key of a tuple, and whether the pair collapse is nontrivial.
pub fn key_of(m: &FiberModel, mode: Mode, tuple: &[AffineMap<2>]) -> (Key, bool) {
    let canon: Vec<AffineMap<2>> = tuple.iter().map(|f| m.canonical(f)).collect();
    let lin: Vec<Matrix<2>> = canon.iter().map(|f| f.m).collect();
    let (mut gens, collapse) = conjugation_subspace(m, mode, &lin);
    let star = !collapse.is_empty();
    gens.extend(collapse);
    let dim = 2 * canon.len();
    let w = integral_annihilator(&gens, dim);
    let d: Vec<Q> = canon.iter().flat_map(|f| f.t.to_vec()).collect();
    let image: Vec<Q> = w.iter().map(|row| row.iter().zip(&d).map(|(a, x)| qi(*a) * *x).sum()).collect();
    let cols: Vec<Vec<Q>> = (0..dim).map(|j| w.iter().map(|row| qi(row[j])).collect()).collect();
    let lattice = Lattice::from_generators(w.len(), &cols);
    (Key { lin, trans: lattice.reduce(&image) }, star)
}

fn conj_tuple(g: &AffineMap<2>, tuple: &[AffineMap<2>]) -> Vec<AffineMap<2>> {
    tuple.iter().map(|f| g.conj(f)).collect()
}

pub struct Classifier {
    pub ty: WallpaperType,
    pub mode: Mode,
    root: HashMap<Key, Key>,
    reps: HashMap<Key, Vec<AffineMap<2>>>,
    stars: HashMap<Key, bool>,
    sizes: BTreeMap<Key, usize>,
}

struct UnionFind(HashMap<Key, Key>);

impl UnionFind {
    fn find(&mut self, k: &Key) -> Key {
        let mut cur = k.clone();
        let mut path = Vec::new();
        while let Some(p) = self.0.get(&cur) {
            if *p == cur {
                break;
            }
            path.push(cur.clone());
            cur = p.clone();
        }
        for x in path {
            self.0.insert(x, cur.clone());
        }
        self.0.entry(cur.clone()).or_insert_with(|| cur.clone());
        cur
    }

    fn union(&mut self, a: &Key, b: &Key) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.0.insert(rb, ra);
        } else if rb < ra {
            self.0.insert(ra, rb);
        }
    }
}

impl Classifier {
    fn build(ty: WallpaperType, mode: Mode) -> Self {
        let m = model(ty);
        let den = grid_den(ty, mode);
        let universes: Vec<(Vec<AffineMap<2>>, Vec<AffineMap<2>>)> = if m.is_vertexed() {
            (0..2)
                .map(|v| {
                    let mut moves: Vec<AffineMap<2>> =
                        m.vertex_linears[v].iter().map(|k| AffineMap::linear(*k)).collect();
                    if ty == WallpaperType::Pillow {
                        moves.extend(m.grid_elements(2, v).into_iter().filter(|f| f.is_translation()));
                    }
                    (m.grid_elements(den, v), moves)
                })
                .collect()
        } else {
            let mut els = m.grid_elements(den, 0);
            els.extend(m.grid_elements(den, 1));
            let move_den = if m.t_cont.is_empty() { 6 } else { 2 };
            let mut moves = m.grid_elements(move_den, 0);
            moves.extend(m.grid_elements(move_den, 1));
            vec![(els, moves)]
        };
        let mut uf = UnionFind(HashMap::new());
        let mut reps: HashMap<Key, Vec<AffineMap<2>>> = HashMap::new();
        let mut stars: HashMap<Key, bool> = HashMap::new();
        for (elements, moves) in &universes {
            let seeds: Vec<Vec<AffineMap<2>>> = match mode {
                Mode::Single | Mode::Cyclic => elements.iter().map(|f| vec![*f]).collect(),
                Mode::Pair => {
                    let inv: Vec<&AffineMap<2>> = elements.iter().filter(|f| m.order_mod_m(f, 2).is_some()).collect();
                    let mut out = Vec::new();
                    for f in &inv {
                        for g in &inv {
                            if m.out_finite(&(f.m * g.m)) {
                                out.push(vec![**f, **g]);
                            }
                        }
                    }
                    out
                }
            };
            let mut seen: HashSet<Key> = HashSet::new();
            let mut queue: VecDeque<(Key, Vec<AffineMap<2>>)> = VecDeque::new();
            let mut visit = |t: Vec<AffineMap<2>>,
                             seen: &mut HashSet<Key>,
                             queue: &mut VecDeque<(Key, Vec<AffineMap<2>>)>,
                             reps: &mut HashMap<Key, Vec<AffineMap<2>>>|
             -> Key {
                let (k, star) = key_of(m, mode, &t);
                if seen.insert(k.clone()) {
                    reps.entry(k.clone()).or_insert_with(|| t.clone());
                    stars.insert(k.clone(), star);
                    queue.push_back((k.clone(), t));
                }
                k
            };
            for s in seeds {
                let k = visit(s, &mut seen, &mut queue, &mut reps);
                uf.find(&k);
            }
            while let Some((k, t)) = queue.pop_front() {
                let mut images: Vec<Vec<AffineMap<2>>> = moves.iter().map(|g| conj_tuple(g, &t)).collect();
                match mode {
                    Mode::Pair => images.push(vec![t[1], t[0]]),
                    Mode::Cyclic => images.push(vec![t[0].inverse()]),
                    Mode::Single => {}
                }
                for y in images {
                    let ky = visit(y, &mut seen, &mut queue, &mut reps);
                    uf.union(&k, &ky);
                }
            }
        }
        let keys: Vec<Key> = reps.keys().cloned().collect();
        let mut root = HashMap::new();
        let mut sizes = BTreeMap::new();
        for k in keys {
            let r = uf.find(&k);
            *sizes.entry(r.clone()).or_insert(0) += 1;
            root.insert(k, r);
        }
        Classifier { ty, mode, root, reps, stars, sizes }
    }

    /// Class roots in increasing order.
    pub fn classes(&self) -> impl Iterator<Item = &Key> {
        self.sizes.keys()
    }

    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn representative(&self, root: &Key) -> &[AffineMap<2>] {
        &self.reps[root]
    }

    pub fn asterisk(&self, root: &Key) -> bool {
        self.stars[root]
    }

    /// Number of distinct keys in the class, a rough size measure.
    pub fn class_size(&self, root: &Key) -> usize {
        self.sizes[root]
    }

    pub fn keys(&self) -> impl Iterator<Item = &Key> {
        self.root.keys()
    }

    pub fn root_of_key(&self, k: &Key) -> Option<&Key> {
        self.root.get(k)
    }

    /// Root of the class of a tuple, after checking the mode's preconditions.
    pub fn classify(&self, tuple: &[AffineMap<2>]) -> Result<Key, FiberError> {
        let m = model(self.ty);
        for f in tuple {
            if !in_normalizer(self.ty, f) {
                return Err(FiberError::NotNormalizing { fiber: self.ty, map: *f });
            }
        }
        match self.mode {
            Mode::Pair => {
                if tuple.iter().any(|f| m.order_mod_m(f, 2).is_none()) {
                    return Err(FiberError::NotInvolution { fiber: self.ty });
                }
                if !m.out_finite(&(tuple[0].m * tuple[1].m)) {
                    return Err(FiberError::InfiniteDihedral { fiber: self.ty });
                }
            }
            _ => {
                if m.order_mod_m(&tuple[0], 12).is_none() {
                    return Err(FiberError::InfiniteOrder { fiber: self.ty, map: tuple[0] });
                }
            }
        }
        let moved: Vec<AffineMap<2>> = if m.is_vertexed() {
            let mut gens: Vec<GlMat> = tuple.iter().map(|f| GlMat::from_matrix(&f.m)).collect::<Result<_, _>>()?;
            if self.ty == WallpaperType::Pillow {
                gens.push(cofib_gl2z::mat::NEG_I);
            }
            let (_, x) = vertex_embedding(&gens)?;
            conj_tuple(&AffineMap::linear(x.to_matrix()), tuple)
        } else {
            tuple.to_vec()
        };
        let (k, _) = key_of(m, self.mode, &moved);
        self.root.get(&k).cloned().ok_or(FiberError::OutsideModel { fiber: self.ty })
    }
}

pub fn classifier(ty: WallpaperType, mode: Mode) -> &'static Classifier {
    static C: [[OnceLock<Classifier>; 3]; 17] = [const { [const { OnceLock::new() }; 3] }; 17];
    C[ty as usize][mode.index()].get_or_init(|| Classifier::build(ty, mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cofib_arith::{q, Vector};

    #[test]
    fn keys_are_conjugation_invariant_along_the_identity_component() {
        let m = model(WallpaperType::Torus);
        let f = AffineMap::with(Vector([q(1, 3), q(1, 2)]), Matrix::from_ints([[-1, 0], [0, 1]]));
        let t = AffineMap::translation(Vector([q(2, 7), q(1, 5)]));
        assert_eq!(key_of(m, Mode::Single, &[f]).0, key_of(m, Mode::Single, &[t.conj(&f)]).0);
        let g = AffineMap::linear(-Matrix::identity());
        assert_eq!(key_of(m, Mode::Pair, &[f, g]).0, key_of(m, Mode::Pair, &conj_tuple(&t, &[f, g])).0);
        // the e₂ offset of a glide is not removable
        let h = AffineMap::linear(f.m);
        assert_ne!(key_of(m, Mode::Single, &[f]).0, key_of(m, Mode::Single, &[h]).0);
    }

    #[test]
    fn collapse_marks_common_negative_directions() {
        let m = model(WallpaperType::StarStar);
        let v = AffineMap::linear(-Matrix::identity());
        assert!(key_of(m, Mode::Pair, &[v, v]).1);
        let c = AffineMap::translation(Vector([qi(0), q(1, 2)]));
        assert!(!key_of(m, Mode::Pair, &[c, v]).1);
    }

    #[test]
    fn vertexed_lookup_embeds_first() {
        let cl = classifier(WallpaperType::Torus, Mode::Single);
        let b = cofib_gl2z::mat::B;
        let x = GlMat([[2, 1], [1, 1]]);
        let f = AffineMap::linear(x.conj(&b).to_matrix());
        assert_eq!(cl.classify(&[f]).unwrap(), cl.classify(&[AffineMap::linear(b.to_matrix())]).unwrap());
    }
}
