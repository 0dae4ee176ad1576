use std::collections::BTreeSet;

use cofib_arith::{q, qi, AffineMap, Matrix, Vector};
use cofib_fiber::*;
use cofib_spacegroup::WallpaperType::{self, *};
use proptest::prelude::*;

fn lin(m: [[i64; 2]; 2]) -> AffineMap<2> {
    AffineMap::linear(Matrix::from_ints(m))
}

fn aff(a: (i64, i64), b: (i64, i64), m: [[i64; 2]; 2]) -> AffineMap<2> {
    AffineMap::with(Vector([q(a.0, a.1), q(b.0, b.1)]), Matrix::from_ints(m))
}

/// Closure modulo M of a set of affinities, as canonical representatives.
fn closure_mod_m(ty: WallpaperType, gens: &[AffineMap<2>]) -> BTreeSet<AffineMap<2>> {
    let m = model(ty);
    let mut set = BTreeSet::from([m.canonical(&AffineMap::identity())]);
    let mut frontier: Vec<AffineMap<2>> = set.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = m.canonical(&(x * *g));
            if set.insert(y) {
                frontier.push(y);
                assert!(set.len() <= 64, "closure too large");
            }
        }
    }
    set
}

/// All of Aff(M) for a finite-Out fiber, found on the 1/6 grid.
fn aff_group(ty: WallpaperType) -> BTreeSet<AffineMap<2>> {
    let m = model(ty);
    let mut els = m.grid_elements(6, 0);
    els.extend(m.grid_elements(6, 1));
    els.iter().map(|f| m.canonical(f)).collect()
}

#[test]
fn aff_orders_of_the_finite_fibers() {
    let expected = [
        (Star632, 1),
        (Six32, 2),
        (ThreeStar3, 2),
        (Star333, 6),
        (Three33, 12),
        (FourStar2, 2),
        (Star442, 2),
        (Four42, 4),
        (TwoStar22, 4),
        (TwoTwoCross, 8),
        (TwoTwoStar, 4),
        (Star2222, 8),
    ];
    for (ty, n) in expected {
        let all = aff_group(ty);
        assert_eq!(all.len(), n, "{ty}");
        let reps: Vec<AffineMap<2>> = dictionary(ty).iter().map(|e| e.rep).collect();
        assert_eq!(closure_mod_m(ty, &reps), all, "{ty}: dictionary generates Aff(M)");
        // Single-mode classes partition the group
        let cl = classifier(ty, Mode::Single);
        let total: usize = cl.classes().map(|r| cl.class_size(r)).sum();
        assert_eq!(total, n, "{ty}");
    }
}

#[test]
fn turnover_dihedral_group_of_order_twelve() {
    let names = ["c-ref.", "t-ref.", "3-rot."];
    let gens: Vec<AffineMap<2>> = names.iter().map(|n| affinity_rep(Three33, n).unwrap()).collect();
    assert_eq!(closure_mod_m(Three33, &gens).len(), 12);
    let cl = classifier(Three33, Mode::Single);
    // idt., 2-rot., 3-rot.±, 6-sym.±, and the two reflection classes of D₆
    assert_eq!(cl.class_count(), 6);
}

#[test]
fn pillow_amalgam_orders() {
    let k: Vec<AffineMap<2>> = vec![aff((1, 2), (0, 1), [[1, 0], [0, 1]]), aff((0, 1), (1, 2), [[1, 0], [0, 1]])];
    let with = |extra: &[[[i64; 2]; 2]]| {
        let mut g = k.clone();
        g.extend(extra.iter().map(|m| lin(*m)));
        closure_mod_m(Pillow, &g)
    };
    let (a, b, c) = ([[-1, 0], [0, 1]], [[-1, 1], [0, 1]], [[0, 1], [1, 0]]);
    let square = with(&[a, c]);
    let hex = with(&[b, c]);
    let edge = with(&[c]);
    assert_eq!(square.len(), 16);
    assert_eq!(hex.len(), 24);
    assert_eq!(edge.len(), 8);
    assert_eq!(square.intersection(&hex).copied().collect::<BTreeSet<_>>(), edge);
}

#[test]
fn quoted_involution_classes() {
    assert_eq!(classify_involution(Torus, &aff((0, 1), (1, 2), [[-1, 0], [0, 1]])).unwrap().name, "v-grf.");
    assert_eq!(classify_involution(Torus, &aff((1, 2), (0, 1), [[1, 0], [0, 1]])).unwrap().name, "h-rot.");
    assert_eq!(classify_involution(Pillow, &aff((1, 2), (1, 2), [[1, 0], [0, 1]])).unwrap().name, "c-rot.");
    // c-rot. and m-rot. are conjugate, as are 2-aff. and d-ref.
    let p = |n: &str| classify_involution(Pillow, &affinity_rep(Pillow, n).unwrap()).unwrap().name;
    assert_eq!(p("m-rot."), p("c-rot."));
    assert_eq!(p("2-aff."), p("d-ref."));
    assert!(matches!(classify_involution(Torus, &lin([[0, -1], [1, 0]])), Err(FiberError::NotInvolution { .. })));
    assert!(matches!(
        classify_involution(Pillow, &aff((1, 3), (0, 1), [[1, 0], [0, 1]])),
        Err(FiberError::NotNormalizing { .. })
    ));
}

#[test]
fn pillow_order_two_classes() {
    // m-rot. ~ c-rot. and 2-aff. ~ d-ref. in Aff(M): six classes, c-rot. displayed for the first
    let cl = classifier(Pillow, Mode::Single);
    let m = model(Pillow);
    let order_two: Vec<&Key> = cl.classes().filter(|r| m.order_mod_m(&cl.representative(r)[0], 2) == Some(2)).collect();
    assert_eq!(order_two.len(), 6);
    let names: BTreeSet<String> =
        order_two.iter().map(|r| classify_involution(Pillow, &cl.representative(r)[0]).unwrap().name).collect();
    let expected: BTreeSet<String> =
        ["c-rot.", "c-ref.", "m-ref.", "2-sym.", "d-ref.", "d-rot."].iter().map(|s| s.to_string()).collect();
    assert_eq!(names, expected);
}

#[test]
fn torus_example_pairs() {
    let (a, neg_a) = (lin([[-1, 0], [0, 1]]), lin([[1, 0], [0, -1]]));
    let p = classify_pair(Torus, &a, &neg_a).unwrap();
    assert_eq!(p, class_of_names(Torus, PairKind::Dihedral, "h-ref.", "v-ref.").unwrap());
    let (c, neg_c) = (lin([[0, 1], [1, 0]]), lin([[0, -1], [-1, 0]]));
    let p = classify_pair(Torus, &c, &neg_c).unwrap();
    assert_eq!(p.names(), ("d-ref.", "e-ref."));
    let b = lin([[-1, 1], [0, 1]]);
    let p = classify_pair(Torus, &b, &c).unwrap();
    assert_eq!(p.names(), ("m-aff.", "d-ref."));
    assert!(!p.asterisk);
    let cyc = |n: &str| class_of_names(Torus, PairKind::Cyclic, n, n).unwrap();
    assert_eq!(cyc("h-ref."), cyc("v-ref."));
}

#[test]
fn prose_identifications() {
    let d = |ty, a: &str, b: &str| class_of_names(ty, PairKind::Dihedral, a, b).unwrap();
    assert_eq!(d(StarCross, "2-rot.", "c-ref."), d(StarCross, "2-rot.′", "c-ref."));
    let x = aff((1, 3), (1, 3), [[-1, 0], [0, -1]]);
    let two = affinity_rep(StarCross, "2-rot.").unwrap();
    assert_eq!(classify_pair(StarCross, &two, &x).unwrap(), d(StarCross, "2-rot.", "2-rot."));
    assert_eq!(
        class_of_names(CrossCross, PairKind::Cyclic, "2-sym.", "2-sym.").unwrap(),
        class_of_names(CrossCross, PairKind::Cyclic, "c-ref.", "c-ref.").unwrap()
    );
    for (a, b, c) in [
        ("v-ref.", "v-ref.", "v-ref.′"),
        ("2-rot.", "2-rot.", "2-rot.′"),
        ("v-ref.", "2-rot.", "2-rot.′"),
        ("m-ref.", "v-ref.", "v-ref.′"),
        ("m-ref.", "2-rot.", "2-rot.′"),
    ] {
        assert_eq!(d(CrossCross, a, b), d(CrossCross, a, c), "{a} {b} {c}");
    }
    assert!(d(CrossCross, "v-ref.", "v-ref.").asterisk);
    assert!(!d(CrossCross, "m-ref.", "v-ref.").asterisk);
}

#[test]
fn stated_enumeration_examples() {
    let names = |ty, kind| -> BTreeSet<(String, String)> {
        all_classes(ty, kind).iter().map(|p| (p.names().0.to_string(), p.names().1.to_string())).collect()
    };
    let pairs = |xs: &[(&str, &str)]| -> BTreeSet<(String, String)> {
        xs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    };
    assert_eq!(
        names(Three33, PairKind::Cyclic),
        pairs(&[
            ("idt.", "idt."),
            ("3-rot.", "3-rot.⁻¹"),
            ("c-ref.", "c-ref."),
            ("t-ref.", "t-ref."),
            ("6-sym.", "6-sym.⁻¹"),
            ("2-rot.", "2-rot.")
        ])
    );
    assert_eq!(names(Star632, PairKind::Cyclic), pairs(&[("idt.", "idt.")]));
    let torus = names(Torus, PairKind::Cyclic);
    for p in [("4-rot.", "4-rot.⁻¹"), ("3-aff.", "3-aff.⁻¹"), ("6-aff.", "6-aff.⁻¹")] {
        assert!(torus.contains(&(p.0.to_string(), p.1.to_string())));
    }
}

#[test]
fn out_images() {
    let o = out_image(Torus, &aff((1, 3), (1, 5), [[2, 1], [1, 1]])).unwrap();
    assert_eq!(o.value, OutValue::Gl2(Matrix::from_ints([[2, 1], [1, 1]])));
    let sym = affinity_rep(CrossCross, "2-sym.").unwrap();
    assert_eq!(out_image(CrossCross, &sym).unwrap().value, OutValue::Component("c-ref.".into()));
    let two = affinity_rep(StarCross, "2-rot.′").unwrap();
    assert_eq!(out_image(StarCross, &two).unwrap().value, OutValue::Component("2-rot.".into()));
    let shift = aff((1, 7), (1, 7), [[1, 0], [0, 1]]);
    assert_eq!(out_image(StarCross, &shift).unwrap().value, OutValue::Component("idt.".into()));
    let k = aff((1, 2), (0, 1), [[0, 1], [1, 0]]);
    let OutValue::Pillow { k: t, pgl } = out_image(Pillow, &k).unwrap().value else { panic!() };
    assert_eq!(model(Pillow).canonical(&AffineMap::with(t, pgl)), model(Pillow).canonical(&k));
    assert!(out_image(Pillow, &aff((1, 3), (0, 1), [[1, 0], [0, 1]])).is_err());
}

#[test]
fn translational_reducibility() {
    let e1 = Vector([q(1, 2), qi(0)]);
    let e2 = Vector([qi(0), q(1, 2)]);
    assert!(translationally_reducible(&e1, &-Matrix::identity()));
    assert!(!translationally_reducible(&e2, &Matrix::from_ints([[-1, 0], [0, 1]])));
    assert!(translationally_reducible(&e1, &Matrix::from_ints([[-1, 0], [0, 1]])));
    assert!(translationally_reducible(&Vector::zero(), &Matrix::identity()));
    assert!(!translationally_reducible(&e1, &Matrix::identity()));
}

#[test]
fn turnover_example_actions() {
    let c = classify_element(Three33, &lin([[0, -1], [-1, 0]])).unwrap();
    assert_eq!(c.name, "c-ref.");
    let r = classify_element(Three33, &lin([[-1, 0], [0, -1]])).unwrap();
    assert_eq!(r.name, "2-rot.");
}

/// Conjugators for the brute-force oracle: words of length ≤ 4 in A, B, C after a translation on the ¼ grid.
fn brute_conjugators() -> Vec<AffineMap<2>> {
    let letters = [lin([[-1, 0], [0, 1]]), lin([[-1, 1], [0, 1]]), lin([[0, 1], [1, 0]])];
    let mut words = vec![AffineMap::identity()];
    let mut layer = words.clone();
    for _ in 0..4 {
        layer = layer.iter().flat_map(|w| letters.iter().map(move |l| *w * *l)).collect();
        words.extend(layer.iter().copied());
    }
    let mut out = Vec::new();
    for w in &words {
        for a in 0..4 {
            for b in 0..4 {
                out.push(*w * AffineMap::translation(Vector([q(a, 4), q(b, 4)])));
            }
        }
    }
    out
}

#[test]
fn torus_involutions_agree_with_brute_force() {
    let m = model(Torus);
    let names = ["idt.", "h-rot.", "2-rot.", "h-ref.", "v-grf.", "d-ref."];
    let conj = brute_conjugators();
    let orbits: Vec<BTreeSet<AffineMap<2>>> = names
        .iter()
        .map(|n| {
            let r = affinity_rep(Torus, n).unwrap();
            conj.iter().map(|h| m.canonical(&h.conj(&r))).collect()
        })
        .collect();
    let mut checked = 0;
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            for c in -2i64..=2 {
                for d in -2i64..=2 {
                    let k = Matrix::from_ints([[a, b], [c, d]]);
                    if k * k != Matrix::identity() {
                        continue;
                    }
                    for x in 0..2 {
                        for y in 0..2 {
                            let f = AffineMap::with(Vector([q(x, 2), q(y, 2)]), k);
                            if !(f * f).t.is_integral() {
                                continue;
                            }
                            let name = classify_involution(Torus, &f).unwrap().name;
                            assert_eq!(element_class(Torus, &f).unwrap().name, name, "{f}");
                            let hits: Vec<&str> = names
                                .iter()
                                .zip(&orbits)
                                .filter(|(_, o)| o.contains(&m.canonical(&f)))
                                .map(|(n, _)| *n)
                                .collect();
                            assert!(hits.len() <= 1, "{f} in several orbits");
                            if let Some(h) = hits.first() {
                                assert_eq!(*h, name, "{f}");
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 40, "only {checked} involutions reached by the oracle");
}

fn kernel_translation(ty: WallpaperType, a: i64, b: i64) -> AffineMap<2> {
    let v = match ty {
        Torus => Vector([q(a, 4), q(b, 4)]),
        Pillow => Vector([q(a % 2, 2), q(b % 2, 2)]),
        StarCross => Vector([q(a, 4), q(a, 4)]),
        CrossCross | StarStar => Vector([q(a, 4), qi(0)]),
        _ => Vector::zero(),
    };
    AffineMap::translation(v)
}

const FIBERS: [WallpaperType; 17] = WallpaperType::ALL;

proptest! {
    #[test]
    fn involution_classes_are_conjugation_invariant(
        fi in 0usize..17, i in 0usize..64, j in 0usize..64, a in 0i64..4, b in 0i64..4
    ) {
        let ty = FIBERS[fi];
        let dict = dictionary(ty);
        let m = model(ty);
        let invs: Vec<&NameEntry> = dict.iter().filter(|e| m.order_mod_m(&e.rep, 2).is_some()).collect();
        let f = invs[i % invs.len()].rep;
        let h = dict[j % dict.len()].rep * kernel_translation(ty, a, b);
        let c1 = classify_involution(ty, &f).unwrap();
        let c2 = classify_involution(ty, &h.conj(&f)).unwrap();
        prop_assert_eq!(c1.name, c2.name);
    }

    #[test]
    fn pair_classes_are_swap_and_conjugation_invariant(
        fi in 0usize..17, i in 0usize..64, k in 0usize..64, j in 0usize..64, a in 0i64..4, b in 0i64..4
    ) {
        let ty = FIBERS[fi];
        let dict = dictionary(ty);
        let m = model(ty);
        let invs: Vec<&NameEntry> = dict.iter().filter(|e| m.order_mod_m(&e.rep, 2).is_some()).collect();
        let (f, g) = (invs[i % invs.len()].rep, invs[k % invs.len()].rep);
        prop_assume!(m.out_finite(&(f.m * g.m)));
        let h = dict[j % dict.len()].rep * kernel_translation(ty, a, b);
        let p = classify_pair(ty, &f, &g).unwrap();
        prop_assert_eq!(&p, &classify_pair(ty, &g, &f).unwrap());
        prop_assert_eq!(&p, &classify_pair(ty, &h.conj(&f), &h.conj(&g)).unwrap());
    }
}

fn name_set(p: (&str, &str)) -> BTreeSet<String> {
    [p.0.to_string(), p.1.to_string()].into()
}

#[test]
fn torus_example_pairs_of_every_case() {
    let cases: [&[(&str, &str)]; 10] = [
        &[("h-rot.", "v-rot.")],
        &[("h-rot.", "2-rot.")],
        &[
            ("h-rot.", "v-ref."),
            ("v-rot.", "v-ref."),
            ("2-sym.", "v-ref."),
            ("h-rot.", "h-grf."),
            ("v-rot.", "h-grf."),
            ("2-sym.", "h-grf."),
        ],
        &[("2-sym.", "d-ref."), ("v-rot.", "d-ref.")],
        &[("h-ref.", "v-ref."), ("v-ref.′", "v-grf."), ("v-grf.'", "h-grf.′")],
        &[("d-ref.", "e-ref.")],
        &[("h-ref.", "d-ref."), ("v-grf.", "d-ref.")],
        &[("n-aff.", "d-ref.")],
        &[("e-ref.", "m-aff.")],
        &[("m-aff.", "d-ref.")],
    ];
    let conjugators = [lin([[1, 0], [0, 1]]), lin([[2, 1], [1, 1]]), aff((1, 3), (1, 4), [[0, 1], [-1, 3]])];
    let mut seen = Vec::new();
    for list in cases {
        for &(a, b) in list {
            let (f, g) = (affinity_rep(Torus, a).unwrap(), affinity_rep(Torus, b).unwrap());
            let class = class_of_names(Torus, PairKind::Dihedral, a, b).unwrap();
            assert!(!seen.contains(&class), "{{{a}, {b}}} repeats a class");
            for h in &conjugators {
                let (f2, g2) = (h.conj(&f), h.conj(&g));
                assert_eq!(classify_pair(Torus, &f2, &g2).unwrap(), class, "{{{a}, {b}}}");
                assert_eq!(name_set(torus_pair_names(&f2, &g2).unwrap()), name_set((a, b)));
                assert_eq!(name_set(torus_pair_names(&g2, &f2).unwrap()), name_set((a, b)));
            }
            seen.push(class);
        }
    }
}

/// Involutions of ○ with entries in [−1, 1] and half-integral translations.
fn small_torus_involutions() -> Vec<AffineMap<2>> {
    let mut out = Vec::new();
    let r = -1i64..=1;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let k = Matrix::from_ints([[a, b], [c, d]]);
                    if k * k != Matrix::identity() {
                        continue;
                    }
                    for x in 0..2 {
                        for y in 0..2 {
                            let f = AffineMap::with(Vector([q(x, 2), q(y, 2)]), k);
                            if (f * f).t.is_integral() {
                                out.push(f);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn torus_case_tree_agrees_with_engine() {
    let invs = small_torus_involutions();
    let m = model(Torus);
    let mut checked = 0;
    for f in &invs {
        for g in &invs {
            if !m.out_finite(&(f.m * g.m)) {
                assert!(torus_pair_names(f, g).is_err());
                continue;
            }
            let (a, b) = torus_pair_names(f, g).unwrap();
            let named = class_of_names(Torus, PairKind::Dihedral, a, b).unwrap();
            assert_eq!(classify_pair(Torus, f, g).unwrap(), named, "{f} ; {g} named {{{a}, {b}}}");
            checked += 1;
        }
    }
    assert!(checked > 500, "{checked}");
}

#[test]
fn translational_reducibility_matches_witnesses() {
    let mats: Vec<Matrix<2>> = [
        [[1, 0], [0, 1]],
        [[-1, 0], [0, -1]],
        [[-1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[-1, 1], [0, 1]],
        [[0, -1], [1, 0]],
        [[0, -1], [1, -1]],
        [[1, -1], [1, 0]],
    ]
    .map(Matrix::from_ints)
    .into();
    for m in mats {
        let d = m - Matrix::identity();
        let mut reached = BTreeSet::new();
        for x in -48..=48 {
            for y in -48..=48 {
                reached.insert(d.apply(&Vector([q(x, 24), q(y, 24)])));
            }
        }
        for a in 0..4 {
            for b in 0..4 {
                let k = Vector([q(a, 4), q(b, 4)]);
                assert_eq!(translationally_reducible(&k, &m), reached.contains(&k), "{k:?} {m:?}");
            }
        }
    }
}
