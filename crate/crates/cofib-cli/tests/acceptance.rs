use std::collections::{BTreeSet, HashSet};

use cofib_arith::{q, qi, AffineMap, Mat2Sqrt3, Matrix, QSqrt3, Vector};
use cofib_cli::catalog::{default_dir, PRODUCT_IT};
use cofib_cli::{compare_row, fixtures, parse_group_file, verify_tables};
use cofib_enum::{enum_cyclic, enum_dihedral, ClassifyingPair};
use cofib_fiber::hex::{hex_affine, hex_conjugate, hex_lattice_generators, in_hex_lattice};
use cofib_fiber::{
    affinity_rep, class_of_names, classify_involution, classify_pair, element_class, model, torus_pair_names,
    translationally_reducible, PairKind,
};
use cofib_fibration::{
    analyze, build_product, check_enantiomorphic, reduced_record, witness, Base, FibrationInput, IsoType, ReducedRecord,
};
use cofib_gl2z::mat::{closure, A, B, C, I, NEG_I};
use cofib_gl2z::{finite_order_class, GlMat, TorsionClass};
use cofib_spacegroup::WallpaperType::{self, *};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Check {
    ensure(A * A == I && B * B == I && C * C == I, "A² = B² = C² = I fails")?;
    ensure((A * C) * (A * C) == NEG_I, "(AC)² ≠ −I")?;
    let bc = B * C;
    ensure(bc * bc * bc == NEG_I, "(BC)³ ≠ −I")?;
    Ok("A² = B² = C² = I, (AC)² = −I, (BC)³ = −I".into())
}

/// Elements of GL(2,ℤ) by word length in A, B, C.
fn ball(radius: usize) -> Vec<GlMat> {
    let mut seen = HashSet::from([I]);
    let mut all = vec![I];
    let mut frontier = vec![I];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for l in [A, B, C] {
                let h = *g * l;
                if seen.insert(h) {
                    next.push(h);
                    all.push(h);
                }
            }
        }
        frontier = next;
    }
    all
}

fn criterion_2() -> Check {
    let words = ball(12);
    let torsion: Vec<GlMat> = words.iter().copied().filter(|g| g.order(12).is_some()).collect();
    let mut classes = BTreeSet::new();
    for g in &torsion {
        let (cls, x) = finite_order_class(g).map_err(|e| e.to_string())?;
        ensure(x.conj(g) == cls.representative(), format!("conjugator for {g} is wrong"))?;
        classes.insert(cls);
    }
    ensure(classes.len() == 7, format!("{} classes", classes.len()))?;
    let reps: Vec<GlMat> = TorsionClass::ALL.iter().map(|c| c.representative()).collect();
    let bc = B * C;
    ensure(reps == vec![I, NEG_I, A, C, bc * bc, A * C, bc], "representatives differ from I, −I, A, C, (BC)², AC, BC")?;
    // brute-force conjugacy by words of length ≤ 10 on pairs from the short elements
    let conjugators = ball(10);
    let short: Vec<GlMat> = ball(6).into_iter().filter(|g| g.order(12).is_some()).collect();
    let mut rng = StdRng::seed_from_u64(28);
    let (mut same, mut agree) = (0, 0);
    for i in 0..200 {
        let k = *short.choose(&mut rng).unwrap();
        // every other pair is drawn from k's class so that both outcomes are exercised
        let l = if i % 2 == 0 {
            let x = *short.choose(&mut rng).unwrap();
            x.conj(&k)
        } else {
            *torsion.choose(&mut rng).unwrap()
        };
        let class_same = finite_order_class(&k).unwrap().0 == finite_order_class(&l).unwrap().0;
        let brute = conjugators.iter().any(|x| x.conj(&k) == l);
        same += class_same as usize;
        if brute == class_same {
            agree += 1;
        } else {
            return Err(format!("{k} ~ {l}: classes say {class_same}, brute force says {brute}"));
        }
    }
    Ok(format!(
        "7 classes among {} torsion words; brute force agrees on {agree}/200 pairs ({same} conjugate)",
        torsion.len()
    ))
}

fn example_one() -> Result<cofib_fibration::FibrationRecord, String> {
    let text = std::fs::read_to_string(default_dir().join("it163.group")).map_err(|e| e.to_string())?;
    let file = parse_group_file(&text).map_err(|e| e.to_string())?;
    let g = file.group::<3>().map_err(|e| e.to_string())?;
    analyze(&FibrationInput::new(g, file.normal_indices().map_err(|e| e.to_string())?), file.it_number)
        .map_err(|e| e.to_string())
}

fn criterion_3() -> Check {
    let rec = example_one()?;
    ensure(rec.fiber == Three33 && rec.fiber_base == Base::O, format!("fiber {} {}", rec.fiber, rec.fiber_base))?;
    ensure(rec.complement.period == qi(1) && rec.complement.reflection.is_none(), "K ≠ ⟨t₃⟩")?;
    ensure(rec.group == IsoType::D(2) && rec.structure.order() == 4, format!("structure group {}", rec.group))?;
    let bases: Vec<&str> = rec.actions.iter().map(|a| a.1.as_str()).collect();
    let fibers: Vec<&str> = rec.actions.iter().map(|a| a.0.as_str()).collect();
    ensure(bases == ["ref.", "ref."], format!("base actions {bases:?}"))?;
    ensure(fibers == ["c-ref.", "2-rot."], format!("fiber actions {fibers:?}"))?;
    ensure(rec.quotients == (Star632, Base::I), "quotients")?;
    ensure(rec.pair.to_string() == "{c-ref., 2-rot.}", format!("pair {}", rec.pair))?;
    let row = fixtures().into_iter().find(|r| r.it == 163).ok_or("no row 163")?;
    ensure(compare_row(&rec, &row).map_err(|e| e.to_string())?.is_none(), "differs from the table row")?;
    Ok(format!("{}", rec))
}

const PROSE_COUNTS: [(WallpaperType, usize, usize); 13] = [
    (Star632, 1, 1),
    (Six32, 2, 3),
    (ThreeStar3, 2, 3),
    (Star333, 3, 4),
    (Three33, 6, 13),
    (FourStar2, 2, 3),
    (Star442, 2, 3),
    (Four42, 4, 10),
    (TwoTwoCross, 5, 12),
    (StarCross, 2, 6),
    (CrossCross, 4, 21),
    (Pillow, 10, 44),
    (Torus, 7, 34),
];

fn criterion_4() -> Check {
    let mut bad = Vec::new();
    for (ty, c, d) in PROSE_COUNTS {
        let got = (enum_cyclic(ty).len(), enum_dihedral(ty).len());
        if got != (c, d) {
            bad.push(format!("{ty}: enumerated {got:?}, stated ({c}, {d})"));
        }
    }
    if bad.is_empty() {
        Ok("13 fibers match".into())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_5() -> Check {
    let report = verify_tables(&fixtures(), &[]).map_err(|e| e.to_string())?;
    if !report.enumeration.is_empty() {
        return Err(report.enumeration.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; "));
    }
    Ok(format!("{} rows in 17 tables, {} classes", report.rows, report.classes_checked))
}

fn criterion_6() -> Check {
    let rows = fixtures();
    let mut n = 0;
    for (ty, it_o, it_i) in PRODUCT_IT {
        for (base, it) in [(Base::O, it_o), (Base::I, it_i)] {
            let rec = analyze(&build_product(ty, base), Some(it)).map_err(|e| format!("{ty} {base}: {e}"))?;
            let kind = if base == Base::O { PairKind::Cyclic } else { PairKind::Dihedral };
            let idt: ClassifyingPair = class_of_names(ty, kind, "idt.", "idt.").map_err(|e| e.to_string())?.into();
            ensure(rec.pair == idt && rec.pair.to_string() == "{idt., idt.}", format!("{ty} {base}: {}", rec.pair))?;
            ensure(rec.quotients == (ty, base), format!("{ty} {base}: quotients"))?;
            let row = rows.iter().find(|r| r.it == it && r.fiber == ty).ok_or(format!("no row for IT {it}"))?;
            if let Some(d) = compare_row(&rec, row).map_err(|e| e.to_string())? {
                return Err(format!("{row}: {d}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} products give {{idt., idt.}} and match their rows"))
}

fn mirror(input: &FibrationInput) -> FibrationInput {
    let sigma = AffineMap::linear(Matrix::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -1]]));
    FibrationInput::new(input.gamma.conjugate(&sigma), input.normal_gens.clone())
}

fn criterion_7() -> Check {
    let ac = A * C;
    let v = check_enantiomorphic(&ReducedRecord::cyclic(ac), &ReducedRecord::cyclic(ac.inv())).unwrap();
    let expected =
        [format!("conjugators_det({ac}, {}, {{+1}})", ac.inv()), format!("conjugators_det({ac}, {ac}, {{-1}})")];
    ensure(v.enantiomorphic, "(76, 78) not enantiomorphic")?;
    for (c, e) in v.certificates.iter().zip(&expected) {
        ensure(c.query == *e && c.conjugator.is_none(), format!("certificate {c}"))?;
    }
    let v = check_enantiomorphic(&ReducedRecord::dihedral(A, C), &ReducedRecord::dihedral(C, A)).unwrap();
    let expected = [
        format!("pair_conjugators_det(({A}, {C}), ({C}, {A}), {{+1}})"),
        format!("pair_conjugators_det(({A}, {C}), ({A}, {C}), {{-1}})"),
    ];
    ensure(v.enantiomorphic, "(91, 95) not enantiomorphic")?;
    for (c, e) in v.certificates.iter().zip(&expected) {
        ensure(c.query == *e && c.conjugator.is_none(), format!("certificate {c}"))?;
    }
    // the analogues: each row realized by a witness group, compared with its mirror image
    let rows = fixtures();
    let mut done = Vec::new();
    for (it, partner) in [(144, 145), (169, 170), (171, 172), (92, 96), (151, 153), (152, 154), (178, 179), (180, 181)]
    {
        let row = rows.iter().find(|r| r.it == it).ok_or(format!("no row for IT {it}"))?;
        let pair: ClassifyingPair =
            class_of_names(row.fiber, row.kind(), &row.pair.0, &row.pair.1).map_err(|e| e.to_string())?.into();
        let input = witness(&pair);
        let rec = analyze(&input, Some(it)).map_err(|e| format!("IT {it}: {e}"))?;
        let r1 = reduced_record(&rec).map_err(|e| format!("IT {it}: {e}"))?;
        let r2 = reduced_record(&analyze(&mirror(&input), Some(partner)).map_err(|e| e.to_string())?)
            .map_err(|e| format!("IT {partner}: {e}"))?;
        let v = check_enantiomorphic(&r1, &r2).map_err(|e| e.to_string())?;
        ensure(v.enantiomorphic, format!("({it}, {partner}) not enantiomorphic:\n{v}"))?;
        ensure(!check_enantiomorphic(&r1, &r1).unwrap().enantiomorphic, format!("IT {it} is its own mirror"))?;
        done.push(format!("({it},{partner})"));
    }
    for r in [ReducedRecord::cyclic(ac), ReducedRecord::dihedral(A, C)] {
        ensure(!check_enantiomorphic(&r, &r).unwrap().enantiomorphic, "self-comparison is enantiomorphic")?;
    }
    Ok(format!("(76,78), (91,95), {}; self-comparisons not enantiomorphic", done.join(", ")))
}

fn lin(m: [[i64; 2]; 2]) -> AffineMap<2> {
    AffineMap::linear(Matrix::from_ints(m))
}

fn criterion_8() -> Check {
    // translational reducibility against explicit witnesses (M − I)t on the 1/24 grid
    let mats = [
        [[1, 0], [0, 1]],
        [[-1, 0], [0, -1]],
        [[-1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[-1, 1], [0, 1]],
        [[0, -1], [1, 0]],
    ];
    for m in mats.map(Matrix::from_ints) {
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
                ensure(translationally_reducible(&k, &m) == reached.contains(&k), format!("{k:?} under {m:?}"))?;
            }
        }
    }
    // involutions of ○ with denominators ≤ 2 against orbits under bounded conjugation
    let letters = [lin([[-1, 0], [0, 1]]), lin([[-1, 1], [0, 1]]), lin([[0, 1], [1, 0]])];
    let mut words = vec![AffineMap::identity()];
    let mut layer = words.clone();
    for _ in 0..4 {
        layer = layer.iter().flat_map(|w| letters.iter().map(move |l| *w * *l)).collect();
        words.extend(layer.iter().copied());
    }
    let mut conj = Vec::new();
    for w in &words {
        for a in 0..4 {
            for b in 0..4 {
                conj.push(*w * AffineMap::translation(Vector([q(a, 4), q(b, 4)])));
            }
        }
    }
    let m = model(Torus);
    let names = ["idt.", "h-rot.", "2-rot.", "h-ref.", "v-grf.", "d-ref."];
    let orbits: Vec<BTreeSet<AffineMap<2>>> = names
        .iter()
        .map(|n| {
            let r = affinity_rep(Torus, n).unwrap();
            conj.iter().map(|h| m.canonical(&h.conj(&r))).collect()
        })
        .collect();
    let mut involutions = 0;
    for e in [-1i64, 0, 1].iter().flat_map(|a| [-1i64, 0, 1].map(move |b| (*a, b))) {
        for f in [-1i64, 0, 1].iter().flat_map(|c| [-1i64, 0, 1].map(move |d| (*c, d))) {
            let k = Matrix::from_ints([[e.0, e.1], [f.0, f.1]]);
            if k * k != Matrix::identity() {
                continue;
            }
            for (x, y) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                let g = AffineMap::with(Vector([q(x, 2), q(y, 2)]), k);
                if !(g * g).t.is_integral() {
                    continue;
                }
                let name = classify_involution(Torus, &g).map_err(|e| e.to_string())?.name;
                ensure(element_class(Torus, &g).unwrap().name == name, format!("{g}"))?;
                let hits: Vec<&str> =
                    names.iter().zip(&orbits).filter(|(_, o)| o.contains(&m.canonical(&g))).map(|(n, _)| *n).collect();
                ensure(hits == [name.as_str()], format!("{g}: {name} vs orbits {hits:?}"))?;
                involutions += 1;
            }
        }
    }
    // the quoted pairs of cases 1, 3b, 3d, 4, 5a, 5b and 6
    let quoted: [&[(&str, &str)]; 7] = [
        &[("h-rot.", "v-rot.")],
        &[("h-ref.", "v-ref."), ("v-ref.′", "v-grf."), ("v-grf.'", "h-grf.′")],
        &[("d-ref.", "e-ref.")],
        &[("h-ref.", "d-ref."), ("v-grf.", "d-ref.")],
        &[("n-aff.", "d-ref.")],
        &[("e-ref.", "m-aff.")],
        &[("m-aff.", "d-ref.")],
    ];
    let mut seen = Vec::new();
    for (a, b) in quoted.iter().flat_map(|l| l.iter()) {
        let (f, g) = (affinity_rep(Torus, a).unwrap(), affinity_rep(Torus, b).unwrap());
        let p = classify_pair(Torus, &f, &g).map_err(|e| e.to_string())?;
        ensure(!seen.contains(&p), format!("{{{a}, {b}}} repeats a class"))?;
        let tree = torus_pair_names(&f, &g).map_err(|e| e.to_string())?;
        ensure(BTreeSet::from([tree.0, tree.1]) == [*a, *b].into(), format!("{{{a}, {b}}}: case tree gives {tree:?}"))?;
        seen.push(p);
    }
    Ok(format!("reducibility on the ¼ grid, {involutions} involutions, {} quoted pairs", seen.len()))
}

fn criterion_9() -> Check {
    let m = model(Pillow);
    let closure_mod_m = |extra: &[[[i64; 2]; 2]]| {
        let mut gens =
            vec![AffineMap::translation(Vector([q(1, 2), qi(0)])), AffineMap::translation(Vector([qi(0), q(1, 2)]))];
        gens.extend(extra.iter().map(|x| lin(*x)));
        let e = m.canonical(&AffineMap::identity());
        let mut set = BTreeSet::from([e]);
        let mut frontier = vec![e];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = m.canonical(&(x * *g));
                if set.insert(y) {
                    frontier.push(y);
                }
            }
            if set.len() > 64 {
                break;
            }
        }
        set
    };
    let (a, b, c) = (A.0, B.0, C.0);
    let (square, hex, edge) = (closure_mod_m(&[a, c]), closure_mod_m(&[b, c]), closure_mod_m(&[c]));
    ensure(
        (square.len(), hex.len(), edge.len()) == (16, 24, 8),
        format!("orders {} {} {}", square.len(), hex.len(), edge.len()),
    )?;
    ensure(square.intersection(&hex).copied().collect::<BTreeSet<_>>() == edge, "pillow intersection")?;
    let sq: BTreeSet<GlMat> = closure(&[A, C], 24).unwrap().into_iter().collect();
    let hx: BTreeSet<GlMat> = closure(&[B, C], 24).unwrap().into_iter().collect();
    let ed: BTreeSet<GlMat> = closure(&[NEG_I, C], 24).unwrap().into_iter().collect();
    ensure((sq.len(), hx.len(), ed.len()) == (8, 12, 4), "torus vertex orders")?;
    ensure(sq.intersection(&hx).copied().collect::<BTreeSet<_>>() == ed, "⟨A,C⟩ ∩ ⟨B,C⟩ ≠ ⟨−I,C⟩")?;
    Ok("pillow 16, 24, 8; GL(2,ℤ) vertex groups 8, 12 meeting in ⟨−I,C⟩ of order 4".into())
}

/// Whether v lies in the lattice spanned by u and w, all in ℚ(√3)².
fn in_span(v: [QSqrt3; 2], u: [QSqrt3; 2], w: [QSqrt3; 2]) -> bool {
    let p = Mat2Sqrt3([[u[0], w[0]], [u[1], w[1]]]);
    p.inverse().map(|pi| pi.apply(v).iter().all(|x| x.b == qi(0) && x.a.is_integer())).unwrap_or(false)
}

fn criterion_10() -> Check {
    for m in [B, C] {
        ensure(hex_conjugate(&m.to_matrix()).is_orthogonal(), format!("D{m}D⁻¹ is not orthogonal"))?;
    }
    ensure(!hex_conjugate(&A.to_matrix()).is_orthogonal(), "DAD⁻¹ is orthogonal")?;
    let [g1, g2] = hex_lattice_generators();
    let half = QSqrt3::rational(q(1, 2));
    ensure(g1 == [QSqrt3::one(), QSqrt3::zero()] && g2 == [half, QSqrt3::new(qi(0), q(1, 2))], "Λ generators")?;
    for (ty, printed_neg) in [(Torus, false), (Pillow, true)] {
        let images: Vec<([QSqrt3; 2], Mat2Sqrt3)> = ty.standard_generators().iter().map(hex_affine).collect();
        for (t, lin_part) in &images {
            ensure(in_span(*t, g1, g2), format!("{ty}: D t ∉ Λ"))?;
            let id = Mat2Sqrt3::from_rational(&Matrix::identity());
            let neg = Mat2Sqrt3::from_rational(&-Matrix::identity());
            ensure(*lin_part == id || (printed_neg && *lin_part == neg), format!("{ty}: linear part"))?;
        }
        // the printed translations lie in DMD⁻¹ and the conjugated ones span the same lattice
        ensure(in_hex_lattice(g1) && in_hex_lattice(g2), "printed generators outside DMD⁻¹")?;
        let t: Vec<[QSqrt3; 2]> =
            images.iter().filter(|(_, l)| *l == Mat2Sqrt3::from_rational(&Matrix::identity())).map(|x| x.0).collect();
        ensure(in_span(g1, t[0], t[1]) && in_span(g2, t[0], t[1]), format!("{ty}: lattices differ"))?;
        if printed_neg {
            ensure(images.iter().any(|(_, l)| *l == Mat2Sqrt3::from_rational(&-Matrix::identity())), "−I missing")?;
        }
    }
    Ok("DBD⁻¹, DCD⁻¹ orthogonal; DMD⁻¹ = Λ (○) and Δ (2222)".into())
}

#[test]
fn acceptance() {
    let checks: [Criterion; 10] = [
        ("GL(2,Z) relations", criterion_1),
        ("torsion classification", criterion_2),
        ("IT 163 end to end", criterion_3),
        ("enumeration counts", criterion_4),
        ("table conformance", criterion_5),
        ("product round trip", criterion_6),
        ("enantiomorphy", criterion_7),
        ("torus involution and pair properties", criterion_8),
        ("pillow and GL(2,Z) amalgam orders", criterion_9),
        ("hexagonal dictionary", criterion_10),
    ];
    // 2222 has 40 dihedral classes in the enumeration and in the transcribed table, against 44 in the prose
    let known_failures = [4];
    let mut unexpected = Vec::new();
    for (i, (name, check)) in checks.iter().enumerate() {
        let n = i + 1;
        let result = check();
        match &result {
            Ok(detail) => println!("criterion {n}: PASS {name}: {detail}"),
            Err(detail) => println!("criterion {n}: FAIL {name}: {detail}"),
        }
        if result.is_ok() == known_failures.contains(&n) {
            unexpected.push(n);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcomes: {unexpected:?}");
}
