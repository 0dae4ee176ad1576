use std::sync::OnceLock;

use crate::mat::{closure, GlMat, A, B, C, I, NEG_I, S, T};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Vertex {
    /// ⟨A, C⟩, order 8
    Square,
    /// ⟨B, C⟩, order 12
    Hex,
}

pub fn square_group() -> &'static [GlMat] {
    static G: OnceLock<Vec<GlMat>> = OnceLock::new();
    G.get_or_init(|| closure(&[A, C], 8).unwrap())
}

pub fn hex_group() -> &'static [GlMat] {
    static G: OnceLock<Vec<GlMat>> = OnceLock::new();
    G.get_or_init(|| closure(&[B, C], 12).unwrap())
}

pub fn edge_group() -> &'static [GlMat] {
    static G: OnceLock<Vec<GlMat>> = OnceLock::new();
    G.get_or_init(|| closure(&[NEG_I, C], 4).unwrap())
}

/// Non-trivial left coset representatives modulo the edge group.
pub fn coset_reps(v: Vertex) -> &'static [GlMat] {
    static SQ: OnceLock<Vec<GlMat>> = OnceLock::new();
    static HX: OnceLock<Vec<GlMat>> = OnceLock::new();
    match v {
        Vertex::Square => SQ.get_or_init(|| vec![A]),
        Vertex::Hex => HX.get_or_init(|| vec![B, C * B]),
    }
}

pub fn vertex_elements(v: Vertex) -> &'static [GlMat] {
    match v {
        Vertex::Square => square_group(),
        Vertex::Hex => hex_group(),
    }
}

pub fn in_edge(g: &GlMat) -> bool {
    edge_group().contains(g)
}

fn vertex_of(g: &GlMat) -> Option<Vertex> {
    if square_group().contains(g) {
        Some(Vertex::Square)
    } else if hex_group().contains(g) {
        Some(Vertex::Hex)
    } else {
        None
    }
}

/// Split g = r e with r a fixed coset representative and e in the edge group.
fn split(v: Vertex, g: GlMat) -> (GlMat, GlMat) {
    for r in coset_reps(v) {
        let e = r.inv() * g;
        if in_edge(&e) {
            return (*r, e);
        }
    }
    unreachable!("element outside the edge group has a coset representative")
}

/// Reduced alternating word r_1 ⋯ r_k · e.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm {
    pub letters: Vec<(Vertex, GlMat)>,
    pub edge: GlMat,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { letters: vec![], edge: I }
    }

    pub fn eval(&self) -> GlMat {
        self.letters.iter().fold(I, |acc, (_, r)| acc * *r) * self.edge
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Normal form of g · self for g in a vertex group.
    pub fn left_mul(&self, g: GlMat) -> NormalForm {
        let gv = vertex_of(&g).expect("vertex group element");
        let Some(&(v1, r1)) = self.letters.first() else {
            let h = g * self.edge;
            if in_edge(&h) {
                return NormalForm { letters: vec![], edge: h };
            }
            let (r, e) = split(gv, h);
            return NormalForm { letters: vec![(gv, r)], edge: e };
        };
        let rest = NormalForm { letters: self.letters[1..].to_vec(), edge: self.edge };
        if in_edge(&g) || gv == v1 {
            let h = g * r1;
            if in_edge(&h) {
                return rest.left_mul(h);
            }
            let (r, e) = split(v1, h);
            let mut tail = rest.left_mul(e);
            tail.letters.insert(0, (v1, r));
            tail
        } else {
            let (r, e) = split(gv, g);
            let mut tail = self.left_mul(e);
            tail.letters.insert(0, (gv, r));
            tail
        }
    }

    pub fn concat(&self, other: &NormalForm) -> NormalForm {
        let mut nf = other.left_mul(self.edge);
        for (_, r) in self.letters.iter().rev() {
            nf = nf.left_mul(*r);
        }
        nf
    }
}

/// Factor X into vertex-group elements by Euclid's algorithm on the first column.
pub fn vertex_word(x: GlMat) -> Vec<GlMat> {
    let mut word = Vec::new();
    let mut m = x;
    if m.det() == -1 {
        word.push(A);
        m = A * m;
    }
    while m.0[1][0] != 0 {
        let (a, c) = (m.0[0][0], m.0[1][0]);
        let q = a.div_euclid(c);
        // m = T^q S^{-1} (S T^{-q} m)
        word.extend(t_power(q));
        word.push(-S);
        m = S * T.pow(-q) * m;
    }
    // m = [[a, b], [0, d]] = T^{bd} diag(a, d)
    let (a, b, d) = (m.0[0][0], m.0[0][1], m.0[1][1]);
    word.extend(t_power(b * d));
    word.push(GlMat([[a, 0], [0, d]]));
    word
}

fn t_power(q: i64) -> Vec<GlMat> {
    let unit = if q >= 0 { vec![B, A] } else { vec![A, B] };
    (0..q.unsigned_abs()).flat_map(|_| unit.clone()).collect()
}

pub fn normal_form(x: GlMat) -> NormalForm {
    vertex_word(x).into_iter().rev().fold(NormalForm::identity(), |nf, g| nf.left_mul(g))
}
