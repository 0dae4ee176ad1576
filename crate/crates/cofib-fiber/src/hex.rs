use cofib_arith::{q, qi, AffineMap, Mat2Sqrt3, Matrix, QSqrt3};

/// D = [[1, −1/2], [0, √3/2]] carries the square lattice ℤ² onto the hexagonal lattice.
pub fn d_matrix() -> Mat2Sqrt3 {
    let z = QSqrt3::zero();
    Mat2Sqrt3([[QSqrt3::one(), QSqrt3::rational(q(-1, 2))], [z, QSqrt3::new(qi(0), q(1, 2))]])
}

pub fn hex_conjugate(m: &Matrix<2>) -> Mat2Sqrt3 {
    let d = d_matrix();
    d * Mat2Sqrt3::from_rational(m) * d.inverse().unwrap()
}

/// Image of an affine map of the square picture in hexagonal coordinates, as (D t, D M D⁻¹).
pub fn hex_affine(f: &AffineMap<2>) -> ([QSqrt3; 2], Mat2Sqrt3) {
    let t = f.t.0.map(QSqrt3::rational);
    (d_matrix().apply(t), hex_conjugate(&f.m))
}

/// Whether a vector of ℚ(√3)² lies in D ℤ².
pub fn in_hex_lattice(v: [QSqrt3; 2]) -> bool {
    let w = d_matrix().inverse().unwrap().apply(v);
    w.iter().all(|x| x.b == qi(0) && x.a.is_integer())
}

/// Generators of the hexagonal translation lattice: e₁ and e₁/2 + (√3/2)e₂.
pub fn hex_lattice_generators() -> [[QSqrt3; 2]; 2] {
    [[QSqrt3::one(), QSqrt3::zero()], [QSqrt3::rational(q(1, 2)), QSqrt3::new(qi(0), q(1, 2))]]
}
