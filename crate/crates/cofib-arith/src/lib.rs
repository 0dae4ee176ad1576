pub mod affine;
pub mod lattice;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod sqrt3;

pub use affine::{AffineMap, FixedSpace};
pub use lattice::Lattice;
pub use matrix::{Matrix, Vector};
pub use scalar::{q, qi, Q};
pub use sqrt3::{Mat2Sqrt3, QSqrt3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("singular linear part")]
    Singular,
    #[error("cannot parse rational `{0}`")]
    Parse(String),
    #[error("wrong number of entries: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
}
