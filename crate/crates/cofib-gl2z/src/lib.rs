pub mod amalgam;
pub mod mat;
pub mod torsion;

pub use amalgam::{normal_form, NormalForm, Vertex};
pub use mat::GlMat;
pub use torsion::{
    centralizer_finite, conjugators_det, finite_order_class, pair_conjugators_det, projective_conjugators_det,
    projective_pair_conjugators_det, vertex_embedding, Centralizer, DetSet, TorsionClass,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Gl2zError {
    #[error("determinant {0} is not a unit")]
    NotUnimodular(i64),
    #[error("matrix has entries that are not integers")]
    NotIntegral,
    #[error("matrix {0} has infinite order")]
    InfiniteOrder(GlMat),
    #[error("set is not a finite group")]
    NotFiniteGroup,
}
