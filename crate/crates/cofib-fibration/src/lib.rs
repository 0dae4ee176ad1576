pub mod deform;
pub mod enant;
pub mod pipeline;
pub mod split;

use cofib_fiber::FiberError;
use cofib_gl2z::Gl2zError;
use cofib_spacegroup::{SpaceGroupError, WallpaperType};

pub use enant::{check_enantiomorphic, reduced_record, Certificate, ReducedKind, ReducedRecord, Verdict};
pub use pipeline::{
    analyze, base_action, build_product, fiber_action, geometric_generators, orthogonal_complement_group,
    quotient_bases, structure_group, witness, Base, Complement, Fiber, FibrationInput, FibrationRecord,
    GeometricGenerators, IsoType, StructureGroupData,
};
pub use split::{join, split, standard_frame, BaseMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FibrationError {
    #[error("generator {0} is not block diagonal with respect to V ⊕ V⊥")]
    NotBlockDiagonal(usize),
    #[error("generator {0} of N does not act trivially on V⊥")]
    NormalOutsideV(usize),
    #[error("N is not normalized by generator {0} of Γ")]
    NotNormal(usize),
    #[error("N is not a complete 2-space group on V")]
    NotComplete,
    #[error("K = N⊥ is not cocompact on V⊥")]
    ComplementNotCocompact,
    #[error("structure group has order greater than 24")]
    IndexTooLarge,
    #[error("no affinity of V carries N to the standard {0} group")]
    NoStandardFrame(WallpaperType),
    #[error("recipe pair {recipe} differs from the geometric pair {direct}")]
    RouteMismatch { recipe: String, direct: String },
    #[error("record is not in reduced form: {0}")]
    NotReduced(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error(transparent)]
    Gl2z(#[from] Gl2zError),
    #[error(transparent)]
    SpaceGroup(#[from] SpaceGroupError),
}
