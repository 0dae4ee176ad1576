pub mod group;
pub mod normalizer;
pub mod wallpaper;

pub use group::SpaceGroup;
pub use normalizer::{in_normalizer, in_normalizer_closed, normalizes};
pub use wallpaper::{identify_wallpaper, WallpaperType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceGroupError {
    #[error("not crystallographic as given: point group exceeds order {0}")]
    NotCrystallographic(usize),
    #[error("not cocompact as given: translation lattice has rank {rank} < {dim}")]
    NotCocompact { rank: usize, dim: usize },
    #[error("no generators")]
    Empty,
    #[error("unknown wallpaper type `{0}`")]
    UnknownType(String),
}
