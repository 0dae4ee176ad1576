use std::path::{Path, PathBuf};

use cofib_fibration::{build_product, Base};
use cofib_spacegroup::WallpaperType::{self, *};
use thiserror::Error;
use walkdir::WalkDir;

use crate::groupfile::{parse_group_file, GroupFile, GroupFileError};

#[derive(Error, Debug)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: GroupFileError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalog")
}

/// IT numbers of M × C∞ and M × D∞ with N = M.
pub const PRODUCT_IT: [(WallpaperType, u32, u32); 17] = [
    (Star632, 183, 191),
    (Six32, 168, 175),
    (ThreeStar3, 157, 189),
    (Star333, 156, 187),
    (Three33, 143, 174),
    (FourStar2, 100, 127),
    (Star442, 99, 123),
    (Four42, 75, 83),
    (TwoStar22, 35, 65),
    (TwoTwoCross, 32, 55),
    (TwoTwoStar, 28, 51),
    (Star2222, 25, 47),
    (StarCross, 8, 38),
    (CrossCross, 7, 26),
    (StarStar, 6, 25),
    (Pillow, 3, 10),
    (Torus, 1, 6),
];

fn wallpaper_names(n: usize) -> Vec<String> {
    let mut names = vec!["t1".to_string(), "t2".to_string()];
    names.extend((1..=n - 2).map(|i| format!("g{i}")));
    names
}

pub fn wallpaper_file(ty: WallpaperType) -> GroupFile {
    let g = ty.standard_group();
    let names = wallpaper_names(g.generators().len());
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    GroupFile { it_number: Some(ty.it_number()), fiber: Some(ty), ..GroupFile::from_group(&refs, &g) }
}

pub fn product_file(ty: WallpaperType, base: Base) -> GroupFile {
    let input = build_product(ty, base);
    let mut names = wallpaper_names(input.normal_gens.len());
    let normal = names.clone();
    names.push("t3".into());
    if base == Base::I {
        names.push("s".into());
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let it = PRODUCT_IT.iter().find(|p| p.0 == ty).map(|p| if base == Base::O { p.1 } else { p.2 });
    GroupFile { it_number: it, fiber: Some(ty), normal, ..GroupFile::from_group(&refs, &input.gamma) }
}

/// Generated catalog entries with their paths relative to the catalog directory.
pub fn generated() -> Vec<(String, GroupFile)> {
    let mut out = Vec::new();
    for ty in WallpaperType::ALL {
        out.push((format!("wallpaper/{:02}-{}.group", ty.it_number(), ty.hermann_mauguin()), wallpaper_file(ty)));
    }
    for ty in WallpaperType::ALL {
        for base in [Base::O, Base::I] {
            out.push((format!("products/{}-{base}.group", ty.hermann_mauguin()), product_file(ty, base)));
        }
    }
    out
}

/// Every `.group` file under a directory, sorted by path.
pub fn load_catalog(dir: &Path) -> Result<Vec<(PathBuf, GroupFile)>, CatalogError> {
    let mut out = Vec::new();
    for e in WalkDir::new(dir).sort_by_file_name() {
        let e = e.map_err(|err| CatalogError::Io { path: dir.to_path_buf(), source: err.into() })?;
        let path = e.path();
        if path.extension().is_some_and(|x| x == "group") {
            let text =
                std::fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.into(), source })?;
            let file = parse_group_file(&text).map_err(|source| CatalogError::Parse { path: path.into(), source })?;
            out.push((path.to_path_buf(), file));
        }
    }
    Ok(out)
}
