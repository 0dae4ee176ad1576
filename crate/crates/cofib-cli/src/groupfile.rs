use std::fmt::Write;

use cofib_arith::scalar::{fmt_q, parse_q};
use cofib_arith::{AffineMap, Matrix, Vector, Q};
use cofib_spacegroup::{SpaceGroup, SpaceGroupError, WallpaperType};
use thiserror::Error;

#[derive(Error, Debug, PartialEq)]
pub enum GroupFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("generator `{name}`: {msg}")]
    Generator { name: String, msg: String },
    #[error("normal subgroup generator `{0}` is not defined")]
    UnknownNormal(String),
    #[error("group invariant failed: {0}")]
    Invariant(#[from] SpaceGroupError),
}

#[derive(Clone, PartialEq, Debug)]
pub struct Generator {
    pub name: String,
    pub translation: Vec<Q>,
    pub matrix: Vec<Vec<Q>>,
}

impl Generator {
    pub fn from_affine<const N: usize>(name: &str, g: &AffineMap<N>) -> Self {
        Generator { name: name.to_string(), translation: g.t.0.to_vec(), matrix: g.m.rows() }
    }

    pub fn affine<const N: usize>(&self) -> Result<AffineMap<N>, GroupFileError> {
        let err = |msg: &str| GroupFileError::Generator { name: self.name.clone(), msg: msg.to_string() };
        if self.translation.len() != N || self.matrix.len() != N {
            return Err(err("wrong dimension"));
        }
        AffineMap::new(Vector::from_slice(&self.translation), Matrix::from_rows(self.matrix.clone()))
            .map_err(|e| err(&e.to_string()))
    }
}

/// A group-definition file: dimension, optional metadata and named generators.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupFile {
    pub dimension: usize,
    pub it_number: Option<u32>,
    pub fiber: Option<WallpaperType>,
    pub normal: Vec<String>,
    pub generators: Vec<Generator>,
}

impl GroupFile {
    pub fn from_group<const N: usize>(names: &[&str], g: &SpaceGroup<N>) -> Self {
        GroupFile {
            dimension: N,
            it_number: None,
            fiber: None,
            normal: Vec::new(),
            generators: names.iter().zip(g.generators()).map(|(n, g)| Generator::from_affine(n, g)).collect(),
        }
    }

    pub fn affines<const N: usize>(&self) -> Result<Vec<AffineMap<N>>, GroupFileError> {
        self.generators.iter().map(|g| g.affine::<N>()).collect()
    }

    pub fn group<const N: usize>(&self) -> Result<SpaceGroup<N>, GroupFileError> {
        Ok(SpaceGroup::new(self.affines::<N>()?)?)
    }

    /// Indices of the normal-subgroup generators.
    pub fn normal_indices(&self) -> Result<Vec<usize>, GroupFileError> {
        self.normal
            .iter()
            .map(|n| {
                self.generators
                    .iter()
                    .position(|g| &g.name == n)
                    .ok_or_else(|| GroupFileError::UnknownNormal(n.clone()))
            })
            .collect()
    }

    /// Checks the group invariants for the declared dimension.
    pub fn validate(&self) -> Result<(), GroupFileError> {
        match self.dimension {
            2 => self.group::<2>().map(|_| ()),
            3 => self.group::<3>().map(|_| ()),
            d => Err(GroupFileError::Syntax { line: 1, msg: format!("unsupported dimension {d}") }),
        }?;
        self.normal_indices().map(|_| ())
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let row = |v: &[Q]| v.iter().map(fmt_q).collect::<Vec<_>>().join(" ");
        writeln!(s, "dimension {}", self.dimension).unwrap();
        if let Some(n) = self.it_number {
            writeln!(s, "it_number {n}").unwrap();
        }
        if let Some(f) = self.fiber {
            writeln!(s, "fiber {f}").unwrap();
        }
        if !self.normal.is_empty() {
            writeln!(s, "normal {}", self.normal.join(" ")).unwrap();
        }
        for g in &self.generators {
            writeln!(s, "generator {}", g.name).unwrap();
            writeln!(s, "  {}", row(&g.translation)).unwrap();
            for r in &g.matrix {
                writeln!(s, "  {}", row(r)).unwrap();
            }
        }
        s
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> GroupFileError {
    GroupFileError::Syntax { line, msg: msg.into() }
}

/// Parses and validates a group file. Lines are `key value` pairs, `#` starts a comment, and each
/// `generator NAME` is followed by its translation row and the rows of its matrix.
pub fn parse_group_file(text: &str) -> Result<GroupFile, GroupFileError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut file = GroupFile { dimension: 0, it_number: None, fiber: None, normal: Vec::new(), generators: Vec::new() };
    let mut i = 0;
    while i < lines.len() {
        let (n, l) = lines[i];
        let (key, rest) = l.split_once(char::is_whitespace).map(|(k, r)| (k, r.trim())).unwrap_or((l, ""));
        i += 1;
        match key {
            "dimension" => {
                file.dimension = rest.parse().map_err(|_| syntax(n, format!("bad dimension `{rest}`")))?;
                if !(2..=3).contains(&file.dimension) {
                    return Err(syntax(n, format!("unsupported dimension {}", file.dimension)));
                }
            }
            "it_number" => {
                file.it_number = Some(rest.parse().map_err(|_| syntax(n, format!("bad IT number `{rest}`")))?)
            }
            "fiber" => file.fiber = Some(rest.parse().map_err(|_| syntax(n, format!("unknown fiber `{rest}`")))?),
            "normal" => file.normal = rest.split_whitespace().map(String::from).collect(),
            "generator" => {
                if file.dimension == 0 {
                    return Err(syntax(n, "generator before dimension"));
                }
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(syntax(n, "generator needs a single name"));
                }
                if file.generators.iter().any(|g| g.name == rest) {
                    return Err(syntax(n, format!("duplicate generator `{rest}`")));
                }
                let d = file.dimension;
                let mut rows = Vec::new();
                for _ in 0..=d {
                    let &(m, r) = lines.get(i).ok_or_else(|| syntax(n, format!("generator `{rest}` is incomplete")))?;
                    let row: Vec<Q> = r
                        .split_whitespace()
                        .map(|x| parse_q(x).map_err(|_| syntax(m, format!("bad rational `{x}`"))))
                        .collect::<Result<_, _>>()?;
                    if row.len() != d {
                        return Err(syntax(m, format!("expected {d} entries, found {}", row.len())));
                    }
                    rows.push(row);
                    i += 1;
                }
                let translation = rows.remove(0);
                file.generators.push(Generator { name: rest.to_string(), translation, matrix: rows });
            }
            _ => return Err(syntax(n, format!("unknown key `{key}`"))),
        }
    }
    if file.dimension == 0 {
        return Err(syntax(1, "missing dimension"));
    }
    file.validate()?;
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TORUS: &str = "dimension 2\nfiber ○\ngenerator t1\n  1 0\n  1 0\n  0 1\ngenerator t2\n  0 1\n  1 0\n  0 1\n";

    #[test]
    fn canonical_round_trip() {
        let f = parse_group_file(TORUS).unwrap();
        assert_eq!(f.serialize(), TORUS);
        assert_eq!(f.generators.len(), 2);
        assert_eq!(cofib_spacegroup::identify_wallpaper(&f.group::<2>().unwrap()), WallpaperType::Torus);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let bad = TORUS.replace("  0 1\n  1 0", "  0 1/0\n  1 0");
        assert_eq!(parse_group_file(&bad).unwrap_err(), syntax(8, "bad rational `1/0`"));
        assert!(matches!(parse_group_file("dimension 2\nfoo 1\n"), Err(GroupFileError::Syntax { line: 2, .. })));
        let short = "dimension 2\ngenerator t\n  0 0\n  1 0\n";
        assert!(matches!(parse_group_file(short), Err(GroupFileError::Syntax { line: 2, .. })));
        assert!(matches!(
            parse_group_file("dimension 2\ngenerator t\n 1 -1/2\n 1 0 0\n"),
            Err(GroupFileError::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            parse_group_file("dimension 2\ngenerator t\n 1 1/-2\n"),
            Err(GroupFileError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn invariant_failures_are_named() {
        let one = "dimension 2\ngenerator t1\n  1 0\n  1 0\n  0 1\n";
        assert!(matches!(parse_group_file(one), Err(GroupFileError::Invariant(SpaceGroupError::NotCocompact { .. }))));
        let singular = format!("{TORUS}generator s\n  0 0\n  1 0\n  0 0\n");
        assert!(matches!(parse_group_file(&singular), Err(GroupFileError::Generator { .. })));
        let normal = format!("{TORUS}normal t3\n");
        assert_eq!(parse_group_file(&normal).unwrap_err(), GroupFileError::UnknownNormal("t3".into()));
    }
}
