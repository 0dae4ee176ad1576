use std::fmt;

use cofib_fiber::{affinity_rep, PairKind};
use cofib_fibration::{Base, IsoType};
use cofib_spacegroup::WallpaperType;
use thiserror::Error;

pub const FIXTURES: &str = include_str!("../data/fixtures.tsv");

const HEADER: &str =
    "table\trow\tit\tfiber\tfiber_base\tgroup\tquotient_fiber\tquotient_base\tactions\tpair\tasterisk\tdeformation";

#[derive(Error, Debug, PartialEq)]
#[error("fixtures line {line}: {msg}")]
pub struct FixtureError {
    pub line: usize,
    pub msg: String,
}

/// One transcribed table row.
#[derive(Clone, PartialEq, Debug)]
pub struct FixtureRow {
    pub table: u32,
    pub row: u32,
    pub it: u32,
    pub fiber: WallpaperType,
    pub fiber_base: Base,
    pub group: IsoType,
    pub quotient: (WallpaperType, Base),
    pub actions: Vec<(String, String)>,
    pub pair: (String, String),
    pub asterisk: bool,
    pub deformation: bool,
}

impl FixtureRow {
    pub fn kind(&self) -> PairKind {
        match self.quotient.1 {
            Base::O => PairKind::Cyclic,
            Base::I => PairKind::Dihedral,
        }
    }
}

impl fmt::Display for FixtureRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "table {} row {} (IT {})", self.table, self.row, self.it)
    }
}

fn parse_actions(s: &str) -> Option<Vec<(String, String)>> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    inner.split("), (").map(|p| p.split_once(", ").map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))).collect()
}

fn flag(s: &str) -> Option<bool> {
    match s {
        "0" => Some(false),
        "1" => Some(true),
        _ => None,
    }
}

/// Parses the fixture TSV; every pair name must exist in its fiber's dictionary.
pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>, FixtureError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == HEADER => {}
        _ => return Err(FixtureError { line: 1, msg: "missing header".into() }),
    }
    let mut out = Vec::new();
    for (i, l) in lines {
        let line = i + 1;
        if l.trim().is_empty() {
            continue;
        }
        let err = |msg: String| FixtureError { line, msg };
        let c: Vec<&str> = l.split('\t').collect();
        if c.len() != 12 {
            return Err(err(format!("expected 12 columns, found {}", c.len())));
        }
        let num = |s: &str, what: &str| s.parse::<u32>().map_err(|_| err(format!("bad {what} `{s}`")));
        let ty = |s: &str| s.parse::<WallpaperType>().map_err(|_| err(format!("unknown fiber `{s}`")));
        let base = |s: &str| s.parse::<Base>().map_err(|_| err(format!("bad base `{s}`")));
        let fiber = ty(c[3])?;
        let pair = c[9].split_once(", ").ok_or_else(|| err(format!("bad pair `{}`", c[9])))?;
        for n in [pair.0, pair.1] {
            affinity_rep(fiber, n).map_err(|e| err(e.to_string()))?;
        }
        out.push(FixtureRow {
            table: num(c[0], "table")?,
            row: num(c[1], "row")?,
            it: num(c[2], "IT number")?,
            fiber,
            fiber_base: base(c[4])?,
            group: c[5].parse().map_err(|_| err(format!("bad group `{}`", c[5])))?,
            quotient: (ty(c[6])?, base(c[7])?),
            actions: parse_actions(c[8]).ok_or_else(|| err(format!("bad actions `{}`", c[8])))?,
            pair: (pair.0.to_string(), pair.1.to_string()),
            asterisk: flag(c[10]).ok_or_else(|| err("bad asterisk flag".into()))?,
            deformation: flag(c[11]).ok_or_else(|| err("bad deformation flag".into()))?,
        });
    }
    Ok(out)
}

pub fn fixtures() -> Vec<FixtureRow> {
    parse_fixtures(FIXTURES).expect("shipped fixtures parse")
}
