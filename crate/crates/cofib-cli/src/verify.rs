use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;

use cofib_enum::{enum_cyclic, enum_dihedral, ClassifyingPair};
use cofib_fiber::{affinity_rep, class_of_names, classify_element, PairKind};
use cofib_fibration::{analyze, base_action, FibrationInput, FibrationRecord};
use cofib_spacegroup::WallpaperType;
use thiserror::Error;

use crate::fixtures::FixtureRow;
use crate::groupfile::GroupFile;

#[derive(Error, Debug)]
pub enum VerifyError {
    #[error("{row}: {msg}")]
    Name { row: String, msg: String },
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Finding {
    pub table: u32,
    pub row: Option<u32>,
    pub it: Option<u32>,
    pub detail: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "table {}", self.table)?;
        if let Some(r) = self.row {
            write!(f, " row {r}")?;
        }
        if let Some(n) = self.it {
            write!(f, " (IT {n})")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Match {
    pub table: u32,
    pub row: u32,
    pub it: u32,
    pub source: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub rows: usize,
    pub classes_checked: usize,
    pub enumeration: Vec<Finding>,
    pub groups_checked: usize,
    pub matched: Vec<Match>,
    pub pipeline: Vec<Finding>,
    /// Catalog groups whose pipeline run failed.
    pub catalog_issues: Vec<String>,
    /// Catalog groups whose IT number has no row among the given fixtures.
    pub no_row: Vec<String>,
    pub no_witness: Vec<(u32, u32, u32)>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.enumeration.is_empty() && self.pipeline.is_empty() && self.catalog_issues.is_empty()
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("section\ttable\trow\tit\tstatus\tdetail\n");
        let opt = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
        for f in &self.enumeration {
            s += &format!("enumeration\t{}\t{}\t{}\tmismatch\t{}\n", f.table, opt(f.row), opt(f.it), f.detail);
        }
        for m in &self.matched {
            s += &format!("pipeline\t{}\t{}\t{}\tmatch\t{}\n", m.table, m.row, m.it, m.source);
        }
        for f in &self.pipeline {
            s += &format!("pipeline\t{}\t{}\t{}\tmismatch\t{}\n", f.table, opt(f.row), opt(f.it), f.detail);
        }
        for i in &self.catalog_issues {
            s += &format!("pipeline\t\t\t\terror\t{i}\n");
        }
        for (t, r, it) in &self.no_witness {
            s += &format!("witness\t{t}\t{r}\t{it}\tno catalog witness\t\n");
        }
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "(a) enumeration conformance: {} rows, {} classes, {} mismatches",
            self.rows,
            self.classes_checked,
            self.enumeration.len()
        )?;
        for m in &self.enumeration {
            writeln!(f, "  MISMATCH {m}")?;
        }
        writeln!(
            f,
            "(b) pipeline conformance: {} catalog groups, {} rows matched, {} mismatches",
            self.groups_checked,
            self.matched.len(),
            self.pipeline.len() + self.catalog_issues.len()
        )?;
        for m in &self.matched {
            writeln!(f, "  match table {} row {} (IT {}) by {}", m.table, m.row, m.it, m.source)?;
        }
        for m in &self.pipeline {
            writeln!(f, "  MISMATCH {m}")?;
        }
        for i in &self.catalog_issues {
            writeln!(f, "  ERROR {i}")?;
        }
        for i in &self.no_row {
            writeln!(f, "  no row for {i}")?;
        }
        writeln!(f, "(c) no catalog witness: {} rows", self.no_witness.len())?;
        for (t, r, it) in &self.no_witness {
            writeln!(f, "  table {t} row {r} (IT {it})")?;
        }
        Ok(())
    }
}

fn row_class(r: &FixtureRow) -> Result<ClassifyingPair, VerifyError> {
    class_of_names(r.fiber, r.kind(), &r.pair.0, &r.pair.1)
        .map(Into::into)
        .map_err(|e| VerifyError::Name { row: r.to_string(), msg: e.to_string() })
}

fn enumerate(ty: WallpaperType, kind: PairKind) -> Vec<ClassifyingPair> {
    match kind {
        PairKind::Cyclic => enum_cyclic(ty),
        PairKind::Dihedral => enum_dihedral(ty),
    }
}

/// Compares the distinct classes listed in each table, split by kind, with the enumeration.
fn enumeration_conformance(rows: &[FixtureRow], report: &mut Report) -> Result<(), VerifyError> {
    let mut listed: BTreeMap<(u32, WallpaperType, PairKind), Vec<ClassifyingPair>> = BTreeMap::new();
    for r in rows {
        let p = row_class(r)?;
        let finding = |detail: String| Finding { table: r.table, row: Some(r.row), it: Some(r.it), detail };
        if p.asterisk != r.asterisk {
            report.enumeration.push(finding(format!("asterisk is {} but the pair {p} has {}", r.asterisk, p.asterisk)));
        }
        if p.names() != (r.pair.0.as_str(), r.pair.1.as_str()) {
            report.enumeration.push(finding(format!("{{{}, {}}} is displayed as {p}", r.pair.0, r.pair.1)));
        }
        let l = listed.entry((r.table, r.fiber, r.kind())).or_default();
        if !l.contains(&p) {
            l.push(p);
        }
    }
    let tables: BTreeSet<(u32, WallpaperType)> = listed.keys().map(|k| (k.0, k.1)).collect();
    for (table, ty) in tables {
        for kind in [PairKind::Cyclic, PairKind::Dihedral] {
            let from_table = listed.get(&(table, ty, kind)).cloned().unwrap_or_default();
            let all = enumerate(ty, kind);
            report.classes_checked += all.len();
            let finding = |detail: String| Finding { table, row: None, it: None, detail };
            for p in &all {
                if !from_table.contains(p) {
                    report.enumeration.push(finding(format!("{kind} class {p} of {ty} is not listed")));
                }
            }
            for p in &from_table {
                if !all.contains(p) {
                    report.enumeration.push(finding(format!("{kind} class {p} of {ty} is not enumerated")));
                }
            }
        }
    }
    Ok(())
}

fn class_name(ty: WallpaperType, name: &str) -> Option<String> {
    let f = affinity_rep(ty, name).ok()?;
    classify_element(ty, &f).ok().map(|c| c.name)
}

/// First disagreement between a pipeline record and a table row, if any.
pub fn compare_row(rec: &FibrationRecord, r: &FixtureRow) -> Result<Option<String>, VerifyError> {
    if rec.fiber != r.fiber {
        return Ok(Some(format!("fiber {} vs {}", rec.fiber, r.fiber)));
    }
    if rec.fiber_base != r.fiber_base {
        return Ok(Some(format!("fiber base {} vs {}", rec.fiber_base, r.fiber_base)));
    }
    if rec.group != r.group {
        return Ok(Some(format!("structure group {} vs {}", rec.group, r.group)));
    }
    if rec.quotients != r.quotient {
        return Ok(Some(format!(
            "quotients ({}, {}) vs ({}, {})",
            rec.quotients.0, rec.quotients.1, r.quotient.0, r.quotient.1
        )));
    }
    let p = row_class(r)?;
    if rec.pair != p {
        return Ok(Some(format!("classifying pair {} vs {p}", rec.pair)));
    }
    if rec.pair.asterisk != r.asterisk || rec.deformation != r.deformation {
        return Ok(Some("asterisk or deformation flag differs".into()));
    }
    // actions depend on the choice of generators, so each listed action must be realized
    let s = &rec.structure;
    let realized: BTreeSet<(String, String)> = (0..s.order())
        .filter_map(|i| {
            let f = classify_element(rec.fiber, &s.fibers[i]).ok()?;
            Some((f.name, base_action(&s.bases[i], &rec.complement)))
        })
        .collect();
    if r.actions.len() != rec.actions.len() {
        return Ok(Some(format!("{} generators vs {}", rec.actions.len(), r.actions.len())));
    }
    for (a, b) in &r.actions {
        let Some(c) = class_name(r.fiber, a) else {
            return Ok(Some(format!("unknown fiber action {a}")));
        };
        if !realized.contains(&(c, b.clone())) {
            return Ok(Some(format!("action ({a}, {b}) is not realized; computed {}", rec.actions_string())));
        }
    }
    Ok(None)
}

/// Conformance of the fixtures with the enumeration and with the pipeline on the catalog.
pub fn verify_tables(rows: &[FixtureRow], catalog: &[(PathBuf, GroupFile)]) -> Result<Report, VerifyError> {
    let mut report = Report { rows: rows.len(), ..Default::default() };
    enumeration_conformance(rows, &mut report)?;
    let mut matched: BTreeSet<(u32, u32)> = BTreeSet::new();
    for (path, file) in catalog {
        let Some(it) = file.it_number else { continue };
        if file.dimension != 3 {
            continue;
        }
        report.groups_checked += 1;
        let source = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let candidates: Vec<&FixtureRow> = rows.iter().filter(|r| r.it == it).collect();
        if candidates.is_empty() {
            report.no_row.push(format!("{source} (IT {it})"));
            continue;
        }
        let input = match (file.group::<3>(), file.normal_indices()) {
            (Ok(g), Ok(n)) => FibrationInput::new(g, n),
            (Err(e), _) | (_, Err(e)) => {
                report.catalog_issues.push(format!("{source}: {e}"));
                continue;
            }
        };
        let rec = match analyze(&input, Some(it)) {
            Ok(rec) => rec,
            Err(e) => {
                report.catalog_issues.push(format!("{source}: {e}"));
                continue;
            }
        };
        let mut diffs = Vec::new();
        for r in &candidates {
            match compare_row(&rec, r)? {
                None => {
                    matched.insert((r.table, r.row));
                    report.matched.push(Match { table: r.table, row: r.row, it, source: source.clone() });
                }
                Some(d) => diffs.push(Finding {
                    table: r.table,
                    row: Some(r.row),
                    it: Some(it),
                    detail: format!("{source}: {d}"),
                }),
            }
        }
        if report.matched.iter().all(|m| m.source != source || m.it != it) {
            report.pipeline.extend(diffs);
        }
    }
    report.no_witness =
        rows.iter().filter(|r| !matched.contains(&(r.table, r.row))).map(|r| (r.table, r.row, r.it)).collect();
    report.enumeration.sort();
    report.matched.sort();
    report.pipeline.sort();
    report.no_witness.sort();
    Ok(report)
}
