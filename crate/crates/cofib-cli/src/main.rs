use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cofib_arith::scalar::{fmt_q, parse_q};
use cofib_cli::{load_catalog, parse_fixtures, parse_group_file, verify_tables};
use cofib_enum::{enum_cyclic, enum_dihedral};
use cofib_fibration::{analyze, check_enantiomorphic, reduced_record, Base, FibrationInput, ReducedRecord};
use cofib_gl2z::{conjugators_det, finite_order_class, projective_conjugators_det, DetSet, GlMat};
use cofib_spacegroup::WallpaperType;

#[derive(Parser)]
#[command(name = "cofib", about = "Co-Seifert fibrations of flat 3-orbifolds in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the fibration pipeline on a group file.
    Classify {
        file: PathBuf,
        /// Generator names of the normal subgroup N, overriding the file's `normal` line.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        normal: Option<Vec<String>>,
    },
    /// Check transcribed table rows against the enumeration and the catalog.
    VerifyTables {
        fixtures: PathBuf,
        #[arg(long)]
        catalog: PathBuf,
        /// Also write the report as TSV.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
    /// Finite-order classes and conjugacy in GL(2,ℤ).
    Gl2z {
        #[command(subcommand)]
        command: Gl2zCommand,
    },
    /// List the classes of classifying pairs of a fiber.
    Enumerate {
        fiber: String,
        #[arg(long, value_enum)]
        ext: Ext,
    },
    /// Compare two reduced records, given as a matrix (cyclic), two matrices joined by `/`
    /// (dihedral), or a group file.
    Enant {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        /// Compare in PGL(2,ℤ).
        #[arg(long)]
        projective: bool,
    },
    /// Print the group file of M × C∞ (O) or M × D∞ (I).
    Product { fiber: String, base: String },
}

#[derive(Subcommand)]
enum Gl2zCommand {
    /// Class of a finite-order matrix and a conjugator onto its representative.
    Class {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// A matrix X with X m1 X⁻¹ = m2 and det X in the given set.
    Conj {
        #[arg(allow_hyphen_values = true)]
        m1: String,
        #[arg(allow_hyphen_values = true)]
        m2: String,
        #[arg(long, default_value = "any", allow_hyphen_values = true)]
        det: String,
        #[arg(long)]
        projective: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Ext {
    Cyclic,
    Dihedral,
}

/// Outcome of a command: `Ok(true)` is success or a match, `Ok(false)` a mismatch or empty answer.
type Outcome = Result<bool, String>;

fn parse_matrix(s: &str) -> Result<GlMat, String> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|r| {
            r.split(',')
                .map(|x| {
                    let q = parse_q(x).map_err(|e| e.to_string())?;
                    if !q.is_integer() {
                        return Err(format!("entry {} is not an integer", fmt_q(&q)));
                    }
                    Ok(q.to_integer())
                })
                .collect()
        })
        .collect::<Result<_, String>>()?;
    if rows.len() != 2 || rows.iter().any(|r| r.len() != 2) {
        return Err(format!("`{s}` is not a 2×2 matrix"));
    }
    GlMat::new([[rows[0][0], rows[0][1]], [rows[1][0], rows[1][1]]]).map_err(|e| e.to_string())
}

fn parse_det(s: &str) -> Result<DetSet, String> {
    match s {
        "+1" | "1" => Ok(DetSet::Plus),
        "-1" => Ok(DetSet::Minus),
        "any" => Ok(DetSet::Any),
        _ => Err(format!("--det must be +1, -1 or any, not `{s}`")),
    }
}

fn read_group(path: &Path) -> Result<cofib_cli::GroupFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_group_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn input_of(file: &cofib_cli::GroupFile, normal: Option<Vec<String>>) -> Result<FibrationInput, String> {
    if file.dimension != 3 {
        return Err("the pipeline needs a 3-dimensional group".into());
    }
    let mut file = file.clone();
    if let Some(n) = normal {
        file.normal = n;
    }
    if file.normal.is_empty() {
        return Err("no normal subgroup given; use --normal or a `normal` line".into());
    }
    let g = file.group::<3>().map_err(|e| e.to_string())?;
    Ok(FibrationInput::new(g, file.normal_indices().map_err(|e| e.to_string())?))
}

fn classify(file: &Path, normal: Option<Vec<String>>) -> Outcome {
    let f = read_group(file)?;
    let rec = analyze(&input_of(&f, normal)?, f.it_number).map_err(|e| e.to_string())?;
    println!("fiber\t{} ({})", rec.fiber, rec.fiber_base);
    println!("K\t{}", rec.complement.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "));
    println!("structure group\t{} of order {}", rec.group, rec.structure.order());
    println!("quotients\t({}, {})", rec.quotients.0, rec.quotients.1);
    println!("actions\t{}", rec.actions_string());
    println!("classifying pair\t{}{}", rec.pair, if rec.deformation { " (deformation)" } else { "" });
    if let Some(p) = &rec.pair.parameter {
        println!("parameter\t({})", p.iter().map(fmt_q).collect::<Vec<_>>().join(", "));
    }
    println!("row\t{rec}");
    Ok(true)
}

fn verify(fixtures: &Path, catalog: &Path, tsv: Option<PathBuf>) -> Outcome {
    let text = std::fs::read_to_string(fixtures).map_err(|e| format!("{}: {e}", fixtures.display()))?;
    let rows = parse_fixtures(&text).map_err(|e| e.to_string())?;
    let cat = load_catalog(catalog).map_err(|e| e.to_string())?;
    let report = verify_tables(&rows, &cat).map_err(|e| e.to_string())?;
    print!("{report}");
    if let Some(p) = tsv {
        std::fs::write(&p, report.to_tsv()).map_err(|e| format!("{}: {e}", p.display()))?;
    }
    Ok(report.ok())
}

fn gl2z(cmd: Gl2zCommand) -> Outcome {
    match cmd {
        Gl2zCommand::Class { matrix } => {
            let k = parse_matrix(&matrix)?;
            match finite_order_class(&k) {
                Ok((cls, x)) => {
                    println!(
                        "class\t{cls}\norder\t{}\nrepresentative\t{}\nconjugator\t{x}",
                        cls.order(),
                        cls.representative()
                    );
                    Ok(true)
                }
                Err(e) => {
                    println!("none\t{e}");
                    Ok(false)
                }
            }
        }
        Gl2zCommand::Conj { m1, m2, det, projective } => {
            let (k, l, d) = (parse_matrix(&m1)?, parse_matrix(&m2)?, parse_det(&det)?);
            let found = if projective { projective_conjugators_det(&k, &l, d) } else { conjugators_det(&k, &l, d) };
            match found.map_err(|e| e.to_string())? {
                Some(x) => {
                    println!("{x}");
                    Ok(true)
                }
                None => {
                    println!("none");
                    Ok(false)
                }
            }
        }
    }
}

fn enumerate(fiber: &str, ext: Ext) -> Outcome {
    let ty: WallpaperType = fiber.parse().map_err(|e: cofib_spacegroup::SpaceGroupError| e.to_string())?;
    let all = match ext {
        Ext::Cyclic => enum_cyclic(ty),
        Ext::Dihedral => enum_dihedral(ty),
    };
    for p in &all {
        match &p.parameter {
            Some(t) => println!("{p}\tparameter ({})", t.iter().map(fmt_q).collect::<Vec<_>>().join(", ")),
            None => println!("{p}"),
        }
    }
    println!("{} classes", all.len());
    Ok(true)
}

fn reduced(arg: &str, projective: bool) -> Result<ReducedRecord, String> {
    if arg.ends_with(".group") || Path::new(arg).is_file() {
        let f = read_group(Path::new(arg))?;
        let rec = analyze(&input_of(&f, None)?, f.it_number).map_err(|e| e.to_string())?;
        return reduced_record(&rec).map_err(|e| e.to_string());
    }
    let r = match arg.split_once('/') {
        Some((a, b)) => ReducedRecord::dihedral(parse_matrix(a)?, parse_matrix(b)?),
        None => ReducedRecord::cyclic(parse_matrix(arg)?),
    };
    Ok(if projective { r.projective() } else { r })
}

fn enant(first: &str, second: &str, projective: bool) -> Outcome {
    let (r1, r2) = (reduced(first, projective)?, reduced(second, projective)?);
    let v = check_enantiomorphic(&r1, &r2).map_err(|e| e.to_string())?;
    print!("{v}");
    Ok(v.enantiomorphic)
}

fn product(fiber: &str, base: &str) -> Outcome {
    let ty: WallpaperType = fiber.parse().map_err(|e: cofib_spacegroup::SpaceGroupError| e.to_string())?;
    let base: Base = base.parse().map_err(|_| format!("base must be O or I, not `{base}`"))?;
    print!("{}", cofib_cli::catalog::product_file(ty, base).serialize());
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Classify { file, normal } => classify(&file, normal),
        Command::VerifyTables { fixtures, catalog, tsv } => verify(&fixtures, &catalog, tsv),
        Command::Gl2z { command } => gl2z(command),
        Command::Enumerate { fiber, ext } => enumerate(&fiber, ext),
        Command::Enant { first, second, projective } => enant(&first, &second, projective),
        Command::Product { fiber, base } => product(&fiber, &base),
    };
    match out {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
