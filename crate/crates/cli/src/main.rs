//! `matkl` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 size cap exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use matkl::closed_forms::verify_closed_forms;
use matkl::hecke::verify_hecke;
use matkl::io::{
    checks_to_json, coeff_to_json, deletion_report_to_json, graph_from_json, matroid_from_json,
    poly_to_json,
};
use matkl::series::{phi_c_series, phi_f_series, series_identity_holds};
use matkl::{char_polynomial, verify_deletion, Error, Family, IntKlTable, Matroid, DEFAULT_CAP};

#[derive(Parser)]
#[command(
    name = "matkl",
    version,
    about = "Kazhdan-Lusztig, Z-polynomials and tau-invariants of matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rank, KL polynomial, Z-polynomial, tau and characteristic polynomial.
    Compute {
        #[command(flatten)]
        source: Source,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        suite: Suite,
        #[command(flatten)]
        source: Source,
    },
    /// One row per member of a graph family.
    Table(TableArgs),
    /// Truncated fan and cycle generating series and their identity.
    Series {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        /// Exit 1 if the identity fails.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct Source {
    /// Matroid JSON file ({"n", "flats"}); "-" reads stdin.
    #[arg(long, group = "src")]
    matroid: Option<String>,
    /// Graph JSON file ({"vertices", "edges"}); "-" reads stdin.
    #[arg(long, group = "src")]
    graph: Option<String>,
    /// Family spec such as cycle:6 or saw:3,3.
    #[arg(long, group = "src")]
    family: Option<String>,
    /// Largest accepted ground set (or edge count).
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct TableArgs {
    /// Family name such as cycle, saw or thagomizer.
    #[arg(long)]
    family: String,
    /// Inclusive range a..b of the varying parameter.
    #[arg(long)]
    range: Option<String>,
    /// First parameter of a two-parameter family.
    #[arg(long)]
    n: Option<usize>,
    /// Inclusive range of the second parameter (same as --range).
    #[arg(long)]
    r: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    out: Format,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Deletion,
    Hecke,
    Closedforms,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Verification,
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Compute { source } => compute(&source, &mut out),
        Command::Verify { suite, source } => verify(suite, &source, &mut out),
        Command::Table(args) => table(&args, &mut out),
        Command::Series { order, check } => series(order as usize, check, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::SizeCap { .. }) {
                3
            } else {
                2
            })
        }
    }
}

fn read_text(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn family_matroid(family: Family, cap: usize) -> Result<Matroid, Error> {
    let g = family.build()?;
    if g.edge_count() > cap {
        return Err(Error::SizeCap {
            size: g.edge_count(),
            cap,
        });
    }
    g.graphic_matroid()
}

fn load(source: &Source) -> Result<Option<Matroid>, Error> {
    if let Some(path) = &source.matroid {
        return matroid_from_json(&read_text(path)?, source.cap).map(Some);
    }
    if let Some(path) = &source.graph {
        return graph_from_json(&read_text(path)?, source.cap)?
            .graphic_matroid()
            .map(Some);
    }
    if let Some(spec) = &source.family {
        return family_matroid(spec.parse()?, source.cap).map(Some);
    }
    Ok(None)
}

fn require(source: &Source) -> Result<Matroid, Error> {
    load(source)?
        .ok_or_else(|| Error::Parse("one of --matroid, --graph or --family is required".into()))
}

fn write_failed(e: io::Error) -> Outcome {
    // a closed pipe (e.g. `| head`) is not an error
    if e.kind() == io::ErrorKind::BrokenPipe {
        Ok(())
    } else {
        Err(Failure::Input(Error::Parse(format!("write failed: {e}"))))
    }
}

fn emit(out: &mut impl Write, value: &Value) -> Outcome {
    writeln!(out, "{value}").or_else(write_failed)
}

fn summary(m: &Matroid) -> Value {
    let table = IntKlTable::new(m);
    json!({
        "rank": m.rank(),
        "kl": poly_to_json(table.kl_polynomial()),
        "z": poly_to_json(&table.z_polynomial()),
        "tau": coeff_to_json(&table.tau()),
        "charpoly": poly_to_json(&char_polynomial::<BigInt>(m)),
    })
}

fn compute(source: &Source, out: &mut impl Write) -> Outcome {
    emit(out, &summary(&require(source)?))
}

fn verify(suite: Suite, source: &Source, out: &mut impl Write) -> Outcome {
    let m = load(source)?;
    let needs_source = matches!(suite, Suite::Deletion | Suite::Hecke);
    let m = match m {
        None if needs_source => return Err(require(source).unwrap_err().into()),
        m => m,
    };
    let mut passed = true;
    let mut doc = serde_json::Map::new();
    if let (Some(m), Suite::Deletion | Suite::All) = (&m, suite) {
        let report = verify_deletion::<BigInt>(m)?;
        passed &= report.all_passed();
        doc.insert("deletion".into(), deletion_report_to_json(&report));
    }
    if let (Some(m), Suite::Hecke | Suite::All) = (&m, suite) {
        let checks = verify_hecke::<BigInt>(m)?;
        passed &= checks.iter().all(|c| c.passed);
        doc.insert("hecke".into(), checks_to_json(&checks));
    }
    if let Suite::Closedforms | Suite::All = suite {
        let checks = verify_closed_forms::<BigInt>()?;
        passed &= checks.iter().all(|c| c.passed);
        doc.insert("closedforms".into(), checks_to_json(&checks));
    }
    doc.insert("passed".into(), Value::Bool(passed));
    emit(out, &Value::Object(doc))?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("range {text:?} must look like a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct CsvRow {
    family: String,
    params: String,
    kl: String,
    z: String,
    tau: String,
}

fn table(args: &TableArgs, out: &mut impl Write) -> Outcome {
    let range = args
        .range
        .as_deref()
        .or(args.r.as_deref())
        .ok_or_else(|| Error::Parse("table needs --range (or --r)".into()))?;
    let (lo, hi) = parse_range(range)?;
    let mut rows = Vec::new();
    for v in lo..=hi {
        let params = match args.n {
            Some(n) => vec![n, v],
            None => vec![v],
        };
        let family = Family::from_parts(&args.family, &params)?;
        let mut row = summary(&family_matroid(family, args.cap)?);
        let obj = row.as_object_mut().expect("summary is an object");
        obj.remove("charpoly");
        obj.remove("rank");
        obj.insert("family".into(), Value::from(family.name()));
        obj.insert("params".into(), json!(params));
        rows.push(row);
    }
    match args.out {
        Format::Json => emit(out, &Value::Array(rows)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &rows {
                let field = |k: &str| match &row[k] {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let params: Vec<String> = row["params"]
                    .as_array()
                    .expect("params is an array")
                    .iter()
                    .map(Value::to_string)
                    .collect();
                let rec = CsvRow {
                    family: field("family"),
                    params: params.join(","),
                    kl: field("kl"),
                    z: field("z"),
                    tau: field("tau"),
                };
                if let Err(e) = w.serialize(rec) {
                    return match e.into_kind() {
                        csv::ErrorKind::Io(e) => write_failed(e),
                        other => Err(Error::Parse(format!("csv: {other:?}")).into()),
                    };
                }
            }
            w.flush().or_else(write_failed)
        }
    }
}

fn series(order: usize, check: bool, out: &mut impl Write) -> Outcome {
    let phi_f = phi_f_series::<BigInt>(order)?;
    let phi_c = phi_c_series::<BigInt>(order)?;
    let identity = series_identity_holds(&phi_f, &phi_c);
    let coeffs = |s: &matkl::IntSeries| Value::Array(s.coeffs().iter().map(poly_to_json).collect());
    emit(
        out,
        &json!({
            "order": order,
            "phi_f": coeffs(&phi_f),
            "phi_c": coeffs(&phi_c),
            "identity": identity,
        }),
    )?;
    if check && !identity {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}
