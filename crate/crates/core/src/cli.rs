//! Command-line front end: argument parsing, command execution and output
//! rendering. [`run`] is the whole program minus process exit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::engine::{Engine, EngineOptions};
use crate::hall_polys::{hall_polynomial, prime_power, HallTriple};
use crate::kronecker_model::{
    ext_dim_modules, hom_dim_modules, DescriptorParseError, DimVector, KroneckerDescriptor, Partition,
};
use crate::oracle::{build_rep, submodule_table};
use crate::qbinom::LaurentPoly;

pub const EXIT_OK: i32 = 0;
/// Failures not covered by a more specific code, e.g. a module that
/// cannot be realized over the requested field.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_PRIME_POWER: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "kgrass", version, about = "Point counts of Kronecker quiver Grassmannians over F_q")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Disable memoization in the counting engine.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count submodules of one dimension vector.
    Count(CountArgs),
    /// Counts for every dimension vector of the module.
    Table(ModuleArg),
    /// Compare counts with brute force over F_p.
    Verify(VerifyArgs),
    /// Hall polynomial g^lambda_(nu,mu)(x).
    Hall(HallArgs),
    /// dim Hom and dim Ext^1 between two modules.
    Homext(HomExtArgs),
}

#[derive(Debug, Args)]
pub struct ModuleArg {
    /// Module descriptor, e.g. "2*P0 + R(p,[2,1]) + I1".
    #[arg(short, long)]
    pub module: String,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Module descriptor, e.g. "2*P0 + R(p,[2,1]) + I1".
    #[arg(short, long)]
    pub module: String,
    /// Dimension vector "a,b".
    #[arg(short, long, value_parser = parse_dim, allow_hyphen_values = true)]
    pub dim: DimVector,
    /// Also evaluate at this q.
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<i64>,
    /// Also print the value at q = 1.
    #[arg(long)]
    pub euler: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(short, long)]
    pub module: String,
    #[arg(short, long)]
    pub prime: u64,
    /// Check a single dimension vector instead of all of them.
    #[arg(short, long, value_parser = parse_dim, allow_hyphen_values = true)]
    pub dim: Option<DimVector>,
}

#[derive(Debug, Args)]
pub struct HallArgs {
    #[arg(long)]
    pub lambda: String,
    /// Submodule type.
    #[arg(long, default_value = "")]
    pub mu: String,
    /// Quotient type.
    #[arg(long, default_value = "")]
    pub nu: String,
}

#[derive(Debug, Args)]
pub struct HomExtArgs {
    pub x: String,
    pub y: String,
}

fn parse_dim(s: &str) -> Result<DimVector, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"a,b\", got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad integer {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad integer {b:?}"))?;
    Ok(DimVector { a, b })
}

/// Result of `count`, and one cell of `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub module: String,
    pub a: i64,
    pub b: i64,
    pub polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_at: Option<ValueAt>,
    /// Decimal integer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueAt {
    pub q: i64,
    /// Decimal integer.
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCell {
    pub a: i64,
    pub b: i64,
    /// Decimal integer.
    pub engine: String,
    pub oracle: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub module: String,
    pub p: u64,
    pub cells: Vec<VerifyCell>,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallRecord {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
    pub polynomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomExtRecord {
    pub x: String,
    pub y: String,
    pub hom: u64,
    pub ext: u64,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

struct Output {
    text: String,
    /// nonzero exit code to report after printing the output
    code: i32,
    warning: Option<String>,
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit code. Nothing is written to `out` when the
/// command fails.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_PARSE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            if let Some(w) = &o.warning {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let engine = Engine::new(EngineOptions {
        use_cache: !cli.no_cache,
        ..EngineOptions::default()
    });
    match &cli.command {
        Command::Count(args) => cmd_count(&engine, args, cli.format),
        Command::Table(args) => cmd_table(&engine, &args.module, cli.format),
        Command::Verify(args) => cmd_verify(&engine, args, cli.format),
        Command::Hall(args) => cmd_hall(args, cli.format),
        Command::Homext(args) => cmd_homext(args, cli.format),
    }
}

fn parse_module(src: &str) -> Result<KroneckerDescriptor, Failure> {
    src.parse().map_err(|e: DescriptorParseError| {
        let caret = format!("{}^", " ".repeat(e.pos));
        Failure::new(EXIT_PARSE, format!("{e}\n  {src}\n  {caret}"))
    })
}

fn parse_partition(src: &str, flag: &str) -> Result<Partition, Failure> {
    src.parse()
        .map_err(|e: DescriptorParseError| Failure::new(EXIT_PARSE, format!("--{flag}: {}", e.message)))
}

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output {
        text,
        code: EXIT_OK,
        warning: None,
    })
}

/// Builds the record for one count; the CLI-level `count` command.
pub fn count_record(
    engine: &Engine,
    module: &KroneckerDescriptor,
    dim: DimVector,
    at: Option<i64>,
    euler: bool,
) -> OutputRecord {
    let poly = engine.count(module, dim.a, dim.b);
    let value = |q: i64| -> BigInt { poly.eval_integer(q).expect("counts are polynomials") };
    OutputRecord {
        module: module.to_string(),
        a: dim.a,
        b: dim.b,
        polynomial: poly.to_string(),
        value_at: at.map(|q| ValueAt {
            q,
            value: value(q).to_string(),
        }),
        euler: euler.then(|| value(1).to_string()),
    }
}

fn cmd_count(engine: &Engine, args: &CountArgs, format: Format) -> Result<Output, Failure> {
    let module = parse_module(&args.module)?;
    let rec = count_record(engine, &module, args.dim, args.at, args.euler);
    let text = match format {
        Format::Text => {
            let mut s = format!("{}\n", rec.polynomial);
            if let Some(v) = &rec.value_at {
                s += &format!("q={}: {}\n", v.q, v.value);
            }
            if let Some(e) = &rec.euler {
                s += &format!("euler: {e}\n");
            }
            s
        }
        Format::Json => json_line(&rec),
        Format::Csv => records_csv(std::slice::from_ref(&rec)),
    };
    let not_prime_power = args
        .at
        .is_some_and(|q| q < 2 || prime_power(q as u64).is_none());
    Ok(Output {
        text,
        code: if not_prime_power { EXIT_NOT_PRIME_POWER } else { EXIT_OK },
        warning: not_prime_power.then(|| format!("q={} is not a prime power", args.at.unwrap_or_default())),
    })
}

/// Records for every `(a, b)` in `[0, m] x [0, n]`, row by row.
pub fn table_records(engine: &Engine, module: &KroneckerDescriptor) -> Vec<OutputRecord> {
    let d = module.dim_vector();
    (0..=d.a)
        .flat_map(|a| (0..=d.b).map(move |b| DimVector { a, b }))
        .map(|dim| count_record(engine, module, dim, None, false))
        .collect()
}

fn cmd_table(engine: &Engine, src: &str, format: Format) -> Result<Output, Failure> {
    let module = parse_module(src)?;
    let recs = table_records(engine, &module);
    let text = match format {
        Format::Text => render_grid(&module, &recs),
        Format::Json => json_line(&recs),
        Format::Csv => records_csv(&recs),
    };
    ok(text)
}

fn render_grid(module: &KroneckerDescriptor, recs: &[OutputRecord]) -> String {
    let d = module.dim_vector();
    let width = recs.iter().map(|r| r.polynomial.len()).max().unwrap_or(1).max(3);
    let mut s = format!("{module}  (rows a = 0..{}, columns b = 0..{})\n", d.a, d.b);
    s += &format!("{:>4} |", "a\\b");
    for b in 0..=d.b {
        s += &format!(" {b:>width$}");
    }
    s.push('\n');
    for (a, row) in recs.chunks(d.b as usize + 1).enumerate() {
        s += &format!("{a:>4} |");
        for r in row {
            s += &format!(" {:>width$}", r.polynomial);
        }
        s.push('\n');
    }
    s
}

/// Compares engine counts at `q = p` with brute force. `dim` restricts the
/// comparison to one cell.
pub fn verify_report(
    engine: &Engine,
    module: &KroneckerDescriptor,
    p: u64,
    dim: Option<DimVector>,
) -> Result<VerifyReport, crate::oracle::OracleError> {
    let rep = build_rep(module, p)?;
    let table = submodule_table(&rep);
    let oracle = |a: i64, b: i64| -> u64 {
        if a < 0 || b < 0 {
            return 0;
        }
        table
            .get(a as usize)
            .and_then(|row| row.get(b as usize))
            .copied()
            .unwrap_or(0)
    };
    let cells: Vec<DimVector> = match dim {
        Some(d) => vec![d],
        None => {
            let d = module.dim_vector();
            (0..=d.a).flat_map(|a| (0..=d.b).map(move |b| DimVector { a, b })).collect()
        }
    };
    let cells: Vec<VerifyCell> = cells
        .into_iter()
        .map(|DimVector { a, b }| {
            let value = engine.count(module, a, b).eval_integer(p).expect("polynomial");
            let expected = oracle(a, b);
            VerifyCell {
                a,
                b,
                matches: value == BigInt::from(expected),
                engine: value.to_string(),
                oracle: expected,
            }
        })
        .collect();
    Ok(VerifyReport {
        module: module.to_string(),
        p,
        mismatches: cells.iter().filter(|c| !c.matches).count(),
        cells,
    })
}

fn cmd_verify(engine: &Engine, args: &VerifyArgs, format: Format) -> Result<Output, Failure> {
    let module = parse_module(&args.module)?;
    let report = verify_report(engine, &module, args.prime, args.dim)
        .map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for c in report.cells.iter().filter(|c| !c.matches) {
                s += &format!("MISMATCH ({},{}): engine {} oracle {}\n", c.a, c.b, c.engine, c.oracle);
            }
            s += &format!(
                "{}: {} of {} cells match over F_{}\n",
                report.module,
                report.cells.len() - report.mismatches,
                report.cells.len(),
                report.p
            );
            s
        }
        Format::Json => json_line(&report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["module", "p", "a", "b", "engine", "oracle", "match"])
                .expect("in-memory write");
            for c in &report.cells {
                w.write_record([
                    report.module.clone(),
                    report.p.to_string(),
                    c.a.to_string(),
                    c.b.to_string(),
                    c.engine.clone(),
                    c.oracle.to_string(),
                    c.matches.to_string(),
                ])
                .expect("in-memory write");
            }
            csv_string(w)
        }
    };
    Ok(Output {
        text,
        code: if report.mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH },
        warning: None,
    })
}

fn cmd_hall(args: &HallArgs, format: Format) -> Result<Output, Failure> {
    let lambda = parse_partition(&args.lambda, "lambda")?;
    let mu = parse_partition(&args.mu, "mu")?;
    let nu = parse_partition(&args.nu, "nu")?;
    let poly: LaurentPoly = hall_polynomial(&HallTriple::new(lambda.clone(), nu.clone(), mu.clone()));
    let rec = HallRecord {
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        nu: nu.to_string(),
        polynomial: poly.display_with("x"),
    };
    ok(match format {
        Format::Text => format!("{}\n", rec.polynomial),
        Format::Json => json_line(&rec),
        Format::Csv => serde_csv(std::slice::from_ref(&rec)),
    })
}

fn cmd_homext(args: &HomExtArgs, format: Format) -> Result<Output, Failure> {
    let x = parse_module(&args.x)?;
    let y = parse_module(&args.y)?;
    let rec = HomExtRecord {
        x: x.to_string(),
        y: y.to_string(),
        hom: hom_dim_modules(&x, &y),
        ext: ext_dim_modules(&x, &y),
    };
    ok(match format {
        Format::Text => format!("hom {}\next {}\n", rec.hom, rec.ext),
        Format::Json => json_line(&rec),
        Format::Csv => serde_csv(std::slice::from_ref(&rec)),
    })
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn serde_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    csv_string(w)
}

/// Flat CSV with columns `module,a,b,polynomial,q,value,euler`; optional
/// fields are empty.
fn records_csv(recs: &[OutputRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["module", "a", "b", "polynomial", "q", "value", "euler"])
        .expect("in-memory write");
    for r in recs {
        let (q, v) = r
            .value_at
            .as_ref()
            .map_or((String::new(), String::new()), |v| (v.q.to_string(), v.value.clone()));
        w.write_record([
            r.module.clone(),
            r.a.to_string(),
            r.b.to_string(),
            r.polynomial.clone(),
            q,
            v,
            r.euler.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    csv_string(w)
}
