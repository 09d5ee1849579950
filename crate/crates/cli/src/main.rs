use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use superz::orbits::{algebra_and_orbit, Partition};
use superz::report::{orbit_report, OrbitReport};
use superz::roots;
use superz::sample::{random_instance, Classical};
use superz::tables::{verify_algebra, Mismatch, RowResult};
use superz::{build, AlgebraKind, BuildOptions, Field};

/// Lie superalgebras over F_p and Q: centralizers, centers and reachability
/// of even nilpotent orbits.
#[derive(Parser)]
#[command(name = "superz", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the structure constants of an algebra as JSON.
    Build(BuildArgs),
    /// Report on one even nilpotent orbit.
    Orbit(OrbitArgs),
    /// Check the exceptional tables, optionally with random classical sweeps.
    VerifyTables(VerifyArgs),
    /// Root system, simple systems and highest roots of a family.
    Roots(RootsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Type {
    Gl,
    Sl,
    Psl,
    Osp,
    D21,
    G3,
    F4,
}

#[derive(Args, Clone)]
struct AlgArgs {
    #[arg(long = "type", value_enum)]
    ty: Type,
    /// Even dimension (gl, sl, psl, osp).
    #[arg(long)]
    m: Option<usize>,
    /// Odd dimension; for osp(m|2n) this is n.
    #[arg(long)]
    n: Option<usize>,
    /// Integer α for D(2,1;α), reduced into the field.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    /// Characteristic; 0 computes over Q.
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long)]
    allow_bad_prime: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    alg: AlgArgs,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    alg: AlgArgs,
    /// Catalog label, e.g. "E+x1" or "e(5,1^2)".
    #[arg(long)]
    orbit: Option<String>,
    /// Jordan type "even|odd", e.g. "5,2|3".
    #[arg(long)]
    partition: Option<String>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Any of d21, g3, f4.
    #[arg(long, value_delimiter = ',', default_values_t = ["d21".to_string(), "g3".into(), "f4".into()])]
    family: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [2i64, 3])]
    alpha: Vec<i64>,
    #[arg(long, value_delimiter = ',', default_values_t = [5u64, 7, 11, 13])]
    primes: Vec<u64>,
    /// Random classical orbits per family and prime.
    #[arg(long, default_value_t = 0)]
    random: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest algebra dimension drawn by the random sweep.
    #[arg(long, default_value_t = 64)]
    max_dim: usize,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    alg: AlgArgs,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Core(superz::Error),
    Io(io::Error),
    Csv(csv::Error),
}

impl From<superz::Error> for CliError {
    fn from(e: superz::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

impl CliError {
    fn to_json(&self) -> Value {
        let (code, message) = match self {
            CliError::Core(e) => (e.code(), e.to_string()),
            CliError::Io(e) => ("Io", e.to_string()),
            CliError::Csv(e) => ("Io", e.to_string()),
        };
        json!({ "error": code, "message": message })
    }
}

type Res<T> = std::result::Result<T, CliError>;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Core(superz::Error::BadParams(msg.into()))
}

fn need(x: Option<usize>, flag: &str, ty: Type) -> Res<usize> {
    x.ok_or_else(|| bad(format!("--{flag} is required for {ty:?}")))
}

fn kind_of(a: &AlgArgs) -> Res<AlgebraKind> {
    Ok(match a.ty {
        Type::Gl => AlgebraKind::Gl { m: need(a.m, "m", a.ty)?, n: need(a.n, "n", a.ty)? },
        Type::Sl => AlgebraKind::Sl { m: need(a.m, "m", a.ty)?, n: need(a.n, "n", a.ty)? },
        Type::Psl => {
            let n = need(a.n.or(a.m), "n", a.ty)?;
            if a.m.is_some_and(|m| m != n) {
                return Err(bad("psl(m|n) needs m = n"));
            }
            AlgebraKind::Psl { n }
        }
        Type::Osp => AlgebraKind::Osp { m: need(a.m, "m", a.ty)?, n2: 2 * need(a.n, "n", a.ty)? },
        Type::D21 => AlgebraKind::d21(a.alpha.ok_or_else(|| bad("--alpha is required for D21"))?),
        Type::G3 => AlgebraKind::G3,
        Type::F4 => AlgebraKind::F4,
    })
}

fn field_of(a: &AlgArgs) -> Res<Field> {
    let p = a.prime.ok_or_else(|| bad("--prime is required (0 for Q)"))?;
    if p >= 1 << 31 {
        return Err(bad("--prime must be below 2^31"));
    }
    Ok(Field::from_cli(p)?)
}

fn opts_of(a: &AlgArgs) -> BuildOptions {
    BuildOptions { allow_bad_prime: a.allow_bad_prime }
}

fn emit(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn write_csv(path: &Path, reports: &[(&OrbitReport, usize)]) -> Res<()> {
    let mut w = csv::Writer::from_path(path)?;
    if let Some((first, _)) = reports.first() {
        let mut header: Vec<&str> = first.csv_fields().iter().map(|(k, _)| *k).collect();
        header.push("mismatches");
        w.write_record(&header)?;
    }
    for (r, bad) in reports {
        let mut row: Vec<String> = r.csv_fields().into_iter().map(|(_, v)| v).collect();
        row.push(bad.to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_build(a: &BuildArgs) -> Res<u8> {
    let alg = build(&kind_of(&a.alg)?, field_of(&a.alg)?, opts_of(&a.alg))?;
    let mut s = alg.to_json_string();
    s.push('\n');
    emit(a.json.as_deref(), &s)?;
    Ok(0)
}

fn cmd_orbit(a: &OrbitArgs) -> Res<u8> {
    let kind = kind_of(&a.alg)?;
    let lam = a.partition.as_deref().map(Partition::parse).transpose()?;
    let (alg, o) = algebra_and_orbit(&kind, field_of(&a.alg)?, opts_of(&a.alg), a.orbit.as_deref(), lam.as_ref())?;
    let r = orbit_report(&alg, &o)?;
    emit(a.json.as_deref(), &r.to_json_string())?;
    if let Some(p) = &a.csv {
        write_csv(p, &[(&r, 0)])?;
    }
    if r.consistent() {
        Ok(0)
    } else {
        let failed: Vec<&String> = r.checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
        eprintln!("{}", json!({ "error": "SelfCheck", "failed": failed }));
        Ok(1)
    }
}

struct Run {
    algebra: String,
    prime: u64,
    rows: Vec<RowResult>,
}

fn table_kinds(v: &VerifyArgs) -> Res<Vec<AlgebraKind>> {
    let mut out = Vec::new();
    for f in &v.family {
        match f.trim().to_ascii_lowercase().as_str() {
            "d21" => out.extend(v.alpha.iter().map(|&a| AlgebraKind::d21(a))),
            "g3" => out.push(AlgebraKind::G3),
            "f4" => out.push(AlgebraKind::F4),
            other => return Err(bad(format!("no tables for family {other:?}; use d21, g3 or f4"))),
        }
    }
    Ok(out)
}

fn cmd_verify(v: &VerifyArgs) -> Res<u8> {
    let kinds = table_kinds(v)?;
    let mut tasks = Vec::new();
    for k in &kinds {
        for &p in &v.primes {
            tasks.push((k.clone(), p));
        }
    }
    let runs: Vec<Res<Run>> = tasks
        .par_iter()
        .map(|(k, p)| {
            let alg = build(k, Field::from_cli(*p)?, BuildOptions::default())?;
            Ok(Run { algebra: k.to_string(), prime: *p, rows: verify_algebra(&alg)? })
        })
        .collect();
    let runs: Vec<Run> = runs.into_iter().collect::<Res<_>>()?;

    let mut samples = Vec::new();
    if v.random > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(v.seed);
        for &p in &v.primes {
            for fam in Classical::ALL {
                for _ in 0..v.random {
                    if let Some(i) = random_instance(&mut rng, fam, p, v.max_dim) {
                        samples.push((i, p));
                    }
                }
            }
        }
    }
    let sampled: Vec<Res<OrbitReport>> = samples
        .par_iter()
        .map(|(i, p)| {
            let (alg, o) = algebra_and_orbit(
                &i.kind,
                Field::from_cli(*p)?,
                BuildOptions::default(),
                None,
                Some(&i.partition),
            )?;
            Ok(orbit_report(&alg, &o)?)
        })
        .collect();
    let sampled: Vec<OrbitReport> = sampled.into_iter().collect::<Res<_>>()?;

    let mut out = io::stdout().lock();
    let mut total = 0;
    for r in &runs {
        let bad: Vec<&Mismatch> = r.rows.iter().flat_map(|x| &x.mismatches).collect();
        total += bad.len();
        let tag = if bad.is_empty() { "ok" } else { "MISMATCH" };
        writeln!(out, "{tag} {} p={} orbits={} mismatches={}", r.algebra, r.prime, r.rows.len(), bad.len())?;
        for m in bad {
            writeln!(out, "  {}: {} expected {} got {}", m.orbit, m.item, m.expected, m.got)?;
        }
    }
    let inconsistent: Vec<&OrbitReport> = sampled.iter().filter(|r| !r.consistent()).collect();
    if !sampled.is_empty() {
        writeln!(out, "random classical orbits={} inconsistent={}", sampled.len(), inconsistent.len())?;
        for r in &inconsistent {
            let failed: Vec<&String> = r.checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
            writeln!(out, "  {} p={} {}: {:?}", r.algebra, r.prime, r.partition.as_deref().unwrap_or(""), failed)?;
        }
    }
    let passed = total == 0 && inconsistent.is_empty();
    writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;

    if let Some(path) = &v.json {
        let doc = json!({
            "schema": "superz-verify/1",
            "passed": passed,
            "tables": runs.iter().map(|r| json!({
                "algebra": r.algebra,
                "prime": r.prime.to_string(),
                "rows": r.rows.iter().map(|x| json!({
                    "report": x.report.to_json(),
                    "mismatches": x.mismatches,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "random": sampled.iter().map(OrbitReport::to_json).collect::<Vec<_>>(),
        });
        fs::write(path, pretty(&doc))?;
    }
    if let Some(path) = &v.csv {
        let mut rows: Vec<(&OrbitReport, usize)> =
            runs.iter().flat_map(|r| r.rows.iter().map(|x| (&x.report, x.mismatches.len()))).collect();
        rows.extend(sampled.iter().map(|r| (r, 0)));
        write_csv(path, &rows)?;
    }
    Ok(if passed { 0 } else { 1 })
}

fn cmd_roots(a: &RootsArgs) -> Res<u8> {
    let kind = kind_of(&a.alg)?;
    let fam = kind.root_family();
    let rs = kind.root_system();
    let mut doc = roots::to_json(&rs)?;
    doc["algebra"] = json!(kind.to_string());
    if let Some(p) = a.alg.prime.filter(|&p| p != 0) {
        doc["prime"] = json!(p.to_string());
        doc["good_prime"] = json!(roots::is_good_prime(&fam, p));
    }
    emit(a.json.as_deref(), &pretty(&doc))?;
    Ok(0)
}

fn run(cli: &Cli) -> Res<u8> {
    match &cli.cmd {
        Cmd::Build(a) => cmd_build(a),
        Cmd::Orbit(a) => cmd_orbit(a),
        Cmd::VerifyTables(a) => cmd_verify(a),
        Cmd::Roots(a) => cmd_roots(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": "Usage", "message": e.to_string() }));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(2)
        }
    }
}
