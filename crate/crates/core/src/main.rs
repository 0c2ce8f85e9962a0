//! Command-line front end.
//!
//! Subcommands: `construct`, `delta`, `count`, `check`, `verify`. Output is
//! a plain table by default or JSON with `--format json`; `--out` writes
//! the primary JSON artifact to a file regardless of the display format.
//!
//! Exit codes: 0 success/verified, 1 usage or parse error, 2 mathematically
//! not realizable (or an inequality fails), 3 enumeration budget exceeded,
//! 4 verification or cross-check failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use flatdelta::counting::{count_interior_points, count_lattice_points, CountBudget};
use flatdelta::ehrhart::{
    delta_by_counting, delta_from_box, hibi_violation_raw, stanley_violation_raw, DeltaVector,
    FlatPattern,
};
use flatdelta::error::Error;
use flatdelta::flat::{is_realizable, realize};
use flatdelta::json::{
    DeltaJson, FamilyReportJson, FlatPatternJson, PairReportJson, SimplexJson,
};
use flatdelta::polytope::Simplex;
use flatdelta::verify::{agreement_pair, level_family, verify_family, verify_pair, Quantity,
    VerificationReport};

#[derive(Parser)]
#[command(name = "flatdelta", version, about = "Exact delta-vector and lattice-point toolkit")]
struct Cli {
    /// Output format for stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Enumeration budget: maximum candidates a counting call may visit
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget: u64,

    /// Write the primary JSON artifact to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Counts,
    Box,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Build a simplex whose delta-vector is (1, 0^k, a, ..., a, 0^l)
    Construct {
        /// Dimension of the simplex
        #[arg(long)]
        d: usize,
        /// Leading zeros of the pattern
        #[arg(long)]
        k: usize,
        /// Trailing zeros of the pattern
        #[arg(long)]
        l: usize,
        /// Value of the constant run
        #[arg(long)]
        a: u64,
    },
    /// Compute the delta-vector of a simplex read from JSON
    Delta {
        /// Path to the simplex JSON file
        polytope: PathBuf,
        /// Which computation to run
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Count lattice points of the n-th dilation
    Count {
        /// Path to the simplex JSON file
        polytope: PathBuf,
        /// Dilation factor
        #[arg(long)]
        n: u64,
        /// Count strictly interior points only
        #[arg(long)]
        interior: bool,
    },
    /// Check delta-vector inequalities and flat classification
    Check {
        /// Delta vector: inline JSON ([1,0,1,0] or {"d":3,"delta":[...]}) or a file path
        delta: String,
    },
    /// Verify a theorem instance by direct counting
    Verify {
        /// Which claim to check: 1 realizability, 2 pair, 3 family
        #[arg(long)]
        theorem: u8,
        /// Dimension
        #[arg(long)]
        d: usize,
        /// Dilations with agreeing counts / leading zeros
        #[arg(long)]
        k: usize,
        /// Dilations with agreeing interior counts / trailing zeros
        #[arg(long)]
        l: usize,
        /// Level of the constant run (theorems 1 and 2)
        #[arg(long)]
        a: Option<u64>,
        /// Family size (theorem 3)
        #[arg(long)]
        count: Option<usize>,
    },
}

/// A failed run: exit code plus a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotRealizable { .. } => 2,
            Error::BudgetExceeded { .. } => 3,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(1, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::new(1, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version with success itself
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if cli.budget == 0 {
        return Err(Failure::new(1, "budget must be positive"));
    }
    let budget = CountBudget::new(cli.budget);
    match &cli.command {
        Command::Construct { d, k, l, a } => cmd_construct(&cli, &budget, *d, *k, *l, *a),
        Command::Delta { polytope, method } => cmd_delta(&cli, &budget, polytope, *method),
        Command::Count {
            polytope,
            n,
            interior,
        } => cmd_count(&cli, &budget, polytope, *n, *interior),
        Command::Check { delta } => cmd_check(&cli, delta),
        Command::Verify {
            theorem,
            d,
            k,
            l,
            a,
            count,
        } => cmd_verify(&cli, &budget, *theorem, *d, *k, *l, *a, *count),
    }
}

fn emit(cli: &Cli, table: &str, json: &serde_json::Value) -> Result<(), Failure> {
    match cli.format {
        Format::Table => print!("{table}"),
        Format::Json => println!("{json}"),
    }
    if let Some(path) = &cli.out {
        std::fs::write(path, format!("{json}\n"))?;
    }
    Ok(())
}

fn join_entries(entries: &[BigInt]) -> String {
    entries
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_simplex(path: &PathBuf) -> Result<Simplex, Failure> {
    let text = std::fs::read_to_string(path)?;
    let wire: SimplexJson = serde_json::from_str(&text)?;
    Ok(wire.to_simplex()?)
}

fn cmd_construct(
    cli: &Cli,
    budget: &CountBudget,
    d: usize,
    k: usize,
    l: usize,
    a: u64,
) -> Result<(), Failure> {
    let pattern = FlatPattern::new(d, k, l, a)?;
    if !is_realizable(&pattern) {
        return Err(Failure::new(2, "not realizable: k > l"));
    }
    let (simplex, _recipe) = realize(&pattern, budget)?;
    let delta = pattern.to_delta();
    let wire = SimplexJson::from_simplex(&simplex)?;
    let delta_wire = DeltaJson::from_delta(&delta)?;

    let mut json = serde_json::to_value(&wire).map_err(Failure::from)?;
    json["delta"] = serde_json::to_value(&delta_wire.delta).map_err(Failure::from)?;

    let mut table = String::new();
    let _ = writeln!(table, "dim: {}", simplex.dim());
    for v in simplex.vertices() {
        let _ = writeln!(table, "vertex: {}", join_entries(v));
    }
    let _ = writeln!(table, "delta: {}", join_entries(delta.entries()));
    emit(cli, &table, &json)
}

fn cmd_delta(
    cli: &Cli,
    budget: &CountBudget,
    polytope: &PathBuf,
    method: Method,
) -> Result<(), Failure> {
    let simplex = read_simplex(polytope)?;
    let compute = |m: Method| -> Result<DeltaVector, Error> {
        match m {
            Method::Counts => delta_by_counting(&simplex, budget),
            Method::Box => delta_from_box(&simplex, budget),
            Method::Both => unreachable!(),
        }
    };
    match method {
        Method::Counts | Method::Box => {
            let delta = compute(method)?;
            let name = if method == Method::Counts { "counts" } else { "box" };
            let wire = DeltaJson::from_delta(&delta)?;
            let json = serde_json::to_value(&wire).map_err(Failure::from)?;
            let table = format!("{name}: {}\n", join_entries(delta.entries()));
            emit(cli, &table, &json)
        }
        Method::Both => {
            let from_counts = compute(Method::Counts)?;
            let from_box = compute(Method::Box)?;
            let equal = from_counts == from_box;
            let json = serde_json::json!({
                "d": from_counts.dim(),
                "counts": DeltaJson::from_delta(&from_counts)?.delta,
                "box": DeltaJson::from_delta(&from_box)?.delta,
                "equal": equal,
            });
            let table = format!(
                "counts: {}\nbox: {}\nequal: {}\n",
                join_entries(from_counts.entries()),
                join_entries(from_box.entries()),
                if equal { "yes" } else { "no" }
            );
            emit(cli, &table, &json)?;
            if !equal {
                return Err(Failure::new(4, "delta computations disagree"));
            }
            Ok(())
        }
    }
}

fn cmd_count(
    cli: &Cli,
    budget: &CountBudget,
    polytope: &PathBuf,
    n: u64,
    interior: bool,
) -> Result<(), Failure> {
    if interior && n == 0 {
        return Err(Failure::new(1, "interior counts need n >= 1"));
    }
    let simplex = read_simplex(polytope)?;
    let count = if interior {
        count_interior_points(&simplex, n, budget)?
    } else {
        count_lattice_points(&simplex, n, budget)?
    };
    let json = serde_json::json!({
        "n": n,
        "interior": interior,
        "count": i64::try_from(&count).map_err(|_| Failure::new(1, "count exceeds i64"))?,
    });
    emit(cli, &format!("{count}\n"), &json)
}

fn cmd_check(cli: &Cli, input: &str) -> Result<(), Failure> {
    let trimmed = input.trim();
    let text = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        trimmed.to_string()
    } else {
        std::fs::read_to_string(trimmed)?
    };
    let entries: Vec<i64> = if text.trim_start().starts_with('[') {
        serde_json::from_str(&text)?
    } else {
        let wire: DeltaJson = serde_json::from_str(&text)?;
        if wire.delta.len() != wire.d + 1 {
            return Err(Failure::new(1, "delta length does not match d + 1"));
        }
        wire.delta
    };
    if entries.len() < 2 || entries[0] != 1 {
        return Err(Failure::new(1, "a delta-vector starts with 1 and has d + 1 >= 2 entries"));
    }
    let big: Vec<BigInt> = entries.iter().map(|&e| BigInt::from(e)).collect();

    let negative_at = entries.iter().position(|&e| e < 0);
    let stanley = stanley_violation_raw(&big);
    let hibi = hibi_violation_raw(&big);
    let flat = DeltaVector::new(big.clone()).ok().and_then(|d| d.classify_flat());

    let verdict = |witness: Option<usize>| match witness {
        None => "pass".to_string(),
        Some(i) => format!("fail at i={i}"),
    };
    let mut table = String::new();
    let _ = writeln!(table, "nonnegative: {}", verdict(negative_at));
    let _ = writeln!(table, "stanley: {}", verdict(stanley));
    let _ = writeln!(table, "hibi: {}", verdict(hibi));
    match flat {
        Some(p) => {
            let _ = writeln!(
                table,
                "flat: k={} l={} a={}",
                p.leading_zeros, p.trailing_zeros, p.level
            );
        }
        None => {
            let _ = writeln!(table, "flat: no");
        }
    }

    let json = serde_json::json!({
        "d": entries.len() - 1,
        "delta": entries,
        "nonnegative": negative_at.is_none(),
        "stanley": { "holds": stanley.is_none(), "witness": stanley },
        "hibi": { "holds": hibi.is_none(), "witness": hibi },
        "flat": flat.map(|p| serde_json::to_value(FlatPatternJson::from(p)).unwrap()),
    });
    emit(cli, &table, &json)?;
    if negative_at.is_some() || stanley.is_some() || hibi.is_some() {
        return Err(Failure::new(2, String::new()));
    }
    Ok(())
}

fn render_pair_rows(report: &VerificationReport, indent: &str) -> String {
    let mut rows: Vec<(u64, Quantity, String)> = Vec::new();
    for a in &report.agreements {
        rows.push((
            a.dilation,
            a.quantity,
            format!("P={} Q={} agree", a.value, a.value),
        ));
    }
    for d in &report.divergences {
        rows.push((
            d.dilation,
            d.quantity,
            format!("P={} Q={} differ", d.left, d.right),
        ));
    }
    rows.sort_by_key(|row| (matches!(row.1, Quantity::Interior), row.0));
    let mut out = String::new();
    for (t, q, line) in rows {
        let name = match q {
            Quantity::Count => "count",
            Quantity::Interior => "interior",
        };
        let _ = writeln!(out, "{indent}{name} t={t}: {line}");
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    cli: &Cli,
    budget: &CountBudget,
    theorem: u8,
    d: usize,
    k: usize,
    l: usize,
    a: Option<u64>,
    count: Option<usize>,
) -> Result<(), Failure> {
    match theorem {
        1 => {
            let a = a.ok_or_else(|| Failure::new(1, "theorem 1 needs --a"))?;
            let pattern = FlatPattern::new(d, k, l, a)?;
            let mut table = String::new();
            let _ = writeln!(table, "theorem: 1");
            let _ = writeln!(table, "d: {d} k: {k} l: {l} a: {a}");
            if is_realizable(&pattern) {
                let (simplex, _) = realize(&pattern, budget)?;
                let counted = delta_by_counting(&simplex, budget)?;
                let verified = counted == pattern.to_delta();
                let _ = writeln!(table, "realizable: yes");
                let _ = writeln!(table, "delta: {}", join_entries(counted.entries()));
                let _ = writeln!(table, "verified: {}", if verified { "yes" } else { "no" });
                let json = serde_json::json!({
                    "theorem": 1,
                    "params": { "d": d, "k": k, "l": l, "a": a },
                    "realizable": true,
                    "delta": DeltaJson::from_delta(&counted)?.delta,
                    "verified": verified,
                });
                emit(cli, &table, &json)?;
                if !verified {
                    return Err(Failure::new(4, "counted delta does not match the pattern"));
                }
            } else {
                let witness = pattern.to_delta().hibi_violation();
                let verified = witness.is_some();
                let _ = writeln!(table, "realizable: no");
                match witness {
                    Some(i) => {
                        let _ = writeln!(table, "hibi: fail at i={i}");
                    }
                    None => {
                        let _ = writeln!(table, "hibi: pass");
                    }
                }
                let _ = writeln!(table, "verified: {}", if verified { "yes" } else { "no" });
                let json = serde_json::json!({
                    "theorem": 1,
                    "params": { "d": d, "k": k, "l": l, "a": a },
                    "realizable": false,
                    "hibi_witness": witness,
                    "verified": verified,
                });
                emit(cli, &table, &json)?;
                if !verified {
                    return Err(Failure::new(4, "expected a trailing-sum violation"));
                }
            }
            Ok(())
        }
        2 => {
            let a = a.ok_or_else(|| Failure::new(1, "theorem 2 needs --a"))?;
            let (p, q) = agreement_pair(d, k, l, a, budget)?;
            let report = verify_pair(&p, &q, k, l, budget)?;
            let mut table = String::new();
            let _ = writeln!(table, "theorem: 2");
            let _ = writeln!(table, "d: {d} k: {k} l: {l} a: {a}");
            table.push_str(&render_pair_rows(&report, ""));
            let _ = writeln!(table, "result: {}", if report.passed { "pass" } else { "fail" });
            let json = serde_json::json!({
                "theorem": 2,
                "params": { "d": d, "k": k, "l": l, "a": a },
                "report": PairReportJson::from_report(&report)?,
            });
            emit(cli, &table, &json)?;
            if !report.passed {
                return Err(Failure::new(4, "pair verification failed"));
            }
            Ok(())
        }
        3 => {
            let count = count.ok_or_else(|| Failure::new(1, "theorem 3 needs --count"))?;
            let family = level_family(d, k, l, count, budget)?;
            let report = verify_family(&family, k, l, budget)?;
            let mut table = String::new();
            let _ = writeln!(table, "theorem: 3");
            let _ = writeln!(table, "d: {d} k: {k} l: {l} count: {count}");
            for (i, j, pair) in &report.pairs {
                let _ = writeln!(table, "pair P_{} P_{}:", i + 1, j + 1);
                table.push_str(&render_pair_rows(pair, "  "));
                let _ = writeln!(table, "  result: {}", if pair.passed { "pass" } else { "fail" });
            }
            let _ = writeln!(table, "result: {}", if report.passed { "pass" } else { "fail" });
            let json = serde_json::json!({
                "theorem": 3,
                "params": { "d": d, "k": k, "l": l, "count": count },
                "report": FamilyReportJson::from_report(&report)?,
            });
            emit(cli, &table, &json)?;
            if !report.passed {
                return Err(Failure::new(4, "family verification failed"));
            }
            Ok(())
        }
        other => Err(Failure::new(1, format!("unknown theorem {other}; use 1, 2, or 3"))),
    }
}
