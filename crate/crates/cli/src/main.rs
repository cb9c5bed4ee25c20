//! Command-line front end: tabulate the distributions, cross-verify the
//! independent computation methods, sweep the identity suites, evaluate the
//! boundary sequences, and exhaustively check the bijections.
//!
//! Exit codes: 0 on success, 1 when a verification or identity check fails,
//! 2 on invalid arguments or out-of-range parameters.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use descents::bijections::{bij01, bij01_inv, bij02, star};
use descents::closed::{coeff_b_boundary, coefficient, BBoundaryKind, FormulaId};
use descents::identities::{run_suite, SuiteLimits};
use descents::oracle::{all_permutations, Oracle, DEFAULT_GUARD};
use descents::perm::{des_left, des_right, Direction, StatConfig};
use descents::poly::{BiPoly, IntPoly};
use descents::recursion::{poly_a_chain, poly_b_chain};

#[derive(Parser)]
#[command(name = "descents", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print distribution polynomials for a range of lengths.
    Table(TableArgs),
    /// Cross-check every computation method over a range of lengths.
    Verify(VerifyArgs),
    /// Run the identity suites.
    Identity(IdentityArgs),
    /// Evaluate a boundary-coefficient sequence over a range of lengths.
    Sequence(SequenceArgs),
    /// Exhaustively check the bijections at one length.
    BijectionCheck(BijectionArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    /// Count descents by their first element.
    Left,
    /// Count descents by their second element, split by the lead entry.
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Recursion,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// Divisor defining the congruence class.
    #[arg(long, short)]
    k: usize,
    /// Length or inclusive length range, e.g. `6` or `1..12`.
    #[arg(long, short, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "left")]
    stat: Stat,
    #[arg(long, value_enum, default_value = "recursion")]
    method: Method,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for the oracle.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Maximum length the oracle will enumerate.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, short)]
    k: usize,
    #[arg(long, short, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct IdentityArgs {
    #[arg(long, default_value_t = 40)]
    saalschutz_n: i64,
    #[arg(long, default_value_t = 5)]
    cross_k: i64,
    #[arg(long, default_value_t = 20)]
    cross_n: i64,
    #[arg(long, default_value_t = 12)]
    problem1_n: i64,
    /// JSON file with the sweep bounds; overrides the flags above.
    #[arg(long)]
    limits_file: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    /// Constant term of the left distribution.
    AConst,
    /// Top coefficient of the left distribution.
    ATop,
    /// Constant term of the right distribution.
    BConst,
    /// Flag-off part of the right constant term.
    BConstZ0,
    /// Flag-on part of the right constant term.
    BConstZ1,
    /// Top coefficient of the right distribution.
    BTop,
    /// Top coefficient of the flag-on part.
    B1Top,
}

#[derive(Args)]
struct SequenceArgs {
    #[arg(long, value_enum)]
    formula: Sequence,
    #[arg(long, short)]
    k: usize,
    #[arg(long, short, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Map {
    Star,
    Bij01,
    Bij02,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long, value_enum)]
    map: Map,
    #[arg(long, short)]
    k: usize,
    /// Single length to check exhaustively.
    #[arg(long, short)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
        let b: usize = b.parse().map_err(|_| format!("bad range end {b:?}"))?;
        if a > b {
            return Err(format!("empty range {s:?}"));
        }
        Ok(a..=b)
    } else {
        let v: usize = s.parse().map_err(|_| format!("bad length {s:?}"))?;
        Ok(v..=v)
    }
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    let width = p.degree().map_or(0, |d| d + 1);
    (0..width).map(|d| p.coeff(d).to_string()).collect()
}

fn poly_text(p: &IntPoly, var: &str) -> String {
    let mut out = String::new();
    let width = p.degree().map_or(0, |d| d + 1);
    for d in 0..width {
        let c = p.coeff(d);
        if !out.is_empty() {
            out.push_str(" + ");
        }
        match d {
            0 => write!(out, "{c}").unwrap(),
            1 => write!(out, "{c}{var}").unwrap(),
            _ => write!(out, "{c}{var}^{d}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn closed_a(k: usize, len: usize) -> IntPoly {
    let (n, j) = (len / k, len % k);
    let mut p = IntPoly::zero();
    for d in 0..=(len / k) {
        p.add_term(coefficient(FormulaId::AInclExcl, k, n, j, d as i64).unwrap(), d);
    }
    p
}

fn closed_b(k: usize, len: usize) -> BiPoly {
    let (n, j) = (len / k, len % k);
    let mut p = BiPoly::new(IntPoly::zero(), IntPoly::zero());
    for d in 0..=(len / k) {
        p.add_term(coefficient(FormulaId::B0Form, k, n, j, d as i64).unwrap(), 0, d);
        p.add_term(coefficient(FormulaId::B1Form, k, n, j, d as i64).unwrap(), 1, d);
    }
    p
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run_table(args: TableArgs) -> ExitCode {
    if args.k < 2 {
        return fail("k must be at least 2");
    }
    let top = *args.n.end();
    let oracle = Oracle::new().with_jobs(args.jobs).with_guard(args.guard);
    let a_chain = match (args.method, args.stat) {
        (Method::Recursion, Stat::Left) => Some(poly_a_chain(args.k, top)),
        _ => None,
    };
    let b_chain = match (args.method, args.stat) {
        (Method::Recursion, Stat::Right) => Some(poly_b_chain(args.k, top)),
        _ => None,
    };
    let mut rows = Vec::new();
    for len in args.n.clone() {
        if len == 0 {
            return fail("lengths start at 1");
        }
        match args.stat {
            Stat::Left => {
                let p = match args.method {
                    Method::Oracle => match oracle.poly_a(args.k, len) {
                        Ok(p) => p,
                        Err(e) => return fail(e),
                    },
                    Method::Recursion => a_chain.as_ref().unwrap()[len].clone(),
                    Method::Closed => closed_a(args.k, len),
                };
                rows.push((len, p, None));
            }
            Stat::Right => {
                let p = match args.method {
                    Method::Oracle => match oracle.poly_b(args.k, len) {
                        Ok(p) => p,
                        Err(e) => return fail(e),
                    },
                    Method::Recursion => b_chain.as_ref().unwrap()[len].clone(),
                    Method::Closed => closed_b(args.k, len),
                };
                rows.push((len, p.z0.clone(), Some(p.z1.clone())));
            }
        }
    }
    match args.format {
        Format::Text => {
            for (len, z0, z1) in &rows {
                match z1 {
                    None => println!("n={len}: {}", poly_text(z0, "x")),
                    Some(z1) => println!(
                        "n={len}: [{}] + z[{}]",
                        poly_text(z0, "x"),
                        poly_text(z1, "x")
                    ),
                }
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(len, z0, z1)| match z1 {
                    None => json!({"k": args.k, "n": len, "coeffs": coeff_strings(z0)}),
                    Some(z1) => json!({
                        "k": args.k, "n": len,
                        "z0": coeff_strings(z0), "z1": coeff_strings(z1),
                    }),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
    }
    ExitCode::SUCCESS
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    if args.k < 2 {
        return fail("k must be at least 2");
    }
    let top = *args.n.end();
    if *args.n.start() == 0 {
        return fail("lengths start at 1");
    }
    if top > args.guard {
        return fail(format!("verification enumerates S_n; raise --guard past {top} explicitly"));
    }
    let oracle = Oracle::new().with_jobs(args.jobs).with_guard(args.guard);
    let a_chain = poly_a_chain(args.k, top);
    let b_chain = poly_b_chain(args.k, top);
    let mut mismatches = Vec::new();
    let mut compared = 0usize;
    for len in args.n.clone() {
        let a = oracle.poly_a(args.k, len).unwrap();
        let b = oracle.poly_b(args.k, len).unwrap();
        for (method, candidate) in [("recursion", &a_chain[len]), ("closed", &closed_a(args.k, len))]
        {
            compared += 1;
            if candidate != &a {
                mismatches.push(format!("left n={len} method={method}"));
            }
        }
        for (method, candidate) in [("recursion", &b_chain[len]), ("closed", &closed_b(args.k, len))]
        {
            compared += 1;
            if candidate != &b {
                mismatches.push(format!("right n={len} method={method}"));
            }
        }
    }
    match args.format {
        Format::Text => {
            for m in &mismatches {
                println!("MISMATCH {m}");
            }
            println!(
                "verify k={} n={}..{}: {} comparisons, {} mismatches",
                args.k,
                args.n.start(),
                args.n.end(),
                compared,
                mismatches.len()
            );
        }
        Format::Json => {
            let report = json!({
                "k": args.k,
                "n_start": args.n.start(),
                "n_end": args.n.end(),
                "comparisons": compared,
                "mismatches": mismatches,
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
    }
    if mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_identity(args: IdentityArgs) -> ExitCode {
    let limits = match &args.limits_file {
        None => SuiteLimits {
            saalschutz_n: args.saalschutz_n,
            cross_k: args.cross_k,
            cross_n: args.cross_n,
            problem1_n: args.problem1_n,
        },
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return fail(format!("{}: {e}", path.display())),
            };
            match serde_json::from_str(&text) {
                Ok(l) => l,
                Err(e) => return fail(format!("{}: {e}", path.display())),
            }
        }
    };
    let reports = run_suite(limits);
    let clean = reports.iter().all(|r| r.ok());
    match args.format {
        Format::Text => {
            for r in &reports {
                println!(
                    "{}: {} checks, {}",
                    r.suite,
                    r.checks_run,
                    if r.ok() {
                        "ok".to_string()
                    } else {
                        format!("{} FAILURES", r.failures.len())
                    }
                );
                for f in &r.failures {
                    println!("  {}: lhs={} rhs={}", f.params, f.lhs, f.rhs);
                }
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
        }
    }
    if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_sequence(args: SequenceArgs) -> ExitCode {
    if args.k < 2 {
        return fail("k must be at least 2");
    }
    let mut values = Vec::new();
    for len in args.n.clone() {
        if len == 0 {
            return fail("lengths start at 1");
        }
        let (n, j) = (len / args.k, len % args.k);
        let v: BigInt = match args.formula {
            Sequence::AConst => coefficient(FormulaId::ABoundaryLow, args.k, n, j, 0).unwrap(),
            Sequence::ATop => {
                coefficient(FormulaId::ABoundaryHigh, args.k, n, j, n as i64).unwrap()
            }
            Sequence::BConst => coeff_b_boundary(args.k, n, j, BBoundaryKind::Total0),
            Sequence::BConstZ0 => coeff_b_boundary(args.k, n, j, BBoundaryKind::Split00),
            Sequence::BConstZ1 => coeff_b_boundary(args.k, n, j, BBoundaryKind::Split10),
            Sequence::BTop => coeff_b_boundary(args.k, n, j, BBoundaryKind::TotalN),
            Sequence::B1Top => coeff_b_boundary(args.k, n, j, BBoundaryKind::B1NMinus1),
        };
        values.push((len, v));
    }
    match args.format {
        Format::Text => {
            for (len, v) in &values {
                println!("n={len}: {v}");
            }
        }
        Format::Json => {
            let rows: Vec<_> = values
                .iter()
                .map(|(len, v)| json!({"n": len, "value": v.to_string()}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
    }
    ExitCode::SUCCESS
}

fn run_bijection(args: BijectionArgs) -> ExitCode {
    if args.k < 2 {
        return fail("k must be at least 2");
    }
    if args.n == 0 || args.n > args.guard {
        return fail(format!(
            "length must be in 1..={} (raise --guard to enumerate further)",
            args.guard
        ));
    }
    if matches!(args.map, Map::Star) && !(args.n + 1).is_multiple_of(args.k) {
        return fail("star transports the statistics only at lengths one below a multiple of k");
    }
    let left = StatConfig::multiples_of(args.k, Direction::FirstElement).unwrap();
    let right = StatConfig::multiples_of(args.k, Direction::SecondElement).unwrap();
    let mut checked = 0usize;
    let mut failures = 0usize;
    for p in all_permutations(args.n) {
        checked += 1;
        let ok = match args.map {
            Map::Star => des_left(&p, &left) == des_right(&star(&p), &right),
            Map::Bij01 => match bij01(&p, args.k) {
                Err(e) => return fail(e),
                Ok(image) => {
                    let n = (args.n + 2) / args.k - 1;
                    bij01_inv(&image, args.k).map(|q| q == p).unwrap_or(false)
                        && des_left(&image, &left) == n - des_left(&p, &left)
                }
            },
            Map::Bij02 => match bij02(&p, args.k) {
                Err(e) => return fail(e),
                Ok((image, flag)) => {
                    let j = des_left(&p, &left);
                    let expected = if flag { j - 1 } else { j };
                    des_right(&image, &right) == expected
                }
            },
        };
        if !ok {
            failures += 1;
            println!("FAIL {:?}", p.values());
        }
    }
    println!("checked {checked} permutations, {failures} failures");
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Table(args) => run_table(args),
        Command::Verify(args) => run_verify(args),
        Command::Identity(args) => run_identity(args),
        Command::Sequence(args) => run_sequence(args),
        Command::BijectionCheck(args) => run_bijection(args),
    }
}
