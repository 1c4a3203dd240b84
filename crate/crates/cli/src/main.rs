// SPDX-License-Identifier: Apache-2.0

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use skewcyclic::bch::{self, SkewBchCode};
use skewcyclic::distance::{DistanceOptions, DEFAULT_DISTANCE_BUDGET, SLOW_WARNING};
use skewcyclic::divisors::DEFAULT_EXHAUSTION_BUDGET;
use skewcyclic::io::{
    from_powers, load_field, read_code_file, read_json, to_powers, write_json, CodeFile, FieldFile,
    FieldRef, Power,
};
use skewcyclic::search::{run_search, write_csv, SearchParams};
use skewcyclic::tables::{self, ReferenceTable};
use skewcyclic::{
    DecodeStrategy, DivisorMode, DivisorQuery, Elem, Error, Field, SkewCyclicCode, SkewRing,
};

#[derive(Parser)]
#[command(
    name = "skewcyclic",
    version,
    about = "θ-cyclic codes over finite fields"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a field and optionally write it as a field file.
    Field(FieldArgs),
    /// Monic right divisors of X^n - 1 of one degree.
    Divisors(DivisorsArgs),
    /// Code files.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Minimum distance of a code.
    Distance(DistanceArgs),
    /// Search θ-cyclic codes and write a CSV.
    Search(SearchArgs),
    /// Skew-BCH codes.
    #[command(subcommand)]
    Bch(BchCommand),
    /// Encode a message.
    Encode(EncodeArgs),
    /// Decode a received word with the skew-BCH decoder.
    Decode(DecodeArgs),
    /// Random encode/corrupt/decode trials.
    Roundtrip(RoundtripArgs),
    /// Check the bundled published generators.
    VerifyTables(VerifyArgs),
}

#[derive(Args)]
struct FieldArgs {
    /// Preset (gf2, gf4, gf9, gf1024) or field file.
    #[arg(long)]
    field: String,
    /// Print the power/vector table.
    #[arg(long)]
    table: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DivisorsArgs {
    #[arg(long)]
    field: String,
    /// θ = x ↦ x^(p^s).
    #[arg(long, default_value_t = 1)]
    theta: u32,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    degree: usize,
    #[arg(long, default_value = "exhaustive")]
    mode: DivisorMode,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on q^degree for exhaustive scans.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTION_BUDGET)]
    budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Parameters and structural checks of a code file.
    Info {
        #[arg(long)]
        code: PathBuf,
    },
}

#[derive(Args)]
struct DistanceArgs {
    #[arg(long)]
    code: PathBuf,
    /// Cap on q^k for exact enumeration.
    #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
    budget: u64,
    /// Stop once a codeword of at most this weight is found.
    #[arg(long)]
    target: Option<usize>,
    /// Sample this many random codewords instead of enumerating.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    field: String,
    #[arg(long, default_value_t = 1)]
    theta: u32,
    /// Lengths: `30`, `30,36` or `30..=36`.
    #[arg(long)]
    n: String,
    /// Generator degrees n - k, same syntax as `--n`.
    #[arg(long)]
    degree: String,
    #[arg(long, default_value = "exhaustive")]
    mode: DivisorMode,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_EXHAUSTION_BUDGET)]
    divisor_budget: u64,
    #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
    distance_budget: u64,
    /// Random codewords per code beyond the distance budget.
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 5000)]
    max_codes: usize,
    /// Best-known table CSV (q,n,k,best_known_d); the bundled one by default.
    #[arg(long)]
    reference: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BchCommand {
    /// Build the generator lclm(X - a, ..., X - a^(d-1)) and write a code file.
    Gen {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct EncodeArgs {
    #[arg(long)]
    code: PathBuf,
    /// JSON list of k elements in power notation.
    #[arg(long)]
    message: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Refined,
    Congruence,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    code: PathBuf,
    /// JSON list of n elements in power notation.
    #[arg(long)]
    received: PathBuf,
    /// Designed distance; the cached `d` of the code file by default.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value = "refined")]
    strategy: StrategyArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RoundtripArgs {
    #[arg(long)]
    code: PathBuf,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 5000)]
    trials: u64,
    #[arg(long, default_value_t = 3)]
    max_errors: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Table JSON to check instead of the bundled one.
    #[arg(long)]
    table: Option<PathBuf>,
}

/// A check that ran and failed; exit status 1.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Failed>().is_some() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(
            Error::NotRightDivisor { .. }
            | Error::InvalidGenerator(_)
            | Error::Uncorrectable(_)
            | Error::AmbiguousDecoding(_)
            | Error::KeyEquation(_)
            | Error::Locator(_),
        ) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Field(a) => field_cmd(a),
        Command::Divisors(a) => divisors_cmd(a),
        Command::Code(CodeCommand::Info { code }) => code_info(&code),
        Command::Distance(a) => distance_cmd(a),
        Command::Search(a) => search_cmd(a),
        Command::Bch(BchCommand::Gen { field, n, d, out }) => bch_gen(&field, n, d, out),
        Command::Encode(a) => encode_cmd(a),
        Command::Decode(a) => decode_cmd(a),
        Command::Roundtrip(a) => roundtrip_cmd(a),
        Command::VerifyTables(a) => verify_cmd(a),
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> anyhow::Result<()> {
    match out {
        Some(p) => write_json(p, value)?,
        None => println!("{}", serde_json::to_string_pretty(value)?),
    }
    Ok(())
}

/// Keeps a preset name as a reference and inlines anything read from disk.
fn field_ref(spec: &str, field: &Field) -> FieldRef {
    if skewcyclic::io::preset_field(spec).is_some() {
        FieldRef::Named(spec.into())
    } else {
        FieldRef::Inline(FieldFile::describe(field))
    }
}

fn field_cmd(a: FieldArgs) -> anyhow::Result<()> {
    let f = load_field(&a.field)?;
    println!(
        "GF({}^{}) = GF({})",
        f.characteristic(),
        f.degree(),
        f.order()
    );
    println!("modulus (ascending): {:?}", f.modulus());
    println!("primitive element digits: {:?}", f.digits(f.generator()));
    println!("frobenius x -> x^{}", f.characteristic());
    if a.table {
        println!("zero: {:?}", f.digits(Elem::ZERO));
        for k in 0..f.order() - 1 {
            println!("a^{k}: {:?}", f.digits(f.alpha_pow(k as i64)));
        }
    }
    if let Some(out) = a.out {
        write_json(&out, &FieldFile::describe(&f))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct DivisorRecord {
    degree: usize,
    mode: DivisorMode,
    coeffs: Vec<Power>,
    text: String,
}

fn divisors_cmd(a: DivisorsArgs) -> anyhow::Result<()> {
    let field = load_field(&a.field)?;
    let ring = SkewRing::new(field.clone(), a.theta)?;
    let query = DivisorQuery {
        trials: a.trials,
        seed: a.seed,
        budget: a.budget,
        ..DivisorQuery::new(a.n, a.degree, a.mode)
    };
    let found = query.run(&ring)?;
    let records: Vec<DivisorRecord> = found
        .iter()
        .map(|g| DivisorRecord {
            degree: a.degree,
            mode: a.mode,
            coeffs: to_powers(&field, g.coeffs()),
            text: g.to_string(),
        })
        .collect();
    eprintln!(
        "{} divisors of degree {} of X^{} - 1",
        records.len(),
        a.degree,
        a.n
    );
    emit_json(a.out.as_deref(), &records)
}

fn load_code(path: &Path) -> anyhow::Result<(CodeFile, SkewCyclicCode)> {
    let (file, g) = read_code_file(path).with_context(|| format!("reading {}", path.display()))?;
    let code = SkewCyclicCode::new(file.n, &g)?;
    Ok((file, code))
}

fn code_info(path: &Path) -> anyhow::Result<()> {
    let (file, code) = load_code(path)?;
    let ring = code.ring();
    let f = ring.field();
    println!(
        "field GF({}), θ = x -> x^{}",
        f.order(),
        u64::from(f.characteristic()).pow(ring.theta().power())
    );
    println!("n = {}, k = {}", code.length(), code.dimension());
    println!("generator: {}", code.generator());
    let closed = code
        .generator_matrix()
        .iter()
        .all(|row| code.is_codeword(&code.theta_shift(row)).unwrap_or(false));
    println!(
        "θ-shift closure of generator rows: {}",
        if closed { "ok" } else { "FAILED" }
    );
    if let Some(k) = file.k {
        if k != code.dimension() {
            return Err(Failed(format!("cached k = {k}, actual {}", code.dimension())).into());
        }
    }
    if let Some(d) = file.d {
        println!("cached d = {d}");
    }
    if !closed {
        return Err(Failed("code is not closed under the θ-shift".into()).into());
    }
    Ok(())
}

fn distance_cmd(a: DistanceArgs) -> anyhow::Result<()> {
    let (_, code) = load_code(&a.code)?;
    let report = match a.samples {
        Some(s) => code.min_distance_upper(s, a.seed),
        None => {
            let q = u128::from(code.ring().field().order());
            if q.checked_pow(code.dimension() as u32)
                .is_some_and(|c| c > SLOW_WARNING as u128)
                && a.budget as u128 >= q.saturating_pow(code.dimension() as u32)
            {
                eprintln!("warning: enumerating {}^{} codewords", q, code.dimension());
            }
            let options = DistanceOptions {
                budget: a.budget,
                target: a.target,
            };
            code.min_distance_exact(&options)?
        }
    };
    let kind = match report.kind {
        skewcyclic::DistanceKind::Exact => "exact",
        skewcyclic::DistanceKind::TargetReached => "upper bound (target reached)",
        skewcyclic::DistanceKind::Sampled => "upper bound (sampled)",
    };
    println!(
        "d = {} [{kind}] over {} codewords in {:.3} s",
        report.distance,
        report.enumerated,
        report.elapsed.as_secs_f64()
    );
    Ok(())
}

fn parse_range(text: &str) -> anyhow::Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..=") {
            out.extend(lo.trim().parse::<usize>()?..=hi.trim().parse::<usize>()?);
        } else if let Some((lo, hi)) = part.split_once("..") {
            out.extend(lo.trim().parse::<usize>()?..hi.trim().parse::<usize>()?);
        } else {
            out.push(part.parse()?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn search_cmd(a: SearchArgs) -> anyhow::Result<()> {
    let field = load_field(&a.field)?;
    let ring = SkewRing::new(field, a.theta)?;
    let reference = match &a.reference {
        Some(p) => ReferenceTable::from_csv(&std::fs::read_to_string(p)?)?,
        None => ReferenceTable::bundled(),
    };
    let params = SearchParams {
        lengths: parse_range(&a.n).context("--n")?,
        degrees: parse_range(&a.degree).context("--degree")?,
        mode: a.mode,
        trials: a.trials,
        seed: a.seed,
        divisor_budget: a.divisor_budget,
        distance_budget: a.distance_budget,
        sample_trials: a.samples,
        max_codes: a.max_codes,
    };
    let rows = run_search(&ring, &params, &reference)?;
    match &a.out {
        Some(p) => write_csv(&rows, File::create(p)?)?,
        None => write_csv(&rows, io::stdout().lock())?,
    }
    eprintln!("{} codes evaluated", rows.len());
    Ok(())
}

fn bch_gen(field_spec: &str, n: usize, d: usize, out: Option<PathBuf>) -> anyhow::Result<()> {
    let field = load_field(field_spec)?;
    let ring = SkewRing::new(field.clone(), 1)?;
    let g = bch::bch_generator(&ring, n, d)?;
    eprintln!("G = {g}");
    let file = CodeFile {
        field: field_ref(field_spec, &field),
        theta_power: 1,
        n,
        generator: to_powers(&field, g.coeffs()),
        k: Some(n - g.degree().unwrap_or(0)),
        d: Some(d),
    };
    emit_json(out.as_deref(), &file)
}

fn read_word(path: &Path, field: &Field) -> anyhow::Result<Vec<Elem>> {
    let powers: Vec<Power> =
        read_json(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(from_powers(field, &powers)?)
}

fn encode_cmd(a: EncodeArgs) -> anyhow::Result<()> {
    let (_, code) = load_code(&a.code)?;
    let field = code.ring().field().clone();
    let msg = read_word(&a.message, &field)?;
    let word = code.encode(&msg)?;
    emit_json(a.out.as_deref(), &to_powers(&field, &word))
}

fn bch_code(
    file: &CodeFile,
    code: SkewCyclicCode,
    d: Option<usize>,
) -> anyhow::Result<SkewBchCode> {
    let d = d
        .or(file.d)
        .ok_or_else(|| anyhow!("designed distance missing: pass --d"))?;
    Ok(SkewBchCode::from_code(code, d)?)
}

fn decode_cmd(a: DecodeArgs) -> anyhow::Result<()> {
    let (file, code) = load_code(&a.code)?;
    let field: Arc<Field> = code.ring().field().clone();
    let bch = bch_code(&file, code, a.d)?;
    let received = read_word(&a.received, &field)?;
    let strategy = match a.strategy {
        StrategyArg::Refined => DecodeStrategy::Refined,
        StrategyArg::Congruence => DecodeStrategy::Congruence,
    };
    let res = bch.decode_with(&received, strategy)?;
    if let Some(state) = &res.key_equation {
        println!("sigma = {}", state.sigma);
        println!("w = {}", state.omega);
        println!("locator exponents j = {:?}", res.locators);
    }
    println!("candidates ({}):", res.candidates.len());
    for c in &res.candidates {
        println!("  {c}");
    }
    println!("division tests: {}", res.division_tests);
    println!("error: {}", res.error);
    println!("corrected: {}", res.corrected);
    if let Some(out) = &a.out {
        let n = bch.code().length();
        write_json(out, &to_powers(&field, &res.corrected.to_vector(n)))?;
    }
    Ok(())
}

fn roundtrip_cmd(a: RoundtripArgs) -> anyhow::Result<()> {
    let (file, code) = load_code(&a.code)?;
    let bch = bch_code(&file, code, a.d)?;
    let report = bch::roundtrip(&bch, a.trials, a.max_errors, a.seed);
    println!("{}/{} decoded", report.successes, report.trials);
    for (trial, why) in report.failures.iter().take(10) {
        println!("  trial {trial}: {why}");
    }
    if report.successes != report.trials {
        return Err(Failed(format!("{} failures", report.trials - report.successes)).into());
    }
    Ok(())
}

fn verify_cmd(a: VerifyArgs) -> anyhow::Result<()> {
    let rows = match &a.table {
        Some(p) => read_json::<Vec<tables::TableRow>>(p)?,
        None => tables::table_rows(),
    };
    let mut failed = 0;
    let mut stdout = io::stdout().lock();
    for row in &rows {
        let check = tables::verify_row(row)?;
        writeln!(stdout, "{}", check.summary())?;
        failed += usize::from(!check.passed());
    }
    if failed > 0 {
        return Err(Failed(format!("{failed} of {} rows failed", rows.len())).into());
    }
    Ok(())
}
