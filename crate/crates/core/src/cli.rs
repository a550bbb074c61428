//! Batch command-line front end: pair-registry loading, subcommand
//! dispatch, and machine-readable reporting.
//!
//! Exit-code contract (CI-friendly):
//! - `0` success, all checks passing
//! - `1` verification failure (the report carries the first counterexample)
//! - `2` usage or configuration error
//! - `3` resource-cap error
//!
//! Every mathematical value in reports is an exact rational/integer string;
//! no floating point appears anywhere in the output. JSON output is
//! byte-identical across identical invocations apart from the `elapsed_ms`
//! field.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use crate::charring::{
    branch, delta, irrep_character, verify_pair, FormalCharacter, DEFAULT_SUPPORT_CAP,
};
use crate::error::{Error, Result};
use crate::multiplet::{
    casimir_value, check_dim_identity, multiplet, multiplet_of, DominantWeightF,
};
use crate::pair::{EqualRankPair, Registry};
use crate::rootspace::{
    fundamental_weight_basis, rat_int, rat_string, RootSystemDump, SubSystem, WeightVector,
};
use crate::weyl::{coset_section, CosetElement, DEFAULT_ORBIT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "equalrank",
    version,
    about = "Exact computation with equal-rank pairs of root systems: coset sections, multiplets, and character identities"
)]
pub struct Cli {
    /// Pair-registry JSON file; falls back to $PAIR_REGISTRY, then the
    /// built-in registry.
    #[arg(long, global = true)]
    pub registry: Option<PathBuf>,
    /// Cap on character supports and Weyl-orbit sizes.
    #[arg(long, global = true, default_value_t = DEFAULT_SUPPORT_CAP)]
    pub cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    /// Pair name: a registry entry, `Bn-Dn` (with --rank), or
    /// `torus-<Type>` (e.g. `torus-F4`).
    #[arg(long)]
    pub pair: String,
    /// Rank parameter for parameterized pair names such as `Bn-Dn`.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List or inspect the pair registry.
    Pairs {
        #[command(subcommand)]
        action: PairsAction,
    },
    /// Emit the coset section C in canonical order.
    Cosets {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The m-element multiplet {c•λ} with dimensions and Casimir values.
    Multiplet {
        #[command(flatten)]
        pair: PairArgs,
        /// λ as comma-separated nonnegative integers in the
        /// fundamental-weight basis of F.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The alternating dimension identity Σ sgn(c) dim U_{c•λ} = 0.
    Dims {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The common Casimir eigenvalue of a multiplet.
    Casimir {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The exact formal character of one irreducible module.
    Character {
        #[command(flatten)]
        pair: PairArgs,
        /// Which side of the pair the highest weight belongs to.
        #[arg(long, value_parser = ["F", "B"])]
        rep: String,
        /// Highest weight as comma-separated nonnegative integers in the
        /// fundamental-weight basis of the chosen side (empty for a torus).
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Verify the five character identities exactly at λ.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Decompose V_λ restricted to B into B-irreducibles.
    Branch {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Enumerate linked B-highest-weights up to a bound and partition them
    /// into multiplets; every class must have size m.
    Classify {
        #[command(flatten)]
        pair: PairArgs,
        /// Bound on the sum of fundamental-weight coefficients of the
        /// recovered λ.
        #[arg(long)]
        height_bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum PairsAction {
    /// List registry entries.
    List {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Show one pair in detail.
    Show {
        name: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Include the full root-system data of F and B.
        #[arg(long)]
        dump_roots: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Parses an argv slice (for programmatic/driver use alongside `execute`).
pub fn try_parse_cli(args: &[&str]) -> std::result::Result<Cli, clap::Error> {
    Cli::try_parse_from(args)
}

/// Parses `argv` and executes; returns the process exit code after printing
/// the report to stdout (errors to stderr).
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version print to stdout with exit 0; usage errors exit 2.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok((output, code)) => {
            println!("{output}");
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::ResourceCap { .. } => EXIT_RESOURCE_CAP,
                _ => EXIT_USAGE,
            }
        }
    }
}

/// Executes a parsed invocation; returns (rendered output, exit code).
/// Split from `run` so tests can capture output.
pub fn execute(cli: Cli) -> Result<(String, i32)> {
    let started = Instant::now();
    let registry = load_registry(cli.registry.as_deref())?;
    let cap = cli.cap;
    if cap == 0 {
        return Err(Error::Registry("--cap must be positive".into()));
    }
    match cli.command {
        Command::Pairs { action } => pairs_cmd(&registry, action, started),
        Command::Cosets { pair, format } => {
            reject_csv(format, "cosets")?;
            cosets_cmd(&resolve(&registry, &pair)?, format, cap, started)
        }
        Command::Multiplet { pair, lambda, format } => {
            let pair = resolve(&registry, &pair)?;
            let lambda = parse_lambda(&pair, &lambda)?;
            multiplet_cmd(&pair, &lambda, format, cap, started)
        }
        Command::Dims { pair, lambda, format } => {
            reject_csv(format, "dims")?;
            let pair = resolve(&registry, &pair)?;
            let lambda = parse_lambda(&pair, &lambda)?;
            dims_cmd(&pair, &lambda, format, cap, started)
        }
        Command::Casimir { pair, lambda, format } => {
            reject_csv(format, "casimir")?;
            let pair = resolve(&registry, &pair)?;
            let lambda = parse_lambda(&pair, &lambda)?;
            casimir_cmd(&pair, &lambda, format, cap, started)
        }
        Command::Character { pair, rep, mu, format } => {
            reject_csv(format, "character")?;
            let pair = resolve(&registry, &pair)?;
            character_cmd(&pair, &rep, &mu, format, cap, started)
        }
        Command::Verify { pair, lambda, format } => {
            reject_csv(format, "verify")?;
            let pair = resolve(&registry, &pair)?;
            let lambda = parse_lambda(&pair, &lambda)?;
            verify_cmd(&pair, &lambda, format, cap, started)
        }
        Command::Branch { pair, lambda, format } => {
            reject_csv(format, "branch")?;
            let pair = resolve(&registry, &pair)?;
            let lambda = parse_lambda(&pair, &lambda)?;
            branch_cmd(&pair, &lambda, format, cap, started)
        }
        Command::Classify { pair, height_bound, format } => {
            reject_csv(format, "classify")?;
            let pair = resolve(&registry, &pair)?;
            classify_cmd(&pair, height_bound, format, cap, started)
        }
    }
}

fn load_registry(flag: Option<&std::path::Path>) -> Result<Registry> {
    if let Some(path) = flag {
        return Registry::load(path);
    }
    if let Ok(path) = std::env::var("PAIR_REGISTRY") {
        if !path.is_empty() {
            return Registry::load(std::path::Path::new(&path));
        }
    }
    Ok(Registry::builtin())
}

fn resolve(registry: &Registry, args: &PairArgs) -> Result<EqualRankPair> {
    registry.resolve(&args.pair, args.rank)
}

fn reject_csv(format: Format, command: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::Registry(format!(
            "csv output is only available for `multiplet`, not `{command}`"
        )));
    }
    Ok(())
}

/// λ entered as comma-separated nonnegative integers in the
/// fundamental-weight basis of F; the empty string means λ = 0.
pub fn parse_lambda(pair: &EqualRankPair, text: &str) -> Result<DominantWeightF> {
    let coeffs = parse_coeffs(text, pair.f.rank)?;
    let weight = pair.f.weight_from_fundamental_coeffs(&coeffs)?;
    DominantWeightF::new(&pair.f_subsystem(), weight)
}

pub fn parse_coeffs(text: &str, expected: usize) -> Result<Vec<crate::Rat>> {
    let text = text.trim();
    let parts: Vec<&str> = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',').collect()
    };
    if parts.len() != expected {
        return Err(Error::Registry(format!(
            "expected {expected} comma-separated coefficients, got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map(|n| rat_int(n as i64))
                .map_err(|_| {
                    Error::Registry(format!(
                        "coefficient {p:?} is not a nonnegative integer"
                    ))
                })
        })
        .collect()
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    command: String,
    version: &'static str,
    elapsed_ms: u128,
    #[serde(flatten)]
    payload: T,
}

fn render_json<T: Serialize>(command: &str, started: Instant, payload: T) -> String {
    let report = Report {
        command: command.to_string(),
        version: env!("CARGO_PKG_VERSION"),
        elapsed_ms: started.elapsed().as_millis(),
        payload,
    };
    serde_json::to_string_pretty(&report).expect("reports serialize")
}

fn weight_str(w: &WeightVector) -> String {
    format!("({})", w.to_strings().join(","))
}

fn coset_json(c: &CosetElement) -> serde_json::Value {
    json!({
        "word": c.word,
        "sign": c.sign,
        "image": c.image_of_rho_f.to_strings(),
    })
}

// ---------------------------------------------------------------------------
// pairs

fn pairs_cmd(
    registry: &Registry,
    action: PairsAction,
    started: Instant,
) -> Result<(String, i32)> {
    match action {
        PairsAction::List { format } => {
            reject_csv(format, "pairs list")?;
            let rows: Vec<serde_json::Value> = registry
                .pairs
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "family": e.family,
                        "rank": e.rank,
                        "note": e.note,
                    })
                })
                .collect();
            if format == Format::Json {
                return Ok((
                    render_json("pairs list", started, json!({ "pairs": rows })),
                    EXIT_OK,
                ));
            }
            let mut out = String::new();
            writeln!(out, "{:<12} {:<8} {:<5} note", "name", "family", "rank").unwrap();
            for e in &registry.pairs {
                writeln!(
                    out,
                    "{:<12} {:<8} {:<5} {}",
                    e.name,
                    e.family,
                    e.rank,
                    e.note.as_deref().unwrap_or("")
                )
                .unwrap();
            }
            writeln!(
                out,
                "\nParameterized names: Bn-Dn (with --rank), torus-<Type> (e.g. torus-F4)"
            )
            .unwrap();
            Ok((out.trim_end().to_string(), EXIT_OK))
        }
        PairsAction::Show {
            name,
            rank,
            dump_roots,
            format,
        } => {
            reject_csv(format, "pairs show")?;
            let pair = registry.resolve(&name, rank)?;
            let m = pair.predicted_index()?;
            let mut payload = json!({
                "name": pair.display_name(),
                "f": pair.f.name(),
                "ambient_dim": pair.f.ambient_dim,
                "b_rank": pair.b_simple_roots.len(),
                "index_m": m.to_string(),
                "b_simple_roots": pair.b_simple_roots.iter().map(|r| r.to_strings()).collect::<Vec<_>>(),
                "missing_positive_root_count": pair.missing_positive_roots.len(),
                "rho_f": pair.rho_f.to_strings(),
                "rho_b": pair.rho_b.to_strings(),
            });
            if dump_roots {
                let b_sub = pair.b_subsystem();
                payload["roots"] = json!({
                    "f": RootSystemDump::from_system(&pair.f),
                    "b": {
                        "simple_roots": b_sub.simple_roots.iter().map(|r| r.to_strings()).collect::<Vec<_>>(),
                        "positive_roots": b_sub.positive_roots.iter().map(|r| r.to_strings()).collect::<Vec<_>>(),
                        "rho": b_sub.rho.to_strings(),
                    },
                    "missing_positive_roots": pair.missing_positive_roots.iter().map(|r| r.to_strings()).collect::<Vec<_>>(),
                });
            }
            if format == Format::Json {
                return Ok((render_json("pairs show", started, payload), EXIT_OK));
            }
            let mut out = String::new();
            writeln!(out, "pair      {}", pair.display_name()).unwrap();
            writeln!(out, "F         {}", pair.f.name()).unwrap();
            writeln!(out, "B rank    {}", pair.b_simple_roots.len()).unwrap();
            writeln!(out, "index m   {m}").unwrap();
            writeln!(out, "rho_F     {}", weight_str(&pair.rho_f)).unwrap();
            writeln!(out, "rho_B     {}", weight_str(&pair.rho_b)).unwrap();
            writeln!(
                out,
                "missing   {} positive roots",
                pair.missing_positive_roots.len()
            )
            .unwrap();
            for r in &pair.b_simple_roots {
                writeln!(out, "B simple  {}", weight_str(r)).unwrap();
            }
            if dump_roots {
                for r in &pair.f.positive_roots {
                    writeln!(out, "F pos     {}", weight_str(r)).unwrap();
                }
                for r in &pair.missing_positive_roots {
                    writeln!(out, "missing   {}", weight_str(r)).unwrap();
                }
            }
            Ok((out.trim_end().to_string(), EXIT_OK))
        }
    }
}

// ---------------------------------------------------------------------------
// cosets

fn cosets_cmd(
    pair: &EqualRankPair,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let section = coset_section(pair, cap.max(DEFAULT_ORBIT_CAP))?;
    if format == Format::Json {
        let payload = json!({
            "pair": pair.display_name(),
            "count": section.len(),
            "section": section.iter().map(coset_json).collect::<Vec<_>>(),
        });
        return Ok((render_json("cosets", started, payload), EXIT_OK));
    }
    let mut out = String::new();
    writeln!(out, "{:<4} {:<5} {:<24} image of rho_F", "#", "sign", "word").unwrap();
    for (i, c) in section.iter().enumerate() {
        let word = c
            .word
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(".");
        writeln!(
            out,
            "{:<4} {:<+5} {:<24} {}",
            i,
            c.sign,
            if word.is_empty() { "e".to_string() } else { word },
            weight_str(&c.image_of_rho_f)
        )
        .unwrap();
    }
    writeln!(out, "total: {}", section.len()).unwrap();
    Ok((out.trim_end().to_string(), EXIT_OK))
}

// ---------------------------------------------------------------------------
// multiplet / dims / casimir

fn multiplet_cmd(
    pair: &EqualRankPair,
    lambda: &DominantWeightF,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let section = coset_section(pair, cap.max(DEFAULT_ORBIT_CAP))?;
    let mult = multiplet(pair, &section, lambda)?;
    let casimirs: Vec<crate::Rat> = mult
        .members
        .iter()
        .map(|m| casimir_value(pair, &m.highest_weight))
        .collect::<Result<_>>()?;
    match format {
        Format::Json => {
            let members: Vec<serde_json::Value> = mult
                .members
                .iter()
                .zip(&casimirs)
                .map(|(m, cas)| {
                    json!({
                        "sign": m.sign,
                        "weight": m.highest_weight.to_strings(),
                        "dim": m.dimension.to_string(),
                        "casimir": rat_string(cas),
                    })
                })
                .collect();
            let payload = json!({
                "pair": pair.display_name(),
                "lambda": lambda.weight.to_strings(),
                "members": members,
                "signed_dimension_sum": mult.signed_dimension_sum().to_string(),
            });
            Ok((render_json("multiplet", started, payload), EXIT_OK))
        }
        Format::Csv => {
            let mut out = String::from("sign,weight,dim,casimir\n");
            for (m, cas) in mult.members.iter().zip(&casimirs) {
                writeln!(
                    out,
                    "{},\"{}\",{},{}",
                    m.sign,
                    m.highest_weight.to_strings().join(","),
                    m.dimension,
                    rat_string(cas)
                )
                .unwrap();
            }
            Ok((out.trim_end().to_string(), EXIT_OK))
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(
                out,
                "multiplet of {} at lambda = {}",
                pair.display_name(),
                weight_str(&lambda.weight)
            )
            .unwrap();
            writeln!(out, "{:<5} {:<28} {:<14} casimir", "sign", "highest weight", "dim").unwrap();
            for (m, cas) in mult.members.iter().zip(&casimirs) {
                writeln!(
                    out,
                    "{:<+5} {:<28} {:<14} {}",
                    m.sign,
                    weight_str(&m.highest_weight),
                    m.dimension.to_string(),
                    rat_string(cas)
                )
                .unwrap();
            }
            writeln!(out, "signed dimension sum: {}", mult.signed_dimension_sum()).unwrap();
            Ok((out.trim_end().to_string(), EXIT_OK))
        }
    }
}

fn dims_cmd(
    pair: &EqualRankPair,
    lambda: &DominantWeightF,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let section = coset_section(pair, cap.max(DEFAULT_ORBIT_CAP))?;
    let report = check_dim_identity(pair, &section, lambda)?;
    let code = if report.holds { EXIT_OK } else { EXIT_VERIFICATION_FAILED };
    if format == Format::Json {
        let payload = json!({
            "pair": pair.display_name(),
            "lambda": report.lambda.to_strings(),
            "dims": report.dims.iter().map(|(s, d)| json!({"sign": s, "dim": d.to_string()})).collect::<Vec<_>>(),
            "signed_sum": report.signed_sum.to_string(),
            "holds": report.holds,
        });
        return Ok((render_json("dims", started, payload), code));
    }
    let mut out = String::new();
    for (s, d) in &report.dims {
        writeln!(out, "{s:<+3} {d}").unwrap();
    }
    writeln!(out, "signed sum: {}", report.signed_sum).unwrap();
    writeln!(out, "identity: {}", if report.holds { "pass" } else { "FAIL" }).unwrap();
    Ok((out.trim_end().to_string(), code))
}

fn casimir_cmd(
    pair: &EqualRankPair,
    lambda: &DominantWeightF,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let section = coset_section(pair, cap.max(DEFAULT_ORBIT_CAP))?;
    let mult = multiplet(pair, &section, lambda)?;
    // ⟨λ+ρ_F⟩² − ⟨ρ_B⟩², the predicted common eigenvalue.
    let shifted = lambda.weight.add(&pair.rho_f);
    let expected = pair.f.inner(&shifted, &shifted)? - pair.f.inner(&pair.rho_b, &pair.rho_b)?;
    let values: Vec<crate::Rat> = mult
        .members
        .iter()
        .map(|m| casimir_value(pair, &m.highest_weight))
        .collect::<Result<_>>()?;
    let constant = values.iter().all(|v| v == &expected);
    let code = if constant { EXIT_OK } else { EXIT_VERIFICATION_FAILED };
    if format == Format::Json {
        let payload = json!({
            "pair": pair.display_name(),
            "lambda": lambda.weight.to_strings(),
            "expected": rat_string(&expected),
            "members": mult.members.iter().zip(&values).map(|(m, v)| json!({
                "weight": m.highest_weight.to_strings(),
                "casimir": rat_string(v),
            })).collect::<Vec<_>>(),
            "constant": constant,
        });
        return Ok((render_json("casimir", started, payload), code));
    }
    let mut out = String::new();
    writeln!(out, "expected: {}", rat_string(&expected)).unwrap();
    for (m, v) in mult.members.iter().zip(&values) {
        writeln!(out, "{:<28} {}", weight_str(&m.highest_weight), rat_string(v)).unwrap();
    }
    writeln!(out, "constant: {}", if constant { "pass" } else { "FAIL" }).unwrap();
    Ok((out.trim_end().to_string(), code))
}

// ---------------------------------------------------------------------------
// character

fn character_cmd(
    pair: &EqualRankPair,
    rep: &str,
    mu_text: &str,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let (sub, mu): (SubSystem, WeightVector) = if rep == "F" {
        let coeffs = parse_coeffs(mu_text, pair.f.rank)?;
        (pair.f_subsystem(), pair.f.weight_from_fundamental_coeffs(&coeffs)?)
    } else {
        let sub = pair.b_subsystem();
        let coeffs = parse_coeffs(mu_text, sub.simple_roots.len())?;
        let basis = fundamental_weight_basis(&sub.simple_roots, sub.ambient_dim)?;
        let mut w = WeightVector::zero(sub.ambient_dim);
        for (c, omega) in coeffs.iter().zip(&basis) {
            w = w.add(&omega.scale(c));
        }
        (sub, w)
    };
    let ch = irrep_character(&sub, &mu, cap)?;
    if format == Format::Json {
        let payload = json!({
            "pair": pair.display_name(),
            "rep": rep,
            "mu": mu.to_strings(),
            "dimension": ch.dimension().to_string(),
            "terms": ch.to_json_terms(),
        });
        return Ok((render_json("character", started, payload), EXIT_OK));
    }
    let mut out = String::new();
    writeln!(out, "irreducible {rep}-character with highest weight {}", weight_str(&mu)).unwrap();
    writeln!(out, "dimension: {}", ch.dimension()).unwrap();
    for (w, c) in ch.terms() {
        writeln!(out, "{:<28} {}", weight_str(w), c).unwrap();
    }
    Ok((out.trim_end().to_string(), EXIT_OK))
}

// ---------------------------------------------------------------------------
// verify

fn verify_cmd(
    pair: &EqualRankPair,
    lambda: &DominantWeightF,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let section = coset_section(pair, cap.max(DEFAULT_ORBIT_CAP))?;
    let report = verify_pair(pair, &section, lambda, cap)?;
    let geometric = geometric_sum_note(pair, lambda, cap)?;
    let code = if report.checks.iter().any(|c| !c.passed) {
        EXIT_VERIFICATION_FAILED
    } else if !report.skipped.is_empty() {
        EXIT_RESOURCE_CAP
    } else {
        EXIT_OK
    };
    if format == Format::Json {
        let payload = json!({
            "pair": report.pair,
            "lambda": report.lambda,
            "checks": report.checks,
            "skipped": report.skipped,
            "sign_convention": report.sign_convention,
            "geometric_sum": geometric,
        });
        return Ok((render_json("verify", started, payload), code));
    }
    let mut out = String::new();
    writeln!(
        out,
        "verify {} at lambda = {}",
        report.pair,
        weight_str(&lambda.weight)
    )
    .unwrap();
    for check in &report.checks {
        writeln!(
            out,
            "{:<28} {}",
            check.name,
            if check.passed { "pass" } else { "FAIL" }
        )
        .unwrap();
        if let Some(d) = &check.first_difference {
            writeln!(
                out,
                "  first difference at ({}) lhs {} rhs {}",
                d.weight.join(","),
                d.lhs_coeff,
                d.rhs_coeff
            )
            .unwrap();
        }
    }
    for (name, reason) in &report.skipped {
        writeln!(out, "{name:<28} skipped ({reason})").unwrap();
    }
    if let Some(g) = &geometric {
        writeln!(out, "{g}").unwrap();
    }
    writeln!(out, "note: {}", report.sign_convention).unwrap();
    Ok((out.trim_end().to_string(), code))
}

/// For the rank-one pair D_1 ⊂ B_1 the quotient identity is literally the
/// summation of a geometric sum: ch V_λ = Σ_{k=-λ}^{λ} e^{k ε} and the
/// cleared product ch V_λ · Δ telescopes to two terms.
fn geometric_sum_note(
    pair: &EqualRankPair,
    lambda: &DominantWeightF,
    cap: u64,
) -> Result<Option<String>> {
    if pair.f.name() != "B1" || !pair.b_simple_roots.is_empty() {
        return Ok(None);
    }
    let ch_v = irrep_character(&pair.f_subsystem(), &lambda.weight, cap)?;
    let product = ch_v.mul(&delta(pair, cap)?, cap)?;
    let top = lambda.weight.add(&pair.rho_f);
    let telescoped = FormalCharacter::from_terms(
        1,
        [
            (top.clone(), crate::Int::one()),
            (top.neg(), crate::Int::from(-1)),
        ],
    )?;
    if product != telescoped {
        return Err(Error::Internal("geometric sum failed to telescope".into()));
    }
    Ok(Some(format!(
        "geometric sum: (e^({t}) - e^(-({t}))) / (e^(1/2) - e^(-1/2)) = sum of e^(k) for k = -{l}..{l}; the {d}-term geometric sum telescopes (pass)",
        t = top.to_strings().join(","),
        l = lambda.weight.to_strings().join(","),
        d = ch_v.dimension(),
    )))
}

// ---------------------------------------------------------------------------
// branch

fn branch_cmd(
    pair: &EqualRankPair,
    lambda: &DominantWeightF,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let section = coset_section(pair, cap.max(DEFAULT_ORBIT_CAP))?;
    let report = branch(pair, &section, lambda, cap)?;
    let dim_v = crate::multiplet::dim_irrep(&pair.f_subsystem(), &lambda.weight)?;
    let total = report.total_dimension();
    let code = if total == dim_v { EXIT_OK } else { EXIT_VERIFICATION_FAILED };
    if format == Format::Json {
        let payload = json!({
            "pair": pair.display_name(),
            "lambda": lambda.weight.to_strings(),
            "entries": report.entries.iter().map(|e| json!({
                "highest_weight": e.highest_weight.to_strings(),
                "multiplicity": e.multiplicity.to_string(),
                "dim": e.dimension.to_string(),
            })).collect::<Vec<_>>(),
            "total_dimension": total.to_string(),
            "dim_v": dim_v.to_string(),
        });
        return Ok((render_json("branch", started, payload), code));
    }
    let mut out = String::new();
    writeln!(
        out,
        "branch {} at lambda = {}",
        pair.display_name(),
        weight_str(&lambda.weight)
    )
    .unwrap();
    writeln!(out, "{:<28} {:<6} dim", "B highest weight", "mult").unwrap();
    for e in &report.entries {
        writeln!(
            out,
            "{:<28} {:<6} {}",
            weight_str(&e.highest_weight),
            e.multiplicity.to_string(),
            e.dimension
        )
        .unwrap();
    }
    writeln!(out, "total {total} = dim V {dim_v}: {}", if code == EXIT_OK { "pass" } else { "FAIL" }).unwrap();
    Ok((out.trim_end().to_string(), code))
}

// ---------------------------------------------------------------------------
// classify

fn classify_cmd(
    pair: &EqualRankPair,
    height_bound: u64,
    format: Format,
    cap: u64,
    started: Instant,
) -> Result<(String, i32)> {
    let section = coset_section(pair, cap.max(DEFAULT_ORBIT_CAP))?;
    // Enumerate the linked weights ν ∈ 𝒲*_B as the union of multiplets of
    // all dominant-integral λ with Σ (fundamental coefficients) ≤ bound;
    // orbit-complete, so no class is truncated at the boundary.
    let f_sub = pair.f_subsystem();
    let mut classes: Vec<serde_json::Value> = Vec::new();
    let mut size_histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut total = 0usize;
    let mut consistent = true;
    for coeffs in compositions(pair.f.rank, height_bound) {
        let rats: Vec<crate::Rat> = coeffs.iter().map(|&c| rat_int(c as i64)).collect();
        let weight = pair.f.weight_from_fundamental_coeffs(&rats)?;
        let lambda = DominantWeightF::new(&f_sub, weight)?;
        let mult = multiplet(pair, &section, &lambda)?;
        let members: Vec<&WeightVector> =
            mult.members.iter().map(|m| &m.highest_weight).collect();
        // Each member must recover exactly this multiplet through linkage.
        for nu in &members {
            let recovered = multiplet_of(pair, &section, nu)?;
            if recovered.lambda.weight != lambda.weight {
                consistent = false;
            }
        }
        total += members.len();
        *size_histogram.entry(members.len()).or_insert(0) += 1;
        classes.push(json!({
            "lambda_coeffs": coeffs,
            "lambda": lambda.weight.to_strings(),
            "size": members.len(),
            "members": members.iter().map(|w| w.to_strings()).collect::<Vec<_>>(),
        }));
    }
    let code = if consistent { EXIT_OK } else { EXIT_VERIFICATION_FAILED };
    if format == Format::Json {
        let payload = json!({
            "pair": pair.display_name(),
            "height_bound": height_bound,
            "class_count": classes.len(),
            "element_count": total,
            "class_sizes": size_histogram.iter().map(|(k, v)| json!({"size": k, "classes": v})).collect::<Vec<_>>(),
            "consistent": consistent,
            "classes": classes,
        });
        return Ok((render_json("classify", started, payload), code));
    }
    let mut out = String::new();
    writeln!(
        out,
        "classify {} up to height {height_bound}: {} classes, {} elements",
        pair.display_name(),
        classes.len(),
        total
    )
    .unwrap();
    for (size, count) in &size_histogram {
        writeln!(out, "  {count} classes of size {size}").unwrap();
    }
    writeln!(out, "linkage consistency: {}", if consistent { "pass" } else { "FAIL" }).unwrap();
    Ok((out.trim_end().to_string(), code))
}

/// All vectors of `rank` nonnegative integers with sum ≤ `bound`, in
/// lexicographic order.
fn compositions(rank: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; rank];
    fn rec(i: usize, remaining: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=remaining {
            current[i] = v;
            rec(i + 1, remaining - v, current, out);
        }
        current[i] = 0;
    }
    rec(0, bound, &mut current, &mut out);
    out
}
