//! Command-line front end: compute Hilbert polynomials, mixed
//! multiplicities and ranks from scenario files, run whole verification
//! scenarios, and expose the brute-force length oracle.
//!
//! Exit codes: 0 on success with every check passing, 1 when a check
//! fails or a computation cannot be completed, 2 for usage, file or
//! parse problems.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mixmult::hilbert::{graded_mixed_multiplicities, hilbert_polynomial, FitControl};
use mixmult::oracle::brute_force_length;
use mixmult::report::multiplicity_set_value;
use mixmult::ring::Monomial;
use mixmult::scenario::{parse_scenario, run_scenario_file, ResolvedScenario, ScenarioFile};

#[derive(Parser)]
#[command(
    name = "mixmult",
    version,
    about = "Exact mixed multiplicities of monomial modules and ideal systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Override the interpolation grid's base point (all axes).
    #[arg(long, global = true)]
    grid_base: Option<u32>,
    /// Override the interpolation grid's width (points per axis).
    #[arg(long, global = true)]
    grid_width: Option<u32>,
    /// Interpolation retries on an unstable fit.
    #[arg(long, global = true, default_value_t = 4)]
    retries: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert polynomial of a module declared in a scenario file.
    Hilbert {
        file: PathBuf,
        /// Name of the module (defaults to the unique declared module).
        #[arg(long)]
        module: Option<String>,
    },
    /// Mixed multiplicities of a multigraded module.
    Mixed {
        file: PathBuf,
        /// Name of the module (defaults to the unique declared module).
        #[arg(long)]
        module: Option<String>,
    },
    /// Mixed multiplicities of an ideal system (J | I_1, ..., I_s; N).
    IdealMixed {
        file: PathBuf,
        /// Name of the m-primary ideal J.
        #[arg(long)]
        j: String,
        /// Names of the ideals I_1, ..., I_s, in order.
        #[arg(long, num_args = 1.., required = true)]
        ideals: Vec<String>,
        /// Name of the module N (defaults to the ring itself).
        #[arg(long)]
        module: Option<String>,
    },
    /// Rank of a module over its ring.
    Rank {
        file: PathBuf,
        /// Name of the module (defaults to the unique declared module).
        #[arg(long)]
        module: Option<String>,
    },
    /// Run every check declared in a scenario file.
    Verify { file: PathBuf },
    /// Brute-force oracles, computed by raw enumeration.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Length of L1/L2 for two declared ideals, generators taken verbatim.
    Length {
        file: PathBuf,
        /// Name of the larger ideal L1.
        #[arg(long)]
        l1: String,
        /// Name of the smaller ideal L2 (must sit inside L1).
        #[arg(long)]
        l2: String,
        /// Optional module context: count within each coordinate of this module.
        #[arg(long)]
        module: Option<String>,
        /// Explicit degree bound instead of the certificate search.
        #[arg(long)]
        bound: Option<u32>,
    },
}

/// Failures after argument parsing, split by exit code.
enum CliError {
    /// Bad file, reference, or environment: exit 2.
    Usage(String),
    /// A computation or check failed: exit 1.
    Check(String),
}

impl From<mixmult::scenario::ScenarioError> for CliError {
    fn from(e: mixmult::scenario::ScenarioError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<mixmult::Error> for CliError {
    fn from(e: mixmult::Error) -> Self {
        CliError::Check(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("mixmult: {msg}");
        return ExitCode::from(2);
    }
    let ctl = FitControl {
        grid_base: cli.grid_base,
        grid_width: cli.grid_width,
        retries: cli.retries,
        ..FitControl::default()
    };
    match run(&cli.command, cli.format, &ctl) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("mixmult: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Check(msg)) => {
            eprintln!("mixmult: {msg}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let value = match std::env::var("MIXMULT_THREADS") {
        Err(std::env::VarError::NotPresent) => return Ok(()),
        Err(e) => return Err(format!("MIXMULT_THREADS: {e}")),
        Ok(v) => v,
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| format!("MIXMULT_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| format!("cannot size the thread pool: {e}"))
}

fn load(path: &Path) -> Result<(ScenarioFile, ResolvedScenario), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file = parse_scenario(&text)?;
    let decls = ResolvedScenario::resolve(&file)?;
    Ok((file, decls))
}

fn run(command: &Command, format: Format, ctl: &FitControl) -> Result<ExitCode, CliError> {
    match command {
        Command::Hilbert { file, module } => {
            let (_, decls) = load(file)?;
            let m = decls.named_module(module.as_deref())?;
            let p = hilbert_polynomial(m, ctl)?;
            let names: Vec<String> =
                (1..=decls.ring().grading_arity()).map(|i| format!("n{i}")).collect();
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            match format {
                Format::Text => println!("P = {}", p.render(&name_refs)),
                Format::Json => println!("{}", json!({ "polynomial": p.to_json() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mixed { file, module } => {
            let (_, decls) = load(file)?;
            let m = decls.named_module(module.as_deref())?;
            let set = graded_mixed_multiplicities(m, ctl)?;
            match format {
                Format::Text => {
                    println!("degree {}", set.total_degree());
                    for (k, v) in set.iter() {
                        println!("e(M; {k:?}) = {v}");
                    }
                }
                Format::Json => println!("{}", multiplicity_set_value(&set)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::IdealMixed { file, j, ideals, module } => {
            let (_, decls) = load(file)?;
            let sys = decls.build_system(j, ideals, module.as_deref())?;
            let local = sys.ideal_mixed_multiplicities(ctl)?;
            match format {
                Format::Text => {
                    println!("q = {}", local.q);
                    for (k, v) in local.multiplicities.iter() {
                        println!("e[{k:?}] = {v}");
                    }
                }
                Format::Json => println!("{}", local.to_value()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank { file, module } => {
            let (_, decls) = load(file)?;
            let m = decls.named_module(module.as_deref())?;
            match format {
                Format::Text => println!("{}", m.rank()),
                Format::Json => println!("{}", json!({ "rank": m.rank() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file } => {
            let (parsed, _) = load(file)?;
            let report = run_scenario_file(&parsed, ctl)?;
            match format {
                Format::Text => println!("{}", report.render_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Oracle { op } => match op {
            OracleOp::Length { file, l1, l2, module, bound } => {
                let (parsed, decls) = load(file)?;
                let nvars = decls.ring().nvars();
                // Generators come verbatim from the declaration, with no
                // minimalization: the oracle must stay shortcut-free.
                let raw = |name: &String| -> Result<Vec<Monomial>, CliError> {
                    let exps = parsed.ideals.get(name).ok_or_else(|| {
                        CliError::Usage(format!("undeclared ideal `{name}`"))
                    })?;
                    if let Some(bad) = exps.iter().find(|e| e.len() != nvars) {
                        return Err(CliError::Usage(format!(
                            "ideal `{name}`: exponent array {bad:?} does not have {nvars} entries"
                        )));
                    }
                    Ok(exps.iter().map(|e| Monomial::new(e.clone())).collect())
                };
                let l1 = raw(l1)?;
                let l2 = raw(l2)?;
                let context = match module {
                    Some(n) => Some(decls.named_module(Some(n))?),
                    None => None,
                };
                let length = brute_force_length(nvars, &l1, &l2, context, *bound)?;
                match format {
                    Format::Text => println!("{length}"),
                    Format::Json => println!("{}", json!({ "length": length })),
                }
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}
