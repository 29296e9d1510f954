use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use poset_tense::dsl::{self, json, DslError, Instance, Validation};
use poset_tense::poset::DEFAULT_ENUM_CAP;
use poset_tense::suites::{self, InputCase, SuiteConfig};
use poset_tense::tense::{apply_tense, compose, DEFAULT_PHI_CAP};
use poset_tense::{display, TenseOp};

const OK: u8 = 0;
const INVALID: u8 = 1;
const SYNTAX: u8 = 2;

#[derive(Parser)]
#[command(name = "poset-tense", version, about = "Tense operators on finite bounded posets")]
struct Cli {
    /// Cap on exhaustive enumerations (closed sets, subsets of the carrier).
    #[arg(long, global = true, env = "POSET_TENSE_ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: usize,
    /// Cap on the number of selector propositions materialized at once.
    #[arg(long, global = true, env = "POSET_TENSE_PHI_CAP", default_value_t = DEFAULT_PHI_CAP)]
    phi_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every structure declared in an instance file.
    Check { file: PathBuf },
    /// Apply a tense operator, or a composition of two, to a family.
    Tense {
        file: PathBuf,
        #[arg(long, value_parser = parse_op)]
        op: TenseOp,
        /// A declared family, a prop name, or an inline list like `{p,q}`.
        #[arg(long)]
        family: String,
        /// Inner operator: prints `(op*compose)(family)`.
        #[arg(long, value_parser = parse_op)]
        compose: Option<TenseOp>,
    },
    /// Run property suites on random cases and optional input instances.
    Verify {
        #[arg(long, default_value = "all", value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Instance file whose posets, frames and families run first.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Collapse one operator of every generated bundle at its first time point.
        #[arg(long, value_parser = parse_op)]
        corrupt: Option<TenseOp>,
    },
    /// Print an instance file as JSON.
    Export { file: PathBuf },
}

fn parse_op(s: &str) -> Result<TenseOp, String> {
    s.parse().map_err(|_| format!("expected one of P, F, H, G, got `{s}`"))
}

/// A failed command: message and exit status.
struct Failure(String, u8);

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        let code = if e.is_syntax() { SYNTAX } else { INVALID };
        Failure(e.to_string(), code)
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display()), SYNTAX))?;
    Ok(dsl::parse(&text)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { file } => cmd_check(&cli, file),
        Command::Tense {
            file,
            op,
            family,
            compose,
        } => cmd_tense(&cli, file, *op, family, *compose),
        Command::Verify {
            suite,
            seed,
            cases,
            input,
            corrupt,
        } => cmd_verify(&cli, suite, *seed, *cases, input.as_deref(), *corrupt),
        Command::Export { file } => load(file).map(|inst| {
            println!("{}", json::to_json_string(&inst));
            OK
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

#[derive(Serialize)]
struct CheckReport {
    valid: bool,
    items: Vec<Validation>,
}

fn cmd_check(cli: &Cli, file: &Path) -> Result<u8, Failure> {
    let items = load(file)?.validate(cli.enum_cap);
    let valid = items.iter().all(|i| i.ok);
    match cli.format {
        Format::Json => {
            let report = CheckReport { valid, items };
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Format::Text => {
            for i in &items {
                let mark = if i.ok { "ok  " } else { "FAIL" };
                println!("{mark} {} {}: {}", i.kind, i.name, i.detail);
            }
            println!("{}", if valid { "valid" } else { "invalid" });
        }
    }
    Ok(if valid { OK } else { INVALID })
}

#[derive(Serialize)]
struct TenseReport {
    expression: String,
    poset: String,
    frame: String,
    /// Labels of the antichain at each time point.
    trajectory: Vec<Vec<String>>,
}

fn cmd_tense(cli: &Cli, file: &Path, op: TenseOp, spec: &str, inner: Option<TenseOp>) -> Result<u8, Failure> {
    let inst = load(file)?;
    let (label, fam) = inst.resolve_family(spec).map_err(|e| Failure(e, SYNTAX))?;
    let (pn, fname) = inst
        .family_owner(spec)
        .ok_or_else(|| Failure(format!("no prop declared for `{spec}`"), SYNTAX))?;
    let p = inst.poset(&pn).expect("resolved prop has a poset");
    let f = inst.frame(&fname).expect("resolved prop has a frame");
    let invalid = |e: poset_tense::Error| Failure(e.to_string(), INVALID);
    let (expression, traj) = match inner {
        None => (format!("{op}({label})"), apply_tense(op, p, f, &fam).map_err(invalid)?),
        Some(y) => (format!("({op}*{y})({label})"), compose(op, y, p, f, &fam).map_err(invalid)?),
    };
    match cli.format {
        Format::Json => {
            let report = TenseReport {
                expression,
                poset: pn,
                frame: fname,
                trajectory: traj.slices().iter().map(|&s| display::labels(p, s)).collect(),
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Format::Text => println!("{expression} = {}", display::trajectory(p, &traj)),
    }
    Ok(OK)
}

fn cmd_verify(
    cli: &Cli,
    names: &[String],
    seed: u64,
    cases: usize,
    input: Option<&Path>,
    corrupt: Option<TenseOp>,
) -> Result<u8, Failure> {
    let inputs = match input {
        Some(path) => InputCase::from_instance(&load(path)?),
        None => Vec::new(),
    };
    let cfg = SuiteConfig {
        seed,
        cases,
        enum_cap: cli.enum_cap,
        phi_cap: cli.phi_cap,
        corrupt,
        inputs,
    };
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let report = suites::run_suites(&names, &cfg).map_err(|e| Failure(e.to_string(), SYNTAX))?;
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(if report.passed() { OK } else { INVALID })
}
