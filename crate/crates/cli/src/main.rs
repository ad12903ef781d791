//! `fusionring`: verify, analyze, generate and compare fusion rings.
//!
//! Exit status is 0 on success, 1 when a check fails (an axiom, a theorem, a
//! non-isomorphism), and 2 when the input cannot be used.

mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use fusion_core::analysis::{run_theorem_suite, ty_modularization_predict};
use fusion_core::families::{
    are_isomorphic_with_budget, corpus, deligne_product, FamilySpec, DEFAULT_NODE_BUDGET,
    FAMILY_NAMES,
};
use fusion_core::io::{parse, parse_bichar, parse_document, parse_group_table, serialize_with_meta, MAX_RANK};
use fusion_core::{Error, FusionRing};
use serde::Serialize;

use report::{DocumentReport, IsoReport, ModularizeReport, RingChecks, TheoremsReport, VerifyReport};

#[derive(Parser)]
#[command(name = "fusionring", version, about = "Fusion ring invariants and theorem checks")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fusion ring axioms.
    Verify { file: PathBuf },
    /// Dimensions, invertibles, orders, nilpotency and the universal grading.
    Analyze { file: PathBuf },
    /// Universal grading group, its table and components.
    Grade { file: PathBuf },
    /// Build a ring from a named family.
    Generate(GenerateArgs),
    /// Deligne product of two rings.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether two rings are isomorphic.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Run the theorem checks on a file or on the built-in corpus.
    Theorems {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        /// List passing and skipped checks too.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Predict the modularization of a braided Tambara-Yamagami category over Z2^M.
    TyModularize {
        #[arg(long = "rank")]
        m: usize,
        /// Symmetric matrix over F2 as rows of 0/1 digits, e.g. `01,10`.
        #[arg(long)]
        bichar: String,
        /// Accepted for completeness; the prediction does not depend on it.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
}

#[derive(Args)]
struct GenerateArgs {
    family: String,
    /// `key=value` parameters.
    params: Vec<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// A command ran to completion; `false` means a check failed.
type Passed = bool;

/// Errors that mean the input could not be used (exit 2).
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

type CmdResult = std::result::Result<Passed, InputError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Verify { file } => verify(cli, file),
        Command::Analyze { file } => {
            let r = report::analyze(&load(file)?)?;
            emit(cli, &r, || r.text())?;
            Ok(true)
        }
        Command::Grade { file } => {
            let r = report::grade(&load(file)?)?;
            emit(cli, &r, || r.text())?;
            Ok(r.passed())
        }
        Command::Generate(args) => generate(cli, args),
        Command::Product { a, b, output } => {
            let (a, b) = (load(a)?, load(b)?);
            if a.rank() * b.rank() > MAX_RANK {
                return Err(anyhow!("product rank {} exceeds {MAX_RANK}", a.rank() * b.rank()).into());
            }
            let ring = deligne_product(&a, &b);
            write_ring(cli, &ring, vec![("family".into(), "deligne".into())], output.as_deref())?;
            Ok(true)
        }
        Command::Iso { a, b, budget } => {
            let (a, b) = (load(a)?, load(b)?);
            let map = are_isomorphic_with_budget(&a, &b, *budget)?;
            let r = IsoReport::new(&a, &b, map);
            emit(cli, &r, || r.text() + "\n")?;
            Ok(r.isomorphic)
        }
        Command::Theorems { file, corpus: _, verbose } => {
            let rings = match file {
                Some(path) => vec![RingChecks {
                    name: path.display().to_string(),
                    checks: run_theorem_suite(&load(path)?)?.checks,
                }],
                None => corpus_checks()?,
            };
            let r = TheoremsReport::new(rings, file.is_none());
            emit(cli, &r, || r.text(*verbose || file.is_some()))?;
            Ok(r.failures == 0)
        }
        Command::TyModularize { m, bichar, tau } => {
            if tau.is_some() {
                eprintln!("warning: --tau is ignored; the prediction depends only on the bicharacter diagonal");
            }
            let data = parse_bichar(*m, bichar)?;
            let r = ModularizeReport::new(ty_modularization_predict(&data));
            emit(cli, &r, || r.summary.clone() + "\n")?;
            Ok(true)
        }
    }
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn out(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if cli.json {
        out(&(serde_json::to_string_pretty(value)? + "\n"))
    } else {
        out(&text())
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path) -> Result<FusionRing> {
    parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn verify(cli: &Cli, path: &Path) -> CmdResult {
    let doc = parse_document(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let file = path.display().to_string();
    let r = match doc.to_ring() {
        Ok(ring) => VerifyReport {
            command: "verify",
            schema_version: report::SCHEMA_VERSION,
            file,
            valid: true,
            rank: Some(ring.rank()),
            identity: None,
            indices: None,
            message: format!("rank {}, all axioms hold", ring.rank()),
        },
        Err(Error::Axiom(v)) => VerifyReport {
            command: "verify",
            schema_version: report::SCHEMA_VERSION,
            file,
            valid: false,
            rank: Some(doc.rank),
            identity: Some(v.identity.name().to_string()),
            indices: Some(v.indices.clone()),
            message: v.to_string(),
        },
        Err(e) => return Err(e.into()),
    };
    emit(cli, &r, || r.text() + "\n")?;
    Ok(r.valid)
}

fn usage() -> String {
    format!(
        "usage: fusionring generate FAMILY [key=value ...] [-o FILE]\n\
         families: {}\n\
         parameters:\n  \
           group=4 | group=2,2 | group=S3|D4|Q8   invariant factors or a named group\n  \
           table=FILE                          a `grouptable 1` file instead of group=\n  \
           kappa=N                             near_group multiplicity\n  \
           n=N                                 verlinde level\n  \
           subgroup=0,2;1,0 coset=1            gen_ty generators of Γ and coset representative\n  \
           key=S3|D4|Q8|A4                     rep_corpus group",
        FAMILY_NAMES.join(", ")
    )
}

fn generate(cli: &Cli, args: &GenerateArgs) -> CmdResult {
    let load_table = |p: &str| -> fusion_core::Result<_> {
        let text = fs::read_to_string(p)
            .map_err(|e| Error::InvalidParameters(format!("table {p}: {e}")))?;
        parse_group_table(&text)
    };
    let spec = match FamilySpec::parse(&args.family, &args.params, load_table) {
        Ok(spec) => spec,
        Err(e @ (Error::UnknownFamily(_) | Error::InvalidParameters(_))) => {
            eprintln!("{}", usage());
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    };
    let ring = spec.build()?;
    let mut meta = vec![("family".to_string(), spec.family().to_string())];
    let params = spec.to_params();
    if !params.is_empty() {
        meta.push(("params".to_string(), params.join(" ")));
    }
    write_ring(cli, &ring, meta, args.output.as_deref())?;
    Ok(true)
}

fn write_ring(cli: &Cli, ring: &FusionRing, meta: Vec<(String, String)>, output: Option<&Path>) -> Result<()> {
    let document = serialize_with_meta(ring, meta);
    if let Some(path) = output {
        fs::write(path, &document).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        let r = DocumentReport {
            command: "document",
            schema_version: report::SCHEMA_VERSION,
            rank: ring.rank(),
            labels: ring.labels().to_vec(),
            output: output.map(|p| p.display().to_string()),
            document,
        };
        out(&(serde_json::to_string_pretty(&r)? + "\n"))
    } else if output.is_none() {
        out(&document)
    } else {
        Ok(())
    }
}

/// Runs the suite over the corpus on all cores; results keep corpus order.
fn corpus_checks() -> Result<Vec<RingChecks>> {
    let entries = corpus();
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(entries.len().max(1));
    let chunk = entries.len().div_ceil(workers);
    let results: Vec<Result<Vec<RingChecks>>> = thread::scope(|s| {
        let handles: Vec<_> = entries
            .chunks(chunk.max(1))
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|e| {
                            let report = run_theorem_suite(&e.ring)
                                .with_context(|| format!("checking {}", e.name))?;
                            Ok(RingChecks {
                                name: e.name.clone(),
                                checks: report.checks,
                            })
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(entries.len());
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
