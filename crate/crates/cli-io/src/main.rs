//! `matk`: exact matroid computations from the command line. Validates
//! matroid documents, computes Tutte polynomials by selectable strategies,
//! does signed arithmetic in the free group on isomorphism classes, exports
//! deletion-contraction trees as DOT, and generates test corpora.
//!
//! Exit codes: 0 for success, 1 for invalid input, 2 for an internal
//! verification mismatch (a strategy disagreeing with the oracle).

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use k_theory::{gamma, tg_invariant, K0IsoElement};
use matroid_core::{format_set, ElementId, ElementSet, Matroid};
use num_bigint::BigInt;
use tutte_engine::{build_indecomposable_tree, PickerRegistry, StrategyRegistry};

use cli_io::corpus::{generate, CorpusSpec, FamilyKind};
use cli_io::document::MatroidDocument;
use cli_io::dot::tree_to_dot;

/// Optional cap on the deletion-contraction memo table, in entries.
const MEMO_CAP_VAR: &str = "MATK_MEMO_CAP";

#[derive(Parser)]
#[command(
    name = "matk",
    version,
    about = "Exact matroid computations: validation, Tutte polynomials, \
             class arithmetic, tree export, corpus generation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a matroid document and report its basic structure.
    Check {
        /// Matroid document (JSON).
        file: PathBuf,
    },
    /// Compute the Tutte polynomial of a matroid document.
    Tutte(TutteArgs),
    /// Combine signed matroid documents into a formal sum of isomorphism
    /// classes and print it together with its Tutte-class image.
    K0 {
        /// Operands of the form `+FILE` or `-FILE` (bare FILE counts as +).
        #[arg(required = true, allow_hyphen_values = true, value_name = "±FILE")]
        operands: Vec<String>,
    },
    /// Generate a corpus of small matroid documents plus a manifest.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct TutteArgs {
    /// Matroid document (JSON).
    file: PathBuf,

    /// Also compute the polynomial by subset enumeration and report whether
    /// the two agree.
    #[arg(long)]
    oracle: bool,

    /// Write the deletion-contraction tree as DOT to this path.
    #[arg(long, value_name = "DOT_FILE")]
    tree: Option<PathBuf>,

    /// Evaluate the polynomial at integer arguments instead of printing it.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
    eval: Option<Vec<i64>>,

    /// Split-element picker for --tree (one of the registered schemes,
    /// e.g. min-id, max-id, random:SEED).
    #[arg(long, default_value = "min-id")]
    picker: String,

    /// Polynomial computation strategy (one of the registered names).
    #[arg(long, default_value = "deletion-contraction")]
    method: String,
}

#[derive(Args)]
struct CorpusArgs {
    /// Output directory (created if missing).
    #[arg(long, value_name = "DIR")]
    out: PathBuf,

    /// Largest ground-set size to generate.
    #[arg(long, default_value_t = 4)]
    max_elements: usize,

    /// Comma-separated family names; all families when omitted.
    #[arg(long, value_delimiter = ',')]
    families: Vec<String>,

    /// Recorded in the manifest for reproducibility.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn invalid<E: Display>(error: E) -> Failure {
    Failure::invalid(error.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests arrive as "errors" but are not
            // failures; everything else is invalid input.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { file } => cmd_check(&file),
        Command::Tutte(args) => cmd_tutte(&args),
        Command::K0 { operands } => cmd_k0(&operands),
        Command::Corpus(args) => cmd_corpus(&args),
    }
}

fn load_matroid(path: &Path) -> Result<Matroid, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    let doc = MatroidDocument::parse(&text)
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    doc.to_matroid()
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn join_sets(sets: &[ElementSet]) -> String {
    if sets.is_empty() {
        return "none".into();
    }
    sets.iter()
        .map(|s| format_set(s))
        .collect::<Vec<_>>()
        .join(",")
}

fn join_elements(elements: &[ElementId]) -> String {
    if elements.is_empty() {
        return "none".into();
    }
    elements
        .iter()
        .map(ElementId::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_check(file: &Path) -> Result<(), Failure> {
    let m = load_matroid(file)?;
    println!("rank: {}", m.full_rank());
    println!("bases: {}", m.bases().len());
    println!("circuits: {}", join_sets(&m.circuits()));
    println!("loops: {}", join_elements(&m.loops()));
    println!("isthmuses: {}", join_elements(&m.isthmuses()));
    println!(
        "non-degenerate: {}",
        join_elements(&m.nondegenerate_elements())
    );
    Ok(())
}

fn memo_cap_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(MEMO_CAP_VAR) {
        Ok(text) => text.trim().parse::<usize>().map(Some).map_err(|_| {
            Failure::invalid(format!(
                "{MEMO_CAP_VAR} must be a non-negative integer, found {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Failure::invalid(format!("{MEMO_CAP_VAR}: {e}"))),
    }
}

fn cmd_tutte(args: &TutteArgs) -> Result<(), Failure> {
    let m = load_matroid(&args.file)?;
    let strategy = StrategyRegistry::standard()
        .create(&args.method, memo_cap_from_env()?)
        .map_err(invalid)?;
    if let Some(path) = &args.tree {
        let picker = PickerRegistry::standard()
            .create(&args.picker)
            .map_err(invalid)?;
        let tree = build_indecomposable_tree(&m, picker.as_ref());
        fs::write(path, tree_to_dot(&tree))
            .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(values) = &args.eval {
        // Strategy choice cannot change the value; evaluation goes through
        // the one named entry point.
        let value = tg_invariant(&m, &BigInt::from(values[0]), &BigInt::from(values[1]));
        println!("{value}");
        return Ok(());
    }
    let poly = strategy.tutte(&m);
    println!("{poly}");
    if args.oracle {
        let oracle = tutte_engine::tutte_oracle(&m);
        println!("{oracle}");
        if poly == oracle {
            println!("MATCH");
        } else {
            println!("MISMATCH");
            return Err(Failure::mismatch(format!(
                "strategy {} disagrees with the subset-enumeration oracle",
                strategy.name()
            )));
        }
    }
    Ok(())
}

fn cmd_k0(operands: &[String]) -> Result<(), Failure> {
    let mut total = K0IsoElement::zero();
    for operand in operands {
        let (negative, path) = match operand.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, operand.strip_prefix('+').unwrap_or(operand)),
        };
        if path.is_empty() {
            return Err(Failure::invalid(format!(
                "operand {operand:?} names no file"
            )));
        }
        let class = K0IsoElement::class_of(&load_matroid(Path::new(path))?);
        total = if negative {
            &total - &class
        } else {
            &total + &class
        };
    }
    println!("{total}");
    println!("{}", gamma(&total));
    Ok(())
}

fn cmd_corpus(args: &CorpusArgs) -> Result<(), Failure> {
    let families = if args.families.is_empty() {
        FamilyKind::ALL.iter().copied().collect()
    } else {
        args.families
            .iter()
            .map(|token| FamilyKind::parse(token))
            .collect::<Result<_, _>>()
            .map_err(invalid)?
    };
    let spec = CorpusSpec {
        max_elements: args.max_elements,
        families,
        seed: args.seed,
    };
    let generated = generate(&spec).map_err(invalid)?;
    for warning in &generated.warnings {
        eprintln!("warning: {warning}");
    }
    fs::create_dir_all(&args.out)
        .map_err(|e| Failure::invalid(format!("cannot create {}: {e}", args.out.display())))?;
    for (name, contents) in &generated.files {
        fs::write(args.out.join(name), contents)
            .map_err(|e| Failure::invalid(format!("cannot write {name}: {e}")))?;
    }
    fs::write(args.out.join("manifest.tsv"), &generated.manifest)
        .map_err(|e| Failure::invalid(format!("cannot write manifest.tsv: {e}")))?;
    println!(
        "wrote {} documents and manifest.tsv to {}",
        generated.files.len(),
        args.out.display()
    );
    Ok(())
}
