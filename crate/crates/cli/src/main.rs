//! `natred` — exact analyzer for naturally reductive structures on
//! 4-dimensional metric vector spaces.
//!
//! All reports are JSON documents on standard output with sorted keys and
//! reduced rational strings, so identical inputs produce byte-identical
//! output. Human-readable summaries go to standard error under `--verbose`.
//!
//! Exit codes: 0 success / valid, 1 structurally invalid input, 2 malformed
//! input or unusable arguments.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use natred_core::catalog::{self, Family, FamilySpec, ALL_FAMILIES};
use natred_core::io as nio;
use natred_core::metric::{Endomorphism, MetricSpace};
use natred_core::normal_form::{classify_lorentz, classify_neutral};
use natred_core::nr::{torsion_constraints, NRStructure, TorsionFamily};
use natred_core::rational::Rational;

#[derive(Parser)]
#[command(name = "natred", version, about)]
struct Cli {
    /// Print a human-readable summary on standard error.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure file and report the per-check results.
    Validate { file: PathBuf },
    /// Full analysis: validity, flatness, local symmetry, holonomy,
    /// decomposability and curvature normal forms.
    Analyze {
        files: Vec<PathBuf>,
        /// Analyze batch inputs on this many threads (results are
        /// order-stable and identical regardless of the thread count).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Classify a skew-adjoint operator into its normal-form family.
    ClassifyOp(ClassifyArgs),
    /// Solve the torsion-derivation constraints of an operator.
    Constraints(ConstraintArgs),
    /// List or instantiate the built-in families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// Metric presentation: "lorentz" (diag -1,1,1,1) or "neutral"
    /// (diag -1,-1,1,1 by default).
    #[arg(long)]
    signature: String,
    /// Path to the operator matrix (nested arrays of rational strings).
    #[arg(long)]
    matrix: PathBuf,
    /// Optional Gram matrix file overriding the signature default
    /// (e.g. the Witt Gram for irreducible neutral operators).
    #[arg(long)]
    gram: Option<PathBuf>,
}

#[derive(Args)]
struct ConstraintArgs {
    /// Path to the operator matrix.
    #[arg(long)]
    op: PathBuf,
    /// Torsion family: "lorentz", "neutral-orthonormal" or "neutral-witt".
    #[arg(long)]
    family: String,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List families, their parameters and domains.
    List,
    /// Instantiate a family member and emit it.
    Make {
        family: String,
        /// Parameter assignment `name=value`, repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// What to emit: "structure" (default), "algebra" or "split".
        #[arg(long, default_value = "structure")]
        kind: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    ExitCode::from(code)
}

/// Errors that terminate with exit code 2.
type CliError = String;

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Validate { file } => validate(file, cli.verbose),
        Command::Analyze { files, jobs } => analyze(files, *jobs, cli.verbose),
        Command::ClassifyOp(args) => classify_op(args),
        Command::Constraints(args) => constraints(args),
        Command::Catalog { action } => catalog_cmd(action, cli.verbose),
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_structure(path: &Path) -> Result<NRStructure, CliError> {
    let value = read_json(path)?;
    nio::structure_from_value(&value).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn validate(file: &Path, verbose: bool) -> Result<u8, CliError> {
    let structure = read_structure(file)?;
    let report = structure.validate();
    emit(&nio::validation_to_value(&report));
    if verbose {
        for c in &report.checks {
            eprintln!(
                "{}: {}{}",
                c.name,
                if c.passed { "ok" } else { "FAIL" },
                c.detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default()
            );
        }
    }
    Ok(if report.is_valid() { 0 } else { 1 })
}

fn analyze(files: &[PathBuf], jobs: usize, verbose: bool) -> Result<u8, CliError> {
    if files.is_empty() {
        return Err("analyze: no input files".into());
    }
    let structures: Vec<NRStructure> = files
        .iter()
        .map(|f| read_structure(f))
        .collect::<Result<_, _>>()?;
    let reports = run_analyses(&structures, jobs.max(1));
    let mut all_valid = true;
    let mut documents = Vec::new();
    for ((path, structure), report) in files.iter().zip(&structures).zip(&reports) {
        all_valid &= report.is_valid();
        if verbose {
            summarize(path, report);
        }
        documents.push(json!({
            "path": path.display().to_string(),
            "report": nio::analysis_to_value(report, structure.space().dim()),
        }));
    }
    if documents.len() == 1 {
        emit(&documents.remove(0)["report"]);
    } else {
        emit(&Value::Array(documents));
    }
    Ok(if all_valid { 0 } else { 1 })
}

fn run_analyses(structures: &[NRStructure], jobs: usize) -> Vec<natred_core::nr::AnalysisReport> {
    if jobs <= 1 || structures.len() <= 1 {
        return structures.iter().map(NRStructure::analyze).collect();
    }
    let mut reports: Vec<Option<natred_core::nr::AnalysisReport>> = vec![None; structures.len()];
    std::thread::scope(|scope| {
        for (chunk_idx, (inputs, outputs)) in structures
            .chunks(structures.len().div_ceil(jobs))
            .zip(reports.chunks_mut(structures.len().div_ceil(jobs)))
            .enumerate()
        {
            let _ = chunk_idx;
            scope.spawn(move || {
                for (s, out) in inputs.iter().zip(outputs) {
                    *out = Some(s.analyze());
                }
            });
        }
    });
    reports.into_iter().map(Option::unwrap).collect()
}

fn summarize(path: &Path, report: &natred_core::nr::AnalysisReport) {
    use natred_core::nr::Decomposability;
    eprintln!("{}:", path.display());
    eprintln!("  valid: {}", report.is_valid());
    if let Some(g) = &report.geometry {
        eprintln!(
            "  flat: {}, locally symmetric: {}",
            g.flat, g.locally_symmetric
        );
    }
    if let Some(d) = report.holonomy_dim() {
        eprintln!("  holonomy dimension: {d}");
    }
    match &report.decomposability {
        Some(Decomposability::Decomposable { .. }) => eprintln!("  decomposable"),
        Some(Decomposability::Indecomposable { .. }) => eprintln!("  indecomposable"),
        Some(Decomposability::Unknown { detail }) => {
            eprintln!("  decomposability unknown: {detail}")
        }
        None => {}
    }
}

fn classify_op(args: &ClassifyArgs) -> Result<u8, CliError> {
    let matrix = nio::matrix_from_value(&read_json(&args.matrix)?, "matrix")
        .map_err(|e| format!("{}: {e}", args.matrix.display()))?;
    let space = match &args.gram {
        Some(path) => {
            let gram = nio::matrix_from_value(&read_json(path)?, "gram")
                .map_err(|e| format!("{}: {e}", path.display()))?;
            MetricSpace::with_default_labels(gram).map_err(|e| format!("gram: {e}"))?
        }
        None => match args.signature.as_str() {
            "lorentz" => MetricSpace::lorentz4(),
            "neutral" => MetricSpace::neutral4(),
            other => return Err(format!("unknown signature {other:?}")),
        },
    };
    if matrix.rows() != space.dim() || matrix.cols() != space.dim() {
        return Err(format!(
            "matrix: expected {n}x{n}, got {r}x{c}",
            n = space.dim(),
            r = matrix.rows(),
            c = matrix.cols()
        ));
    }
    let op = Endomorphism::new(space, matrix);
    let tag = match args.signature.as_str() {
        "lorentz" => classify_lorentz(&op),
        "neutral" => classify_neutral(&op),
        other => return Err(format!("unknown signature {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    emit(&nio::tag_to_value(&tag));
    Ok(0)
}

fn constraints(args: &ConstraintArgs) -> Result<u8, CliError> {
    let family = TorsionFamily::from_name(&args.family)
        .ok_or_else(|| format!("unknown torsion family {:?}", args.family))?;
    let matrix = nio::matrix_from_value(&read_json(&args.op)?, "op")
        .map_err(|e| format!("{}: {e}", args.op.display()))?;
    let space = family.metric();
    if matrix.rows() != space.dim() || matrix.cols() != space.dim() {
        return Err(format!("op: expected {n}x{n} matrix", n = space.dim()));
    }
    let op = Endomorphism::new(space, matrix);
    let solution = torsion_constraints(&op, family).map_err(|e| e.to_string())?;
    emit(&json!({
        "family": args.family,
        "parameters": ["a", "b", "c", "d"],
        "dim": solution.dim(),
        "basis": nio::subspace_to_value(&solution),
    }));
    Ok(0)
}

fn catalog_cmd(action: &CatalogAction, verbose: bool) -> Result<u8, CliError> {
    match action {
        CatalogAction::List => {
            let families: Vec<Value> = ALL_FAMILIES
                .iter()
                .map(|f| {
                    json!({
                        "name": f.name(),
                        "parameters": f.parameter_names(),
                        "domain": f.domain_description(),
                    })
                })
                .collect();
            emit(&Value::Array(families));
            Ok(0)
        }
        CatalogAction::Make {
            family,
            params,
            out,
            kind,
        } => {
            let family = Family::from_name(family).map_err(|e| e.to_string())?;
            let mut parsed: Vec<(String, Rational)> = Vec::new();
            for p in params {
                let (name, value) = p
                    .split_once('=')
                    .ok_or_else(|| format!("--param {p:?}: expected name=value"))?;
                let value: Rational = value
                    .trim()
                    .parse()
                    .map_err(|e| format!("--param {p:?}: {e}"))?;
                parsed.push((name.trim().to_owned(), value));
            }
            let borrowed: Vec<(&str, Rational)> = parsed
                .iter()
                .map(|(k, v)| (k.as_str(), v.clone()))
                .collect();
            let spec = FamilySpec::new(family, &borrowed).map_err(|e| e.to_string())?;
            let entry = catalog::make_family(&spec);
            if verbose {
                for note in &entry.notes {
                    eprintln!("note: {note}");
                }
            }
            let value = nio::catalog_entry_to_value(&entry, kind)
                .ok_or_else(|| format!("family {} has no {kind:?} output", spec.family().name()))?;
            let text = serde_json::to_string_pretty(&value).expect("serializable");
            match out {
                Some(path) => {
                    fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => println!("{text}"),
            }
            Ok(0)
        }
    }
}
