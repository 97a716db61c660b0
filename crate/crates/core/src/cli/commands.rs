//! Command-line front end. Exit codes: 0 success, 1 a check failed, 2 bad input, 3 internal error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::cli::dispatch::{self, run_check};
use crate::cli::document::{parse_document, CheckDirective, Document, Item};
use crate::cli::report::{to_json, CheckEntry, CheckFileReport, SampleEntry, SampleReport, SolveReport};
use crate::cli::writer::write_document;
use crate::error::Error;
use crate::scalars::{Assumption, ParameterName};
use crate::solver::{refute_by_sampling, solve_linear, LinearProblem, SampleConfig};
use crate::structures::Checker;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lieb", version, about = "Exact checks for Lie bialgebra and Nijenhuis structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    WeakSymplectic,
    CoCybeSlice,
    Cocycle,
    AdInvariance,
    Sample,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the checks declared in a file (or the structure axioms if none are declared).
    Check {
        file: PathBuf,
        /// Only run checks of this kind; repeatable.
        #[arg(long = "identity")]
        identities: Vec<String>,
        /// Extra nonvanishing assumption, e.g. `k3` or `k2*k4 - k3*k7`; repeatable.
        #[arg(long = "assume")]
        assumptions: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a new structure from the ones in a file and write the result.
    Construct {
        file: PathBuf,
        #[arg(long)]
        op: String,
        /// Argument names in order; repeatable.
        #[arg(long = "arg")]
        args: Vec<String>,
        /// Name of the new structure (secondary outputs get suffixes).
        #[arg(long, default_value = "result")]
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve a linear classification problem or sample the declared checks.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        problem: Problem,
        /// Algebra to use; defaults to the first one in the file.
        #[arg(long)]
        algebra: Option<String>,
        /// Form for `co-cybe-slice`; defaults to the first one in the file.
        #[arg(long)]
        form: Option<String>,
        /// Restrict the cocycle unknown to co-antisymmetric tables.
        #[arg(long)]
        antisymmetric: bool,
        /// Sampling seed; overrides `LIEB_SEED`.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 32)]
        trials: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// List entry ids with descriptions.
    List,
    /// Describe an entry and print its file.
    Show {
        id: String,
        /// Parameter binding `name=value`; repeatable.
        #[arg(long = "bind")]
        bindings: Vec<String>,
    },
    /// Print (or write) an entry in canonical form.
    Export {
        id: String,
        #[arg(long = "bind")]
        bindings: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut origin = String::new();
    let result = match cli.command {
        Command::Check { file, identities, assumptions, format } => {
            origin = file.display().to_string();
            check(&file, &identities, &assumptions, format, out)
        }
        Command::Construct { file, op, args, name, out: dest } => {
            origin = file.display().to_string();
            construct(&file, &op, &args, &name, &dest, out)
        }
        Command::Solve { file, problem, algebra, form, antisymmetric, seed, trials, format } => {
            origin = file.display().to_string();
            let seed = seed.or_else(|| std::env::var("LIEB_SEED").ok().and_then(|s| s.trim().parse().ok()));
            solve(&file, problem, algebra.as_deref(), form.as_deref(), antisymmetric, seed.unwrap_or(0), trials, format, out)
        }
        Command::Catalog { action } => catalog_cmd(action, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let code = match e {
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            };
            let _ = match (e.location(), origin.is_empty()) {
                (Some((l, c)), false) if l > 0 => writeln!(err, "{origin}:{l}:{c}: error: {}", strip_location(&e)),
                (_, false) => writeln!(err, "{origin}: error: {}", strip_location(&e)),
                _ => writeln!(err, "error: {e}"),
            };
            code
        }
    }
}

fn strip_location(e: &Error) -> String {
    match e {
        Error::Syntax { message, .. } => format!("syntax error: {message}"),
        Error::UnknownName { name, .. } => format!("unknown name `{name}`"),
        Error::DuplicateName { name, .. } => format!("duplicate name `{name}`"),
        other => other.to_string(),
    }
}

fn load(path: &Path) -> Result<Document, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Syntax { line: 0, col: 0, message: format!("cannot read {}: {e}", path.display()) })?;
    parse_document(&text)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Internal(format!("write failed: {e}")))
}

fn check(
    path: &Path,
    identities: &[String],
    extra: &[String],
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let doc = load(path)?;
    let mut assumptions = doc.assumptions.clone();
    for a in extra {
        for a in Assumption::parse(a)? {
            if let Some(p) = a.polynomial().parameters().into_iter().find(|p| !doc.params.contains(p)) {
                return Err(Error::UnknownName { name: p.to_string(), line: 0, col: 0 });
            }
            if !assumptions.contains(&a) {
                assumptions.push(a);
            }
        }
    }
    let mut directives = if doc.checks.is_empty() { dispatch::default_checks(&doc) } else { doc.checks.clone() };
    for id in identities {
        if !dispatch::CHECK_KINDS.iter().any(|(k, _)| k == id) {
            return Err(Error::Syntax { line: 0, col: 0, message: format!("unknown identity `{id}`") });
        }
    }
    if !identities.is_empty() {
        directives.retain(|d| identities.contains(&d.kind));
    }
    let checker = Checker::new(assumptions.clone());
    let mut entries = Vec::new();
    for d in &directives {
        let r = run_check(&doc, d, &checker)?;
        entries.push(CheckEntry::new(&d.kind, &d.args, &r));
    }
    let report = CheckFileReport::new(
        &path.display().to_string(),
        assumptions.iter().map(|a| a.to_string()).collect(),
        entries,
    );
    emit(out, &match format {
        Format::Json => to_json(&report),
        Format::Text => report.to_text(),
    })?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn construct(path: &Path, op: &str, args: &[String], name: &str, dest: &Path, out: &mut dyn Write) -> Result<i32, Error> {
    let doc = load(path)?;
    let (doc, added) = dispatch::construct(&doc, op, args, name)?;
    let text = write_document(&doc, false)?;
    std::fs::write(dest, text).map_err(|e| Error::Internal(format!("cannot write {}: {e}", dest.display())))?;
    emit(out, &format!("wrote {} to {}\n", added.join(", "), dest.display()))?;
    Ok(EXIT_OK)
}

fn pick_algebra<'a>(doc: &'a Document, name: Option<&str>) -> Result<&'a crate::structures::LieAlgebra, Error> {
    let found = match name {
        Some(n) => doc.algebra(n),
        None => doc.items.iter().find_map(|(_, i)| match i {
            Item::Algebra(a) => Some(a),
            _ => None,
        }),
    };
    found.ok_or_else(|| Error::UnknownName { name: name.unwrap_or("<algebra>").to_string(), line: 0, col: 0 })
}

#[allow(clippy::too_many_arguments)]
fn solve(
    path: &Path,
    problem: Problem,
    algebra: Option<&str>,
    form: Option<&str>,
    antisymmetric: bool,
    seed: u64,
    trials: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let doc = load(path)?;
    let file = path.display().to_string();
    let render = |json: String, text: String| match format {
        Format::Json => json,
        Format::Text => text,
    };
    if problem == Problem::Sample {
        let directives: Vec<CheckDirective> =
            if doc.checks.is_empty() { dispatch::default_checks(&doc) } else { doc.checks.clone() };
        let cfg = SampleConfig { trials, seed, ..SampleConfig::default() };
        let params: Vec<ParameterName> = doc.params.clone();
        let mut results = Vec::new();
        for d in &directives {
            let o = refute_by_sampling(&params, &doc.assumptions, &cfg, |b| {
                let bound = doc.bind(b)?;
                run_check(&bound, d, &Checker::new(bound.assumptions.clone()))
            })?;
            results.push(SampleEntry::new(&d.kind, &d.args, &o, trials));
        }
        let refuted = results.iter().any(|r| r.residual.is_some());
        let report = SampleReport { file, results, seed };
        emit(out, &render(to_json(&report), report.to_text()))?;
        return Ok(if refuted { EXIT_CHECK_FAILED } else { EXIT_OK });
    }
    let lp = match problem {
        Problem::WeakSymplectic => LinearProblem::WeakSymplectic { algebra: pick_algebra(&doc, algebra)?.clone() },
        Problem::AdInvariance => LinearProblem::AdInvariance { algebra: pick_algebra(&doc, algebra)?.clone() },
        Problem::Cocycle => LinearProblem::CocycleInDelta { algebra: pick_algebra(&doc, algebra)?.clone(), antisymmetric },
        Problem::CoCybeSlice => {
            let w = match form {
                Some(n) => doc.form(n),
                None => doc.items.iter().find_map(|(_, i)| match i {
                    Item::Form(f) => Some(f),
                    _ => None,
                }),
            }
            .ok_or_else(|| Error::UnknownName { name: form.unwrap_or("<form>").to_string(), line: 0, col: 0 })?;
            LinearProblem::CoCybeSlice { space: w.space.clone(), omega: w.clone() }
        }
        Problem::Sample => unreachable!("handled above"),
    };
    let space = match &lp {
        LinearProblem::WeakSymplectic { algebra }
        | LinearProblem::AdInvariance { algebra }
        | LinearProblem::CocycleInDelta { algebra, .. } => algebra.space.clone(),
        LinearProblem::CoCybeSlice { space, .. } => space.clone(),
    };
    let sol = solve_linear(&lp, &doc.assumptions)?;
    let report = SolveReport::new(&file, &sol, &space);
    emit(out, &render(to_json(&report), report.to_text()))?;
    Ok(EXIT_OK)
}

fn catalog_cmd(action: CatalogAction, out: &mut dyn Write) -> Result<i32, Error> {
    match action {
        CatalogAction::List => {
            let mut text = String::new();
            for s in catalog::list() {
                text.push_str(&format!("{:<16} {}\n", s.id, s.description));
            }
            emit(out, &text)?;
        }
        CatalogAction::Show { id, bindings } => {
            let e = catalog::get(&id, &catalog::parse_bindings(&bindings)?)?;
            let mut text = format!("id: {}\ndescription: {}\nsource: {}\n", e.id, e.description, e.anchor);
            let assumptions: Vec<String> = e.assumptions.iter().map(|a| a.to_string()).collect();
            if !assumptions.is_empty() {
                text.push_str(&format!("assumptions: {}\n", assumptions.join(", ")));
            }
            for (k, v) in &e.metadata {
                text.push_str(&format!("{k}: {v}\n"));
            }
            let items: Vec<String> = e.document.items.iter().map(|(n, i)| format!("{n} ({})", i.kind())).collect();
            text.push_str(&format!("structures: {}\n", items.join(", ")));
            emit(out, &text)?;
        }
        CatalogAction::Export { id, bindings, out: dest } => {
            let e = catalog::get(&id, &catalog::parse_bindings(&bindings)?)?;
            let text = write_document(&e.document, true)?;
            match dest {
                Some(p) => std::fs::write(&p, text).map_err(|e| Error::Internal(format!("cannot write {}: {e}", p.display())))?,
                None => emit(out, &text)?,
            }
        }
    }
    Ok(EXIT_OK)
}
