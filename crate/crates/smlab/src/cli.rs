//! The `smlab` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use crate::report::{suite_json, to_json, to_text};
use crate::runner::{run_checks, select_ids};
use crate::{WorkspaceError, WorkspaceSpec};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use smlab_core::classify::describe_violation;
use smlab_core::replay::verdict_word;
use smlab_core::{search_separating, Caps, Catalog, Classifier, Flag, Mutation, Preset, Session, ZnReading};

#[derive(Parser)]
#[command(name = "smlab", version, about = "Exhaustive checks of submodule classification results on small finite modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZnArg {
    Elementwise,
    ColonZeroDivisors,
}

#[derive(Subcommand)]
enum Command {
    /// Property table for every submodule of the workspace's modules.
    Classify {
        #[arg(long)]
        spec: PathBuf,
        /// Only this module.
        #[arg(long)]
        module: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run theorem checks over the default catalog.
    Theorems {
        /// `all` or a comma-separated list of ids.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Comma-separated ids; overrides --suite.
        #[arg(long)]
        ids: Option<String>,
        #[arg(long)]
        caps: Option<Preset>,
        #[arg(long)]
        seed: Option<u64>,
        /// Workspace whose `option` lines supply caps and seed.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Record per-check wall time (makes reports run-dependent).
        #[arg(long)]
        timings: bool,
        /// Corrupt one predicate to show the checks are not vacuous.
        #[arg(long)]
        mutation: Option<Mutation>,
        /// Reading of the undefined set Z_N in the localization checks.
        #[arg(long, value_enum, default_value = "elementwise")]
        zn_reading: ZnArg,
    },
    /// First catalog submodule with flag A true and flag B false.
    Search {
        #[arg(long)]
        a: Flag,
        #[arg(long)]
        b: Flag,
        #[arg(long)]
        caps: Option<Preset>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Summary of the default catalog.
    Catalog {
        #[arg(long)]
        caps: Option<Preset>,
    },
    /// Re-evaluate the `expect` lines of a workspace (e.g. a witness).
    Replay {
        #[arg(long)]
        spec: PathBuf,
    },
}

enum Failure {
    Input(String),
    Capacity(String),
}

impl From<smlab_core::Error> for Failure {
    fn from(e: smlab_core::Error) -> Self {
        match e {
            smlab_core::Error::Input(_) => Failure::Input(e.to_string()),
            smlab_core::Error::Capacity { .. } => Failure::Capacity(e.to_string()),
        }
    }
}

impl From<WorkspaceError> for Failure {
    fn from(e: WorkspaceError) -> Self {
        match e {
            WorkspaceError::Capacity { .. } => Failure::Capacity(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_spec(path: &Path) -> Result<WorkspaceSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(WorkspaceSpec::parse(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes()).map_err(|e| Failure::Input(e.to_string()))
        }
    }
}

fn catalog(caps: Preset) -> Result<Catalog, Failure> {
    Ok(Catalog::default_catalog(&Caps::preset(caps))?)
}

#[derive(Serialize)]
struct Row {
    module: String,
    submodule: String,
    gens: Vec<usize>,
    flags: Vec<(&'static str, &'static str)>,
    witnesses: Vec<(&'static str, String)>,
}

fn classify(spec: &Path, only: Option<&str>, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let ws = read_spec(spec)?;
    let mat = ws.materialize()?;
    let modules: Vec<_> = match only {
        Some(name) => {
            vec![(name, mat.module(name).ok_or_else(|| Failure::Input(format!("no module named `{name}` in {}", spec.display())))?)]
        }
        None => mat.modules().collect(),
    };
    let c = Classifier::default();
    let mut rows = Vec::new();
    for (name, m) in modules {
        for n in m.submodules()? {
            let pv = c.classify_submodule(m, n)?;
            let flags = Flag::ALL.iter().map(|&f| (f.name(), verdict_word(pv.get(f)))).collect();
            let witnesses = Flag::ALL.iter().filter_map(|&f| pv.get(f).violation().map(|v| (f.name(), describe_violation(m, v)))).collect();
            rows.push(Row {
                module: format!("{name}: {}", m.full_label()),
                submodule: m.submodule_label(n),
                gens: n.gens().to_vec(),
                flags,
                witnesses,
            });
        }
    }
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).expect("rows serialize")),
        Format::Text => {
            let mut s = String::new();
            let mut current = String::new();
            for r in &rows {
                if r.module != current {
                    current = r.module.clone();
                    s.push_str(&format!("{current}\n{:<16}", "submodule"));
                    for f in Flag::ALL {
                        s.push_str(&format!(" {:>14}", f.name()));
                    }
                    s.push('\n');
                }
                s.push_str(&format!("{:<16}", r.submodule));
                for (_, v) in &r.flags {
                    s.push_str(&format!(" {v:>14}"));
                }
                s.push('\n');
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn theorems(
    suite: &str,
    ids: Option<&str>,
    caps: Option<Preset>,
    seed: Option<u64>,
    spec: Option<&Path>,
    out: Option<&Path>,
    format: Format,
    timings: bool,
    mutation: Option<Mutation>,
    zn: ZnArg,
) -> Result<u8, Failure> {
    let opts = match spec {
        Some(p) => read_spec(p)?.options,
        None => Default::default(),
    };
    let caps = caps.or(opts.caps).unwrap_or(Preset::Standard);
    let seed = seed.or(opts.seed).unwrap_or(7);
    let ids = select_ids(ids.unwrap_or(suite))?;
    let cat = catalog(caps)?;
    let mut session = Session::with_classifier(&cat, seed, Classifier { mutation });
    session.zn_reading = match zn {
        ZnArg::Elementwise => ZnReading::Elementwise,
        ZnArg::ColonZeroDivisors => ZnReading::ColonZeroDivisors,
    };
    let runs = run_checks(&session, &ids, timings)?;
    let doc = suite_json(caps.name(), seed, mutation.map(|m| m.name()), &runs);
    let text = match format {
        Format::Json => to_json(&doc),
        Format::Text => to_text(&doc),
    };
    emit(out, &text)?;
    if format == Format::Json && out.is_some() {
        eprint!("{}", summary_line(&doc.summary));
    }
    Ok(if doc.summary.failed > 0 { 1 } else { 0 })
}

fn summary_line(s: &crate::report::Summary) -> String {
    let mut line = format!("{} checks: {} pass, {} fail, {} skipped\n", s.total, s.passed, s.failed, s.skipped);
    if !s.failed_ids.is_empty() {
        line.push_str(&format!("failed: {}\n", s.failed_ids.join(", ")));
    }
    line
}

fn search(a: Flag, b: Flag, caps: Option<Preset>, format: Format) -> Result<u8, Failure> {
    let caps = caps.unwrap_or(Preset::Standard);
    let cat = catalog(caps)?;
    let found = search_separating(a, b, &cat)?;
    let text = match (format, &found) {
        (Format::Text, Some(s)) => format!("found: {}\n{}", s.witness.detail, s.witness.spec),
        (Format::Text, None) => format!("not_found: no proper submodule in the {caps} catalog has {a} true and {b} false\n"),
        (Format::Json, Some(s)) => format!(
            "{}\n",
            serde_json::json!({"a": a.name(), "b": b.name(), "caps": caps.name(), "result": "found", "witness": {"detail": s.witness.detail, "spec": s.witness.spec}})
        ),
        (Format::Json, None) => {
            format!("{}\n", serde_json::json!({"a": a.name(), "b": b.name(), "caps": caps.name(), "result": "not_found", "witness": null}))
        }
    };
    emit(None, &text)?;
    Ok(0)
}

fn replay(spec: &Path) -> Result<u8, Failure> {
    let mat = read_spec(spec)?.materialize()?;
    let outcomes = mat.check_expectations()?;
    let mut text = String::new();
    let mut bad = 0;
    for o in &outcomes {
        let mark = if o.matches() { "ok" } else { "MISMATCH" };
        if !o.matches() {
            bad += 1;
        }
        text.push_str(&format!("line {}: {} {} expected {} got {}: {mark}\n", o.line, o.flag, o.target, o.expected, o.actual));
    }
    text.push_str(&format!("{} expectations, {} mismatched\n", outcomes.len(), bad));
    emit(None, &text)?;
    Ok(if bad > 0 { 1 } else { 0 })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify { spec, module, format, out } => classify(&spec, module.as_deref(), format, out.as_deref()),
        Command::Theorems { suite, ids, caps, seed, spec, out, format, timings, mutation, zn_reading } => {
            theorems(&suite, ids.as_deref(), caps, seed, spec.as_deref(), out.as_deref(), format, timings, mutation, zn_reading)
        }
        Command::Search { a, b, caps, format } => search(a, b, caps, format),
        Command::Catalog { caps } => {
            let cat = catalog(caps.unwrap_or(Preset::Standard))?;
            emit(None, &cat.summary().iter().map(|l| format!("{l}\n")).collect::<String>())?;
            Ok(0)
        }
        Command::Replay { spec } => replay(&spec),
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code: 0 success, 1 failed check or expectation, 2 input
/// error, 3 capacity error.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::parse_from(args);
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
