//! Command-line front end. Every verdict comes straight from a library call;
//! this module only parses arguments and formats results.
//!
//! Exit codes: 0 on success, 1 when the library rejects the input, 2 on a
//! usage error (bad syntax, unknown names, unreadable files).

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::partitions::{down_set, minimal_elements, Partition};
use crate::rewrite::{derivable, IdentitySystem};
use crate::varieties::{
    decompose, greedy_report, legacy_variety, meet, s_variety, s_variety_truncated, w_variety, LegacyFamily,
    VarietyPresentation,
};
use crate::verify::{run_suite, Suite};
use crate::words::{enumerate_transversal, Word};

#[derive(Debug, Parser)]
#[command(name = "ocvar", version, about = "Partition orders, transversal rewriting and greedy varieties")]
struct Cli {
    /// Output style; `structured` prints JSON.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Length bound for bounded checks.
    #[arg(long, default_value_t = 6, global = true)]
    bound: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Statistics and extensions of a partition.
    Partition {
        partition: String,
        /// Also print `λ^k`; may be repeated.
        #[arg(long = "extend", value_name = "K")]
        extend: Vec<u32>,
    },
    /// Compare partitions, list a down-set or minimize a set.
    Order {
        #[arg(value_enum)]
        mode: OrderMode,
        #[arg(required = true)]
        partitions: Vec<String>,
    },
    /// List the words of a transversal.
    Transversal { partition: String },
    /// Search for a deduction of `u = v` from an identity system.
    Derive {
        u: String,
        v: String,
        #[arg(long)]
        system: PathBuf,
        /// Print the deduction steps.
        #[arg(long)]
        trace: bool,
    },
    /// Equivalence classes of a transversal under an identity system.
    Classes {
        partition: String,
        #[arg(long)]
        system: PathBuf,
    },
    /// Build or analyse a variety presentation.
    Variety {
        #[arg(value_enum)]
        action: VarietyAction,
        #[command(flatten)]
        presentation: PresentationArgs,
        /// Transversal for `reduces` and `collapses`.
        #[arg(long)]
        target: Option<String>,
    },
    /// Run an instance suite: order-axioms, poor-xi, s-zero-lemma,
    /// prop-optimum, cor-s-in-w, cor-s-in-s or cor-representation.
    Verify { suite: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderMode {
    Preceq,
    Unlhd,
    Downset,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarietyAction {
    Build,
    Greedy,
    Reduces,
    Collapses,
    Decompose,
}

/// Parts of the presentation; all given parts are combined with a meet.
#[derive(Debug, Args)]
struct PresentationArgs {
    /// Presentation file.
    #[arg(long)]
    system: Option<PathBuf>,
    /// `W_λ`.
    #[arg(long = "w", value_name = "PARTITION")]
    w: Vec<String>,
    /// `S_λ`.
    #[arg(long = "s", value_name = "PARTITION")]
    s: Vec<String>,
    /// `S_λ^k`, written `PARTITION:K`.
    #[arg(long = "sk", value_name = "PARTITION:K")]
    sk: Vec<String>,
    /// Legacy family cut at `--bound`: `Xn:N`, `Xnm:N:M` or `Xnml:PARTITION`.
    #[arg(long, value_name = "FAMILY")]
    legacy: Vec<String>,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_syntax() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

type Outcome = Result<Report, Failure>;

/// What a command prints, plus whether it counts as a failure.
struct Report {
    text: String,
    structured: serde_json::Value,
    failed: bool,
}

impl Report {
    fn ok(text: String, structured: serde_json::Value) -> Self {
        Report { text, structured, failed: false }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let printed = match cli.format {
                Format::Text => report.text,
                Format::Structured => {
                    serde_json::to_string_pretty(&report.structured).expect("reports serialize") + "\n"
                }
            };
            let _ = out.write_all(printed.as_bytes());
            i32::from(report.failed)
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "usage error: {message}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Partition { partition, extend } => partition_cmd(partition, extend),
        Command::Order { mode, partitions } => order_cmd(*mode, partitions),
        Command::Transversal { partition } => transversal_cmd(partition),
        Command::Derive { u, v, system, trace } => derive_cmd(u, v, system, *trace),
        Command::Classes { partition, system } => classes_cmd(partition, system),
        Command::Variety { action, presentation, target } => {
            variety_cmd(*action, presentation, target.as_deref(), cli.bound)
        }
        Command::Verify { suite } => verify_cmd(suite, cli.bound),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn partition(text: &str) -> Result<Partition, Failure> {
    Ok(text.parse()?)
}

fn sorted_desc(set: impl IntoIterator<Item = Partition>) -> Vec<Partition> {
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

fn list(partitions: &[Partition]) -> String {
    let items: Vec<String> = partitions.iter().map(Partition::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn partition_cmd(spec: &str, extend: &[u32]) -> Outcome {
    let lambda = partition(spec)?;
    let stats = lambda.stats()?;
    let mut text = format!(
        "partition {lambda}\ntotal {}\nparts {}\nq {}\nr {}\ndelta {}\ns {}\n",
        lambda.total(),
        lambda.parts(),
        stats.q,
        stats.r,
        stats.delta,
        stats.s
    );
    let mut extensions = Vec::new();
    for &k in extend {
        let e = lambda.extend(k);
        writeln!(text, "extend {k} {e}").unwrap();
        extensions.push(json!({ "k": k, "partition": e }));
    }
    Ok(Report::ok(
        text,
        json!({
            "partition": lambda,
            "total": lambda.total(),
            "parts": lambda.parts(),
            "stats": stats,
            "extensions": extensions,
        }),
    ))
}

fn order_cmd(mode: OrderMode, texts: &[String]) -> Outcome {
    let parsed = texts.iter().map(|t| partition(t)).collect::<Result<Vec<_>, _>>()?;
    let arity = |n: usize| {
        if parsed.len() == n {
            Ok(())
        } else {
            Err(Failure::Usage(format!("this mode takes {n} partition(s), got {}", parsed.len())))
        }
    };
    match mode {
        OrderMode::Preceq | OrderMode::Unlhd => {
            arity(2)?;
            let (lambda, mu) = (&parsed[0], &parsed[1]);
            let (name, holds) = match mode {
                OrderMode::Preceq => ("preceq", lambda.preceq(mu)?),
                _ => ("unlhd", lambda.unlhd(mu)?),
            };
            Ok(Report::ok(
                format!("{holds}\n"),
                json!({ "mode": name, "lambda": lambda, "mu": mu, "holds": holds }),
            ))
        }
        OrderMode::Downset => {
            arity(1)?;
            let set = sorted_desc(down_set(&parsed[0])?);
            Ok(Report::ok(format!("{}\n", list(&set)), json!({ "mode": "downset", "lambda": parsed[0], "set": set })))
        }
        OrderMode::Minimize => {
            let set = sorted_desc(minimal_elements(&parsed)?);
            Ok(Report::ok(format!("{}\n", list(&set)), json!({ "mode": "minimize", "input": parsed, "minimal": set })))
        }
    }
}

fn transversal_cmd(spec: &str) -> Outcome {
    let lambda = partition(spec)?;
    let words = enumerate_transversal(&lambda)?;
    let mut text = format!("transversal {lambda}: {} words\n", words.len());
    for w in &words {
        writeln!(text, "{}", w.to_text()).unwrap();
    }
    Ok(Report::ok(text, json!({ "partition": lambda, "size": words.len(), "words": words })))
}

fn derive_cmd(u: &str, v: &str, path: &Path, show_trace: bool) -> Outcome {
    let system = IdentitySystem::parse(&read(path)?)?;
    let (u, v) = (Word::parse(u)?, Word::parse(v)?);
    let found = derivable(&u, &v, &system)?;
    let verdict = if found.is_some() { "DERIVABLE" } else { "NOT-DERIVABLE" };
    let mut text = format!("{verdict}\n");
    if let Some(trace) = &found {
        writeln!(text, "length {}", trace.len()).unwrap();
        if show_trace {
            text.push_str(&trace.to_records());
        }
    }
    let structured = json!({
        "u": u,
        "v": v,
        "verdict": verdict,
        "length": found.as_ref().map(|t| t.len()),
        "trace": if show_trace { found.as_ref().map(|t| serde_json::to_value(t).expect("traces serialize")) } else { None },
    });
    Ok(Report::ok(text, structured))
}

fn classes_cmd(spec: &str, path: &Path) -> Outcome {
    let lambda = partition(spec)?;
    let presentation = VarietyPresentation::parse(&read(path)?)?;
    let classes = presentation.congruence().classes(&lambda)?;
    let mut text = format!("{lambda}: {} classes\n", classes.len());
    for class in &classes {
        let words: Vec<String> = class.iter().map(Word::to_text).collect();
        writeln!(text, "{}", words.join(" ")).unwrap();
    }
    Ok(Report::ok(text, json!({ "partition": lambda, "count": classes.len(), "classes": classes })))
}

fn presentation(args: &PresentationArgs, bound: u32) -> Result<VarietyPresentation, Failure> {
    let mut parts = Vec::new();
    if let Some(path) = &args.system {
        parts.push(VarietyPresentation::parse(&read(path)?)?);
    }
    for text in &args.w {
        parts.push(w_variety(&partition(text)?)?);
    }
    for text in &args.s {
        parts.push(s_variety(&partition(text)?)?);
    }
    for text in &args.sk {
        let (lambda, k) = text
            .rsplit_once(':')
            .ok_or_else(|| Failure::Usage(format!("expected PARTITION:K, got {text:?}")))?;
        let k = k.parse().map_err(|_| Failure::Usage(format!("expected PARTITION:K, got {text:?}")))?;
        parts.push(s_variety_truncated(&partition(lambda)?, k)?);
    }
    for text in &args.legacy {
        let family: LegacyFamily = text.parse()?;
        parts.push(legacy_variety(&family, bound)?);
    }
    if parts.is_empty() {
        return Ok(VarietyPresentation::all_semigroups());
    }
    Ok(meet(&parts)?)
}

fn variety_cmd(action: VarietyAction, args: &PresentationArgs, target: Option<&str>, bound: u32) -> Outcome {
    let p = presentation(args, bound)?;
    let needs_target = || -> Result<Partition, Failure> {
        partition(target.ok_or_else(|| Failure::Usage("this action needs --target PARTITION".into()))?)
    };
    match action {
        VarietyAction::Build => {
            let identities: Vec<String> = p.system().iter().map(|i| i.to_string()).collect();
            Ok(Report::ok(
                p.to_text(),
                json!({
                    "label": p.label(),
                    "declared_collapses": p.declared_collapses(),
                    "identities": identities,
                }),
            ))
        }
        VarietyAction::Reduces | VarietyAction::Collapses => {
            let lambda = needs_target()?;
            let mut congruence = p.congruence();
            let (name, holds) = match action {
                VarietyAction::Reduces => ("reduces", congruence.reduces(&lambda)?),
                _ => ("collapses", congruence.collapses(&lambda)?),
            };
            Ok(Report::ok(
                format!("{holds}\n"),
                json!({ "action": name, "variety": p.label(), "target": lambda, "holds": holds }),
            ))
        }
        VarietyAction::Greedy => {
            let report = greedy_report(&p, bound)?;
            let mut text = format!("variety {}\n", p.label());
            for v in &report.verdicts {
                writeln!(text, "{} reduces={} collapses={}", v.partition, v.reduces, v.collapses).unwrap();
            }
            let witnesses: Vec<Partition> = report.witnesses().cloned().collect();
            writeln!(text, "witnesses {}", list(&witnesses)).unwrap();
            writeln!(text, "greedy up to bound {}: {}", report.bound, report.greedy_up_to_bound).unwrap();
            Ok(Report::ok(text, to_json(&report)))
        }
        VarietyAction::Decompose => {
            let result = decompose(&p, bound)?;
            let show = |set: &std::collections::BTreeSet<Partition>| list(&sorted_desc(set.iter().cloned()));
            let text = format!(
                "variety {}\nbound {}\ngamma {}\ngamma' {}\nindeterminate {}\nreconstruction {}\nreconstruction matches: {}\n",
                p.label(),
                result.bound,
                show(&result.gamma),
                show(&result.gamma_prime),
                show(&result.indeterminate),
                result.reconstruction()?.label(),
                result.reconstruction_ok
            );
            Ok(Report::ok(text, to_json(&result)))
        }
    }
}

fn verify_cmd(name: &str, bound: u32) -> Outcome {
    let suite: Suite = name.parse()?;
    let report = run_suite(suite, bound)?;
    let mut text = String::new();
    for case in &report.cases {
        writeln!(text, "[{}] {}", if case.passed { "PASS" } else { "FAIL" }, case.case).unwrap();
    }
    let passed = report.passed();
    writeln!(text, "{} {} at bound {}", suite, if passed { "passed" } else { "FAILED" }, bound).unwrap();
    Ok(Report { text, structured: to_json(&report), failed: !passed })
}

fn to_json(value: &impl Serialize) -> serde_json::Value {
    serde_json::to_value(value).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ocvar").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn partition_statistics() {
        let (code, out) = call(&["partition", "2,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("\ns 1\n"), "{out}");
        assert!(call(&["partition", "1,1,1"]).1.contains("\ns 0\n"));
        assert_eq!(call(&["partition", "0,1"]).0, 2);
        assert_eq!(call(&["partition", "3"]).0, 1);
    }

    #[test]
    fn orders() {
        assert_eq!(call(&["order", "preceq", "2,1", "2,2"]), (0, "true\n".into()));
        assert_eq!(call(&["order", "unlhd", "3,1", "2,2"]), (0, "false\n".into()));
        assert_eq!(call(&["order", "downset", "2,1"]), (0, "{(2,1), (1,1,1), (1,1)}\n".into()));
        assert_eq!(call(&["order", "preceq", "2,1"]).0, 2);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(call(&["verify", "no-such-suite"]).0, 2);
        assert_eq!(call(&["verify", "order-axioms", "--bound", "5"]).0, 0);
        assert_eq!(call(&["verify", "order-axioms", "--bound", "1"]).0, 1);
    }

    #[test]
    fn structured_is_json() {
        let (code, out) = call(&["--format", "structured", "partition", "2,2", "--extend", "2"]);
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["stats"]["s"], 3);
        assert_eq!(value["extensions"][0]["partition"], json!([2, 2, 1, 1]));
    }
}
