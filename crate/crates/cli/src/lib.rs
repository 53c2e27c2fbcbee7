//! Command dispatch for the `neurocode` binary.
//!
//! [`run`] takes the argument vector and standard input and returns the
//! exit status with everything that would be written to stdout and stderr,
//! so the whole tool can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use neurocode::classify::{IndexFailure, IndexRejection};
use neurocode::{
    canonical_form, classify, factor_complex, ideal_of_complex, polar_complex, primary_decomposition,
    prime_sets, sr_minimal_primes, survey, verify_dictionary, ClassificationReport, Code, CodeDocument, Codeword,
    Method, MicCertificate, Property, Witness,
};
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FALSE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "neurocode", version, about = "Neural codes, neural ideals and their complexes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Read the code from PATH instead of standard input.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form of the neural ideal.
    Cf,
    /// Maximal intervals of the code.
    Intervals,
    /// Prime decomposition of the neural ideal.
    Decompose,
    /// Downward closure, factor and polar complexes, prime-sets and
    /// Stanley-Reisner minimal primes.
    Complexes,
    /// Decide intersection-completeness (ic) or max-intersection-completeness (mic).
    Check {
        #[arg(value_enum)]
        property: PropertyArg,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Check the interval and codeword correspondences.
    Verify,
    /// Classify every code on K neurons (K <= 4).
    Survey {
        #[arg(long, value_name = "K")]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    Ic,
    Mic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    All,
    Brute,
    Cf,
    Facets,
    Algebraic,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::All => Method::ALL.to_vec(),
            MethodArg::Brute => vec![Method::BruteForce],
            MethodArg::Cf | MethodArg::Algebraic => vec![Method::CanonicalForm],
            MethodArg::Facets => vec![Method::FactorComplex],
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(stderr: String) -> Self {
        Outcome { code: EXIT_ERROR, stdout: String::new(), stderr }
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let mut text = e.render().to_string();
            return if e.use_stderr() {
                if !text.contains("Usage:") {
                    let _ = write!(text, "\n{}", Cli::command().render_usage());
                }
                Outcome::error(text)
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };

    let mut stderr = String::new();
    let result = match cli.command {
        Command::Survey { n } => run_survey(n, cli.json),
        ref command => read_code(cli.input.as_ref(), stdin, &mut stderr)
            .and_then(|code| dispatch(command, &code, cli.json)),
    };
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr },
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            Outcome { code: EXIT_ERROR, stdout: String::new(), stderr }
        }
    }
}

type Rendered = Result<(i32, String), String>;

fn read_code(path: Option<&PathBuf>, stdin: &mut dyn Read, stderr: &mut String) -> Result<Code, String> {
    let (text, source) = match path {
        Some(p) => (
            std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
            p.display().to_string(),
        ),
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| format!("<stdin>: {e}"))?;
            (text, "<stdin>".to_string())
        }
    };
    let located = |e: neurocode::Error| match e {
        neurocode::Error::Parse { line, message } => format!("{source}:{line}: {message}"),
        other => format!("{source}: {other}"),
    };
    let parsed = CodeDocument::parse(&text, source.clone()).and_then(|d| d.to_code()).map_err(located)?;
    for w in &parsed.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    Ok(parsed.code)
}

fn envelope(command: &str, code: Option<&Code>, body: Value) -> String {
    let mut out = json!({ "schema": SCHEMA, "command": command });
    if let Some(c) = code {
        out["code"] = json!(c);
    }
    if let (Value::Object(out), Value::Object(body)) = (&mut out, body) {
        out.extend(body);
    }
    let mut text = serde_json::to_string_pretty(&out).expect("values serialize");
    text.push('\n');
    text
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| i.to_string() + "\n").collect()
}

fn dispatch(command: &Command, code: &Code, json: bool) -> Rendered {
    let n = code.n();
    match command {
        Command::Cf => {
            let cf = canonical_form(code).map_err(|e| e.to_string())?;
            let out = if json {
                envelope("cf", Some(code), json!({ "canonical_form": cf.elements() }))
            } else {
                lines(cf.elements())
            };
            Ok((EXIT_OK, out))
        }
        Command::Intervals => {
            let ivs = code.maximal_intervals();
            let out = if json {
                let items: Vec<Value> =
                    ivs.iter().map(|iv| json!({ "lo": iv.lo(), "hi": iv.hi(), "text": iv.to_string() })).collect();
                envelope("intervals", Some(code), json!({ "maximal_intervals": items }))
            } else {
                lines(&ivs)
            };
            Ok((EXIT_OK, out))
        }
        Command::Decompose => {
            let primes = primary_decomposition(code);
            let out = if json {
                let items: Vec<Value> = primes
                    .iter()
                    .map(|p| json!({ "pos": p.pos(), "neg": p.neg(), "text": p.to_string() }))
                    .collect();
                envelope("decompose", Some(code), json!({ "primes": items }))
            } else {
                lines(&primes)
            };
            Ok((EXIT_OK, out))
        }
        Command::Complexes => complexes(code, json),
        Command::Check { property, method } => {
            let property = match property {
                PropertyArg::Ic => Property::IntersectionComplete,
                PropertyArg::Mic => Property::MaxIntersectionComplete,
            };
            let reports = method
                .methods()
                .into_iter()
                .map(|m| classify(code, property, m))
                .collect::<neurocode::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            let status = if reports.iter().all(|r| r.verdict) { EXIT_OK } else { EXIT_FALSE };
            let out = if json {
                let items: Vec<Value> = reports.iter().map(|r| report_json(r, n)).collect();
                envelope("check", Some(code), json!({ "property": property, "reports": items }))
            } else {
                reports.iter().map(|r| report_text(r, n)).collect()
            };
            Ok((status, out))
        }
        Command::Verify => {
            let report = verify_dictionary(code).map_err(|e| e.to_string())?;
            let status = if report.passed() { EXIT_OK } else { EXIT_FALSE };
            let out = if json {
                envelope("verify", Some(code), json!({ "passed": report.passed(), "report": report }))
            } else {
                let mut out = String::new();
                for item in &report.items {
                    let verdict = if item.passed { "pass" } else { "FAIL" };
                    let _ = write!(out, "{} {verdict}", item.name);
                    if let Some(d) = &item.detail {
                        let _ = write!(out, ": {d}");
                    }
                    out.push('\n');
                }
                for e in &report.intervals {
                    let _ = writeln!(out, "interval {} {} {}", e.interval, e.pseudomonomial, e.facet);
                }
                for e in &report.codewords {
                    let _ = writeln!(out, "codeword {} {} {}", e.codeword, variable_prime(e.prime), e.prime_set);
                }
                out
            };
            Ok((status, out))
        }
        Command::Survey { .. } => unreachable!("handled before reading input"),
    }
}

/// `⟨x_i : i ∈ b⟩` in ASCII; `<0>` for the zero ideal.
fn variable_prime(b: Codeword) -> String {
    if b.is_empty() {
        return "<0>".into();
    }
    let vars: Vec<String> = b.neurons().map(|i| format!("x{i}")).collect();
    format!("<{}>", vars.join(", "))
}

fn complexes(code: &Code, json: bool) -> Rendered {
    let delta = code.downward_closure();
    let sr = ideal_of_complex(&delta);
    let primes = sr_minimal_primes(code);
    let factor = factor_complex(code);
    let polar = polar_complex(code).map_err(|e| e.to_string())?;
    let sets = prime_sets(code, true);

    let prime_text: Vec<String> = primes.iter().map(|&b| variable_prime(b)).collect();
    let set_text: Vec<String> = sets.iter().map(ToString::to_string).collect();
    let sections: [(&str, Vec<String>); 6] = [
        ("downward_closure", delta.rendered_facets()),
        ("stanley_reisner_ideal", sr.rendered_generators()),
        ("sr_minimal_primes", prime_text.clone()),
        ("factor_complex", factor.rendered_facets()),
        ("polar_complex", polar.rendered_facets()),
        ("minimal_prime_sets", set_text.clone()),
    ];
    if json {
        let body = json!({
            "downward_closure": { "complex": delta, "text": sections[0].1 },
            "stanley_reisner_ideal": { "ideal": sr, "text": sections[1].1 },
            "sr_minimal_primes": { "sets": primes, "text": prime_text },
            "factor_complex": { "complex": factor, "text": sections[3].1 },
            "polar_complex": { "complex": polar, "text": sections[4].1 },
            "minimal_prime_sets": { "sets": sets, "text": set_text },
        });
        return Ok((EXIT_OK, envelope("complexes", Some(code), body)));
    }
    let mut out = String::new();
    for (name, items) in &sections {
        let _ = writeln!(out, "{name}:");
        for item in items {
            let _ = writeln!(out, "  {item}");
        }
    }
    Ok((EXIT_OK, out))
}

fn rejection_text(r: &IndexRejection, facet_side: bool) -> String {
    match (r.failure, facet_side) {
        (IndexFailure::Ineligible, false) => format!("i={}: (1-x{}) does not divide", r.index, r.index),
        (IndexFailure::Ineligible, true) => format!("i={}: {} lies in the facet", r.index, r.index),
        (IndexFailure::BlockedBy { set }, false) => {
            format!("i={}: blocked by {}", r.index, variable_prime(set))
        }
        (IndexFailure::BlockedBy { set }, true) => {
            let barred: String = set.neurons().map(|j| format!("~{j}")).collect();
            format!("i={}: blocked by prime-set {barred}", r.index)
        }
    }
}

pub fn witness_text(w: &Witness, n: usize) -> String {
    match w {
        Witness::MissingIntersection { family, intersection } => {
            let words: Vec<String> = family.iter().map(ToString::to_string).collect();
            format!("{} = {intersection} is not a codeword", words.join(" & "))
        }
        Witness::WideNegation { phi } => {
            format!("{phi} is in CF(J_C) with {} negated factors", phi.tau().len())
        }
        Witness::NarrowFacet { facet } => format!(
            "facet {facet} of the factor complex of C' has {} of {n} plain vertices",
            facet.x.len()
        ),
        Witness::UncoveredPseudomonomial { phi, rejections } => {
            let why: Vec<String> = rejections.iter().map(|r| rejection_text(r, false)).collect();
            format!("{phi}: {}", why.join("; "))
        }
        Witness::UncoveredFacet { facet, rejections } => {
            let why: Vec<String> = rejections.iter().map(|r| rejection_text(r, true)).collect();
            format!("facet {facet}: {}", why.join("; "))
        }
    }
}

fn certificate_lines(cert: &MicCertificate) -> Vec<String> {
    cert.entries.iter().map(|e| format!("{} facet {} index {}", e.phi, e.facet, e.index)).collect()
}

fn report_text(r: &ClassificationReport, n: usize) -> String {
    let mut out = format!("{} {} {}\n", r.property.label(), r.method.label(), r.verdict);
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "  witness: {}", witness_text(w, n));
    }
    if let Some(cert) = &r.certificate {
        for line in certificate_lines(cert) {
            let _ = writeln!(out, "  certificate: {line}");
        }
    }
    out
}

fn report_json(r: &ClassificationReport, n: usize) -> Value {
    let mut v = json!(r);
    if let Some(w) = &r.witness {
        v["witness_text"] = json!(witness_text(w, n));
    }
    if let Some(cert) = &r.certificate {
        v["certificate_text"] = json!(certificate_lines(cert));
    }
    v
}

fn run_survey(n: usize, json: bool) -> Rendered {
    let s = survey(n).map_err(|e| e.to_string())?;
    if let Some(bad) = s.rows.iter().find(|r| !r.agree) {
        return Err(format!("deciders disagree on code id {}", bad.id));
    }
    let out = if json {
        envelope("survey", None, json!({ "n": s.n, "rows": s.rows, "summary": s.summary }))
    } else {
        s.render_text()
    };
    Ok((EXIT_OK, out))
}
