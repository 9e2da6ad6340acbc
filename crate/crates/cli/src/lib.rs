//! Command-line front end. `run` parses arguments, dispatches to the core
//! library and returns the exit code with the emitted document, so the whole
//! surface is testable without spawning processes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use hypcert_core::arrangements::{check_zai_gen, dual_graph, Arrangement};
use hypcert_core::contraction::ContractionCertificate;
use hypcert_core::dot::{certificate_to_dot, to_dot};
use hypcert_core::graph::{Builtin, WeightedMultigraph};
use hypcert_core::multipartite::contract_multipartite;
use hypcert_core::pipeline::{
    cyclic_cover_factorization, decide_batch, decide_cyclic_surface, decide_theorem_main,
    decide_theorem_main2, BatchOutcome, Scenario,
};
use hypcert_core::published::published_certificate;
use hypcert_core::report::{ObligationReport, EXIT_INPUT_ERROR};
use hypcert_core::search::{decide_contractible, Decision};
use hypcert_core::surfaces::{adjunction_genus, double_cover_chern, rh_pullback_genus, ClassLiteral, PullbackGenus};
use hypcert_core::Error as CoreError;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "hypcert", version, about = "Contraction certificates and obligation reports for branched covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Search,
    Multipartite,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph contracts admissibly to a single vertex.
    ContractDecide {
        /// Inline JSON, a file path, or a builtin name (K1..K4, example-G).
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Search)]
        method: Method,
        /// Reject graphs with a vertex of weight zero or less.
        #[arg(long)]
        positive_weights: bool,
        /// Write one DOT file per intermediate graph of the certificate.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    /// Replay a contraction certificate step by step.
    CertVerify {
        input: String,
        /// Accept a sequence that stops before reaching a single vertex.
        #[arg(long)]
        allow_partial: bool,
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    /// Dual graph of an arrangement such as `lines:P2:m=5` or `fn:N=1:a=3:b=4`.
    GraphDual {
        input: String,
        /// Also run the smoothing hypotheses and emit the obligation tree.
        #[arg(long)]
        check: bool,
    },
    /// Chern numbers of the double cover branched along a member of `2L`.
    Chern {
        /// Class literal for `L`.
        input: String,
    },
    /// Arithmetic genus of a class, or of a double cover of a rational curve.
    Genus {
        /// Class literal.
        input: Option<String>,
        /// Transverse branch points on a rational curve instead of a class.
        #[arg(long, conflicts_with = "input")]
        transverse: Option<i64>,
    },
    /// Decide hyperbolicity of a branched cover.
    Theorem {
        #[command(subcommand)]
        which: TheoremCommand,
    },
    /// Split `d = d1 * d2` with `d1 >= 2` and `d2 >= 5`.
    Factor {
        #[arg(long)]
        d: i64,
    },
    /// Print a builtin sample graph or its published certificate.
    BuiltinDump {
        name: String,
        #[arg(long)]
        certificate: bool,
    },
    /// Decide a JSON array of scenarios.
    Batch { input: String },
}

#[derive(Subcommand, Debug)]
enum TheoremCommand {
    /// Double cover of P2 branched along a curve of degree `d`.
    P2 {
        #[arg(long)]
        d: i64,
    },
    /// Double cover of F_N branched along a curve of bidegree `(a, b)`.
    Fn {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Degree `d` surface in P3 that is a cyclic cover of P2.
    Cyclic {
        #[arg(long)]
        d: i64,
    },
}

/// Exit code and the documents for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }
}

type Res<T> = std::result::Result<T, String>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(0, text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(msg) => Outcome::input_error(msg),
    }
}

fn dispatch(cli: &Cli) -> Res<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::ContractDecide {
            input,
            method,
            positive_weights,
            dot_dir,
        } => contract_decide(input, *method, *positive_weights, dot_dir.as_deref(), fmt),
        Command::CertVerify {
            input,
            allow_partial,
            dot_dir,
        } => cert_verify(input, *allow_partial, dot_dir.as_deref(), fmt),
        Command::GraphDual { input, check } => graph_dual(input, *check, fmt),
        Command::Chern { input } => {
            no_dot(fmt)?;
            let lit = load_class(input)?;
            let c = double_cover_chern(lit.surface, lit.class).map_err(core)?;
            let doc = json!({
                "surface": lit.surface,
                "L": lit.class,
                "c1_sq": c.c1_sq,
                "c2": c.c2,
                "chi": c.chi,
                "noether_even": c.on_noether_line_even(),
            });
            let text = format!("c1^2 = {}\nc2 = {}\nchi = {}\n", c.c1_sq, c.c2, c.chi);
            Ok(Outcome::ok(0, emit(fmt, &doc, text)))
        }
        Command::Genus { input, transverse } => genus(input.as_deref(), *transverse, fmt),
        Command::Theorem { which } => {
            let report = match which {
                TheoremCommand::P2 { d } => decide_theorem_main(*d),
                TheoremCommand::Fn { n, a, b } => decide_theorem_main2(*n, *a, *b),
                TheoremCommand::Cyclic { d } => decide_cyclic_surface(*d),
            }
            .map_err(core)?;
            emit_report(&report, fmt)
        }
        Command::Factor { d } => {
            no_dot(fmt)?;
            if *d < 2 {
                return Err(format!("d: must be at least 2, got {d}"));
            }
            let split = cyclic_cover_factorization(*d);
            let doc = match split {
                Some((d1, d2)) => json!({ "d": d, "factorization": [d1, d2] }),
                None => json!({ "d": d, "factorization": "NONE" }),
            };
            let text = match split {
                Some((d1, d2)) => format!("{d} = {d1} x {d2}\n"),
                None => "NONE\n".to_owned(),
            };
            Ok(Outcome::ok(if split.is_some() { 0 } else { 2 }, emit(fmt, &doc, text)))
        }
        Command::BuiltinDump { name, certificate } => {
            let b = Builtin::from_str(name).map_err(core)?;
            if *certificate {
                let cert = published_certificate(b)
                    .ok_or_else(|| format!("{}: no published certificate", b.name()))?;
                let out = match fmt {
                    Format::Json => to_json(&cert),
                    Format::Dot => certificate_to_dot(&cert, b.name()).map_err(core)?.concat(),
                    Format::Text => certificate_text(&cert),
                };
                Ok(Outcome::ok(0, out))
            } else {
                Ok(Outcome::ok(0, render_graph(&b.graph(), b.name(), fmt)))
            }
        }
        Command::Batch { input } => {
            no_dot(fmt)?;
            let scenarios: Vec<Scenario> = load_json(input)?;
            let entries = decide_batch(&scenarios);
            let text = entries
                .iter()
                .map(|e| match &e.outcome {
                    BatchOutcome::Report(r) => format!("{}: {}\n", e.scenario, r.verdict),
                    BatchOutcome::Error(msg) => format!("{}: error: {msg}\n", e.scenario),
                })
                .collect();
            Ok(Outcome::ok(0, emit(fmt, &entries, text)))
        }
    }
}

fn core(e: CoreError) -> String {
    e.to_string()
}

fn no_dot(fmt: Format) -> Res<()> {
    if fmt == Format::Dot {
        Err("format: dot output is only available for graphs and certificates".into())
    } else {
        Ok(())
    }
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("documents serialize") + "\n"
}

fn emit<T: serde::Serialize + ?Sized>(fmt: Format, doc: &T, text: String) -> String {
    match fmt {
        Format::Text => text,
        _ => to_json(doc),
    }
}

fn emit_report(report: &ObligationReport, fmt: Format) -> Res<Outcome> {
    no_dot(fmt)?;
    Ok(Outcome::ok(report.exit_code(), emit(fmt, report, report.to_string())))
}

/// Inline JSON if it looks like JSON, otherwise a file path.
fn read_source(input: &str) -> Res<String> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(input.to_owned());
    }
    fs::read_to_string(input).map_err(|e| format!("input `{input}`: {e}"))
}

fn load_json<T: DeserializeOwned>(input: &str) -> Res<T> {
    let text = read_source(input)?;
    serde_json::from_str(&text).map_err(|e| format!("input: {e}"))
}

fn load_graph(input: &str) -> Res<WeightedMultigraph> {
    if let Ok(b) = Builtin::from_str(input) {
        return Ok(b.graph());
    }
    load_json(input)
}

fn load_class(input: &str) -> Res<ClassLiteral> {
    let lit: ClassLiteral = load_json(input)?;
    lit.validate().map_err(|e| format!("class: {e}"))
}

fn graph_text(g: &WeightedMultigraph) -> String {
    let mut out = String::new();
    for (v, w) in g.vertex_weights() {
        writeln!(out, "vertex {v} wt {w}").unwrap();
    }
    for (u, v, m) in g.edges() {
        writeln!(out, "edge {u} {v} x{m}").unwrap();
    }
    out
}

fn render_graph(g: &WeightedMultigraph, name: &str, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(g),
        Format::Dot => to_dot(g, name),
        Format::Text => graph_text(g),
    }
}

fn certificate_text(cert: &ContractionCertificate) -> String {
    let mut out = graph_text(&cert.initial);
    for (i, s) in cert.steps.iter().enumerate() {
        writeln!(out, "step {}: ({}, {}) l={} -> {}", i + 1, s.pair[0], s.pair[1], s.l, s.merged).unwrap();
    }
    out
}

fn write_dot_dir(dir: &Path, cert: &ContractionCertificate) -> Res<()> {
    fs::create_dir_all(dir).map_err(|e| format!("dot-dir `{}`: {e}", dir.display()))?;
    for (i, doc) in certificate_to_dot(cert, "step").map_err(core)?.iter().enumerate() {
        let path = dir.join(format!("step{i:02}.dot"));
        fs::write(&path, doc).map_err(|e| format!("dot-dir `{}`: {e}", path.display()))?;
    }
    Ok(())
}

fn contract_decide(input: &str, method: Method, positive: bool, dot_dir: Option<&Path>, fmt: Format) -> Res<Outcome> {
    let g = load_graph(input)?;
    if positive {
        g.require_positive_weights().map_err(|e| format!("weights: {e}"))?;
    }
    let (code, doc, cert) = match method {
        Method::Search => match decide_contractible(&g).map_err(core)? {
            Decision::Contractible(cert) => (
                0,
                json!({ "method": "search", "contractible": true, "certificate": cert }),
                Some(cert),
            ),
            Decision::NotContractible { states } => (
                1,
                json!({ "method": "search", "contractible": false, "states": states }),
                None,
            ),
        },
        Method::Multipartite => match contract_multipartite(&g) {
            Ok(mc) => (
                0,
                json!({
                    "method": "multipartite",
                    "contractible": true,
                    "case": mc.case.number(),
                    "absorbed": mc.absorbed,
                    "embedding": mc.embedding,
                    "certificate": mc.certificate,
                }),
                Some(mc.certificate),
            ),
            // the constructive method does not decide graphs outside its hypotheses
            Err(CoreError::Precondition(w)) => (
                2,
                json!({ "method": "multipartite", "contractible": Value::Null, "reason": w.to_string() }),
                None,
            ),
            Err(e) => return Err(core(e)),
        },
    };
    if let (Some(dir), Some(cert)) = (dot_dir, &cert) {
        write_dot_dir(dir, cert)?;
    }
    let out = match fmt {
        Format::Json => to_json(&doc),
        Format::Dot => match &cert {
            Some(c) => certificate_to_dot(c, "step").map_err(core)?.concat(),
            None => to_dot(&g, "input"),
        },
        Format::Text => match &cert {
            Some(c) => format!("contractible\n{}", certificate_text(c)),
            None => match doc.get("reason") {
                Some(r) => format!("not decided: {}\n", r.as_str().unwrap_or_default()),
                None => "not contractible\n".to_owned(),
            },
        },
    };
    Ok(Outcome::ok(code, out))
}

fn cert_verify(input: &str, allow_partial: bool, dot_dir: Option<&Path>, fmt: Format) -> Res<Outcome> {
    let cert: ContractionCertificate = load_json(input)?;
    let replay = cert.replay().map_err(core)?;
    let complete = replay.is_complete();
    let valid = replay.rejection.is_none() && (complete || allow_partial);
    if let Some(dir) = dot_dir {
        write_dot_dir(dir, &cert)?;
    }
    let last = replay.last();
    let doc = json!({
        "valid": valid,
        "complete": complete,
        "steps": cert.steps.len(),
        "accepted_steps": replay.graphs.len() - 1,
        "final_weight": if last.is_singleton() { Value::from(last.total_weight()) } else { Value::Null },
        "final_graph": last,
        "rejection": replay.rejection.as_ref().map(|r| json!({ "step": r.step, "reason": r.reason })),
    });
    let out = match fmt {
        Format::Json => to_json(&doc),
        Format::Dot => certificate_to_dot(&cert, "step").map_err(core)?.concat(),
        Format::Text => {
            let mut t = format!(
                "{}: {} of {} steps accepted\n",
                if valid { "valid" } else { "invalid" },
                replay.graphs.len() - 1,
                cert.steps.len()
            );
            if let Some(r) = &replay.rejection {
                writeln!(t, "step {} rejected: {}", r.step + 1, r.reason).unwrap();
            }
            if complete {
                writeln!(t, "final weight {}", last.total_weight()).unwrap();
            }
            t
        }
    };
    Ok(Outcome::ok(if valid { 0 } else { 1 }, out))
}

fn graph_dual(input: &str, check: bool, fmt: Format) -> Res<Outcome> {
    let arr: Arrangement = if input.trim_start().starts_with('{') || Path::new(input).is_file() {
        load_json(input)?
    } else {
        input.parse().map_err(core)?
    };
    if check {
        no_dot(fmt)?;
        let result = check_zai_gen(&arr).map_err(core)?;
        let holds = result.obligation.holds();
        let doc = json!({
            "arrangement": arr.to_string(),
            "assumption": arr.assumption(),
            "obligation": result.obligation,
            "certificate": result.certificate,
        });
        let text = format!("{}: {}\n", arr, if holds { "PASS" } else { "FAIL" });
        return Ok(Outcome::ok(if holds { 0 } else { 1 }, emit(fmt, &doc, text)));
    }
    let g = dual_graph(&arr).map_err(core)?;
    Ok(Outcome::ok(0, render_graph(&g, &arr.to_string(), fmt)))
}

fn genus(input: Option<&str>, transverse: Option<i64>, fmt: Format) -> Res<Outcome> {
    no_dot(fmt)?;
    match (input, transverse) {
        (Some(input), None) => {
            let lit = load_class(input)?;
            let g = adjunction_genus(lit.surface, lit.class).map_err(core)?;
            let doc = json!({ "surface": lit.surface, "class": lit.class, "genus": g });
            Ok(Outcome::ok(0, emit(fmt, &doc, format!("{g}\n"))))
        }
        (None, Some(t)) => {
            let pb = rh_pullback_genus(t).map_err(|e| format!("transverse: {e}"))?;
            let (value, text) = match pb {
                PullbackGenus::Genus(g) => (Value::from(g), format!("{g}\n")),
                PullbackGenus::Split => (Value::from("SPLIT"), "SPLIT\n".to_owned()),
            };
            Ok(Outcome::ok(0, emit(fmt, &json!({ "transverse_points": t, "genus": value }), text)))
        }
        _ => Err("genus: give a class literal or --transverse".into()),
    }
}
