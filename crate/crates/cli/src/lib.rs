//! The `hgx` command line.
//!
//! Exit codes: 0 success or found, 1 absent / bound satisfied / failed
//! check, 2 usage error, 3 budget exhausted, 4 integrity failure.

mod builtins;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgx_core::bounds::{
    crosscut_lower, erdos_gallai, faudree_schelp, frankl_half_bound, greedy_bound, kalai_bound, kk_shadow_report,
    psi_lower, steiner_lower, tight_path_bounds, BoundReport,
};
use hgx_core::constructions::{c4_blowup, no_stability_random, trees_with_parts};
use hgx_core::covers::{min_crosscut, min_vertex_cover};
use hgx_core::embedding::{contains_blowup_with, contains_with, ContainOptions, Containment, Embedding};
use hgx_core::io::serialize_hypergraph;
use hgx_core::search::{max_free, verify_free, SearchOptions, SeedConstruction};
use hgx_core::templates::{
    incidence, random_matched_template, sample_template, sampler_diagnostics, verify_template_bound, SamplerParams,
};
use hgx_core::{Error, Hypergraph, VertexSet};
use serde_json::{json, Value};

pub use builtins::{resolve, Named};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTEGRITY: i32 = 4;

/// Version of the JSON output layout.
pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "hgx", version, about = "Extremal hypergraph workbench")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice (nostability partitions, templates).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a construction in the hypergraph text format.
    Construct(ConstructArgs),
    /// Report n, r, m, cover and crosscut numbers, and shadow sizes.
    Invariants {
        /// File or builtin name.
        input: String,
    },
    /// Decide whether a host contains a pattern.
    Contains(ContainsArgs),
    /// Compute ex_r(n, F) by exact search.
    Ex(ExArgs),
    /// Evaluate closed-form bounds.
    Bounds(BoundsArgs),
    /// Template sampling and the template inequality.
    #[command(subcommand)]
    Template(TemplateCommand),
    /// Freeness checks and the acceptance suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// psi, psi1, complete, fano, nostability, c4, or any builtin name.
    kind: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Use a random partition for `nostability`, drawn from `--seed`.
    #[arg(long)]
    random: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    /// Block search for blowup patterns, generic search otherwise.
    Auto,
    Generic,
    Blowup,
}

#[derive(Args, Debug)]
struct ContainsArgs {
    #[arg(long)]
    host: String,
    #[arg(long)]
    pattern: String,
    /// Node budget; exhausting it exits with code 3.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Engine::Auto)]
    engine: Engine,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeedArg {
    Auto,
    Psi,
    Psi1,
    None,
}

#[derive(Args, Debug)]
struct ExArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Forbidden pattern (file or builtin name); repeatable.
    #[arg(long = "forbid")]
    forbid: Vec<String>,
    #[arg(long)]
    all_extremal: bool,
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads (falls back to HGX_THREADS, then 1).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long = "seed-construction", value_enum, default_value_t = SeedArg::Auto)]
    seed_construction: SeedArg,
    /// Only search families containing {1..r}.
    #[arg(long)]
    symmetry: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Number of edges of the path or tree.
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    tau: Option<usize>,
    #[arg(long)]
    sigma: Option<usize>,
    #[arg(long)]
    lambda: Option<usize>,
    /// ex(floor(2n/r), T) for the half-half transfer.
    #[arg(long)]
    ex_graph: Option<u128>,
    /// Family size for the Kruskal-Katona bound (with k = r).
    #[arg(long)]
    kk_m: Option<u128>,
}

#[derive(Subcommand, Debug)]
enum TemplateCommand {
    /// Draw a random template from a host and report the incidence sizes.
    Sample(SampleArgs),
    /// Check the template inequality on a random matched template.
    Verify(TemplateVerifyArgs),
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    host: String,
    #[arg(long)]
    a: usize,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 2)]
    m: u64,
    #[arg(long, default_value_t = 0.5)]
    delta: f64,
    /// Tree part size used by the diagnostics.
    #[arg(long, default_value_t = 2)]
    s: usize,
}

#[derive(Args, Debug)]
struct TemplateVerifyArgs {
    #[arg(long)]
    host: String,
    #[arg(long)]
    a: usize,
    /// Number of sets in A.
    #[arg(long)]
    k_a: usize,
    /// Number of sets in B.
    #[arg(long)]
    k_b: usize,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(long, default_value_t = 2)]
    t: usize,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Run every acceptance criterion.
    Acceptance,
    /// Check that a construction contains none of the patterns.
    Free {
        #[arg(long)]
        host: String,
        #[arg(long = "forbid")]
        forbid: Vec<String>,
    },
}

/// Outcome of a command: text, JSON, and exit code.
struct Reply {
    text: String,
    json: Value,
    code: i32,
}

enum Failure {
    Usage(String),
    Integrity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(m) => Failure::Integrity(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(m: String) -> Self {
        Failure::Usage(m)
    }
}

type Outcome = Result<Reply, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let json = cli.json;
    let name = command_name(&cli.command);
    let result = dispatch(cli.command, cli.seed);
    match result {
        Ok(reply) => {
            if json {
                let mut v = reply.json;
                if let Value::Object(map) = &mut v {
                    map.insert("schema".into(), json!(SCHEMA));
                    map.insert("command".into(), json!(name));
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("valid JSON"));
            } else {
                let _ = write!(out, "{}", reply.text);
            }
            reply.code
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Integrity(m)) => {
            let _ = writeln!(err, "integrity failure: {m}");
            EXIT_INTEGRITY
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Construct(_) => "construct",
        Command::Invariants { .. } => "invariants",
        Command::Contains(_) => "contains",
        Command::Ex(_) => "ex",
        Command::Bounds(_) => "bounds",
        Command::Template(TemplateCommand::Sample(_)) => "template sample",
        Command::Template(TemplateCommand::Verify(_)) => "template verify",
        Command::Verify(VerifyCommand::Acceptance) => "verify acceptance",
        Command::Verify(VerifyCommand::Free { .. }) => "verify free",
    }
}

fn dispatch(c: Command, seed: u64) -> Outcome {
    match c {
        Command::Construct(a) => construct(a, seed),
        Command::Invariants { input } => invariants(&input),
        Command::Contains(a) => contains_cmd(a),
        Command::Ex(a) => ex(a),
        Command::Bounds(a) => bounds(a),
        Command::Template(TemplateCommand::Sample(a)) => template_sample(a, seed),
        Command::Template(TemplateCommand::Verify(a)) => template_verify(a, seed),
        Command::Verify(VerifyCommand::Acceptance) => acceptance(),
        Command::Verify(VerifyCommand::Free { host, forbid }) => free(&host, &forbid),
    }
}

fn edges_json(h: &Hypergraph) -> Value {
    json!(h.edges().iter().map(|e| e.to_vec()).collect::<Vec<_>>())
}

fn hypergraph_json(h: &Hypergraph) -> Value {
    json!({ "n": h.n(), "r": h.r(), "m": h.len(), "edges": edges_json(h) })
}

fn need(v: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{kind} needs --{flag}")))
}

fn construct(a: ConstructArgs, seed: u64) -> Outcome {
    let kind = a.kind.as_str();
    let h = match kind {
        "psi" | "psi1" => {
            let (n, r, c) = (need(a.n, "n", kind)?, need(a.r, "r", kind)?, need(a.c, "c", kind)?);
            builtins::hypergraph(&format!("{kind}:{n}:{r}:{c}"))?
        }
        "complete" => builtins::hypergraph(&format!("complete:{}:{}", need(a.n, "n", kind)?, need(a.r, "r", kind)?))?,
        "nostability" => {
            let (n, r) = (need(a.n, "n", kind)?, need(a.r, "r", kind)?);
            if a.random {
                no_stability_random(n, r, seed)?
            } else {
                builtins::hypergraph(&format!("nostability:{n}:{r}"))?
            }
        }
        "c4" => c4_blowup(need(a.a, "a", kind)?, need(a.b, "b", kind)?)?,
        other => builtins::hypergraph(other)?,
    };
    Ok(Reply {
        text: serialize_hypergraph(&h),
        json: hypergraph_json(&h),
        code: EXIT_OK,
    })
}

fn invariants(input: &str) -> Outcome {
    let h = builtins::hypergraph(input)?;
    let tau = min_vertex_cover(&h);
    let sigma = min_crosscut(&h);
    let shadows: Vec<(usize, usize)> = (1..h.r())
        .map(|p| h.shadow(p).map(|s| (p, s.len())))
        .collect::<Result<_, _>>()?;
    let mut text = format!("n: {}\nr: {}\nm: {}\ntau: {}\n", h.n(), h.r(), h.len(), tau.size);
    match &sigma {
        Some(s) => text += &format!("sigma: {}\n", s.size),
        None => text += "sigma: none\n",
    }
    for (p, size) in &shadows {
        text += &format!("shadow_{p}: {size}\n");
    }
    let json = json!({
        "n": h.n(),
        "r": h.r(),
        "m": h.len(),
        "tau": tau.size,
        "tau_witness": tau.witness.to_vec(),
        "sigma": sigma.as_ref().map(|s| s.size),
        "sigma_witness": sigma.as_ref().map(|s| s.witness.to_vec()),
        "shadows": shadows.iter().map(|(p, s)| json!({ "p": p, "size": s })).collect::<Vec<_>>(),
    });
    Ok(Reply {
        text,
        json,
        code: EXIT_OK,
    })
}

fn embedding_json(e: &Embedding) -> Value {
    json!({ "vertex_map": e.vertex_map })
}

fn contains_cmd(a: ContainsArgs) -> Outcome {
    let host = builtins::hypergraph(&a.host)?;
    let pattern = builtins::resolve(&a.pattern)?;
    let opts = ContainOptions { budget: a.budget };
    let use_blowup = match a.engine {
        Engine::Generic => false,
        Engine::Auto => pattern.skeleton.is_some(),
        Engine::Blowup => {
            if pattern.skeleton.is_none() {
                return Err(Failure::Usage(
                    "the blowup engine needs a path, c4 or tree pattern".into(),
                ));
            }
            true
        }
    };
    let result = match (&pattern.skeleton, use_blowup) {
        (Some((sk, x, y)), true) => contains_blowup_with(&host, sk, *x, *y, opts)?,
        _ => contains_with(&host, &pattern.hypergraph, opts)?,
    };
    let engine = if use_blowup { "blowup" } else { "generic" };
    let (status, code) = match &result {
        Containment::Found(_) => ("found", EXIT_OK),
        Containment::Absent => ("absent", EXIT_NEGATIVE),
        Containment::Unknown => ("unknown", EXIT_BUDGET),
    };
    let mut text = format!("result: {status}\nengine: {engine}\n");
    if let Some(e) = result.embedding() {
        let map: Vec<String> = e.vertex_map.iter().map(|v| v.to_string()).collect();
        text += &format!("vertex_map: {}\n", map.join(" "));
    }
    Ok(Reply {
        text,
        json: json!({
            "result": status,
            "engine": engine,
            "embedding": result.embedding().map(embedding_json),
        }),
        code,
    })
}

fn threads(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(t) = flag {
        return Ok(t.max(1));
    }
    match std::env::var("HGX_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|t| t.max(1))
            .map_err(|_| Failure::Usage(format!("HGX_THREADS={v:?} is not a number"))),
        Err(_) => Ok(1),
    }
}

fn ex(a: ExArgs) -> Outcome {
    let forbidden: Vec<Hypergraph> = a
        .forbid
        .iter()
        .map(|s| builtins::hypergraph(s))
        .collect::<Result<_, _>>()?;
    let opts = SearchOptions {
        budget: a.budget,
        threads: threads(a.threads)?,
        all_extremal: a.all_extremal,
        seed: match a.seed_construction {
            SeedArg::Auto => SeedConstruction::Auto,
            SeedArg::Psi => SeedConstruction::Psi,
            SeedArg::Psi1 => SeedConstruction::Psi1,
            SeedArg::None => SeedConstruction::None,
        },
        symmetry_pruning: a.symmetry,
        ..SearchOptions::default()
    };
    let res = max_free(a.n, a.r, &forbidden, &opts)?;
    let mut text = format!(
        "max_edges: {}\nexhausted: {}\nnodes: {}\nseeded_by: {}\nwitnesses: {}\n",
        res.max_edges,
        res.exhausted,
        res.nodes,
        res.seeded_by.as_deref().unwrap_or("none"),
        res.witnesses.len()
    );
    for (i, w) in res.witnesses.iter().enumerate() {
        let edges: Vec<String> = w.edges().iter().map(|e| e.to_string()).collect();
        text += &format!("witness {}: {}\n", i + 1, edges.join(" "));
    }
    Ok(Reply {
        text,
        json: json!({
            "n": a.n,
            "r": a.r,
            "max_edges": res.max_edges,
            "exhausted": res.exhausted,
            "nodes": res.nodes,
            "seeded_by": res.seeded_by,
            "witnesses": res.witnesses.iter().map(edges_json).collect::<Vec<_>>(),
        }),
        code: if res.exhausted { EXIT_OK } else { EXIT_BUDGET },
    })
}

fn bound_json(b: &BoundReport) -> Value {
    json!({
        "name": b.name,
        "value": b.value.to_string(),
        "approx": b.value.to_f64(),
        "kind": b.kind.to_string(),
        "validity_note": b.validity_note,
    })
}

fn bounds(a: BoundsArgs) -> Outcome {
    let (n, r) = (a.n, a.r);
    let mut rows: Vec<BoundReport> = Vec::new();
    if let Some(ell) = a.ell {
        if r == 2 {
            rows.push(erdos_gallai(n, ell)?);
            rows.push(faudree_schelp(n, ell)?);
        }
        rows.push(kalai_bound(n, r, ell)?);
        rows.push(greedy_bound(n, r, ell)?);
        let (lo, hi) = tight_path_bounds(n, r, ell)?;
        rows.push(lo);
        rows.push(hi);
    }
    if let Some(tau) = a.tau {
        rows.push(psi_lower(n, r, tau)?);
    }
    if let Some(sigma) = a.sigma {
        rows.push(crosscut_lower(n, r, sigma)?);
    }
    if let Some(lambda) = a.lambda {
        rows.push(steiner_lower(n, r, lambda)?);
    }
    if let Some(ex) = a.ex_graph {
        rows.push(frankl_half_bound(n, r, ex)?);
    }
    if let Some(m) = a.kk_m {
        rows.push(kk_shadow_report(m, r));
    }
    if rows.is_empty() {
        return Err(Failure::Usage(
            "give at least one of --ell, --tau, --sigma, --lambda, --ex-graph, --kk-m".into(),
        ));
    }
    let name_w = rows.iter().map(|b| b.name.len()).max().unwrap_or(4).max(4);
    let vals: Vec<String> = rows.iter().map(|b| b.value.to_string()).collect();
    let val_w = vals.iter().map(String::len).max().unwrap_or(5).max(5);
    let kinds: Vec<String> = rows.iter().map(|b| b.kind.to_string()).collect();
    let kind_w = kinds.iter().map(String::len).max().unwrap_or(4).max(4);
    let mut text = format!("{:<name_w$}  {:>val_w$}  {:<kind_w$}  note\n", "name", "value", "kind");
    for ((b, v), k) in rows.iter().zip(&vals).zip(&kinds) {
        text += &format!(
            "{:<name_w$}  {:>val_w$}  {:<kind_w$}  {}\n",
            b.name, v, k, b.validity_note
        );
    }
    Ok(Reply {
        text,
        json: json!({ "n": n, "r": r, "bounds": rows.iter().map(bound_json).collect::<Vec<_>>() }),
        code: EXIT_OK,
    })
}

fn sets(v: &[VertexSet]) -> Value {
    json!(v.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
}

fn template_sample(a: SampleArgs, seed: u64) -> Outcome {
    let host = builtins::hypergraph(&a.host)?;
    let params = SamplerParams {
        alpha: a.alpha,
        m: a.m,
        seed,
        delta: a.delta,
    };
    let heavy = hgx_core::templates::heavy_sets(&host, a.a, a.m)?;
    let sampled = sample_template(&host, a.a, &params, heavy.l)?;
    let inc = incidence(&host, &sampled.template)?;
    let diag = sampler_diagnostics(host.n(), host.r(), a.a, a.s, &params)?;
    let a_size = sampled.template.a_len();
    let text = format!(
        "L: {}\nR: {}\n|A|: {}\n|B|: {}\n|B0|: {}\n|B1|: {}\n|H0|: {}\n|H1|: {}\nbeta0: {:.6}\nbeta1: {:.6}\np0: {:.6e}\np1: {:.6e}\nf(m): {:.6}\nm > r^r: {}\nm <= sqrt(n): {}\n",
        heavy.l,
        sampled.r_set,
        a_size,
        sampled.template.b_sets().len(),
        sampled.b0.len(),
        sampled.b1.len(),
        inc.h0.len(),
        inc.h1.len(),
        diag.beta0,
        diag.beta1,
        diag.p0,
        diag.p1,
        diag.f_m,
        diag.m_above_r_pow_r,
        diag.m_below_sqrt_n,
    );
    Ok(Reply {
        text,
        json: json!({
            "L": heavy.l.to_vec(),
            "R": sampled.r_set.to_vec(),
            "a_size": a_size.to_string(),
            "b_size": sampled.template.b_sets().len(),
            "b0": sets(&sampled.b0),
            "b1": sets(&sampled.b1),
            "h0_size": inc.h0.len(),
            "h1_size": inc.h1.len(),
            "diagnostics": {
                "beta0": diag.beta0,
                "beta1": diag.beta1,
                "p0": diag.p0,
                "p1": diag.p1,
                "f_m": diag.f_m,
                "m_above_r_pow_r": diag.m_above_r_pow_r,
                "m_below_sqrt_n": diag.m_below_sqrt_n,
            },
        }),
        code: EXIT_OK,
    })
}

fn template_verify(a: TemplateVerifyArgs, seed: u64) -> Outcome {
    let host = builtins::hypergraph(&a.host)?;
    if a.a == 0 || a.a >= host.r() {
        return Err(Failure::Usage(format!("--a must lie in 1..{}", host.r())));
    }
    let b = host.r() - a.a;
    let template = random_matched_template(host.n(), a.a, b, a.k_a, a.k_b, seed)?;
    let trees = trees_with_parts(a.s, a.t)?;
    let report = verify_template_bound(&host, &template, a.s, a.t, &trees)?;
    let mut text = format!(
        "|A|: {}\n|B|: {}\n|H0|: {}\n|H1|: {}\nbound: {}\nexceeded: {}\n",
        report.a_size, report.b_size, report.h0_size, report.h1_size, report.bound, report.exceeded
    );
    if !report.exceeded {
        text += "result: bound satisfied\n";
    }
    for (i, o) in report.outcomes.iter().enumerate() {
        text += &format!(
            "tree {} {:?}: {}\n",
            i + 1,
            o.tree.edges(),
            if o.embedding.is_some() {
                "embedded"
            } else {
                "NOT embedded"
            }
        );
    }
    if !report.consistent() {
        return Err(Failure::Integrity(format!(
            "template inequality counterexample\n{text}"
        )));
    }
    Ok(Reply {
        text,
        json: json!({
            "a_size": report.a_size,
            "b_size": report.b_size,
            "h0_size": report.h0_size,
            "h1_size": report.h1_size,
            "bound": report.bound,
            "exceeded": report.exceeded,
            "outcomes": report.outcomes.iter().map(|o| json!({
                "tree": o.tree.edges(),
                "embedded": o.embedding.is_some(),
                "embedding": o.embedding.as_ref().map(embedding_json),
            })).collect::<Vec<_>>(),
        }),
        code: if report.exceeded { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn free(host: &str, forbid: &[String]) -> Outcome {
    let h = builtins::hypergraph(host)?;
    let patterns: Vec<Hypergraph> = forbid
        .iter()
        .map(|s| builtins::hypergraph(s))
        .collect::<Result<_, _>>()?;
    let report = verify_free(&h, &patterns)?;
    let mut text = String::new();
    for (o, name) in report.outcomes.iter().zip(forbid) {
        text += &format!("{name}: {}\n", if o.embedding.is_some() { "found" } else { "absent" });
    }
    text += &format!("free: {}\n", report.is_free());
    Ok(Reply {
        text,
        json: json!({
            "free": report.is_free(),
            "patterns": report.outcomes.iter().zip(forbid).map(|(o, name)| json!({
                "pattern": name,
                "found": o.embedding.is_some(),
                "embedding": o.embedding.as_ref().map(embedding_json),
            })).collect::<Vec<_>>(),
        }),
        code: if report.is_free() { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn acceptance() -> Outcome {
    let reports = hgx_verify::acceptance::run_all();
    let mut text = String::new();
    for r in &reports {
        text += &format!("{r}\n");
    }
    let passed = reports.iter().all(|r| r.passed);
    Ok(Reply {
        text,
        json: json!({
            "passed": passed,
            "criteria": reports.iter().map(|r| json!({
                "id": r.id,
                "title": r.title,
                "passed": r.passed,
                "detail": r.detail,
                "seconds": r.elapsed.as_secs_f64(),
                "limit_seconds": r.limit.as_secs(),
            })).collect::<Vec<_>>(),
        }),
        code: if passed { EXIT_OK } else { EXIT_NEGATIVE },
    })
}
