//! The `vtsa` command-line front end.
//!
//! Exit codes: 0 success (for `reduce`, a bounded or reduced outcome),
//! 1 a failed assertion, 2 an unclassified reduction, 3 any other error
//! (usage, I/O, parse, invalid input, resource limits).

pub mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::expr::{ln_lower_f64, parse as parse_bound};
use crate::bounds::funcs::{f3, f_hat, g_star};
use crate::bounds::{cmp_bound, BoundExpr, BoundFn, CmpResult, EvalConfig};
use crate::catalog::{self, DEFAULT_MAX_POINTS};
use crate::error::{Error, Result};
use crate::group::profile::{primitivity_profile, qp_profile, transitivity_profile};
use crate::group::{self};
use crate::io;
use crate::local::{local_action, LocalProperty};
use crate::pair::VTPair;
use crate::quotient::{normal_quotient, proposition_local_check};
use crate::report::{all_pass, Check};
use crate::structure::{self, Outcome, PairSummary, ReductionResult};

pub use verify::{example_spec, graph_name, verify_example, ExampleSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_UNCLASSIFIED: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

/// Default cap on the order of any input group.
pub const DEFAULT_MAX_ORDER: u64 = 1_000_000_000;

#[derive(Debug, Parser)]
#[command(name = "vtsa", version, about = "Stabiliser analysis for vertex-transitive graphs")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest vertex count a construction may build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_POINTS)]
    pub max_points: usize,
    /// Largest accepted group order.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u64,
    /// Seed for randomised group algorithms; results do not depend on it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a pair and report its transitivity, primitivity, normal-subgroup and local profiles.
    Analyze { pair: PathBuf },
    /// Quotient a pair by a normal subgroup.
    Quotient {
        pair: PathBuf,
        /// Group file with generators of the normal subgroup.
        #[arg(long)]
        normal: PathBuf,
        /// Also check the local-property transfer to the quotient (2-transitive, primitive or quasiprimitive).
        #[arg(long)]
        property: Option<LocalProperty>,
    },
    /// Local action of a vertex stabiliser on the neighbourhood.
    Local {
        pair: PathBuf,
        #[arg(long, default_value_t = 0)]
        vertex: u32,
    },
    /// Bound or reduce a quasiprimitive or biquasiprimitive pair.
    Reduce { pair: PathBuf },
    /// Evaluate and compare bound expressions.
    Bounds {
        #[command(subcommand)]
        command: BoundsCommand,
    },
    /// Build a catalog example.
    Example {
        name: String,
        #[command(flatten)]
        params: ExampleParams,
        /// Replay the example's expected assertions.
        #[arg(long)]
        verify: bool,
        /// Describe the construction without building it.
        #[arg(long)]
        dry_run: bool,
        /// Write the pair and its named subgroups to this directory.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Replay an example's expected assertions.
    Verify {
        name: String,
        #[command(flatten)]
        params: ExampleParams,
    },
}

#[derive(Debug, Args, Default, Clone)]
pub struct ExampleParams {
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
}

impl ExampleParams {
    pub fn to_map(&self) -> BTreeMap<String, u64> {
        [("n", self.n), ("k", self.k), ("m", self.m)]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
            .collect()
    }
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Evaluate a bound. Values are `key=value` with integer values.
    Eval {
        /// `d=.. f1=.. f2=..`
        #[arg(long, num_args = 3, value_name = "KEY=VALUE")]
        f3: Option<Vec<String>>,
        /// `d=.. g=..`
        #[arg(long = "f-hat", num_args = 2, value_name = "KEY=VALUE")]
        f_hat: Option<Vec<String>>,
        /// `d=.. g1=.. g2=..`
        #[arg(long = "g-star", num_args = 3, value_name = "KEY=VALUE")]
        g_star: Option<Vec<String>>,
        /// An s-expression such as `(fact (mul 2 3))`.
        #[arg(long)]
        expr: Option<String>,
    },
    /// Decide `value <= bound` for the expression in a file.
    Cmp { file: PathBuf, value: BigUint },
}

/// A command's result: JSON form, text form and exit code.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report { json, text, code: EXIT_OK }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialise")
}

fn checks_text(out: &mut String, checks: &[Check]) {
    for c in checks {
        let _ = writeln!(out, "  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
    }
}

fn load_pair(path: &Path, cli: &Cli) -> Result<VTPair> {
    let pair = io::read_pair(path)?;
    guard_order(&pair.group, cli.max_order)?;
    Ok(pair)
}

fn guard_order(g: &crate::group::PermGroup, max_order: u64) -> Result<()> {
    if g.order() > BigUint::from(max_order) {
        return Err(Error::resource("group order", max_order));
    }
    Ok(())
}

fn summary_text(s: &PairSummary) -> String {
    format!(
        "{} vertices, {} edges, valency {}, |G| = {}, |G_0| = {}",
        s.vertices, s.edges, s.valency, s.group_order, s.stabiliser_order
    )
}

fn analyze(path: &Path, cli: &Cli) -> Result<Report> {
    let pair = load_pair(path, cli)?;
    let summary = PairSummary::of(&pair);
    let transitivity = transitivity_profile(&pair.group);
    let primitivity = primitivity_profile(&pair.group)?;
    let profile = qp_profile(&pair.group)?;
    let local = local_action(&pair, 0)?;
    let reduction = structure::reduce(&pair, None)?;
    let json = json!({
        "summary": summary,
        "d": pair.d,
        "transitivity": transitivity,
        "primitive": primitivity.primitive,
        "two_transitive": primitivity.two_transitive,
        "profile": profile,
        "local": local,
        "route": reduction.route,
        "outcome": reduction.outcome.kind(),
    });
    let mut text = format!("pair: {}\n", summary_text(&summary));
    let _ = writeln!(text, "regular: {}", transitivity.regular);
    let _ = writeln!(text, "primitive: {}", primitivity.primitive);
    let _ = writeln!(text, "quasiprimitive: {}", profile.quasiprimitive);
    let _ = writeln!(text, "biquasiprimitive: {}", profile.biquasiprimitive);
    let _ = writeln!(text, "semiprimitive: {}", profile.semiprimitive);
    let _ = writeln!(text, "max normal orbits: {}", profile.max_normal_orbits);
    let _ = writeln!(
        text,
        "local action at 0: order {}, kernel {}, transitive {}, primitive {}, quasiprimitive {}",
        local.induced_order, local.kernel_order, local.flags.transitive, local.flags.primitive, local.flags.quasiprimitive
    );
    let _ = writeln!(text, "route: {} ({})", reduction.route, reduction.outcome.kind());
    Ok(Report::new(json, text))
}

fn quotient(path: &Path, normal: &Path, property: Option<LocalProperty>, cli: &Cli) -> Result<Report> {
    let pair = load_pair(path, cli)?;
    let n = io::read_group(normal)?;
    let q = normal_quotient(&pair, &n)?;
    let image_generators: Vec<String> = q.image_group.generators().iter().map(|g| g.to_string()).collect();
    let mut json = json!({
        "quotient": q,
        "quotient_graph": graph_name(&q.quotient_graph),
        "image_generators": image_generators,
        "image_order": q.image_order().to_string(),
        "kernel_order": q.kernel_order().to_string(),
        "image_stabiliser_order": q.image_stabiliser_order().to_string(),
        "d": q.valency_drop.0,
        "d_prime": q.valency_drop.1,
    });
    let mut text = format!(
        "quotient: {} ({} blocks)\nimage order {}, kernel order {}, block stabiliser order {}\nvalency {} -> {}\n",
        graph_name(&q.quotient_graph),
        q.blocks.len(),
        q.image_order(),
        q.kernel_order(),
        q.image_stabiliser_order(),
        q.valency_drop.0,
        q.valency_drop.1
    );
    let mut code = EXIT_OK;
    if let Some(prop) = property {
        let r = proposition_local_check(&pair, &n, prop, &[])?;
        let _ = writeln!(text, "local property {}: hypotheses hold {}", prop.name(), r.hypotheses_hold());
        checks_text(&mut text, &r.hypotheses);
        checks_text(&mut text, &r.conclusions);
        if let Some(d) = &r.diagnosis {
            let _ = writeln!(text, "  diagnosis: {d}");
        }
        if !r.consistent() {
            code = EXIT_ASSERTION;
        }
        json["property_check"] = to_json(&r);
    }
    Ok(Report::new(json, text).with_code(code))
}

fn local(path: &Path, vertex: u32, cli: &Cli) -> Result<Report> {
    let pair = load_pair(path, cli)?;
    if vertex as usize >= pair.graph.order() {
        return Err(Error::invalid(format!("vertex {vertex} out of range")));
    }
    let r = local_action(&pair, vertex)?;
    let f = &r.flags;
    let mut text = format!(
        "vertex {vertex}: {} neighbours, |G_v| = {}, induced order {}, kernel order {}, faithful {}\n",
        r.neighbourhood_size, r.stabiliser_order, r.induced_order, r.kernel_order, r.faithful
    );
    let _ = writeln!(
        text,
        "transitive {}, 2-transitive {}, primitive {}, quasiprimitive {}, semiprimitive {}",
        f.transitive, f.two_transitive, f.primitive, f.quasiprimitive, f.semiprimitive
    );
    if let Some(reason) = &r.reason {
        let _ = writeln!(text, "reason: {reason}");
    }
    let code = if r.implication_chain_holds() { EXIT_OK } else { EXIT_ASSERTION };
    Ok(Report::new(to_json(&r), text).with_code(code))
}

/// Text rendering of a reduction, naming reduced graphs.
pub fn reduction_text(r: &ReductionResult) -> String {
    let mut text = format!("route: {}\n", r.route);
    match &r.outcome {
        Outcome::Bounded { certificate } => {
            let _ = writeln!(
                text,
                "bounded: |G_0| = {} vs {} ({:?})",
                certificate.stabiliser_order, certificate.bound, certificate.result
            );
        }
        Outcome::ReducedQp { lambda, summary } => {
            let _ = writeln!(
                text,
                "reduced to quasiprimitive pair on {}: {}",
                graph_name(&lambda.graph),
                summary_text(summary)
            );
        }
        Outcome::ReducedBiqp { lambda_r, lambda_s, summary_r, summary_s } => {
            let _ = writeln!(text, "reduced to two pairs:");
            let _ = writeln!(text, "  {}: {}", graph_name(&lambda_r.graph), summary_text(summary_r));
            let _ = writeln!(text, "  {}: {}", graph_name(&lambda_s.graph), summary_text(summary_s));
        }
        Outcome::Unclassified { reason } => {
            let _ = writeln!(text, "unclassified: {reason}");
        }
    }
    checks_text(&mut text, &r.trace);
    text
}

fn reduce(path: &Path, cli: &Cli) -> Result<Report> {
    let pair = load_pair(path, cli)?;
    let r = structure::reduce(&pair, None)?;
    let mut json = to_json(&r);
    let names = |o: &Outcome| -> Vec<String> {
        match o {
            Outcome::ReducedQp { lambda, .. } => vec![graph_name(&lambda.graph)],
            Outcome::ReducedBiqp { lambda_r, lambda_s, .. } => vec![graph_name(&lambda_r.graph), graph_name(&lambda_s.graph)],
            _ => Vec::new(),
        }
    };
    json["reduced_graphs"] = json!(names(&r.outcome));
    let code = if r.is_unclassified() { EXIT_UNCLASSIFIED } else { EXIT_OK };
    Ok(Report::new(json, reduction_text(&r)).with_code(code))
}

fn key_values(items: &[String]) -> Result<BTreeMap<String, u64>> {
    items
        .iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("expected key=value, found {kv:?}")))?;
            let v: u64 = v.parse().map_err(|_| Error::invalid(format!("{k} must be a non-negative integer")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn need(map: &BTreeMap<String, u64>, key: &str) -> Result<u64> {
    map.get(key).copied().ok_or_else(|| Error::invalid(format!("missing {key}=..")))
}

/// Exact decimal value when it has at most this many digits.
const PRINT_DIGITS: usize = 200;

fn evaluation(b: &BoundExpr) -> (Value, String) {
    let exact = b.exact_value();
    let ln_lower = ln_lower_f64(b);
    let shown = exact.as_ref().map(|v| {
        let s = v.to_string();
        if s.len() <= PRINT_DIGITS {
            s
        } else {
            format!("<{} digits>", s.len())
        }
    });
    let json = json!({ "expression": b.to_string(), "value": shown, "ln_lower": ln_lower });
    let mut text = format!("expression: {b}\n");
    match (&shown, ln_lower) {
        (Some(v), _) => {
            let _ = writeln!(text, "value: {v}");
        }
        (None, Some(l)) => {
            let _ = writeln!(text, "value: exceeds exact range, ln >= {l:.6}");
        }
        (None, None) => {
            let _ = writeln!(text, "value: not evaluated");
        }
    }
    (json, text)
}

fn bounds(cmd: &BoundsCommand) -> Result<Report> {
    match cmd {
        BoundsCommand::Eval { f3: a, f_hat: b, g_star: c, expr } => {
            let e = match (a, b, c, expr) {
                (Some(kv), None, None, None) => {
                    let m = key_values(kv)?;
                    f3(&BoundFn::constant(need(&m, "f1")?), &BoundFn::constant(need(&m, "f2")?), need(&m, "d")?)?
                }
                (None, Some(kv), None, None) => {
                    let m = key_values(kv)?;
                    f_hat(&BoundFn::constant(need(&m, "g")?), need(&m, "d")?)?
                }
                (None, None, Some(kv), None) => {
                    let m = key_values(kv)?;
                    g_star(&BoundFn::constant(need(&m, "g1")?), &BoundFn::constant(need(&m, "g2")?), need(&m, "d")?)?
                }
                (None, None, None, Some(s)) => parse_bound(s)?,
                _ => return Err(Error::invalid("give exactly one of --f3, --f-hat, --g-star, --expr")),
            };
            let (json, text) = evaluation(&e);
            Ok(Report::new(json, text))
        }
        BoundsCommand::Cmp { file, value } => {
            let b = io::read_bound(file)?;
            let result = cmp_bound(&b, value, &EvalConfig::default());
            let word = match result {
                CmpResult::LessOrEqual => "less_or_equal",
                CmpResult::Greater => "greater",
                CmpResult::Undecided => "undecided",
            };
            let json = json!({ "expression": b.to_string(), "value": value.to_string(), "result": result });
            Ok(Report::new(json, format!("{value} vs {b}: {word}\n")))
        }
    }
}

fn verify_report(name: &str, params: &ExampleParams, cli: &Cli) -> Result<Report> {
    let map = params.to_map();
    let checks = verify_example(name, &map, cli.max_points)?;
    let pass = all_pass(&checks);
    let mut text = format!("{name}: {}\n", if pass { "all assertions pass" } else { "assertion failures" });
    checks_text(&mut text, &checks);
    let json = json!({ "example": name, "parameters": map, "pass": pass, "checks": checks });
    Ok(Report::new(json, text).with_code(if pass { EXIT_OK } else { EXIT_ASSERTION }))
}

fn example(name: &str, params: &ExampleParams, dry: bool, verify: bool, write: Option<&Path>, cli: &Cli) -> Result<Report> {
    if dry {
        let d = catalog::dry_run(name)
            .ok_or_else(|| Error::invalid(format!("{name} is constructed directly; dry runs describe ex2 and ex3")))?;
        let json = json!({
            "name": d.name, "group": d.group, "point_stabiliser": d.point_stabiliser,
            "generators": d.generators, "points": d.points,
        });
        let mut text = format!("{}: {}\npoint stabiliser: {}\npoints: {}\n", d.name, d.group, d.point_stabiliser, d.points);
        for g in d.generators {
            let _ = writeln!(text, "  {g}");
        }
        return Ok(Report::new(json, text));
    }
    if verify {
        return verify_report(name, params, cli);
    }
    let map = params.to_map();
    let built = catalog::build_example(name, &map, cli.max_points)?;
    guard_order(&built.pair.group, cli.max_order)?;
    let summary = PairSummary::of(&built.pair);
    let aux: BTreeMap<&str, String> = built.aux.iter().map(|(k, g)| (k.as_str(), g.order().to_string())).collect();
    let mut text = format!("{name}: {}\n", summary_text(&summary));
    for (k, o) in &aux {
        let _ = writeln!(text, "subgroup {k}: order {o}");
    }
    let mut json = json!({ "example": name, "parameters": map, "summary": summary, "subgroups": aux });
    if let Some(dir) = write {
        let path = io::write_pair(dir, name, &built.pair)?;
        let mut files = vec![path.display().to_string()];
        for (k, g) in &built.aux {
            files.push(io::write_named_group(dir, &format!("{name}.{k}"), g)?.display().to_string());
        }
        for f in &files {
            let _ = writeln!(text, "wrote {f}");
        }
        json["files"] = json!(files);
    }
    Ok(Report::new(json, text))
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Report> {
    if let Some(seed) = cli.seed {
        group::set_seed(seed);
    }
    match &cli.command {
        Command::Analyze { pair } => analyze(pair, cli),
        Command::Quotient { pair, normal, property } => quotient(pair, normal, *property, cli),
        Command::Local { pair, vertex } => local(pair, *vertex, cli),
        Command::Reduce { pair } => reduce(pair, cli),
        Command::Bounds { command } => bounds(command),
        Command::Example { name, params, verify, dry_run, write } => {
            example(name, params, *dry_run, *verify, write.as_deref(), cli)
        }
        Command::Verify { name, params } => verify_report(name, params, cli),
    }
}

pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Assertion(_) => EXIT_ASSERTION,
        _ => EXIT_ERROR,
    }
}

/// Parses arguments, runs the command, prints the report and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r.json).expect("json"));
            } else {
                print!("{}", r.text);
            }
            r.code
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string(), "code": error_code(&e) }));
            }
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}
