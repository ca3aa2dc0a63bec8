//! The `kostant` command line.
//!
//! Exit codes: 0 success or identity verified, 1 identity violated, 2 input
//! error, 3 hypothesis not met (instance skipped).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::bijection::{count_via_partial, fibration, FiberCertificate};
use crate::catalan::{catalan_point, catalan_product, complete_type_a};
use crate::flow::{self, count_with, enumerate_flows, enumerate_flows_complete};
use crate::graph::{GraphKind, NetflowVector, SignedMultigraph, Theorem};
use crate::identities::{generate_bv_family, verify_identity, IdentityReport};
use crate::io::{parse_graph, parse_netflow, GraphJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SKIPPED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kostant", about = "Exact Kostant partition functions as integer flows")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print K_G(a) as a decimal string.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = BackendArg::Dp)]
        backend: BackendArg,
    },
    /// List flows in lexicographic order.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        limit: Option<usize>,
        /// Fail if more than --limit flows exist.
        #[arg(long, requires = "limit")]
        complete: bool,
    },
    /// Check a divisibility identity on one instance, or on a batch.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = BackendArg::Dp)]
        backend: BackendArg,
        #[command(flatten)]
        campaign: Campaign,
    },
    /// Dump the fibration of flows over partial flows.
    Witness {
        #[command(flatten)]
        input: Input,
    },
    /// Emit a random graph satisfying a theorem's hypotheses.
    Generate {
        #[arg(long)]
        n_plus_1: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 2)]
        max_mult: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare K on the complete graph at (1, ..., n, -n(n+1)/2) with C_1 ... C_n.
    Catalan {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Graph JSON file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Graph JSON given inline.
    #[arg(long)]
    graph_json: Option<String>,
    /// Netflow inline, as `[..]` or `{"a": [..]}`.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Netflow JSON file.
    #[arg(long)]
    netflow: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Campaign {
    /// Iterate generated graphs over seeds and sampled netflows.
    #[arg(long)]
    campaign: bool,
    #[arg(long, default_value_t = 5)]
    n_plus_1: usize,
    #[arg(long, default_value_t = 2)]
    max_mult: u32,
    /// Number of seeds, starting at --first-seed.
    #[arg(long, default_value_t = 20)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    first_seed: u64,
    #[arg(long, default_value_t = 4)]
    max_entry: i64,
    #[arg(long, default_value_t = 10)]
    netflows_per_seed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Dp,
    Brute,
    Partial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    A,
    C31,
    C32,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::A => Theorem::A21,
            TheoremArg::C31 => Theorem::C31,
            TheoremArg::C32 => Theorem::C32,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "C", alias = "c")]
    C,
}

/// An error carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn skipped(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_SKIPPED,
            message: message.into(),
        }
    }
}

type CliResult = Result<(String, i32), Failure>;

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_graph(path: Option<&Path>, inline: Option<&str>) -> Result<SignedMultigraph, Failure> {
    let (text, origin) = match (path, inline) {
        (Some(_), Some(_)) => return Err(Failure::input("give either --graph or --graph-json, not both")),
        (None, None) => return Err(Failure::input("a graph is required (--graph or --graph-json)")),
        (Some(p), None) => (read_file(p)?, p.display().to_string()),
        (None, Some(s)) => (s.to_owned(), "--graph-json".to_owned()),
    };
    let parsed = parse_graph(&text).map_err(|e| Failure::input(format!("{origin}: {e}")))?;
    parsed.to_graph().map_err(|e| Failure::input(format!("{origin}: {e}")))
}

fn load_netflow(inline: Option<&str>, path: Option<&Path>) -> Result<NetflowVector, Failure> {
    let (text, origin) = match (inline, path) {
        (Some(_), Some(_)) => return Err(Failure::input("give either --a or --netflow, not both")),
        (None, None) => return Err(Failure::input("a netflow is required (--a or --netflow)")),
        (Some(s), None) => (s.to_owned(), "--a".to_owned()),
        (None, Some(p)) => (read_file(p)?, p.display().to_string()),
    };
    parse_netflow(&text).map_err(|e| Failure::input(format!("{origin}: {e}")))
}

impl Input {
    fn load(&self) -> Result<(SignedMultigraph, NetflowVector), Failure> {
        let g = load_graph(self.graph.as_deref(), self.graph_json.as_deref())?;
        let a = load_netflow(self.a.as_deref(), self.netflow.as_deref())?;
        a.check_len(g.n_plus_1()).map_err(|e| Failure::input(e.to_string()))?;
        Ok((g, a))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

fn report_code(report: &IdentityReport) -> i32 {
    match report.verdict {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_VIOLATED,
        None => EXIT_SKIPPED,
    }
}

fn run_count(input: &Input, backend: BackendArg) -> CliResult {
    let (g, a) = input.load()?;
    let k = match backend {
        BackendArg::Dp => count_with(flow::Backend::Dp, &g, &a),
        BackendArg::Brute => count_with(flow::Backend::Brute, &g, &a),
        BackendArg::Partial => {
            count_via_partial(&g, &a)
                .map_err(|e| Failure::skipped(e.to_string()))?
                .total
        }
    };
    Ok((k.to_string(), EXIT_OK))
}

fn run_enumerate(input: &Input, limit: Option<usize>, complete: bool) -> CliResult {
    let (g, a) = input.load()?;
    let flows = match (limit, complete) {
        (Some(limit), true) => enumerate_flows_complete(&g, &a, limit).map_err(|e| Failure::input(e.to_string()))?,
        _ => enumerate_flows(&g, &a, limit),
    };
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| json!({"i": e.i, "j": e.j, "sign": e.sign}))
        .collect();
    let flows: Vec<&[u64]> = flows.iter().map(|f| f.as_slice()).collect();
    Ok((to_json(&json!({"edges": edges, "flows": flows})), EXIT_OK))
}

/// Netflows with `0 <= a_i <= max_entry` for `i <= n`; the last coordinate
/// is `-sum` in type A and `2y - sum` for a sampled `0 <= y <= max_entry` in
/// type C.
fn sample_netflows(seed: u64, n_plus_1: usize, kind: GraphKind, max_entry: i64, samples: usize) -> Vec<NetflowVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    (0..samples)
        .map(|_| {
            let mut a: Vec<i64> = (1..n_plus_1).map(|_| rng.gen_range(0..=max_entry)).collect();
            let sum: i64 = a.iter().sum();
            let y = match kind {
                GraphKind::TypeA => 0,
                GraphKind::TypeC => rng.gen_range(0..=max_entry),
            };
            a.push(2 * y - sum);
            NetflowVector::new(a)
        })
        .collect()
}

fn run_campaign(theorem: Theorem, backend: flow::Backend, c: &Campaign) -> CliResult {
    let kind = theorem.kind();
    let seeds: Vec<u64> = (c.first_seed..c.first_seed + c.seeds).collect();
    let rows: Vec<Result<Vec<String>, Failure>> = seeds
        .par_iter()
        .map(|&seed| {
            let g = generate_bv_family(c.n_plus_1, kind, theorem, c.max_mult, seed)
                .map_err(|e| Failure::input(e.to_string()))?;
            Ok(
                sample_netflows(seed, c.n_plus_1, kind, c.max_entry, c.netflows_per_seed)
                    .iter()
                    .map(|a| {
                        let report = verify_identity(&g, a, theorem, backend);
                        format!(
                            r#"{{"seed":{seed},"a":{},"report":{}}}"#,
                            to_json(&a.as_slice()),
                            to_json(&report)
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    let mut lines = Vec::new();
    for row in rows {
        lines.extend(row?);
    }
    let violated = lines.iter().any(|l| l.contains(r#""verdict":false"#));
    Ok((lines.join("\n"), if violated { EXIT_VIOLATED } else { EXIT_OK }))
}

fn run_verify(theorem: Theorem, input: &Input, backend: BackendArg, campaign: &Campaign) -> CliResult {
    let backend = match backend {
        BackendArg::Dp => flow::Backend::Dp,
        BackendArg::Brute => flow::Backend::Brute,
        BackendArg::Partial => return Err(Failure::input("verify supports --backend dp or brute")),
    };
    if campaign.campaign {
        if input.graph.is_some() || input.graph_json.is_some() || input.a.is_some() || input.netflow.is_some() {
            return Err(Failure::input("--campaign generates its own graphs and netflows"));
        }
        return run_campaign(theorem, backend, campaign);
    }
    let (g, a) = input.load()?;
    let report = verify_identity(&g, &a, theorem, backend);
    Ok((to_json(&report), report_code(&report)))
}

fn run_witness(input: &Input) -> CliResult {
    let (g, a) = input.load()?;
    let fibers = fibration(&g, &a).map_err(|e| Failure::skipped(e.to_string()))?;
    let certs: Vec<FiberCertificate> = fibers.iter().map(FiberCertificate::from).collect();
    Ok((to_json(&certs), EXIT_OK))
}

fn run_generate(n_plus_1: usize, kind: KindArg, theorem: TheoremArg, max_mult: u32, seed: u64) -> CliResult {
    let kind = match kind {
        KindArg::A => GraphKind::TypeA,
        KindArg::C => GraphKind::TypeC,
    };
    let g = generate_bv_family(n_plus_1, kind, theorem.into(), max_mult, seed)
        .map_err(|e| Failure::input(e.to_string()))?;
    Ok((to_json(&GraphJson::from(&g)), EXIT_OK))
}

fn run_catalan(n: usize) -> CliResult {
    if n == 0 {
        return Err(Failure::input("--n must be at least 1"));
    }
    let k = flow::count(&complete_type_a(n + 1), &catalan_point(n));
    let product = catalan_product(n as u64);
    let equal = k == product;
    let out = json!({
        "n": n,
        "a": catalan_point(n).as_slice(),
        "kostant": k.to_string(),
        "catalan_product": product.to_string(),
        "equal": equal,
    });
    Ok((to_json(&out), if equal { EXIT_OK } else { EXIT_VIOLATED }))
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Count { input, backend } => run_count(input, *backend),
        Command::Enumerate { input, limit, complete } => run_enumerate(input, *limit, *complete),
        Command::Verify {
            theorem,
            input,
            backend,
            campaign,
        } => run_verify((*theorem).into(), input, *backend, campaign),
        Command::Witness { input } => run_witness(input),
        Command::Generate {
            n_plus_1,
            kind,
            theorem,
            max_mult,
            seed,
        } => run_generate(*n_plus_1, *kind, *theorem, *max_mult, *seed),
        Command::Catalan { n } => run_catalan(*n),
    }
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => {
            let text = if text.is_empty() { text } else { text + "\n" };
            let written = match &cli.output {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    EXIT_INPUT
                }
            }
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}
