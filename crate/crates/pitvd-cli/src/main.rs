use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pitvd::exact::SolverConfig;
use pitvd::format::{parse, serialize, serialize_decided_no};
use pitvd::generate::{random_multigraph, seeded};
use pitvd::kernel::{kernelize, replay, KernelConfig, KernelOutcome, Replayed, RuleApplication, RuleId};
use pitvd::verify::{verify, VerifyParams};
use pitvd::MultiGraph;
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DECIDED_NO: u8 = 20;

#[derive(Parser)]
#[command(name = "pitvd", version, about = "Kernelize (proper interval, tree)-graph vertex deletion instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an instance to a kernel. Exit 0 with a kernel, 20 when decided negatively.
    Kernelize(KernelizeArgs),
    /// Rebuild the kernel of an instance from a recorded trace.
    Replay(ReplayArgs),
    /// Check decide(input) = decide(kernel) on seeded random instances.
    Verify(VerifyArgs),
    /// Write a seeded random multigraph instance.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct SolverArgs {
    /// Graphs up to this order always use the exact bootstrap.
    #[arg(long, default_value_t = SolverConfig::default().max_n)]
    max_n: usize,
    /// Larger graphs use the exact bootstrap only when k is at most this.
    #[arg(long, default_value_t = SolverConfig::default().max_k)]
    max_k: usize,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig { max_n: self.max_n, max_k: self.max_k, ..SolverConfig::default() }
    }
}

#[derive(Args)]
struct KernelizeArgs {
    /// Instance file, or `-` for stdin.
    input: PathBuf,
    /// Kernel output; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the rule applications as JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
    /// Perturb the action of one rule (1-14).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=14))]
    mutation_test: Option<u8>,
}

#[derive(Args)]
struct ReplayArgs {
    input: PathBuf,
    #[arg(long)]
    trace: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Budgets are drawn from 0..=max-k.
    #[arg(long, default_value_t = 4)]
    max_k: usize,
    /// Edge densities to draw from; repeatable.
    #[arg(long = "density", default_values_t = [0.15, 0.3, 0.5])]
    densities: Vec<f64>,
    #[arg(long, default_value_t = 0.1)]
    double_rate: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=14))]
    mutation_test: Option<u8>,
    /// Print one JSON object per instance instead of text lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(short, long)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    /// Probability that an edge gets multiplicity 2 or 3.
    #[arg(long, default_value_t = 0.1)]
    double_rate: f64,
    #[arg(short, long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Other(String),
}

impl Failure {
    fn io(path: &Path, e: io::Error) -> Self {
        Failure::Other(format!("{}: {e}", path.display()))
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::io(path, e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::io(path, e))
    }
}

fn read_instance(path: &Path) -> Result<(MultiGraph, usize), Failure> {
    parse(&read_input(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Other(e.to_string())),
    }
}

fn histogram(trace: &[RuleApplication]) -> BTreeMap<String, usize> {
    let mut h = BTreeMap::new();
    for app in trace {
        *h.entry(app.rule.to_string()).or_insert(0) += 1;
    }
    h
}

fn cmd_kernelize(a: &KernelizeArgs) -> Result<ExitCode, Failure> {
    let (g, k) = read_instance(&a.input)?;
    let cfg = KernelConfig { solver: a.solver.config(), mutation: a.mutation_test, ..KernelConfig::default() };
    let out = kernelize(&g, k, &cfg);
    if let Some(path) = &a.trace {
        let text = serde_json::to_string_pretty(out.trace()).map_err(|e| Failure::Other(e.to_string()))?;
        fs::write(path, text + "\n").map_err(|e| Failure::io(path, e))?;
    }
    let base_sets = out.trace().iter().filter(|t| t.rule == RuleId::BaseSet).count();
    let mut stats = json!({
        "input": { "vertices": g.vertex_count(), "edges": g.edge_count(), "k": k },
        "applications": histogram(out.trace()),
        "base_set_computations": base_sets,
    });
    let code = match &out {
        KernelOutcome::Kernel(ki) => {
            write_output(a.output.as_deref(), &serialize(&ki.graph, ki.k))?;
            stats["kernel"] = json!({ "vertices": ki.graph.vertex_count(), "edges": ki.graph.edge_count(), "k": ki.k });
            stats["decided_no"] = json!(false);
            ExitCode::SUCCESS
        }
        KernelOutcome::DecidedNo { .. } => {
            write_output(a.output.as_deref(), &serialize_decided_no())?;
            stats["decided_no"] = json!(true);
            ExitCode::from(EXIT_DECIDED_NO)
        }
    };
    eprintln!("{stats}");
    Ok(code)
}

fn cmd_replay(a: &ReplayArgs) -> Result<ExitCode, Failure> {
    let (g, k) = read_instance(&a.input)?;
    let text = fs::read_to_string(&a.trace).map_err(|e| Failure::io(&a.trace, e))?;
    let trace: Vec<RuleApplication> =
        serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", a.trace.display())))?;
    match replay(&g, k, &trace).map_err(|e| Failure::Other(e.to_string()))? {
        Replayed::Instance(h, kh) => {
            write_output(a.output.as_deref(), &serialize(&h, kh))?;
            Ok(ExitCode::SUCCESS)
        }
        Replayed::DecidedNo => {
            write_output(a.output.as_deref(), &serialize_decided_no())?;
            Ok(ExitCode::from(EXIT_DECIDED_NO))
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<ExitCode, Failure> {
    if a.min_n > a.max_n || a.densities.is_empty() {
        return Err(Failure::Other("need min-n <= max-n and at least one density".into()));
    }
    let params = VerifyParams {
        count: a.count,
        min_n: a.min_n,
        max_n: a.max_n,
        densities: a.densities.clone(),
        double_rate: a.double_rate,
        max_k: a.max_k,
        seed: a.seed,
        mutation: a.mutation_test,
        solver: SolverConfig::default(),
    };
    let reports = verify(&params);
    let mut out = io::stdout().lock();
    for r in &reports {
        let line = if a.json {
            serde_json::to_string(r).map_err(|e| Failure::Other(e.to_string()))?
        } else {
            let verdict = if r.passed() { "pass" } else { "FAIL" };
            let kernel = r.kernel_n.map_or("decided-no".to_string(), |n| format!("kernel n={n}"));
            let mut line = format!("{:>6} {verdict} n={} m={} k={} input={} {kernel}", r.index, r.n, r.edges, r.k, if r.input_yes { "yes" } else { "no" });
            if let Some(p) = &r.panic {
                line += &format!(" panic: {p}");
            }
            for v in &r.audit {
                line += &format!(" audit: {v}");
            }
            line
        };
        writeln!(out, "{line}").map_err(|e| Failure::Other(e.to_string()))?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} instances, {} passed, {} failed", reports.len(), reports.len() - failed, failed)
        .map_err(|e| Failure::Other(e.to_string()))?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAILURE) })
}

fn cmd_generate(a: &GenerateArgs) -> Result<ExitCode, Failure> {
    if !(0.0..=1.0).contains(&a.density) || !(0.0..=1.0).contains(&a.double_rate) {
        return Err(Failure::Other("density and double-rate must lie in [0, 1]".into()));
    }
    let g = random_multigraph(&mut seeded(a.seed, 0), a.n, a.density, a.double_rate);
    let text = format!("c seed {} density {} double-rate {}\n{}", a.seed, a.density, a.double_rate, serialize(&g, a.k));
    write_output(a.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Kernelize(a) => cmd_kernelize(a),
        Command::Replay(a) => cmd_replay(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Generate(a) => cmd_generate(a),
    };
    result.unwrap_or_else(|f| match f {
        Failure::Parse(msg) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Failure::Other(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    })
}
