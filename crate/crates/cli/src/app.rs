//! Argument parsing and dispatch for the `matchforce` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use matchforce_core::families::{
    generate, parse_edge_list, parse_graph6, write_edge_list, write_graph6, FamilySpec,
};
use matchforce_core::graph::ResourceBudget;
use matchforce_core::Error;

use crate::analysis::GraphCase;
use crate::checks::{lookup, CheckDef, REGISTRY};
use crate::report::{build_report, ReportError};
use crate::sources::Source;
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_PM: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "matchforce",
    version,
    about = "Forcing and anti-forcing invariants of perfect matchings"
)]
pub struct Cli {
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Maximum number of perfect matchings to enumerate.
    #[arg(long, global = true, env = "MATCHFORCE_MAX_MATCHINGS")]
    pub max_matchings: Option<usize>,
    /// Maximum number of cycles to enumerate.
    #[arg(long, global = true, env = "MATCHFORCE_MAX_CYCLES")]
    pub max_cycles: Option<usize>,
}

impl BudgetArgs {
    fn resolve(&self) -> matchforce_core::Result<ResourceBudget> {
        let d = ResourceBudget::default();
        ResourceBudget::new(
            self.max_matchings.unwrap_or(d.max_matchings),
            self.max_cycles.unwrap_or(d.max_cycles),
        )
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute all invariants of one graph and print a JSON report.
    Compute(ComputeArgs),
    /// Run theorem checks over a corpus and print a JSON summary.
    Verify(VerifyArgs),
    /// Print a family member as graph6 or an edge list.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Graph in graph6 format.
    #[arg(conflicts_with_all = ["edge_list", "family"], required_unless_present_any = ["edge_list", "family"])]
    pub graph6: Option<String>,
    /// Read the graph from an edge-list file.
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    pub edge_list: Option<PathBuf>,
    /// Generate the graph from a family, e.g. `prism_chain:2`.
    #[arg(long, value_name = "SPEC")]
    pub family: Option<FamilySpec>,
    /// Write the report to a file instead of stdout.
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Include wall-clock timings; the report is then no longer reproducible.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check ids (T01 to T16); all checks when omitted.
    pub checks: Vec<String>,
    /// Every graph with a perfect matching on at most N vertices.
    #[arg(long, value_name = "N")]
    pub all: Option<usize>,
    /// With `--all`, keep one graph per isomorphism class.
    #[arg(long, requires = "all")]
    pub dedup: bool,
    /// A family member; may be repeated.
    #[arg(long, value_name = "SPEC")]
    pub family: Vec<FamilySpec>,
    /// A file with one graph6 string per line.
    #[arg(long, value_name = "FILE")]
    pub graph6_file: Option<PathBuf>,
    /// Random connected graphs with a perfect matching.
    #[arg(long, value_name = "COUNT")]
    pub random: Option<usize>,
    /// Order of the random graphs.
    #[arg(long, value_name = "V", default_value_t = 8, requires = "random")]
    pub random_order: usize,
    /// Seed for the random graphs.
    #[arg(long, default_value_t = 0, requires = "random")]
    pub seed: u64,
    /// Worker threads; 0 uses one per core.
    #[arg(long, short, default_value_t = 0)]
    pub jobs: usize,
    /// Write the report to a file instead of stdout.
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

impl VerifyArgs {
    fn sources(&self) -> Vec<Source> {
        let mut out = Vec::new();
        if let Some(n) = self.all {
            out.push(Source::All {
                n,
                dedup: self.dedup,
            });
        }
        out.extend(self.family.iter().cloned().map(Source::Family));
        if let Some(path) = &self.graph6_file {
            out.push(Source::Graph6File(path.clone()));
        }
        if let Some(count) = self.random {
            out.push(Source::Random {
                count,
                order: self.random_order,
                seed: self.seed,
            });
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family spec, e.g. `complete_bipartite:3`.
    pub spec: FamilySpec,
    #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
    pub format: GenFormat,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoPerfectMatching => EXIT_NO_PM,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parse `args` (including the program name) and run. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let budget = cli.budget.resolve()?;
    match &cli.command {
        Command::Compute(args) => compute(args, budget, stdout),
        Command::Verify(args) => run_verify(args, budget, stdout),
        Command::Gen(args) => {
            let g = generate(&args.spec)?;
            let text = match args.format {
                GenFormat::Graph6 => format!("{}\n", write_graph6(&g)),
                GenFormat::EdgeList => write_edge_list(&g),
            };
            stdout.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn emit(json: String, output: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, json + "\n")?,
        None => writeln!(stdout, "{json}")?,
    }
    Ok(())
}

fn compute(
    args: &ComputeArgs,
    budget: ResourceBudget,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let (case, source) = if let Some(spec) = &args.family {
        let case = GraphCase {
            graph: generate(spec)?,
            family: Some(spec.clone()),
        };
        (case, format!("family:{spec}"))
    } else if let Some(path) = &args.edge_list {
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        (
            GraphCase::plain(parse_edge_list(&text)?),
            format!("edge-list:{}", path.display()),
        )
    } else {
        let text = args.graph6.as_deref().expect("clap requires an input");
        (GraphCase::plain(parse_graph6(text)?), "graph6".to_string())
    };
    let report = match build_report(&case, source, budget, args.timings) {
        Ok(r) => r,
        Err(ReportError::Core(e)) => return Err(e.into()),
        Err(ReportError::SelfAudit(msg)) => {
            return Err(Failure {
                code: EXIT_CHECK_FAILED,
                message: format!("internal consistency check failed, please report: {msg}"),
            })
        }
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    emit(json, args.output.as_ref(), stdout)?;
    Ok(EXIT_OK)
}

fn run_verify(
    args: &VerifyArgs,
    budget: ResourceBudget,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let checks: Vec<&'static CheckDef> = if args.checks.is_empty() {
        REGISTRY.iter().collect()
    } else {
        args.checks
            .iter()
            .map(|id| lookup(id).ok_or_else(|| usage(format!("unknown check id `{id}`"))))
            .collect::<Result<_, _>>()?
    };
    let sources = args.sources();
    if sources.is_empty() {
        return Err(usage(
            "no corpus given; use --all, --family, --graph6-file or --random",
        ));
    }
    let report = verify(&sources, &checks, budget, args.jobs)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    emit(json, args.output.as_ref(), stdout)?;
    Ok(if report.any_failure() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    })
}
