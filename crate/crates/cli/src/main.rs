use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use jmyc_core::constructions;
use jmyc_core::io::{from_json, to_dot, to_json};
use jmyc_core::paucity::{
    paucity_constructive_cycle, paucity_constructive_path, paucity_exact, PaucityCertificate,
    PaucityOptions, DEFAULT_SUBSET_CAP,
};
use jmyc_core::solvers::{self, SolveOptions};
use jmyc_core::verify::{
    default_range, emit_report, verify, FamilySpec, Guards, ReportFormat, TheoremId,
};
use jmyc_core::{Error, Family, Graph, Limits};

const MAX_VERTICES_ENV: &str = "JMYC_MAX_VERTICES";

/// Mycielski-type graphs, J-colourings, circular colourings and J-paucity.
#[derive(Parser)]
#[command(name = "jmyc", version)]
struct Cli {
    /// Vertex-count guard for the exact solvers [env: JMYC_MAX_VERTICES; default 64]
    #[arg(long, global = true)]
    max_vertices: Option<usize>,

    /// Worker threads for verification and paucity search
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a standard graph as JSON
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Vertex count (second side for complete_bipartite)
        #[arg(long)]
        n: usize,
        /// First side of complete_bipartite
        #[arg(long)]
        m: Option<usize>,
    },
    /// Apply a Mycielski-type construction
    Build {
        #[arg(long)]
        construction: String,
        #[command(flatten)]
        io: IoArgs,
        /// Emit DOT instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// Run an exact solver
    Solve {
        #[arg(value_enum)]
        solver: SolverArg,
        #[command(flatten)]
        io: IoArgs,
        /// Only test this colour count (j, j-star)
        #[arg(long)]
        t: Option<usize>,
        /// Largest modulus tried (circular)
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Minimum edge augmentation admitting a J-colouring with δ+1 colours
    Paucity {
        #[command(flatten)]
        io: IoArgs,
        /// Always run the exhaustive search, even for μ(P_n) and μ(C_n)
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        budget_limit: Option<usize>,
        /// Largest number of edge subsets examined at one budget level
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        cap: u128,
    },
    /// Replay theorems over a graph family
    Verify {
        /// Theorem id, or `all`
        #[arg(long)]
        theorem: String,
        #[arg(long, value_enum)]
        family: VerifyFamilyArg,
        /// Inclusive parameter range `a..b` (or a single value)
        #[arg(long)]
        range: Option<String>,
        /// First side for complete_bipartite
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Graph file for the custom family
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Write the report here; `.md` selects markdown
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        format: Option<String>,
        /// Include per-instance runtimes
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        cap: u128,
    },
    /// Re-emit a graph as canonical JSON, or as DOT
    Export {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args)]
struct IoArgs {
    /// Input graph JSON; stdin when absent or `-`
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFamilyArg {
    Path,
    Cycle,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Chromatic,
    J,
    JStar,
    Circular,
}

impl SolverArg {
    fn name(self) -> &'static str {
        match self {
            SolverArg::Chromatic => "chromatic",
            SolverArg::J => "j",
            SolverArg::JStar => "j-star",
            SolverArg::Circular => "circular",
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_input(path: Option<&Path>) -> CliResult<Graph> {
    let text = match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Domain(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    Ok(from_json(&text)?)
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match path {
        Some(p) => fs::write(p, body)
            .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Domain(format!("cannot write stdout: {e}"))),
    }
}

fn limits(flag: Option<usize>) -> CliResult<Limits> {
    if let Some(n) = flag {
        return Ok(Limits::new(n));
    }
    match std::env::var(MAX_VERTICES_ENV) {
        Ok(v) => v.trim().parse().map(Limits::new).map_err(|_| {
            Failure::Usage(format!("{MAX_VERTICES_ENV} must be an integer, got {v:?}"))
        }),
        Err(_) => Ok(Limits::default()),
    }
}

fn parse_range(text: &str) -> CliResult<RangeInclusive<usize>> {
    let bad = || Failure::Usage(format!("range must look like a..b, got {text:?}"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (text, text),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn certificate_json(cert: &PaucityCertificate) -> String {
    json!({
        "count": cert.count(),
        "added_edges": cert.added_edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "witness": cert.witness.assignment(),
    })
    .to_string()
}

/// `Some(n)` when `g` is exactly the Mycielskian of `base(n)` in canonical numbering.
fn mycielskian_of(g: &Graph, base: fn(usize) -> jmyc_core::Result<Graph>) -> Option<usize> {
    let n = g.vertex_count().checked_sub(1)? / 2;
    let candidate = constructions::mycielskian(&base(n).ok()?);
    (candidate.edges() == g.edges() && candidate.vertex_count() == g.vertex_count()).then_some(n)
}

fn run(cli: Cli) -> CliResult<()> {
    let lim = limits(cli.max_vertices)?;
    match cli.command {
        Command::Gen { family, n, m } => {
            let g = match (family, m) {
                (FamilyArg::Path, _) => Graph::generate(Family::Path, &[n]),
                (FamilyArg::Cycle, _) => Graph::generate(Family::Cycle, &[n]),
                (FamilyArg::Complete, _) => Graph::generate(Family::Complete, &[n]),
                (FamilyArg::CompleteBipartite, Some(m)) => {
                    Graph::generate(Family::CompleteBipartite, &[m, n])
                }
                (FamilyArg::CompleteBipartite, None) => {
                    return Err(Failure::Usage("complete_bipartite needs --m".into()))
                }
            }
            .map_err(|e| Failure::Usage(e.to_string()))?;
            write_output(None, &to_json(&g))
        }
        Command::Build {
            construction,
            io,
            dot,
        } => {
            let c = constructions::lookup(&construction).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown construction {construction:?}; expected one of {}",
                    constructions::names().join(", ")
                ))
            })?;
            let g = c.apply(&read_input(io.input.as_deref())?);
            let text = if dot { to_dot(&g) } else { to_json(&g) };
            write_output(io.out.as_deref(), &text)
        }
        Command::Solve {
            solver,
            io,
            t,
            max_k,
        } => {
            let g = read_input(io.input.as_deref())?;
            let s = solvers::lookup(solver.name()).expect("every solver is registered");
            let out = s.solve(
                &g,
                &SolveOptions {
                    limits: lim,
                    t,
                    max_k,
                },
            )?;
            let text = serde_json::to_string(&out).expect("solver output serialises");
            write_output(io.out.as_deref(), &text)
        }
        Command::Paucity {
            io,
            exact,
            budget_limit,
            cap,
        } => {
            let g = read_input(io.input.as_deref())?;
            let constructive = if exact {
                None
            } else if let Some(n) = mycielskian_of(&g, Graph::cycle).filter(|&n| n >= 4) {
                Some(paucity_constructive_cycle(n)?)
            } else if let Some(n) = mycielskian_of(&g, Graph::path).filter(|&n| n >= 2) {
                Some(paucity_constructive_path(n)?)
            } else {
                None
            };
            let cert = match constructive {
                Some(c) => {
                    eprintln!("paucity: constructive augmentation (use --exact for the minimum)");
                    c
                }
                None => {
                    let opts = PaucityOptions {
                        budget_limit,
                        subset_cap: cap,
                        limits: lim,
                    };
                    paucity_exact(&g, &opts)?.ok_or_else(|| {
                        Failure::Domain("no augmentation found within the budget limit".into())
                    })?
                }
            };
            write_output(io.out.as_deref(), &certificate_json(&cert))
        }
        Command::Verify {
            theorem,
            family,
            range,
            m,
            input,
            out,
            format,
            timings,
            cap,
        } => {
            let ids: Vec<TheoremId> = if theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem
                    .parse()
                    .map_err(|e: Error| Failure::Usage(e.to_string()))?]
            };
            let family = match family {
                VerifyFamilyArg::Path => FamilySpec::Path,
                VerifyFamilyArg::Cycle => FamilySpec::Cycle,
                VerifyFamilyArg::CompleteBipartite => FamilySpec::CompleteBipartite { m },
                VerifyFamilyArg::Custom => {
                    let path = input
                        .as_deref()
                        .ok_or_else(|| Failure::Usage("custom family needs -i".into()))?;
                    FamilySpec::Custom(read_input(Some(path))?)
                }
            };
            let format = match (format, &out) {
                (Some(f), _) => f
                    .parse()
                    .map_err(|e: Error| Failure::Usage(e.to_string()))?,
                (None, Some(p)) if p.extension().is_some_and(|e| e == "md") => {
                    ReportFormat::Markdown
                }
                _ => ReportFormat::Json,
            };
            let explicit = range.as_deref().map(parse_range).transpose()?;
            let guards = Guards {
                limits: lim,
                subset_cap: cap,
            };
            let mut reports = Vec::new();
            for id in ids {
                let r = explicit
                    .clone()
                    .unwrap_or_else(|| default_range(id, &family));
                reports.extend(verify(id, &family, r, &guards)?);
            }
            write_output(out.as_deref(), &emit_report(&reports, format, timings))
        }
        Command::Export { io, dot } => {
            let g = read_input(io.input.as_deref())?;
            let text = if dot { to_dot(&g) } else { to_json(&g) };
            write_output(io.out.as_deref(), &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("jmyc: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("jmyc: usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("jmyc: {msg}");
            ExitCode::from(1)
        }
    }
}
