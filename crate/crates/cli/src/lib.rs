//! `fracdel` command-line front end.
//!
//! Exit codes: 0 success (or a yes answer), 1 a no answer to a yes/no query,
//! 2 usage or input errors, 3 a counterexample found by `scan`.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fracdel::oracle::{self, DeficiencyWitness, FactorBounds, FractionalAssignment, Limits};
use fracdel::spectral::{self, DEFAULT_TOL, STRICT_MARGIN};
use fracdel::verifier::generate::{dense_graphs, threshold_missing};
use fracdel::verifier::scan::{scan_graphs, scan_reader, OutputFormat, ScanOptions};
use fracdel::verifier::{self, TheoremId, VerifierConfig};
use fracdel::{parse_edge_list, parse_graph6, to_graph6, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fracdel", version, about = "Fractional [a,b]-deleted graphs: exact checks and spectral conditions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a named graph as graph6.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: Option<usize>,
    },
    /// ρ(G), q(G) and their upper bounds as JSON.
    Spectral {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Decide whether G is fractional [a,b]-deleted (exit 1 if not).
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        ab: AbArgs,
        /// Also run the definitional per-edge check.
        #[arg(long)]
        by_edges: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Decide whether G has a fractional (g,f)-factor and print a certificate (exit 1 if not).
    Factor {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, required_unless_present = "g")]
        a: Option<usize>,
        #[arg(long, required_unless_present = "f")]
        b: Option<usize>,
        /// Per-vertex lower bounds, comma separated.
        #[arg(long, value_delimiter = ',', requires = "f", conflicts_with_all = ["a", "b"])]
        g: Option<Vec<usize>>,
        /// Per-vertex upper bounds, comma separated.
        #[arg(long, value_delimiter = ',', requires = "g")]
        f: Option<Vec<usize>>,
        /// Also decide integer (g,f)-factor existence by Lovász's condition.
        #[arg(long)]
        lovasz: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Evaluate one sufficient condition against the oracle (exit 1 if inconsistent).
    Theorem {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        ab: AbArgs,
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Scan graph6 lines (file or stdin) or an exhaustive dense corpus (exit 3 on counterexample).
    Scan {
        #[arg(long, conflicts_with = "exhaustive")]
        file: Option<PathBuf>,
        /// Generate every labeled graph of this order meeting the size bound.
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Override the number of missing edges for --exhaustive.
        #[arg(long, requires = "exhaustive")]
        max_missing: Option<usize>,
        #[command(flatten)]
        ab: AbArgs,
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Replay the sharpness construction for (n, a, b) (exit 1 on failure).
    Sharpness {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ab: AbArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Extremal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Args)]
struct AbArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph as a graph6 string.
    #[arg(long, conflicts_with = "file")]
    graph6: Option<String>,
    /// Read the graph from a file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Treat file/stdin content as an edge list instead of graph6.
    #[arg(long, conflicts_with = "graph6")]
    edge_list: bool,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
}

/// An error already formatted for the diagnostic stream, with its exit code.
struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn read_graph(input: &InputArgs, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    if let Some(s) = &input.graph6 {
        return Ok(parse_graph6(s)?);
    }
    let mut text = String::new();
    match &input.file {
        Some(path) => {
            File::open(path)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
        }
        None => {
            stdin.read_to_string(&mut text)?;
        }
    }
    if input.edge_list {
        return Ok(parse_edge_list(&text)?);
    }
    let line =
        text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| Failure(EXIT_USAGE, "no graph on input".into()))?;
    Ok(parse_graph6(line.trim())?)
}

fn limits(max_n: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(m) = max_n {
        l.max_subset_n = m;
        l.max_lovasz_n = m;
    }
    l
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string(v)?)
}

#[derive(Serialize)]
struct SpectralOut {
    n: usize,
    e: usize,
    rho: f64,
    q: f64,
    hsf_bound: f64,
    feng_yu_bound: Option<f64>,
    residual: f64,
    tol: f64,
}

#[derive(Serialize)]
struct CheckOut {
    n: usize,
    e: usize,
    a: usize,
    b: usize,
    method: &'static str,
    deleted: bool,
    witness: Option<DeficiencyWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    by_edges: Option<bool>,
}

#[derive(Serialize)]
struct FactorOut {
    n: usize,
    bounds: FactorBounds,
    method: &'static str,
    exists: bool,
    witness: Option<DeficiencyWitness>,
    assignment: Option<FractionalAssignment>,
    #[serde(skip_serializing_if = "Option::is_none")]
    integer_factor: Option<bool>,
}

/// Runs one invocation. Data goes to `out`, diagnostics to `err`.
pub fn run_with(argv: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "fracdel: {msg}");
            code
        }
    }
}

pub fn run(argv: &[String]) -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}")?;
    Ok(())
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Construct { family, n, a } => {
            let g = match family {
                Family::Complete => Graph::complete(n),
                Family::Extremal => {
                    let a = a.ok_or_else(|| Failure(EXIT_USAGE, "--family extremal needs --a".into()))?;
                    Graph::extremal(n, a)?
                }
            };
            if n == 0 {
                return Err(Failure(EXIT_USAGE, "graph6 output needs n >= 1".into()));
            }
            emit(out, &to_graph6(&g))?;
            Ok(EXIT_OK)
        }
        Command::Spectral { input, tol } => {
            let g = read_graph(&input, stdin)?;
            let s = spectral::spectral_summary(&g, tol)?;
            let report = SpectralOut {
                n: g.order(),
                e: g.size(),
                rho: s.rho,
                q: s.q,
                hsf_bound: spectral::hsf_bound(&g)?,
                feng_yu_bound: spectral::feng_yu_bound(&g).ok(),
                residual: s.residual,
                tol,
            };
            emit(out, &to_json(&report)?)?;
            Ok(EXIT_OK)
        }
        Command::Check { input, ab, by_edges, max_n } => {
            let g = read_graph(&input, stdin)?;
            let lim = limits(max_n);
            let report = if g.order() <= lim.max_subset_n {
                let v = oracle::is_fractional_ab_deleted(&g, ab.a, ab.b, &lim)?;
                let edges = if by_edges {
                    Some(oracle::is_fractional_ab_deleted_by_edges(&g, ab.a, ab.b, &lim)?)
                } else {
                    None
                };
                CheckOut {
                    n: g.order(),
                    e: g.size(),
                    a: ab.a,
                    b: ab.b,
                    method: "criterion",
                    deleted: v.holds,
                    witness: v.witness,
                    by_edges: edges,
                }
            } else {
                CheckOut {
                    n: g.order(),
                    e: g.size(),
                    a: ab.a,
                    b: ab.b,
                    method: "flow",
                    deleted: oracle::is_fractional_ab_deleted_by_flow(&g, ab.a, ab.b)?,
                    witness: None,
                    by_edges: None,
                }
            };
            emit(out, &to_json(&report)?)?;
            Ok(if report.deleted { EXIT_OK } else { EXIT_NO })
        }
        Command::Factor { input, a, b, g: lo, f: hi, lovasz, max_n } => {
            let graph = read_graph(&input, stdin)?;
            let bounds = match (lo, hi, a, b) {
                (Some(lo), Some(hi), _, _) => FactorBounds::per_vertex(lo, hi)?,
                (_, _, Some(a), Some(b)) => FactorBounds::constant(a, b)?,
                _ => return Err(Failure(EXIT_USAGE, "need --a/--b or --g/--f".into())),
            };
            let lim = limits(max_n);
            let assignment = oracle::find_fractional_factor(&graph, &bounds)?;
            let (method, witness) = if graph.order() <= lim.max_subset_n {
                let v = oracle::has_fractional_gf_factor(&graph, &bounds, &lim)?;
                if v.holds != assignment.is_some() {
                    return Err(Failure(EXIT_USAGE, "internal error: criterion and flow certificate disagree".into()));
                }
                ("criterion+flow", v.witness)
            } else {
                ("flow", None)
            };
            let integer_factor = if lovasz { Some(oracle::has_gf_factor_lovasz(&graph, &bounds, &lim)?) } else { None };
            let report = FactorOut {
                n: graph.order(),
                bounds,
                method,
                exists: assignment.is_some(),
                witness,
                assignment,
                integer_factor,
            };
            emit(out, &to_json(&report)?)?;
            Ok(if report.exists { EXIT_OK } else { EXIT_NO })
        }
        Command::Theorem { input, ab, theorem, tol, max_n } => {
            let g = read_graph(&input, stdin)?;
            let cfg = VerifierConfig { margin: STRICT_MARGIN, tol, limits: limits(max_n) };
            let report = verifier::eval_theorem(theorem, &g, ab.a, ab.b, &cfg)?;
            emit(out, &to_json(&report)?)?;
            Ok(if report.consistent { EXIT_OK } else { EXIT_NO })
        }
        Command::Scan { file, exhaustive, max_missing, ab, theorem, format, tol, max_n } => {
            let opts = ScanOptions {
                theorem,
                a: ab.a,
                b: ab.b,
                config: VerifierConfig { margin: STRICT_MARGIN, tol, limits: limits(max_n) },
                format: match format {
                    Format::Json => OutputFormat::Json,
                    Format::Tsv => OutputFormat::Tsv,
                },
            };
            // buffer so a failed scan never leaves half a record on the data stream
            let mut buf = Vec::new();
            let summary = match (exhaustive, file) {
                (Some(n), _) => {
                    let k = max_missing.unwrap_or_else(|| threshold_missing(n, ab.a));
                    scan_graphs(dense_graphs(n, k), &mut buf, &opts)
                }
                (None, Some(path)) => {
                    let f = File::open(&path).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
                    scan_reader(BufReader::new(f), &mut buf, &opts)
                }
                (None, None) => scan_reader(BufReader::new(stdin), &mut buf, &opts),
            }
            .map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
            out.write_all(&buf)?;
            Ok(if summary.counterexamples > 0 { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
        }
        Command::Sharpness { n, ab } => match verifier::verify_sharpness(n, ab.a, ab.b, &VerifierConfig::default()) {
            Ok(report) => {
                emit(out, &to_json(&report)?)?;
                Ok(EXIT_OK)
            }
            Err(e @ verifier::VerifyError::Sharpness { .. }) => Err(Failure(EXIT_NO, e.to_string())),
            Err(e) => Err(e.into()),
        },
    }
}
