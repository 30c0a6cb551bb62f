//! Command-line front end: exact solves, coloring checks, constructions,
//! threshold tables and exhaustive certification.

use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mc_lab::coloring::{ColoringJson, EdgeColoring, McVerdict};
use mc_lab::constructions::{
    balanced_detached_graph, clique_with_linked_pair, clique_with_split_pair, complete_multipartite,
    detached_star_coloring, multipartite_star_coloring, sharp_window_graph,
};
use mc_lab::formulas::{self, Function};
use mc_lab::harness::{self, CertifyOptions};
use mc_lab::solver::{
    self, fast_path_conditions, mc_exact, mc_lower_bound, mc_upper_bounds, Bound, BoundKind,
};
use mc_lab::Graph;

#[derive(Parser)]
#[command(name = "mc-lab", version, about = "Monochromatic connection numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve mc for graph6 input (--graph, or one graph per stdin line).
    Compute {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum, default_value_t = ComputeMethod::Exact)]
        method: ComputeMethod,
    },
    /// Check a coloring JSON file (or stdin) for the MC property.
    Verify {
        /// Coloring JSON path; `-` or absent reads stdin.
        coloring: Option<PathBuf>,
        /// Expected graph; must match the graph6 inside the coloring.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Build an extremal graph; prints graph6, then the coloring JSON.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Closed-form threshold values as CSV: n,k,value,regime.
    Table {
        #[arg(value_enum)]
        function: TableFunction,
        #[arg(long)]
        n: usize,
    },
    /// Compare closed forms with exhaustive enumeration for one n.
    Certify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Permit n = 7 (2,097,152 edge masks).
        #[arg(long)]
        allow_n7: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Near-balanced t classes with one detached vertex per class.
    Gnt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Complete multipartite graph 1,...,1,t plus `extra` edges in the big class.
    Lemma5 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
    },
    /// K_{n-2} plus two nonadjacent vertices splitting its neighborhood.
    Thm3h {
        #[arg(long)]
        n: usize,
    },
    /// K_{n-2} plus two adjacent vertices, one of degree 2.
    Thm3t2 {
        #[arg(long)]
        n: usize,
    },
    /// Complete multipartite graph with the given part sizes.
    Multipartite {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeMethod {
    Exact,
    Bounds,
    Fast,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFunction {
    F,
    G,
    T,
    S,
}

impl From<TableFunction> for Function {
    fn from(t: TableFunction) -> Function {
        match t {
            TableFunction::F => Function::F,
            TableFunction::G => Function::G,
            TableFunction::T => Function::T,
            TableFunction::S => Function::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

/// Exit statuses.
const USAGE: u8 = 1;
const FAILED: u8 = 2;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Output of `compute` when the value may be undetermined (`bounds`, `fast`).
#[derive(Serialize)]
struct Estimate {
    graph6: String,
    mc: Option<usize>,
    method: &'static str,
    bounds: Vec<Bound>,
    coloring: ColoringJson,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(USAGE);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(FAILED)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Compute { graph, method } => {
            let inputs: Vec<String> = match graph {
                Some(g) => vec![g],
                None => io::stdin()
                    .lock()
                    .lines()
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .filter(|l| !l.trim().is_empty())
                    .collect(),
            };
            for line in inputs {
                let g = Graph::parse_graph6(line.trim())?;
                let json = compute(&g, method)?;
                writeln!(out, "{json}")?;
            }
        }
        Command::Verify { coloring, graph } => {
            let text = match coloring {
                Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
                _ => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            let col = EdgeColoring::from_json_str(&text)?;
            if let Some(g6) = graph {
                if &Graph::parse_graph6(g6.trim())? != col.graph() {
                    return Err(Failure::Usage("coloring is for a different graph".into()));
                }
            }
            match col.verify_mc() {
                McVerdict::Ok => writeln!(out, "ok")?,
                McVerdict::FailingPair(u, v) => {
                    writeln!(out, "failing_pair {u} {v}")?;
                    return Err(Failure::Check(format!(
                        "no monochromatic path between {u} and {v}"
                    )));
                }
            }
        }
        Command::Construct { family } => {
            let col = construct(family)?;
            writeln!(out, "{}", col.graph().to_graph6())?;
            writeln!(out, "{}", serde_json::to_string(&col.to_json())?)?;
        }
        Command::Table { function, n } => {
            let rows = formulas::table(function.into(), n)?;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "k", "value", "regime"])?;
            for r in rows {
                w.write_record([r.n.to_string(), r.k.to_string(), r.value.to_string(), r.regime])?;
            }
            w.flush()?;
        }
        Command::Certify {
            n,
            jobs,
            format,
            out: path,
            allow_n7,
        } => {
            let opts = CertifyOptions {
                jobs,
                max_n: harness::enumeration_cap(allow_n7),
                ..CertifyOptions::default()
            };
            let report = harness::certify(n, &opts)?;
            let body = match format {
                ReportFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
                ReportFormat::Csv => report.to_csv()?,
            };
            match path {
                Some(p) => fs::write(p, body)?,
                None => out.write_all(body.as_bytes())?,
            }
            if !report.is_certified() {
                return Err(Failure::Check(format!(
                    "n = {n}: {} mismatches between formulas and enumeration",
                    report.mismatches.len()
                )));
            }
        }
    }
    Ok(())
}

fn compute(g: &Graph, method: ComputeMethod) -> Result<String, Failure> {
    let json = match method {
        ComputeMethod::Exact => serde_json::to_string(&mc_exact(g)?.to_json())?,
        ComputeMethod::Oracle => serde_json::to_string(&solver::oracle_certificate(g)?.to_json())?,
        ComputeMethod::Bounds | ComputeMethod::Fast => {
            let (lower, coloring) = mc_lower_bound(g)?;
            let mut bounds = vec![Bound {
                name: "lower".into(),
                kind: BoundKind::Lower,
                value: lower,
            }];
            bounds.extend(mc_upper_bounds(g)?);
            let upper = bounds[1..].iter().map(|b| b.value).min().unwrap_or(lower);
            let mut estimate = Estimate {
                graph6: g.to_graph6(),
                mc: (lower == upper).then_some(lower),
                method: "bounds",
                bounds,
                coloring: coloring.to_json(),
            };
            if matches!(method, ComputeMethod::Fast) {
                if let Some(cond) = fast_path_conditions(g).first() {
                    let value = g.m() + 2 - g.n();
                    estimate.mc = Some(value);
                    estimate.method = "fast-path";
                    estimate.bounds.push(Bound {
                        name: format!("fast-path {}", cond.name()),
                        kind: BoundKind::Exact,
                        value,
                    });
                }
            }
            serde_json::to_string(&estimate)?
        }
    };
    Ok(json)
}

fn construct(family: Family) -> Result<EdgeColoring, Failure> {
    Ok(match family {
        Family::Gnt { n, t } => detached_star_coloring(&balanced_detached_graph(n, t)?)?,
        Family::Lemma5 { n, t, extra } => sharp_window_graph(n, t, extra)?.1,
        Family::Thm3h { n } => mc_lower_bound(&clique_with_split_pair(n)?)?.1,
        Family::Thm3t2 { n } => mc_lower_bound(&clique_with_linked_pair(n)?)?.1,
        Family::Multipartite { sizes } => multipartite_star_coloring(&complete_multipartite(&sizes)?)?,
    })
}
