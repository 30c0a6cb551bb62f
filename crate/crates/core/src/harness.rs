//! Exhaustive certification of the threshold formulas.
//!
//! One sweep solves `mc` for every connected labeled graph on `n` vertices
//! and keeps, per edge count, the smallest and largest `mc` seen plus the
//! lexicographically smallest graph6 string for every `(m, mc)` pair. The
//! empirical thresholds and all witnesses are read off those tables, so the
//! result does not depend on how the mask range is split across workers.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::choose2;
use crate::formulas::{f_value, g_value, FormulaError, Function};
use crate::graph::{ConnectedGraphs, GraphError};
use crate::solver::{mc_exact_with, Method, SolveOptions, SolverError};

/// Environment variable that overrides the enumeration cap.
pub const HARD_CAP_ENV: &str = "MC_LAB_HARD_CAP";

/// Largest `n` certified without opting in.
pub const DEFAULT_MAX_N: usize = 6;

/// Largest `n` reachable with the opt-in flag.
pub const EXTENDED_MAX_N: usize = 7;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("n = {n} is above the enumeration cap {cap} (raise it with --allow-n7 or {HARD_CAP_ENV})")]
    OverCap { n: usize, cap: usize },
    #[error("n = {0} is below 2")]
    TooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub max_n: usize,
    pub solve: SolveOptions,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            jobs: None,
            max_n: DEFAULT_MAX_N,
            solve: SolveOptions::default(),
        }
    }
}

/// Enumeration cap: `MC_LAB_HARD_CAP` when set and numeric, otherwise 7
/// with the opt-in and 6 without. Never above the enumerator's own limit.
pub fn enumeration_cap(allow_extended: bool) -> usize {
    let from_env = std::env::var(HARD_CAP_ENV).ok().and_then(|v| v.trim().parse().ok());
    let cap = from_env.unwrap_or(if allow_extended { EXTENDED_MAX_N } else { DEFAULT_MAX_N });
    cap.min(crate::graph::enumerate::MAX_ENUMERATION_N)
}

/// Per-edge-count summary of one sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct EdgeCountStats {
    graphs: u64,
    /// Lexicographically smallest graph6 for each `mc` value seen.
    by_mc: BTreeMap<usize, String>,
}

impl EdgeCountStats {
    fn record(&mut self, mc: usize, graph6: String) {
        self.graphs += 1;
        self.by_mc
            .entry(mc)
            .and_modify(|w| {
                if graph6 < *w {
                    *w = graph6.clone();
                }
            })
            .or_insert(graph6);
    }

    fn merge(&mut self, other: EdgeCountStats) {
        self.graphs += other.graphs;
        for (mc, g6) in other.by_mc {
            self.by_mc
                .entry(mc)
                .and_modify(|w| {
                    if g6 < *w {
                        *w = g6.clone();
                    }
                })
                .or_insert(g6);
        }
    }

    fn min_mc(&self) -> usize {
        *self.by_mc.keys().next().expect("stats hold at least one graph")
    }

    fn max_mc(&self) -> usize {
        *self.by_mc.keys().next_back().expect("stats hold at least one graph")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Partial {
    per_m: BTreeMap<usize, EdgeCountStats>,
    fast_path: u64,
    branch_and_bound: u64,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (m, stats) in other.per_m {
            self.per_m.entry(m).or_default().merge(stats);
        }
        self.fast_path += other.fast_path;
        self.branch_and_bound += other.branch_and_bound;
        self
    }
}

/// `mc` over every connected labeled graph on `n` vertices, by edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub n: usize,
    per_m: BTreeMap<usize, EdgeCountStats>,
    pub fast_path_solves: u64,
    pub branch_and_bound_solves: u64,
    pub jobs: usize,
    pub elapsed_ms: u128,
}

pub fn sweep(n: usize, opts: &CertifyOptions) -> Result<Sweep, HarnessError> {
    if n < 2 {
        return Err(HarnessError::TooSmall(n));
    }
    if n > opts.max_n {
        return Err(HarnessError::OverCap { n, cap: opts.max_n });
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| HarnessError::ThreadPool(e.to_string()))?;
    let jobs = pool.current_num_threads();

    let total = 1u64 << choose2(n);
    let chunks = (jobs as u64 * 16).min(total);
    let start = Instant::now();
    let solve = opts.solve;
    let merged = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let range = c * total / chunks..(c + 1) * total / chunks;
                let mut part = Partial::default();
                for g in ConnectedGraphs::in_range(n, range, None)? {
                    let cert = mc_exact_with(&g, &solve)?;
                    match cert.method {
                        Method::FastPath => part.fast_path += 1,
                        _ => part.branch_and_bound += 1,
                    }
                    part.per_m
                        .entry(g.m())
                        .or_default()
                        .record(cert.value, g.to_graph6());
                }
                Ok::<_, HarnessError>(part)
            })
            .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))
    })?;

    Ok(Sweep {
        n,
        per_m: merged.per_m,
        fast_path_solves: merged.fast_path,
        branch_and_bound_solves: merged.branch_and_bound,
        jobs,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

impl Sweep {
    pub fn graph_count(&self) -> u64 {
        self.per_m.values().map(|s| s.graphs).sum()
    }

    /// Smallest `F >= n - 1` with `min mc(m) >= k` for every `m >= F`, for
    /// `k = 1..=C(n,2)`.
    pub fn empirical_f(&self) -> Vec<usize> {
        (1..=choose2(self.n))
            .map(|k| {
                let last_bad = self
                    .per_m
                    .iter()
                    .filter(|(_, s)| s.min_mc() < k)
                    .map(|(&m, _)| m)
                    .max();
                last_bad.map_or(self.n - 1, |m| (m + 1).max(self.n - 1))
            })
            .collect()
    }

    /// `min{m : max mc(m) > k} - 1`, or `C(n,2)` when no graph exceeds `k`,
    /// for `k = 1..=C(n,2)`.
    pub fn empirical_g(&self) -> Vec<usize> {
        (1..=choose2(self.n))
            .map(|k| {
                self.per_m
                    .iter()
                    .find(|(_, s)| s.max_mc() > k)
                    .map_or(choose2(self.n), |(&m, _)| m - 1)
            })
            .collect()
    }

    /// Smallest graph6 among graphs with `m` edges whose `mc` satisfies
    /// `keep`, with its `mc`.
    fn witness(&self, m: usize, keep: impl Fn(usize) -> bool) -> Option<(usize, String)> {
        self.per_m
            .get(&m)?
            .by_mc
            .iter()
            .filter(|(&mc, _)| keep(mc))
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(&mc, g6)| (mc, g6.clone()))
    }
}

pub fn empirical_f(n: usize, opts: &CertifyOptions) -> Result<Vec<usize>, HarnessError> {
    Ok(sweep(n, opts)?.empirical_f())
}

pub fn empirical_g(n: usize, opts: &CertifyOptions) -> Result<Vec<usize>, HarnessError> {
    Ok(sweep(n, opts)?.empirical_g())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCountRow {
    pub m: usize,
    pub graphs: u64,
    pub min_mc: usize,
    pub max_mc: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub function: Function,
    pub k: usize,
    pub formula: usize,
    pub empirical: usize,
}

/// A graph showing a threshold cannot be moved: for `f`, `m = f(n,k) - 1`
/// edges and `mc < k`; for `g`, `m = g(n,k) + 1` edges and `mc > k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub function: Function,
    pub k: usize,
    pub m: usize,
    pub mc: usize,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub jobs: usize,
    pub elapsed_ms: u128,
    pub fast_path_solves: u64,
    pub branch_and_bound_solves: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub n: usize,
    pub verdict: String,
    pub connected_graphs: u64,
    pub per_edge_count: Vec<EdgeCountRow>,
    pub f_formula: Vec<usize>,
    pub f_empirical: Vec<usize>,
    pub g_formula: Vec<usize>,
    pub g_empirical: Vec<usize>,
    pub mismatches: Vec<Mismatch>,
    pub witnesses: Vec<Witness>,
    pub timing: Timing,
}

impl CertificationReport {
    pub fn is_certified(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// One row per `k`: `n,k,f_formula,f_empirical,g_formula,g_empirical,status`.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n",
            "k",
            "f_formula",
            "f_empirical",
            "g_formula",
            "g_empirical",
            "status",
        ])?;
        for i in 0..self.f_formula.len() {
            let ok = self.f_formula[i] == self.f_empirical[i] && self.g_formula[i] == self.g_empirical[i];
            w.write_record([
                self.n.to_string(),
                (i + 1).to_string(),
                self.f_formula[i].to_string(),
                self.f_empirical[i].to_string(),
                self.g_formula[i].to_string(),
                self.g_empirical[i].to_string(),
                if ok { "ok" } else { "mismatch" }.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

/// Compares the empirical thresholds against the closed forms for one `n`.
pub fn certify(n: usize, opts: &CertifyOptions) -> Result<CertificationReport, HarnessError> {
    let sw = sweep(n, opts)?;
    Ok(report_from_sweep(&sw)?)
}

pub fn report_from_sweep(sw: &Sweep) -> Result<CertificationReport, FormulaError> {
    let n = sw.n;
    let total = choose2(n);
    let f_formula = (1..=total)
        .map(|k| f_value(n, k).map(|r| r.value))
        .collect::<Result<Vec<_>, _>>()?;
    let g_formula = (1..=total)
        .map(|k| g_value(n, k).map(|r| r.value))
        .collect::<Result<Vec<_>, _>>()?;
    let f_empirical = sw.empirical_f();
    let g_empirical = sw.empirical_g();

    let mut mismatches = Vec::new();
    let mut witnesses = Vec::new();
    for k in 1..=total {
        let (ff, fe) = (f_formula[k - 1], f_empirical[k - 1]);
        if ff != fe {
            mismatches.push(Mismatch {
                function: Function::F,
                k,
                formula: ff,
                empirical: fe,
            });
        }
        let (gf, ge) = (g_formula[k - 1], g_empirical[k - 1]);
        if gf != ge {
            mismatches.push(Mismatch {
                function: Function::G,
                k,
                formula: gf,
                empirical: ge,
            });
        }
        if ff >= 1 {
            if let Some((mc, graph6)) = sw.witness(ff - 1, |mc| mc < k) {
                witnesses.push(Witness {
                    function: Function::F,
                    k,
                    m: ff - 1,
                    mc,
                    graph6,
                });
            }
        }
        if let Some((mc, graph6)) = sw.witness(gf + 1, |mc| mc > k) {
            witnesses.push(Witness {
                function: Function::G,
                k,
                m: gf + 1,
                mc,
                graph6,
            });
        }
    }

    Ok(CertificationReport {
        n,
        verdict: if mismatches.is_empty() { "certified" } else { "mismatch" }.to_string(),
        connected_graphs: sw.graph_count(),
        per_edge_count: sw
            .per_m
            .iter()
            .map(|(&m, s)| EdgeCountRow {
                m,
                graphs: s.graphs,
                min_mc: s.min_mc(),
                max_mc: s.max_mc(),
            })
            .collect(),
        f_formula,
        f_empirical,
        g_formula,
        g_empirical,
        mismatches,
        witnesses,
        timing: Timing {
            jobs: sw.jobs,
            elapsed_ms: sw.elapsed_ms,
            fast_path_solves: sw.fast_path_solves,
            branch_and_bound_solves: sw.branch_and_bound_solves,
        },
    })
}
