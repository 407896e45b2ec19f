//! Argument parsing and subcommand dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use twinless::io::{write_dot, write_edge_list, write_edge_subset};
use twinless::{
    approx_m2vtcs_with_order, connectivity_report, exact_min_2vcs, exact_min_2vtcs, minimal_2vcs,
    minimal_2vtcs, strong_articulation_points, twinless_articulation_points, twinless_sccs,
    verify_2vtc, DirectedGraph, EdgeOrder, EdgeSet, ExactError, Family, GeneratorSpec,
    SearchBudget, SparsifyError,
};

use crate::bench::{run_sweeps, to_csv, BenchOptions, BenchSummary, Sweep};
use crate::instance::InstanceSpec;
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "twinless",
    version,
    about = "Twinless strong connectivity toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Edge-list file: a header `n m`, then one `u v` pair per line.
    pub path: Option<PathBuf>,
    /// One of fig1a, fig1b, fig1c.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Generated instance, `family:n[:chords[:seed]]`.
    #[arg(long = "gen", value_name = "SPEC")]
    pub generated: Option<String>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Search-node limit for exact solves.
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    pub budget_nodes: u64,
    /// Wall-clock limit in seconds for exact solves.
    #[arg(long, default_value_t = SearchBudget::default().max_seconds)]
    pub budget_seconds: f64,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget_nodes,
            max_seconds: self.budget_seconds,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    #[value(name = "2vcs")]
    TwoVcs,
    #[value(name = "2vtcs")]
    TwoVtcs,
}

impl Problem {
    fn name(self) -> &'static str {
        match self {
            Problem::TwoVcs => "2vcs",
            Problem::TwoVtcs => "2vtcs",
        }
    }
}

pub fn parse_order(s: &str) -> Result<EdgeOrder, String> {
    match s {
        "lex" => Ok(EdgeOrder::Lexicographic),
        "reverse" => Ok(EdgeOrder::Reverse),
        _ => s
            .strip_prefix("seed:")
            .and_then(|n| n.parse().ok())
            .map(EdgeOrder::Seeded)
            .ok_or_else(|| format!("expected lex, reverse or seed:N, got `{s}`")),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connectivity report: components, articulation points, predicates.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Twinless strongly connected components and their component trees.
    Tscc {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Twinless articulation points of a twinless strongly connected graph.
    Taps {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Strong articulation points of a strongly connected graph.
    Saps {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Sparse 2-vertex-twinless connected spanning subgraph.
    Approx {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value = "lex", value_parser = parse_order)]
        order: EdgeOrder,
        /// Write the result as DOT, discarded edges dashed.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the JSON result to a file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Minimum spanning subgraph by exhaustive search.
    Exact {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "2vtcs")]
        problem: Problem,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Inclusion-minimal spanning subgraph by greedy edge deletion.
    Minimal {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "2vtcs")]
        problem: Problem,
        #[arg(long, default_value = "lex", value_parser = parse_order)]
        order: EdgeOrder,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate an instance as an edge list.
    Gen {
        /// bidirected_cycle, twin_free_double_cycle or cycle_plus_chords.
        family: Family,
        n: usize,
        #[arg(long, default_value_t = 0)]
        chords: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run generated sweeps and emit one CSV row per instance.
    Bench {
        /// `family:nmin..nmax[:chords[:seeds]]`, repeatable.
        #[arg(long)]
        sweep: Vec<Sweep>,
        /// Also solve each instance exactly and report the ratio.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value = "lex", value_parser = parse_order)]
        order: EdgeOrder,
        /// First seed of every sweep.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Leave timing columns empty so output is byte-reproducible.
        #[arg(long)]
        omit_timings: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check whether an edge list is 2-vertex-twinless connected.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Default::default()
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Self {
            stderr: stderr.into() + "\n",
            code,
            ..Default::default()
        }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

fn load(source: Source) -> Result<DirectedGraph, Outcome> {
    InstanceSpec::from_args(source.path, source.builtin, source.generated)
        .and_then(|s| s.load())
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), Outcome> {
    std::fs::write(path, text)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {}: {e}", path.display())))
}

fn write_dot_file(path: Option<&Path>, g: &DirectedGraph, set: &EdgeSet) -> Result<(), Outcome> {
    match path {
        Some(p) => write_file(p, &write_dot(g, Some(set))),
        None => Ok(()),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn sparsify_failure(g: &DirectedGraph, e: &SparsifyError) -> Outcome {
    let msg = match e {
        SparsifyError::InputNot2Vtc(c) => format!(
            "error: input is not 2-vertex-twinless connected: {}",
            render::certificate_text(g, c)
        ),
        other => format!("error: {other}"),
    };
    Outcome::fail(EXIT_FAIL, msg)
}

pub fn run(cli: Cli) -> Outcome {
    match dispatch(cli.command) {
        Ok(o) | Err(o) => o,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text.trim_end())
            }
        }
    }
}

fn dispatch(command: Command) -> Result<Outcome, Outcome> {
    match command {
        Command::Check { source, json } => {
            let g = load(source)?;
            let r = connectivity_report(&g);
            Ok(Outcome::ok(if json {
                pretty(&render::report_json(&g, &r))
            } else {
                render::report_text(&g, &r)
            }))
        }
        Command::Tscc { source, json } => {
            let g = load(source)?;
            let p = twinless_sccs(&g);
            Ok(Outcome::ok(if json {
                pretty(&render::tscc_json(&g, &p))
            } else {
                render::tscc_text(&g, &p)
            }))
        }
        Command::Taps { source, json } => {
            let g = load(source)?;
            let taps = twinless_articulation_points(&g)
                .map_err(|e| Outcome::fail(EXIT_FAIL, format!("error: {e}")))?;
            Ok(Outcome::ok(if json {
                pretty(&json!({ "taps": render::labels(&g, &taps) }))
            } else {
                render::label_line(&g, &taps) + "\n"
            }))
        }
        Command::Saps { source, json } => {
            let g = load(source)?;
            let saps = strong_articulation_points(&g)
                .map_err(|e| Outcome::fail(EXIT_FAIL, format!("error: {e}")))?;
            Ok(Outcome::ok(if json {
                pretty(&json!({ "saps": render::labels(&g, &saps) }))
            } else {
                render::label_line(&g, &saps) + "\n"
            }))
        }
        Command::Approx {
            source,
            json,
            order,
            dot,
            output,
        } => {
            let g = load(source)?;
            let r = approx_m2vtcs_with_order(&g, order).map_err(|e| sparsify_failure(&g, &e))?;
            let value = render::sparsify_json(&g, &r);
            if let Some(path) = &output {
                write_file(path, &pretty(&value))?;
            }
            write_dot_file(dot.as_deref(), &g, &r.e2t)?;
            let out = Outcome::ok(if json {
                pretty(&value)
            } else {
                render::sparsify_text(&g, &r)
            });
            Ok(out.with_code(if r.verdict.is_pass() {
                EXIT_OK
            } else {
                EXIT_FAIL
            }))
        }
        Command::Exact {
            source,
            problem,
            budget,
            json,
            dot,
        } => {
            let g = load(source)?;
            let solved = match problem {
                Problem::TwoVcs => exact_min_2vcs(&g, budget.budget()),
                Problem::TwoVtcs => exact_min_2vtcs(&g, budget.budget()),
            };
            let (r, code) = match solved {
                Ok(r) => (r, EXIT_OK),
                Err(ExactError::BudgetExceeded { partial }) => (*partial, EXIT_BUDGET),
                Err(ExactError::InputNot2Vtc(c)) => {
                    return Err(Outcome::fail(
                        EXIT_FAIL,
                        format!(
                            "error: input is not 2-vertex-twinless connected: {}",
                            render::certificate_text(&g, &c)
                        ),
                    ))
                }
                Err(e) => return Err(Outcome::fail(EXIT_FAIL, format!("error: {e}"))),
            };
            write_dot_file(dot.as_deref(), &g, &r.optimum_edges)?;
            let mut out = Outcome::ok(if json {
                pretty(&render::exact_json(&g, problem.name(), &r))
            } else {
                render::exact_text(&g, problem.name(), &r)
            });
            if code == EXIT_BUDGET {
                out.stderr = "error: search budget exhausted before proving optimality\n".into();
            }
            Ok(out.with_code(code))
        }
        Command::Minimal {
            source,
            problem,
            order,
            json,
            dot,
        } => {
            let g = load(source)?;
            let set = match problem {
                Problem::TwoVcs => minimal_2vcs(&g, order),
                Problem::TwoVtcs => minimal_2vtcs(&g, order),
            }
            .map_err(|e| sparsify_failure(&g, &e))?;
            write_dot_file(dot.as_deref(), &g, &set)?;
            Ok(Outcome::ok(if json {
                pretty(&json!({
                    "problem": problem.name(),
                    "n": g.n(),
                    "m": g.m(),
                    "size": set.len(),
                    "edges": render::edge_pairs(&g, &set),
                }))
            } else {
                write_edge_subset(&g, &set)
            }))
        }
        Command::Gen {
            family,
            n,
            chords,
            seed,
            output,
        } => {
            let g = GeneratorSpec::new(family, n, chords, seed)
                .generate()
                .map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}")))?;
            let mut text = String::new();
            if family == Family::CyclePlusChords {
                let report = render::report_text(&g, &connectivity_report(&g));
                for line in report.lines() {
                    text.push_str("# ");
                    text.push_str(line);
                    text.push('\n');
                }
            }
            text.push_str(&write_edge_list(&g));
            match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(Outcome::default())
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Bench {
            sweep,
            exact,
            budget,
            order,
            seed,
            omit_timings,
            output,
        } => {
            let opts = BenchOptions {
                exact,
                budget: budget.budget(),
                order,
                omit_timings,
            };
            let records = run_sweeps(&sweep, seed, &opts);
            let csv = to_csv(&records);
            let summary = format!("summary: {}\n", BenchSummary::of(&records));
            let mut out = match output {
                Some(path) => {
                    write_file(&path, &csv)?;
                    Outcome::default()
                }
                None => Outcome::ok(csv),
            };
            out.stderr = summary;
            Ok(out)
        }
        Command::Verify { source, json } => {
            let g = load(source)?;
            let verdict = verify_2vtc(&g);
            let code = if verdict.is_pass() {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            let text = if json {
                pretty(
                    &json!({ "n": g.n(), "m": g.m(), "verdict": render::verdict_json(&g, &verdict) }),
                )
            } else {
                render::verdict_text(&g, &verdict) + "\n"
            };
            Ok(Outcome::ok(text).with_code(code))
        }
    }
}
