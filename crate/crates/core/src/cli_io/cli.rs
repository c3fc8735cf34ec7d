use super::bench::{bench_suite, to_csv, Suite};
use super::format::{parse_instance, parse_walk, write_instance, write_instance_spec_only, write_walk};
use crate::explorer::{explore, greedy_explore, theorem_bound, Algorithm, ExplorationReport};
use crate::generators::{required_horizon, Family, GenSpec, GridLeavesSpec, TreeKind};
use crate::oracle::{optimal_exploration, OracleError};
use crate::tempgraph::{TemporalGraph, TemporalWalk};
use crate::validator::{check_exploration, check_theorem_bound};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tempex", version, about = "Explore always-connected temporal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an instance file for one generator family.
    Generate(GenerateArgs),
    /// Print n, T, D, connectivity and the length bound of an instance.
    Stats {
        file: PathBuf,
    },
    /// Compute an exploration and write it as a walk file.
    Explore {
        #[arg(long, value_enum, default_value = "thm1")]
        algo: AlgoArg,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        start: usize,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Where to write the run report (stdout if omitted).
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        /// Step budget for the oracle (defaults to T).
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Check a walk file against an instance.
    Validate {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        walk: PathBuf,
        #[arg(long)]
        start: usize,
        /// Also require span <= theorem bound.
        #[arg(long)]
        check_bound: bool,
    },
    /// Run a benchmark suite and write CSV rows.
    Bench {
        #[arg(long)]
        suite: String,
        #[arg(long, value_name = "FILE")]
        csv: PathBuf,
        #[arg(long, env = "TEMPEX_JOBS", default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Thm1,
    Greedy,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    GridLeaves,
    RandomTrees,
    RotatingStar,
    BoundedDegree,
}

#[derive(clap::Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    n: Option<usize>,
    /// Number of snapshots; defaults to the horizon explore needs.
    #[arg(long)]
    horizon: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    deg: Option<usize>,
    #[arg(long, default_value = "ust")]
    tree: String,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write only the header; the instance is regenerated on load.
    #[arg(long)]
    spec_only: bool,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        msg: msg.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<TemporalGraph, Failure> {
    parse_instance(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_walk(path: &Path) -> Result<TemporalWalk, Failure> {
    parse_walk(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Runs the command line and returns the process exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli.command) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("tempex: {}", f.msg);
            f.code
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate(args) => generate(args),
        Command::Stats { file } => {
            let g = load_graph(&file)?;
            print!("{}", stats_text(&g));
            Ok(())
        }
        Command::Explore {
            algo,
            input,
            start,
            out,
            report,
            t_max,
        } => {
            let g = load_graph(&input)?;
            if start >= g.n() {
                return Err(usage(format!("start {start} out of range for n = {}", g.n())));
            }
            let rep = match algo {
                AlgoArg::Thm1 => explore(&g, start).map_err(|e| invalid(e.to_string()))?,
                AlgoArg::Greedy => greedy_explore(&g, start).map_err(|e| invalid(e.to_string()))?,
                AlgoArg::Oracle => {
                    let t0 = std::time::Instant::now();
                    let walk = optimal_exploration(&g, start, t_max.unwrap_or(g.horizon()))
                        .map_err(|e| match e {
                            OracleError::InstanceTooLarge { .. } => usage(e.to_string()),
                            OracleError::StartOutOfRange { .. } => usage(e.to_string()),
                        })?
                        .ok_or_else(|| invalid("no exploration exists within the step budget"))?;
                    let mut rep = ExplorationReport::for_walk(&g, walk);
                    rep.elapsed = t0.elapsed();
                    rep
                }
            };
            write(&out, &write_walk(&rep.walk))?;
            let text = report_text(&rep);
            match report {
                Some(path) => write(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Validate {
            graph,
            walk,
            start,
            check_bound,
        } => {
            let g = load_graph(&graph)?;
            let w = load_walk(&walk)?;
            let mut outcome = check_exploration(&g, &w, start);
            if check_bound {
                outcome.merge(check_theorem_bound(&g, &ExplorationReport::for_walk(&g, w)));
            }
            for v in &outcome.violations {
                eprintln!("{v}");
            }
            if outcome.ok() {
                println!("ok");
                Ok(())
            } else {
                Err(invalid(format!("{} violation(s)", outcome.violations.len())))
            }
        }
        Command::Bench { suite, csv, jobs } => {
            let suite: Suite = suite.parse().map_err(|e| usage(format!("{e}")))?;
            let rows = bench_suite(suite, jobs).map_err(|e| invalid(e.to_string()))?;
            write(&csv, &to_csv(&rows))
        }
    }
}

fn generate(a: GenerateArgs) -> Result<(), Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("--{flag} is required for this kind")));
    let horizon = a.horizon.unwrap_or(0);
    let mut family = match a.kind {
        KindArg::GridLeaves => Family::GridLeaves(GridLeavesSpec {
            rows: need(a.rows, "rows")?,
            cols: need(a.cols, "cols")?,
            deg: need(a.deg, "deg")?,
        }),
        KindArg::RandomTrees => Family::RandomTrees {
            n: need(a.n, "n")?,
            horizon,
            tree: a.tree.parse::<TreeKind>().map_err(|e| usage(e.to_string()))?,
        },
        KindArg::RotatingStar => Family::RotatingStar {
            n: need(a.n, "n")?,
            horizon,
        },
        KindArg::BoundedDegree => Family::BoundedDegree {
            n: need(a.n, "n")?,
            horizon,
            d: need(a.d, "d")?,
        },
    };
    family.validate().map_err(|e| usage(e.to_string()))?;
    match (a.kind, a.horizon) {
        (KindArg::GridLeaves, Some(_)) => {
            return Err(usage("grid-leaves takes its horizon from --rows"))
        }
        (KindArg::GridLeaves, None) | (_, Some(_)) => {}
        (_, None) => {
            let h = required_horizon(family.n(), family.degree_upper()) as usize;
            family = family.with_horizon(h).map_err(|e| usage(e.to_string()))?;
        }
    }
    let spec = GenSpec::new(family, a.seed).map_err(|e| usage(e.to_string()))?;
    let g = spec.graph();
    let text = if a.spec_only {
        write_instance_spec_only(&g).expect("generated graphs know their origin")
    } else {
        write_instance(&g)
    };
    write(&a.out, &text)
}

pub fn stats_text(g: &TemporalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", g.n());
    let _ = writeln!(out, "T = {}", g.horizon());
    match g.profile() {
        Some(p) => {
            let d = p.average();
            let _ = writeln!(out, "D = {d}");
            let _ = writeln!(out, "always_connected = {}", g.check_always_connected(g.full_interval()));
            let _ = writeln!(out, "theorem_bound = {}", theorem_bound(g.n(), d));
        }
        None => {
            let _ = writeln!(out, "D = undefined");
            let _ = writeln!(out, "always_connected = true");
        }
    }
    out
}

pub fn report_text(r: &ExplorationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algo = {}", r.algorithm);
    let _ = writeln!(out, "n = {}", r.n);
    let _ = writeln!(out, "T = {}", r.horizon);
    let _ = writeln!(out, "D = {}", r.d);
    let _ = writeln!(out, "span = {}", r.walk.span());
    let _ = writeln!(out, "bound = {}", r.bound);
    if r.algorithm == Algorithm::Theorem {
        let _ = writeln!(out, "phases = {}", r.phases.len());
    }
    let _ = writeln!(out, "seconds = {:.3}", r.elapsed.as_secs_f64());
    out
}
