//! Benchmark suites. Every run is validated before its CSV row exists.

use crate::explorer::{explore, greedy_explore, theorem_bound, Algorithm, ExploreError};
use crate::generators::{required_horizon, Family, GenSpec, TreeKind};
use crate::validator::{check_exploration, check_theorem_bound};
use num_rational::Ratio;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub const CSV_HEADER: &str = "family,n,T,D_num,D_den,algo,seed,span,bound,seconds";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Default,
    BoundedDegree,
    RotatingStar,
    Smoke,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Default,
        Suite::BoundedDegree,
        Suite::RotatingStar,
        Suite::Smoke,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Default => "default",
            Suite::BoundedDegree => "bounded-degree",
            Suite::RotatingStar => "rotating-star",
            Suite::Smoke => "smoke",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, BenchError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| BenchError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown suite {0:?} (default, bounded-degree, rotating-star, smoke)")]
    UnknownSuite(String),
    #[error("{instance} seed {seed} ({algo}): {source}")]
    Explore {
        instance: String,
        seed: u64,
        algo: Algorithm,
        source: ExploreError,
    },
    #[error("{instance} seed {seed} ({algo}) failed validation: {detail}")]
    Invalid {
        instance: String,
        seed: u64,
        algo: Algorithm,
        detail: String,
    },
    #[error("cannot build a thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// One instance and the algorithms to run on it.
#[derive(Clone, Debug)]
pub struct BenchCell {
    pub spec: GenSpec,
    pub algos: Vec<Algorithm>,
    pub start: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: &'static str,
    pub n: usize,
    pub horizon: usize,
    pub d: Ratio<u64>,
    pub algo: Algorithm,
    pub seed: u64,
    pub span: usize,
    pub bound: u64,
    pub seconds: f64,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{:.3}",
            self.family,
            self.n,
            self.horizon,
            self.d.numer(),
            self.d.denom(),
            self.algo,
            self.seed,
            self.span,
            self.bound,
            self.seconds
        )
    }
}

fn sized(family: impl Fn(usize) -> Family) -> Family {
    let f = family(0);
    f.with_horizon(required_horizon(f.n(), f.degree_upper()) as usize)
        .expect("random families accept any horizon")
}

/// Instances of a suite, in output order.
pub fn suite_cells(suite: Suite) -> Vec<BenchCell> {
    let both = vec![Algorithm::Theorem, Algorithm::Greedy];
    let mut cells = Vec::new();
    let mut push = |family: Family, seed: u64| {
        cells.push(BenchCell {
            spec: GenSpec::new(family, seed).expect("suite specs are valid"),
            algos: both.clone(),
            start: 0,
        })
    };
    match suite {
        Suite::Default => {
            for n in [32, 64, 128, 256] {
                for seed in 1..=3 {
                    let tree = TreeKind::Ust;
                    push(sized(|horizon| Family::RandomTrees { n, horizon, tree }), seed);
                }
            }
        }
        Suite::BoundedDegree => {
            for d in [3, 5] {
                for n in [64, 128] {
                    for seed in 1..=3 {
                        push(sized(|horizon| Family::BoundedDegree { n, horizon, d }), seed);
                    }
                }
            }
        }
        Suite::RotatingStar => {
            for n in [32, 64, 128] {
                push(sized(|horizon| Family::RotatingStar { n, horizon }), 0);
            }
        }
        Suite::Smoke => {
            for n in [8, 16] {
                let tree = TreeKind::Ust;
                push(sized(|horizon| Family::RandomTrees { n, horizon, tree }), 1);
            }
            push(sized(|horizon| Family::RotatingStar { n: 8, horizon }), 0);
        }
    }
    cells
}

/// Runs and validates every algorithm of one cell.
pub fn run_cell(cell: &BenchCell) -> Result<Vec<BenchRow>, BenchError> {
    let g = cell.spec.graph();
    let family = cell.spec.family();
    let seed = cell.spec.seed_value();
    let instance = family.to_string();
    let d = g
        .profile()
        .map(|p| p.average())
        .unwrap_or_else(|| Ratio::from_integer(0));
    let bound = theorem_bound(g.n(), d);
    let mut rows = Vec::with_capacity(cell.algos.len());
    for &algo in &cell.algos {
        let result = match algo {
            Algorithm::Theorem => explore(&g, cell.start),
            Algorithm::Greedy => greedy_explore(&g, cell.start),
            Algorithm::Oracle => panic!("the oracle is not part of bench suites"),
        };
        let report = result.map_err(|source| BenchError::Explore {
            instance: instance.clone(),
            seed,
            algo,
            source,
        })?;
        let mut outcome = check_exploration(&g, &report.walk, cell.start);
        if algo == Algorithm::Theorem {
            outcome.merge(check_theorem_bound(&g, &report));
        }
        if let Some(v) = outcome.violations.first() {
            return Err(BenchError::Invalid {
                instance,
                seed,
                algo,
                detail: v.to_string(),
            });
        }
        rows.push(BenchRow {
            family: family.name(),
            n: g.n(),
            horizon: g.horizon(),
            d,
            algo,
            seed,
            span: report.walk.span(),
            bound,
            seconds: report.elapsed.as_secs_f64(),
        });
    }
    Ok(rows)
}

/// Runs cells on up to `jobs` threads; rows keep the suite order.
pub fn run_cells(cells: &[BenchCell], jobs: usize) -> Result<Vec<BenchRow>, BenchError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    let results: Vec<_> = pool.install(|| cells.par_iter().map(run_cell).collect());
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn bench_suite(suite: Suite, jobs: usize) -> Result<Vec<BenchRow>, BenchError> {
    run_cells(&suite_cells(suite), jobs)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}
