//! Exploration of always-connected temporal graphs.
//!
//! [`explore`] runs in phases of `2n` steps. Phase `i` first travels for
//! `n - 1` steps (enough to reach any vertex) to the start of a walk found
//! by [`cover_many`] on the next `n` steps, which visits at least
//! `floor(sqrt(|X| / (D log2 |X|)) / 8) + 1` of the still unvisited
//! vertices `X`. Once at most two vertices remain, two direct hops finish
//! the job. [`theorem_bound`] turns the phase count into an explicit length
//! bound.

use crate::lemmas::{dominator_set, LemmaError};
use crate::reachability::{earliest_arrival, extract_walk, forward_stream, universal_walk, ReachError};
use crate::tempgraph::{TemporalGraph, TemporalWalk, TimeInterval, VertexSet, WalkError};
use num_rational::Ratio;
use std::fmt;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExploreError {
    #[error("start vertex {start} out of range for {n} vertices")]
    StartOutOfRange { start: usize, n: usize },
    #[error("horizon {horizon} is too short{}", match .required { Some(r) => format!(", {r} steps required"), None => String::new() })]
    HorizonExhausted { required: Option<u64>, horizon: usize },
    #[error("interval of {len} steps is shorter than the required {needed}")]
    IntervalTooShort { len: usize, needed: usize },
    #[error("X must contain at least two vertices (got {size})")]
    XTooSmall { size: usize },
    #[error("a snapshot is disconnected")]
    NotAlwaysConnected,
    #[error("dominator construction exceeded its size bound ({rounds} > {bound})")]
    BoundViolated { rounds: usize, bound: usize },
    #[error("dominator sets used up X")]
    DominatorsExhausted,
    #[error(transparent)]
    Reach(ReachError),
    #[error(transparent)]
    Lemma(LemmaError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

impl From<ReachError> for ExploreError {
    fn from(e: ReachError) -> Self {
        match e {
            ReachError::NotAlwaysConnected => ExploreError::NotAlwaysConnected,
            ReachError::IntervalTooShort { len, needed } => {
                ExploreError::IntervalTooShort { len, needed }
            }
            other => ExploreError::Reach(other),
        }
    }
}

impl From<LemmaError> for ExploreError {
    fn from(e: LemmaError) -> Self {
        match e {
            LemmaError::NotAlwaysConnected => ExploreError::NotAlwaysConnected,
            LemmaError::BoundViolated { rounds, bound } => {
                ExploreError::BoundViolated { rounds, bound }
            }
            LemmaError::XTooSmall { size } => ExploreError::XTooSmall { size },
            LemmaError::Reach(r) => r.into(),
            other => ExploreError::Lemma(other),
        }
    }
}

/// Explicit length bound `2n (i0 + 1)` with
/// `i0 = sum_{k=0}^{ceil(log2 n)} ceil(4 sqrt(2 D (n/2^k) max(1, log2(n/2^k))))`.
///
/// `i0` bounds the number of `2n`-step phases that shrink the unvisited set
/// to at most two vertices; the extra phase finishes those. Evaluated in
/// `f64`.
pub fn theorem_bound(n: usize, d: Ratio<u64>) -> u64 {
    if n <= 1 {
        return 0;
    }
    let d = *d.numer() as f64 / *d.denom() as f64;
    let levels = (n - 1).ilog2() + 1;
    let mut i0 = 0u64;
    for k in 0..=levels {
        let size = n as f64 / f64::powi(2.0, k as i32);
        let lg = size.log2().max(1.0);
        i0 += (4.0 * (2.0 * d * size * lg).sqrt()).ceil() as u64;
    }
    2 * n as u64 * (i0 + 1)
}

/// Parameters of one [`cover_many`] call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverParams {
    pub x_len: usize,
    /// Number of sub-intervals; the walk covers at least `m + 1` vertices.
    pub m: usize,
    /// Dominator parameter.
    pub k: usize,
}

impl CoverParams {
    pub fn new(x_len: usize, d: f64) -> Self {
        let lg = (x_len as f64).log2().max(1.0);
        let m = ((x_len as f64 / (d * lg)).sqrt() / 8.0).floor() as usize;
        let k = ((d * x_len as f64 / lg).sqrt().ceil() as usize).max(2);
        CoverParams { x_len, m, k }
    }
}

/// Everything [`cover_many_detailed`] decided along the way.
#[derive(Clone, Debug)]
pub struct CoverResult {
    pub walk: TemporalWalk,
    pub params: CoverParams,
    pub pieces: Vec<TimeInterval>,
    pub dominators: Vec<VertexSet>,
    /// `v_1, ..., v_{m+1}`: one vertex per piece, then the final target.
    pub chain: Vec<usize>,
}

/// A walk inside `interval` (at least `n` steps) visiting at least `m + 1`
/// distinct members of `x`.
pub fn cover_many(
    g: &TemporalGraph,
    interval: TimeInterval,
    x: &VertexSet,
) -> Result<TemporalWalk, ExploreError> {
    cover_many_detailed(g, interval, x).map(|r| r.walk)
}

pub fn cover_many_detailed(
    g: &TemporalGraph,
    interval: TimeInterval,
    x: &VertexSet,
) -> Result<CoverResult, ExploreError> {
    let n = g.n();
    g.check_interval(&interval)
        .map_err(|e| ExploreError::Reach(e.into()))?;
    if interval.len() < n {
        return Err(ExploreError::IntervalTooShort {
            len: interval.len(),
            needed: n,
        });
    }
    if x.len() < 2 {
        return Err(ExploreError::XTooSmall { size: x.len() });
    }
    let d = g.profile().expect("nonempty horizon").average_f64();
    let params = CoverParams::new(x.len(), d);
    if params.m == 0 {
        let v = x.min().unwrap();
        return Ok(CoverResult {
            walk: TemporalWalk::stationary(interval.lo(), v),
            params,
            pieces: vec![interval],
            dominators: Vec::new(),
            chain: vec![v],
        });
    }

    let pieces = interval.partition(params.m);
    let mut used = VertexSet::new(n);
    let mut dominators = Vec::with_capacity(params.m);
    for piece in &pieces {
        let rest = x.difference(&used);
        if rest.len() < 2 {
            return Err(ExploreError::DominatorsExhausted);
        }
        let r = dominator_set(g, *piece, &rest, params.k)?;
        used.union_with(&r.set);
        dominators.push(r.set);
    }
    let mut target = x
        .difference(&used)
        .min()
        .ok_or(ExploreError::DominatorsExhausted)?;

    // link backwards: v_i in S_i reaching v_{i+1} inside piece i
    let mut chain = vec![target];
    let mut legs = Vec::with_capacity(params.m);
    for (piece, set) in pieces.iter().zip(&dominators).rev() {
        let mut leg = None;
        for s in set.iter() {
            let trace = forward_stream(g, s, *piece)?;
            if trace.final_layer().contains(target) {
                leg = Some((s, extract_walk(&trace, target)?));
                break;
            }
        }
        let (s, walk) = leg.expect("dominator set does not dominate its piece");
        legs.push(walk);
        chain.push(s);
        target = s;
    }
    legs.reverse();
    chain.reverse();
    let mut walk = legs[0].clone();
    for leg in &legs[1..] {
        walk.extend(leg)?;
    }
    Ok(CoverResult {
        walk,
        params,
        pieces,
        dominators,
        chain,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Theorem,
    Greedy,
    Oracle,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Theorem => "thm1",
            Algorithm::Greedy => "greedy",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseAction {
    CoverMany { m: usize },
    FinalHops,
}

/// One `2n`-step phase of [`explore`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePlan {
    pub index: usize,
    /// `[2in + 1, (2i + 1)n - 1]`
    pub travel: TimeInterval,
    /// `[(2i + 1)n, 2(i + 1)n - 1]`
    pub cover: TimeInterval,
    /// Vertices not yet visited when the phase starts.
    pub remaining: VertexSet,
    pub action: PhaseAction,
    pub newly_covered: usize,
}

#[derive(Clone, Debug)]
pub struct ExplorationReport {
    pub algorithm: Algorithm,
    pub walk: TemporalWalk,
    pub phases: Vec<PhasePlan>,
    pub bound: u64,
    pub d: Ratio<u64>,
    pub n: usize,
    pub horizon: usize,
    pub elapsed: Duration,
}

impl ExplorationReport {
    /// Report around an existing walk; `D` and the bound come from the
    /// graph's cached profile.
    pub fn for_walk(g: &TemporalGraph, walk: TemporalWalk) -> Self {
        let d = g
            .profile()
            .map(|p| p.average())
            .unwrap_or_else(|| Ratio::from_integer(0));
        ExplorationReport {
            algorithm: Algorithm::Oracle,
            walk,
            phases: Vec::new(),
            bound: theorem_bound(g.n(), d),
            d,
            n: g.n(),
            horizon: g.horizon(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn span(&self) -> usize {
        self.walk.span()
    }
}

fn trivial_report(g: &TemporalGraph, start: usize, algorithm: Algorithm, t0: Instant) -> ExplorationReport {
    let mut r = ExplorationReport::for_walk(g, TemporalWalk::stationary(1, start));
    r.algorithm = algorithm;
    r.elapsed = t0.elapsed();
    r
}

/// Phase-structured exploration from `start`, spanning at most
/// `theorem_bound(n, D)` steps. Requires `T >= theorem_bound(n, D)`.
pub fn explore(g: &TemporalGraph, start: usize) -> Result<ExplorationReport, ExploreError> {
    let t0 = Instant::now();
    let n = g.n();
    if start >= n {
        return Err(ExploreError::StartOutOfRange { start, n });
    }
    if n == 1 {
        return Ok(trivial_report(g, start, Algorithm::Theorem, t0));
    }
    let Some(profile) = g.profile() else {
        return Err(ExploreError::HorizonExhausted {
            required: None,
            horizon: 0,
        });
    };
    let d = profile.average();
    let bound = theorem_bound(n, d);
    if (g.horizon() as u64) < bound {
        return Err(ExploreError::HorizonExhausted {
            required: Some(bound),
            horizon: g.horizon(),
        });
    }
    let d_f = profile.average_f64();

    let mut walk = TemporalWalk::stationary(1, start);
    let mut remaining = VertexSet::full(n);
    remaining.remove(start);
    let mut phases = Vec::new();
    let mut i = 0;
    while !remaining.is_empty() {
        let travel = TimeInterval::new(2 * i * n + 1, (2 * i + 1) * n - 1);
        let cover = TimeInterval::new((2 * i + 1) * n, 2 * (i + 1) * n - 1);
        if cover.hi() > g.horizon() {
            return Err(ExploreError::HorizonExhausted {
                required: Some(bound),
                horizon: g.horizon(),
            });
        }
        let before = remaining.clone();
        let action = if remaining.len() <= 2 {
            let hops = [travel, TimeInterval::new(cover.lo(), cover.hi() - 1)];
            for (target, hop_interval) in before.iter().zip(hops) {
                if !remaining.contains(target) {
                    continue;
                }
                let hop = universal_walk(g, walk.last(), target, hop_interval)?;
                walk.extend(&hop)?;
                for &v in hop.vertices() {
                    remaining.remove(v);
                }
            }
            PhaseAction::FinalHops
        } else {
            let params = CoverParams::new(remaining.len(), d_f);
            let cover_walk = cover_many(g, cover, &remaining)?;
            let link = universal_walk(g, walk.last(), cover_walk.first(), travel)?;
            walk.extend(&link)?;
            walk.extend(&cover_walk)?;
            for &v in link.vertices().iter().chain(cover_walk.vertices()) {
                remaining.remove(v);
            }
            PhaseAction::CoverMany { m: params.m }
        };
        phases.push(PhasePlan {
            index: i,
            travel,
            cover,
            newly_covered: before.len() - remaining.len(),
            remaining: before,
            action,
        });
        i += 1;
    }
    walk.trim_trailing_waits();
    Ok(ExplorationReport {
        algorithm: Algorithm::Theorem,
        walk,
        phases,
        bound,
        d,
        n,
        horizon: g.horizon(),
        elapsed: t0.elapsed(),
    })
}

/// Baseline: repeatedly walk to the unvisited vertex that can be reached
/// earliest (smallest id on ties). No length guarantee.
pub fn greedy_explore(g: &TemporalGraph, start: usize) -> Result<ExplorationReport, ExploreError> {
    let t0 = Instant::now();
    let n = g.n();
    if start >= n {
        return Err(ExploreError::StartOutOfRange { start, n });
    }
    if n == 1 {
        return Ok(trivial_report(g, start, Algorithm::Greedy, t0));
    }
    let mut walk = TemporalWalk::stationary(1, start);
    let mut unvisited = VertexSet::full(n);
    unvisited.remove(start);
    while !unvisited.is_empty() {
        let from = walk.end_step();
        let exhausted = ExploreError::HorizonExhausted {
            required: None,
            horizon: g.horizon(),
        };
        if from > g.horizon() {
            return Err(exhausted);
        }
        let interval = TimeInterval::new(from, g.horizon());
        let Some((_, leg)) = earliest_arrival(g, walk.last(), &unvisited, interval)? else {
            return Err(exhausted);
        };
        walk.extend(&leg)?;
        for &v in leg.vertices() {
            unvisited.remove(v);
        }
    }
    let mut report = ExplorationReport::for_walk(g, walk);
    report.algorithm = Algorithm::Greedy;
    report.elapsed = t0.elapsed();
    Ok(report)
}
