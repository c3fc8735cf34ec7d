//! Independent checkers. Everything here is recomputed from the raw
//! snapshot edge lists; cached adjacency and cached degree profiles are
//! never consulted.

use crate::explorer::{theorem_bound, ExplorationReport};
use crate::tempgraph::{DegreeProfile, TemporalGraph, TemporalWalk, TimeInterval, VertexSet};
use num_rational::Ratio;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    VertexOutOfRange,
    MissingEdge,
    BeyondHorizon,
    LateStart,
    WrongStart,
    Uncovered,
    BoundExceeded,
    PairReachable,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::VertexOutOfRange => "vertex-out-of-range",
            ViolationKind::MissingEdge => "missing-edge",
            ViolationKind::BeyondHorizon => "beyond-horizon",
            ViolationKind::LateStart => "late-start",
            ViolationKind::WrongStart => "wrong-start",
            ViolationKind::Uncovered => "uncovered",
            ViolationKind::BoundExceeded => "bound-exceeded",
            ViolationKind::PairReachable => "pair-reachable",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub step: Option<usize>,
    pub detail: String,
}

/// One tab-separated line: kind, time step (`-` if none), detail.
impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(t) => write!(f, "{}\t{}\t{}", self.kind, t, self.detail),
            None => write!(f, "{}\t-\t{}", self.kind, self.detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationOutcome {
    pub violations: Vec<Violation>,
}

impl ValidationOutcome {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, kind: ViolationKind, step: Option<usize>, detail: String) {
        self.violations.push(Violation { kind, step, detail });
    }

    pub fn merge(&mut self, other: ValidationOutcome) {
        self.violations.extend(other.violations);
    }
}

/// Checks every step of `w` against the exact snapshot it uses.
pub fn check_walk(g: &TemporalGraph, w: &TemporalWalk) -> ValidationOutcome {
    let mut out = ValidationOutcome::default();
    for (j, &v) in w.vertices().iter().enumerate() {
        if v >= g.n() {
            out.push(
                ViolationKind::VertexOutOfRange,
                Some(w.start() + j),
                format!("vertex {v} with n = {}", g.n()),
            );
        }
    }
    if !out.ok() {
        return out;
    }
    if w.span() == 0 {
        return out;
    }
    let last = w.last_step();
    if last > g.horizon() {
        out.push(
            ViolationKind::BeyondHorizon,
            Some(last),
            format!("walk uses step {last} but the horizon is {}", g.horizon()),
        );
    }
    let covered = TimeInterval::new(w.start().min(g.horizon() + 1), last.min(g.horizon()));
    let vertices = w.vertices();
    g.for_each_raw(covered, |t, edges| {
        let (a, b) = (vertices[t - w.start()], vertices[t - w.start() + 1]);
        if a == b {
            return;
        }
        let key = (a.min(b) as u32, a.max(b) as u32);
        let present = edges
            .iter()
            .any(|&(x, y)| (x.min(y), x.max(y)) == key);
        if !present {
            out.push(
                ViolationKind::MissingEdge,
                Some(t),
                format!("edge {a}-{b} not in snapshot {t}"),
            );
        }
    });
    out
}

/// A valid walk that starts at time 1 at `start` and covers every vertex.
pub fn check_exploration(g: &TemporalGraph, w: &TemporalWalk, start: usize) -> ValidationOutcome {
    let mut out = check_walk(g, w);
    if w.start() != 1 {
        out.push(
            ViolationKind::LateStart,
            Some(w.start()),
            format!("walk starts at step {}", w.start()),
        );
    }
    if w.first() != start {
        out.push(
            ViolationKind::WrongStart,
            Some(w.start()),
            format!("walk starts at vertex {} instead of {start}", w.first()),
        );
    }
    let mut seen = vec![false; g.n()];
    for &v in w.vertices() {
        if v < g.n() {
            seen[v] = true;
        }
    }
    for (v, _) in seen.iter().enumerate().filter(|(_, &s)| !s) {
        out.push(ViolationKind::Uncovered, None, format!("vertex {v} never visited"));
    }
    out
}

/// Degree profile from raw edge lists.
pub fn recompute_profile(g: &TemporalGraph, interval: TimeInterval) -> Option<DegreeProfile> {
    if interval.is_empty() {
        return None;
    }
    let mut best = vec![0u32; g.n()];
    let mut deg = vec![0u32; g.n()];
    g.for_each_raw(interval, |_, edges| {
        deg.iter_mut().for_each(|d| *d = 0);
        for &(a, b) in edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        for v in 0..deg.len() {
            if deg[v] > best[v] {
                best[v] = deg[v];
            }
        }
    });
    Some(DegreeProfile::from_maxima(best))
}

/// The report's walk spans at most `theorem_bound(n, D)` with `D` taken
/// over the whole horizon.
pub fn check_theorem_bound(g: &TemporalGraph, report: &ExplorationReport) -> ValidationOutcome {
    let mut out = ValidationOutcome::default();
    let span = report.walk.span() as u64;
    let n = g.n();
    if n == 1 || span == 0 {
        return out;
    }
    // theorem_bound is monotone in D and D over a prefix never exceeds D
    // over [1, T], so the first prefix that already admits the span settles it
    let mut best = vec![0u64; n];
    let mut deg = vec![0u64; n];
    let mut sum = 0u64;
    let mut admitted = false;
    let mut t_seen = 0;
    while !admitted && t_seen < g.horizon() {
        t_seen += 1;
        g.for_each_raw(TimeInterval::new(t_seen, t_seen), |_, edges| {
            deg.iter_mut().for_each(|d| *d = 0);
            for &(a, b) in edges {
                deg[a as usize] += 1;
                deg[b as usize] += 1;
            }
        });
        for v in 0..n {
            if deg[v] > best[v] {
                sum += deg[v] - best[v];
                best[v] = deg[v];
            }
        }
        admitted = span <= theorem_bound(n, Ratio::new(sum, n as u64));
    }
    if !admitted {
        let d = Ratio::new(sum, n as u64);
        out.push(
            ViolationKind::BoundExceeded,
            None,
            format!(
                "span {span} exceeds bound {} (n = {n}, D = {d})",
                theorem_bound(n, d)
            ),
        );
    }
    out
}

/// No member of `x` reaches a different member of `x` inside `interval`.
pub fn check_no_x_pair_reachable(
    g: &TemporalGraph,
    x: &VertexSet,
    interval: TimeInterval,
) -> ValidationOutcome {
    let mut out = ValidationOutcome::default();
    let n = g.n();
    let sources: Vec<usize> = x.iter().collect();
    let mut reach: Vec<Vec<bool>> = sources
        .iter()
        .map(|&s| {
            let mut r = vec![false; n];
            r[s] = true;
            r
        })
        .collect();
    let mut prev = vec![false; n];
    g.for_each_raw(interval, |_, edges| {
        for r in reach.iter_mut() {
            prev.copy_from_slice(r);
            for &(a, b) in edges {
                let (a, b) = (a as usize, b as usize);
                if prev[a] {
                    r[b] = true;
                }
                if prev[b] {
                    r[a] = true;
                }
            }
        }
    });
    for (i, &s) in sources.iter().enumerate() {
        for &y in &sources {
            if y != s && reach[i][y] {
                out.push(
                    ViolationKind::PairReachable,
                    None,
                    format!("{s} reaches {y} within {interval}"),
                );
            }
        }
    }
    out
}
