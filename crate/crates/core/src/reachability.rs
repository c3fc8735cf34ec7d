//! Forward and backward temporal reachability with witness walks.
//!
//! With `I = [lo, hi]`, the forward layers are `F(u, lo - 1) = {u}` and
//! `F(u, t) = F(u, t - 1) ∪ N_t(F(u, t - 1))`; the backward layers are
//! `B(u, hi + 1) = {u}` and `B(u, t) = B(u, t + 1) ∪ N_t(B(u, t + 1))`.
//! Each vertex added to a layer remembers the step and the neighbour that
//! brought it in, which is enough to rebuild a walk.

use crate::tempgraph::{GraphError, TemporalGraph, TemporalWalk, TimeInterval, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReachError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {target} is not reachable within the traced interval")]
    Unreachable { target: usize },
    #[error("interval of {len} steps is shorter than the required {needed}")]
    IntervalTooShort { len: usize, needed: usize },
    #[error("no walk found although the interval is long enough; some snapshot is disconnected")]
    NotAlwaysConnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceMode {
    /// Keep one layer per time step.
    Layers,
    /// Keep only the final layer and the links.
    Streaming,
}

/// Result of a reachability sweep from one origin.
#[derive(Clone, Debug)]
pub struct ReachTrace {
    origin: usize,
    interval: TimeInterval,
    direction: Direction,
    layers: Vec<VertexSet>,
    /// Forward: `(t, predecessor)` for the step that first reached the
    /// vertex. Backward: `(t, successor)` for the step that first let the
    /// vertex reach the origin.
    links: Vec<Option<(usize, usize)>>,
    mode: TraceMode,
}

impl ReachTrace {
    pub fn origin(&self) -> usize {
        self.origin
    }

    /// The interval actually swept; shorter than requested after an early exit.
    pub fn interval(&self) -> TimeInterval {
        self.interval
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn mode(&self) -> TraceMode {
        self.mode
    }

    /// `F(u, hi)` for forward traces, `B(u, lo)` for backward ones.
    pub fn final_layer(&self) -> &VertexSet {
        match self.direction {
            Direction::Forward => self.layers.last().unwrap(),
            Direction::Backward => self.layers.first().unwrap(),
        }
    }

    /// All layers in time order: forward `F(u, lo - 1) ..= F(u, hi)`,
    /// backward `B(u, lo) ..= B(u, hi + 1)`. Streaming traces hold only the
    /// final layer.
    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    /// `F(u, t)` or `B(u, t)`; `None` outside the stored range.
    pub fn layer(&self, t: usize) -> Option<&VertexSet> {
        if self.mode == TraceMode::Streaming {
            return None;
        }
        let base = match self.direction {
            Direction::Forward => self.interval.lo() - 1,
            Direction::Backward => self.interval.lo(),
        };
        t.checked_sub(base).and_then(|j| self.layers.get(j))
    }

    pub fn link(&self, v: usize) -> Option<(usize, usize)> {
        self.links[v]
    }
}

fn check_vertex(g: &TemporalGraph, v: usize) -> Result<(), ReachError> {
    if v >= g.n() {
        return Err(ReachError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// Forward sweep that stops as soon as `stop` accepts the current layer.
fn sweep_forward<F>(
    g: &TemporalGraph,
    u: usize,
    interval: TimeInterval,
    mode: TraceMode,
    mut stop: F,
) -> Result<ReachTrace, ReachError>
where
    F: FnMut(&VertexSet) -> bool,
{
    check_vertex(g, u)?;
    g.check_interval(&interval)?;
    let n = g.n();
    let mut current = VertexSet::singleton(n, u);
    let mut links = vec![None; n];
    let mut layers = vec![current.clone()];
    let mut last = interval.lo() - 1;
    let mut added = Vec::new();

    if !stop(&current) {
        for t in interval.steps() {
            if current.is_full() {
                if mode == TraceMode::Layers {
                    layers.extend(std::iter::repeat_n(current.clone(), interval.hi() + 1 - t));
                }
                last = interval.hi();
                break;
            }
            let snap = g.snapshot(t);
            added.clear();
            // ascending x: the first claim on w is by its smallest predecessor
            for x in current.iter() {
                for &w in snap.neighbors(x) {
                    let w = w as usize;
                    if !current.contains(w) && links[w].is_none() {
                        links[w] = Some((t, x));
                        added.push(w);
                    }
                }
            }
            for &w in &added {
                current.insert(w);
            }
            if mode == TraceMode::Layers {
                layers.push(current.clone());
            }
            last = t;
            if stop(&current) {
                break;
            }
        }
    }
    if mode == TraceMode::Streaming {
        layers = vec![current];
    }
    Ok(ReachTrace {
        origin: u,
        interval: TimeInterval::new(interval.lo(), last),
        direction: Direction::Forward,
        layers,
        links,
        mode,
    })
}

/// Forward layers `F(u, t)` for every `t` in `interval`.
pub fn forward_trace(
    g: &TemporalGraph,
    u: usize,
    interval: TimeInterval,
) -> Result<ReachTrace, ReachError> {
    sweep_forward(g, u, interval, TraceMode::Layers, |_| false)
}

/// Forward sweep keeping only the final layer and the links.
pub fn forward_stream(
    g: &TemporalGraph,
    u: usize,
    interval: TimeInterval,
) -> Result<ReachTrace, ReachError> {
    sweep_forward(g, u, interval, TraceMode::Streaming, |_| false)
}

fn sweep_backward(
    g: &TemporalGraph,
    u: usize,
    interval: TimeInterval,
    mode: TraceMode,
) -> Result<ReachTrace, ReachError> {
    check_vertex(g, u)?;
    g.check_interval(&interval)?;
    let n = g.n();
    let mut current = VertexSet::singleton(n, u);
    let mut links = vec![None; n];
    let mut layers = vec![current.clone()];
    let mut added = Vec::new();
    for t in interval.steps().rev() {
        if !current.is_full() {
            let snap = g.snapshot(t);
            added.clear();
            for x in current.iter() {
                for &w in snap.neighbors(x) {
                    let w = w as usize;
                    if !current.contains(w) && links[w].is_none() {
                        links[w] = Some((t, x));
                        added.push(w);
                    }
                }
            }
            for &w in &added {
                current.insert(w);
            }
        }
        if mode == TraceMode::Layers {
            layers.push(current.clone());
        }
    }
    if mode == TraceMode::Streaming {
        layers = vec![current];
    } else {
        layers.reverse();
    }
    Ok(ReachTrace {
        origin: u,
        interval,
        direction: Direction::Backward,
        layers,
        links,
        mode,
    })
}

/// Backward layers `B(u, t)`: vertices that can reach `u` when starting at
/// time `t` and staying inside `interval`.
pub fn backward_trace(
    g: &TemporalGraph,
    u: usize,
    interval: TimeInterval,
) -> Result<ReachTrace, ReachError> {
    sweep_backward(g, u, interval, TraceMode::Layers)
}

pub fn backward_stream(
    g: &TemporalGraph,
    u: usize,
    interval: TimeInterval,
) -> Result<ReachTrace, ReachError> {
    sweep_backward(g, u, interval, TraceMode::Streaming)
}

/// Rebuilds a witness walk from a trace.
///
/// Forward traces yield a walk from the origin to `target`; backward traces
/// yield a walk from `target` to the origin. The walk starts at the trace's
/// first step and ends on arrival.
pub fn extract_walk(trace: &ReachTrace, target: usize) -> Result<TemporalWalk, ReachError> {
    let lo = trace.interval.lo();
    if target >= trace.links.len() || !trace.final_layer().contains(target) {
        return Err(ReachError::Unreachable { target });
    }
    if target == trace.origin {
        return Ok(TemporalWalk::stationary(lo, target));
    }
    let (first, moves) = match trace.direction {
        Direction::Forward => {
            let mut moves = Vec::new();
            let mut v = target;
            while v != trace.origin {
                let (t, pred) = trace.links[v].expect("reached vertex without a link");
                moves.push((t, v));
                v = pred;
            }
            moves.reverse();
            (trace.origin, moves)
        }
        Direction::Backward => {
            let mut moves = Vec::new();
            let mut v = target;
            while v != trace.origin {
                let (t, succ) = trace.links[v].expect("reached vertex without a link");
                moves.push((t, succ));
                v = succ;
            }
            (target, moves)
        }
    };
    let mut vertices = vec![first];
    let mut next_step = lo;
    let mut cur = first;
    for (t, to) in moves {
        debug_assert!(t >= next_step);
        while next_step < t {
            vertices.push(cur);
            next_step += 1;
        }
        vertices.push(to);
        next_step = t + 1;
        cur = to;
    }
    Ok(TemporalWalk::new(lo, vertices))
}

/// A walk from `u` to `v` inside `interval`, which must span at least
/// `n - 1` steps. Returns the earliest-arrival witness; it is not padded.
pub fn universal_walk(
    g: &TemporalGraph,
    u: usize,
    v: usize,
    interval: TimeInterval,
) -> Result<TemporalWalk, ReachError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    g.check_interval(&interval)?;
    if interval.len() + 1 < g.n() {
        return Err(ReachError::IntervalTooShort {
            len: interval.len(),
            needed: g.n() - 1,
        });
    }
    if u == v {
        return Ok(TemporalWalk::stationary(interval.lo(), u));
    }
    let trace = sweep_forward(g, u, interval, TraceMode::Streaming, |layer| {
        layer.contains(v)
    })?;
    if !trace.final_layer().contains(v) {
        return Err(ReachError::NotAlwaysConnected);
    }
    extract_walk(&trace, v)
}

/// Earliest-arrival walk from `u` to any vertex of `targets` inside
/// `interval`; among the targets reached first, the smallest id wins.
pub fn earliest_arrival(
    g: &TemporalGraph,
    u: usize,
    targets: &VertexSet,
    interval: TimeInterval,
) -> Result<Option<(usize, TemporalWalk)>, ReachError> {
    let trace = sweep_forward(g, u, interval, TraceMode::Streaming, |layer| {
        layer.intersects(targets)
    })?;
    let hit = trace.final_layer().intersection(targets).min();
    match hit {
        Some(v) => Ok(Some((v, extract_walk(&trace, v)?))),
        None => Ok(None),
    }
}

/// Final forward layers for many origins in a single pass over `interval`.
pub fn forward_reach_sets(
    g: &TemporalGraph,
    origins: &[usize],
    interval: TimeInterval,
) -> Result<Vec<VertexSet>, ReachError> {
    for &u in origins {
        check_vertex(g, u)?;
    }
    g.check_interval(&interval)?;
    let n = g.n();
    // reached[v] is a bitset over origin slots: which origins reach v
    let words = origins.len().div_ceil(64);
    let mut reached = vec![0u64; n * words];
    for (i, &u) in origins.iter().enumerate() {
        reached[u * words + i / 64] |= 1 << (i % 64);
    }
    let mut prev = reached.clone();
    g.for_each_raw(interval, |_, edges| {
        prev.copy_from_slice(&reached);
        for &(a, b) in edges {
            let (a, b) = (a as usize * words, b as usize * words);
            for w in 0..words {
                reached[a + w] |= prev[b + w];
                reached[b + w] |= prev[a + w];
            }
        }
    });
    let mut sets: Vec<VertexSet> = vec![VertexSet::new(n); origins.len()];
    for v in 0..n {
        for w in 0..words {
            let mut bits = reached[v * words + w];
            while bits != 0 {
                sets[w * 64 + bits.trailing_zeros() as usize].insert(v);
                bits &= bits - 1;
            }
        }
    }
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tempgraph::fixtures::*;
    use crate::validator::check_walk;
    use proptest::prelude::*;

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, items.iter().copied())
    }

    /// Exhaustive walk enumeration restricted to the given interval.
    fn enumerate_reach(g: &TemporalGraph, u: usize, iv: TimeInterval) -> VertexSet {
        let mut out = VertexSet::new(g.n());
        fn go(g: &TemporalGraph, v: usize, t: usize, hi: usize, out: &mut VertexSet) {
            if t > hi {
                out.insert(v);
                return;
            }
            for w in 0..g.n() {
                if w == v || g.snapshot(t).has_edge(v, w) {
                    go(g, w, t + 1, hi, out);
                }
            }
        }
        go(g, u, iv.lo(), iv.hi(), &mut out);
        out
    }

    #[test]
    fn ex1_forward_layers() {
        let g = ex1();
        let tr = forward_trace(&g, 0, TimeInterval::new(1, 3)).unwrap();
        assert_eq!(tr.layer(0).unwrap(), &set(4, &[0]));
        assert_eq!(tr.layer(1).unwrap(), &set(4, &[0, 1]));
        assert_eq!(tr.layer(2).unwrap(), &set(4, &[0, 1, 3]));
        assert_eq!(tr.layer(3).unwrap(), &set(4, &[0, 1, 2, 3]));
        for t in 1..=3 {
            assert_eq!(
                tr.layer(t).unwrap(),
                &enumerate_reach(&g, 0, TimeInterval::new(1, t))
            );
        }
    }

    #[test]
    fn ex1_backward_layers_match_enumeration() {
        let g = ex1();
        let tr = backward_trace(&g, 3, TimeInterval::new(1, 3)).unwrap();
        assert_eq!(tr.layer(4).unwrap(), &set(4, &[3]));
        assert_eq!(tr.final_layer(), &VertexSet::full(4));
        for t in 1..=3 {
            let expect = VertexSet::from_iter(
                4,
                (0..4).filter(|&w| enumerate_reach(&g, w, TimeInterval::new(t, 3)).contains(3)),
            );
            assert_eq!(tr.layer(t).unwrap(), &expect, "B(3, {t})");
        }
    }

    #[test]
    fn ex1_duality() {
        let g = ex1();
        let iv = TimeInterval::new(1, 3);
        for u in 0..4 {
            let back = backward_trace(&g, u, iv).unwrap();
            for w in 0..4 {
                let fwd = forward_trace(&g, w, iv).unwrap();
                assert_eq!(back.final_layer().contains(w), fwd.final_layer().contains(u));
            }
        }
    }

    #[test]
    fn edgeless_layers_stay_singleton() {
        let g = TemporalGraph::build(3, 4, vec![]).unwrap();
        let tr = forward_trace(&g, 1, g.full_interval()).unwrap();
        assert_eq!(tr.layers().len(), 5);
        assert!(tr.layers().iter().all(|l| *l == set(3, &[1])));
    }

    #[test]
    fn ex1_walk_extraction() {
        let g = ex1();
        let tr = forward_trace(&g, 0, TimeInterval::new(1, 3)).unwrap();
        let w = extract_walk(&tr, 2).unwrap();
        assert_eq!(w, TemporalWalk::new(1, vec![0, 0, 0, 2]));
        assert!(check_walk(&g, &w).ok());
        assert_eq!(extract_walk(&tr, 0).unwrap().span(), 0);

        let short = forward_trace(&g, 0, TimeInterval::new(1, 1)).unwrap();
        assert_eq!(
            extract_walk(&short, 2),
            Err(ReachError::Unreachable { target: 2 })
        );
    }

    #[test]
    fn backward_extraction_ends_at_origin() {
        let g = ex1();
        let tr = backward_trace(&g, 3, TimeInterval::new(1, 3)).unwrap();
        for w in 0..4 {
            let walk = extract_walk(&tr, w).unwrap();
            assert_eq!(walk.first(), w);
            assert_eq!(walk.last(), 3);
            assert!(check_walk(&g, &walk).ok());
        }
    }

    #[test]
    fn universal_walk_cases() {
        let g = ex1();
        let w = universal_walk(&g, 0, 2, TimeInterval::new(1, 3)).unwrap();
        assert!(check_walk(&g, &w).ok());
        assert_eq!((w.first(), w.last()), (0, 2));

        let same = universal_walk(&g, 1, 1, TimeInterval::new(1, 3)).unwrap();
        assert_eq!(same, TemporalWalk::stationary(1, 1));

        let pair = TemporalGraph::build(2, 5, vec![vec![(0, 1)]; 5]).unwrap();
        let w = universal_walk(&pair, 0, 1, TimeInterval::new(5, 5)).unwrap();
        assert_eq!(w, TemporalWalk::new(5, vec![0, 1]));

        assert_eq!(
            universal_walk(&g, 0, 2, TimeInterval::new(1, 2)),
            Err(ReachError::IntervalTooShort { len: 2, needed: 3 })
        );
        let edgeless = TemporalGraph::build(2, 3, vec![]).unwrap();
        assert_eq!(
            universal_walk(&edgeless, 0, 1, TimeInterval::new(1, 3)),
            Err(ReachError::NotAlwaysConnected)
        );
    }

    #[test]
    fn earliest_arrival_prefers_earlier_then_smaller() {
        let g = ex1();
        let targets = set(4, &[2, 3]);
        let (v, w) = earliest_arrival(&g, 0, &targets, TimeInterval::new(1, 3))
            .unwrap()
            .unwrap();
        // 3 is reached at step 2, 2 only at step 3
        assert_eq!(v, 3);
        assert_eq!(w.end_step(), 3);
    }

    #[test]
    fn batch_reach_spans_several_words() {
        let n = 130;
        let path: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        let g = static_graph(n, 5, &path);
        let origins: Vec<usize> = (0..n).collect();
        let sets = forward_reach_sets(&g, &origins, g.full_interval()).unwrap();
        for (u, set) in sets.iter().enumerate() {
            let expect = VertexSet::from_iter(n, u.saturating_sub(5)..(u + 6).min(n));
            assert_eq!(set, &expect);
        }
    }

    fn arb_graph() -> impl Strategy<Value = TemporalGraph> {
        (1usize..6, 1usize..5).prop_flat_map(|(n, t)| {
            proptest::collection::vec(proptest::collection::vec((0..n, 0..n), 0..8), t)
                .prop_map(move |snaps| {
                    let snaps = snaps
                        .into_iter()
                        .map(|es| es.into_iter().filter(|(a, b)| a != b).collect())
                        .collect();
                    TemporalGraph::build(n, t, snaps).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn traces_are_monotone_and_dual(g in arb_graph()) {
            let iv = g.full_interval();
            for u in 0..g.n() {
                let f = forward_trace(&g, u, iv).unwrap();
                let b = backward_trace(&g, u, iv).unwrap();
                for w in f.layers().windows(2) {
                    prop_assert!(w[0].is_subset(&w[1]));
                }
                for w in b.layers().windows(2) {
                    prop_assert!(w[1].is_subset(&w[0]));
                }
                prop_assert_eq!(f.final_layer(), &enumerate_reach(&g, u, iv));
                let all: Vec<usize> = (0..g.n()).rev().collect();
                let batch = forward_reach_sets(&g, &all, iv).unwrap();
                prop_assert_eq!(&batch[g.n() - 1 - u], f.final_layer());
                for v in f.final_layer().iter() {
                    let walk = extract_walk(&f, v).unwrap();
                    prop_assert!(check_walk(&g, &walk).ok());
                    prop_assert_eq!((walk.first(), walk.last()), (u, v));
                    let bv = backward_trace(&g, v, iv).unwrap();
                    prop_assert!(bv.final_layer().contains(u));
                }
            }
        }
    }
}
