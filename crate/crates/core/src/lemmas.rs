//! Constructive versions of the two combinatorial lemmas behind the
//! exploration bound:
//!
//! * a large enough set `X` always contains two vertices joined by a
//!   temporal walk, provided `|I| >= 2 D n / |X| + 1`;
//! * a small subset `S ⊆ X` reaches all of `X`, of size at most
//!   `2 k log2 |X|`, provided `|I| >= 2 D n / k + 1`.
//!
//! `D` is always the average temporal maximum degree over the whole
//! horizon of the graph, which bounds `D` of any sub-interval from above.

use crate::reachability::{extract_walk, forward_reach_sets, forward_stream, ReachError};
use crate::tempgraph::{TemporalGraph, TemporalWalk, TimeInterval, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("X must contain at least two vertices (got {size})")]
    XTooSmall { size: usize },
    #[error("k must be at least 2 (got {k})")]
    BadK { k: usize },
    #[error("no temporal walk joins two distinct vertices of X")]
    NotFound,
    #[error("a snapshot in the interval is disconnected")]
    NotAlwaysConnected,
    #[error("greedy needed {rounds} rounds, more than the bound {bound}")]
    BoundViolated { rounds: usize, bound: usize },
    #[error(transparent)]
    Reach(#[from] ReachError),
}

/// `len >= 2 D n / divisor + 1`, compared exactly with `D` over `[1, T]`.
pub fn interval_suffices(g: &TemporalGraph, len: usize, divisor: usize) -> bool {
    let Some(profile) = g.profile() else {
        return false;
    };
    if len == 0 || divisor == 0 {
        return false;
    }
    // D n = sum of d_max
    (len as u128 - 1) * divisor as u128 >= 2 * profile.degree_sum() as u128
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedPair {
    pub u: usize,
    pub v: usize,
    pub walk: TemporalWalk,
}

/// Finds `u != v` in `x` with a temporal walk `u -> v` inside `interval`.
///
/// Origins are tried in increasing id order; the first one whose reach
/// meets another member of `x` wins, paired with the smallest such member.
pub fn find_connected_pair(
    g: &TemporalGraph,
    interval: TimeInterval,
    x: &VertexSet,
) -> Result<ConnectedPair, LemmaError> {
    if x.len() < 2 {
        return Err(LemmaError::XTooSmall { size: x.len() });
    }
    for u in x.iter() {
        let trace = forward_stream(g, u, interval)?;
        let mut hits = trace.final_layer().intersection(x);
        hits.remove(u);
        if let Some(v) = hits.min() {
            let walk = extract_walk(&trace, v)?;
            return Ok(ConnectedPair { u, v, walk });
        }
    }
    if interval_suffices(g, interval.len(), x.len()) {
        if !g.check_always_connected(interval) {
            return Err(LemmaError::NotAlwaysConnected);
        }
        panic!(
            "no connected pair in X (|X| = {}) over {interval} although the interval is long enough",
            x.len()
        );
    }
    Err(LemmaError::NotFound)
}

/// One greedy pick.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyRound {
    pub vertex: usize,
    /// Members of the remaining set reached by `vertex`, itself included.
    pub gained: usize,
    pub remaining_before: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatorResult {
    pub set: VertexSet,
    pub k: usize,
    /// `ceil(2 k log2 |X|)`.
    pub size_bound: usize,
    pub rounds: Vec<GreedyRound>,
    /// Whether `|I| >= 2 D n / k + 1` held.
    pub hypothesis_held: bool,
}

pub fn dominator_size_bound(k: usize, x_len: usize) -> usize {
    (2.0 * k as f64 * (x_len as f64).log2()).ceil() as usize
}

/// A subset `S ⊆ x` such that every member of `x` is reachable inside
/// `interval` from some member of `S`.
///
/// Greedy: while more than `2k` vertices remain, take the remaining vertex
/// whose reach covers most remaining vertices (smallest id on ties) and
/// drop everything it covers; the last `<= 2k` vertices join `S` as is.
pub fn dominator_set(
    g: &TemporalGraph,
    interval: TimeInterval,
    x: &VertexSet,
    k: usize,
) -> Result<DominatorResult, LemmaError> {
    if x.len() < 2 {
        return Err(LemmaError::XTooSmall { size: x.len() });
    }
    if k < 2 {
        return Err(LemmaError::BadK { k });
    }
    let size_bound = dominator_size_bound(k, x.len());
    let hypothesis_held = interval_suffices(g, interval.len(), k);
    let members: Vec<usize> = x.iter().collect();
    let reach = forward_reach_sets(g, &members, interval)?;
    let mut slot = vec![usize::MAX; g.n()];
    for (i, &v) in members.iter().enumerate() {
        slot[v] = i;
    }

    let fail = |rounds: usize| {
        if hypothesis_held && !g.check_always_connected(interval) {
            LemmaError::NotAlwaysConnected
        } else {
            LemmaError::BoundViolated {
                rounds,
                bound: size_bound,
            }
        }
    };

    let mut remaining = x.clone();
    let mut set = VertexSet::new(g.n());
    let mut rounds = Vec::new();
    while remaining.len() > 2 * k {
        let (best, gained) = remaining
            .iter()
            .map(|v| (v, reach[slot[v]].intersection_len(&remaining)))
            .fold((usize::MAX, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        rounds.push(GreedyRound {
            vertex: best,
            gained,
            remaining_before: remaining.len(),
        });
        remaining.difference_with(&reach[slot[best]]);
        remaining.remove(best);
        set.insert(best);
        if rounds.len() > size_bound {
            return Err(fail(rounds.len()));
        }
    }
    set.union_with(&remaining);
    if hypothesis_held && set.len() > size_bound {
        return Err(fail(rounds.len()));
    }
    debug_assert!({
        let mut dominated = VertexSet::new(g.n());
        for s in set.iter() {
            dominated.union_with(&reach[slot[s]]);
        }
        x.is_subset(&dominated)
    });
    Ok(DominatorResult {
        set,
        k,
        size_bound,
        rounds,
        hypothesis_held,
    })
}
