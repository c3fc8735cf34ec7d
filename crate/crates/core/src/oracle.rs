//! Brute-force references for tiny instances. Only the graph type is used
//! here, so nothing in the main algorithms can leak into these answers.

use crate::tempgraph::{TemporalGraph, TemporalWalk, TimeInterval, VertexSet};
use std::collections::HashMap;
use thiserror::Error;

pub const DEFAULT_VERTEX_CAP: usize = 12;
pub const NAIVE_VERTEX_CAP: usize = 6;
pub const NAIVE_STEP_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for exhaustive search: {what} is {got}, the cap is {cap}")]
    InstanceTooLarge {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("start vertex {start} out of range for {n} vertices")]
    StartOutOfRange { start: usize, n: usize },
}

/// Search state after some number of steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StateKey {
    pub t: usize,
    pub v: usize,
    pub visited: u64,
}

#[derive(Clone, Copy)]
struct Node {
    v: u32,
    visited: u64,
    parent: u32,
}

/// Minimum-span exploration from `(1, start)` using at most `t_max` steps,
/// with the default vertex cap.
pub fn optimal_exploration(
    g: &TemporalGraph,
    start: usize,
    t_max: usize,
) -> Result<Option<TemporalWalk>, OracleError> {
    optimal_exploration_capped(g, start, t_max, DEFAULT_VERTEX_CAP)
}

/// Breadth-first search over `(t, v, visited)`. Each time layer is
/// deduplicated and states whose visited set is contained in another
/// state's at the same vertex are dropped. `t_max` is clamped to `T`.
pub fn optimal_exploration_capped(
    g: &TemporalGraph,
    start: usize,
    t_max: usize,
    cap: usize,
) -> Result<Option<TemporalWalk>, OracleError> {
    let n = g.n();
    let cap = cap.min(64);
    if n > cap {
        return Err(OracleError::InstanceTooLarge {
            what: "n",
            got: n,
            cap,
        });
    }
    if start >= n {
        return Err(OracleError::StartOutOfRange { start, n });
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let t_max = t_max.min(g.horizon());
    let mut layers: Vec<Vec<Node>> = vec![vec![Node {
        v: start as u32,
        visited: 1 << start,
        parent: u32::MAX,
    }]];
    let mut found = (1u64 << start == full).then_some(0usize);

    let mut t = 0;
    while found.is_none() && t < t_max {
        t += 1;
        let snap = g.snapshot(t);
        let prev = &layers[t - 1];
        let mut best: HashMap<(u32, u64), u32> = HashMap::new();
        for (i, node) in prev.iter().enumerate() {
            let v = node.v as usize;
            let moves = std::iter::once(node.v).chain(snap.neighbors(v).iter().copied());
            for u in moves {
                best.entry((u, node.visited | 1 << u)).or_insert(i as u32);
            }
        }
        let mut by_vertex: Vec<Vec<(u64, u32)>> = vec![Vec::new(); n];
        for ((u, visited), parent) in best {
            by_vertex[u as usize].push((visited, parent));
        }
        let mut layer = Vec::new();
        for (u, mut cands) in by_vertex.into_iter().enumerate() {
            // larger sets first, then a fixed order so the layer is deterministic
            cands.sort_by_key(|&(m, p)| (std::cmp::Reverse(m.count_ones()), m, p));
            let mut kept: Vec<u64> = Vec::new();
            for (m, parent) in cands {
                if kept.iter().any(|&k| m & !k == 0) {
                    continue;
                }
                kept.push(m);
                layer.push(Node {
                    v: u as u32,
                    visited: m,
                    parent,
                });
            }
        }
        if layer.iter().any(|s| s.visited == full) {
            found = Some(t);
        }
        layers.push(layer);
    }

    let Some(span) = found else {
        return Ok(None);
    };
    let mut idx = layers[span]
        .iter()
        .position(|s| s.visited == full)
        .unwrap();
    let mut vertices = vec![0; span + 1];
    for t in (0..=span).rev() {
        let node = layers[t][idx];
        vertices[t] = node.v as usize;
        idx = node.parent as usize;
    }
    Ok(Some(TemporalWalk::new(1, vertices)))
}

/// Endpoints of all vertex sequences `u = w_0, ..., w_{|I|}` with
/// `w_j = w_{j+1}` or `w_j w_{j+1}` an edge of snapshot `lo + j`, found by
/// enumerating every sequence.
pub fn naive_forward_set(
    g: &TemporalGraph,
    u: usize,
    interval: TimeInterval,
) -> Result<VertexSet, OracleError> {
    let n = g.n();
    if n > NAIVE_VERTEX_CAP {
        return Err(OracleError::InstanceTooLarge {
            what: "n",
            got: n,
            cap: NAIVE_VERTEX_CAP,
        });
    }
    if interval.len() > NAIVE_STEP_CAP {
        return Err(OracleError::InstanceTooLarge {
            what: "|I|",
            got: interval.len(),
            cap: NAIVE_STEP_CAP,
        });
    }
    assert!(u < n);
    let len = interval.len();
    let snaps: Vec<_> = interval.steps().map(|t| g.snapshot(t)).collect();
    let mut out = VertexSet::new(n);
    let mut seq = vec![0usize; len];
    loop {
        let mut ok = true;
        let mut at = u;
        for (j, &next) in seq.iter().enumerate() {
            if next != at && !snaps[j].has_edge(at, next) {
                ok = false;
                break;
            }
            at = next;
        }
        if ok {
            out.insert(at);
        }
        // odometer increment
        let mut pos = 0;
        while pos < len {
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
        if pos == len {
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tempgraph::fixtures::*;
    use crate::validator::check_exploration;

    /// Shortest exploration by plain depth-first enumeration of all walks.
    fn dfs_optimum(g: &TemporalGraph, start: usize, t_max: usize) -> Option<usize> {
        fn go(g: &TemporalGraph, t: usize, v: usize, seen: u64, limit: usize, full: u64) -> bool {
            if seen == full {
                return true;
            }
            if t == limit {
                return false;
            }
            let snap = g.snapshot(t + 1);
            if go(g, t + 1, v, seen, limit, full) {
                return true;
            }
            snap.neighbors(v)
                .iter()
                .any(|&u| go(g, t + 1, u as usize, seen | 1 << u, limit, full))
        }
        let full = (1u64 << g.n()) - 1;
        (0..=t_max).find(|&limit| go(g, 0, start, 1 << start, limit, full))
    }

    #[test]
    fn complete_graph_one_vertex_per_step() {
        let g = complete(4, 5);
        let w = optimal_exploration(&g, 0, 5).unwrap().unwrap();
        assert_eq!(w.span(), 3);
        assert!(check_exploration(&g, &w, 0).ok());
    }

    #[test]
    fn periodic_ex1_matches_dfs() {
        let g = ex1_periodic(8);
        for start in 0..4 {
            let w = optimal_exploration(&g, start, 8).unwrap().unwrap();
            assert!(check_exploration(&g, &w, start).ok());
            assert_eq!(Some(w.span()), dfs_optimum(&g, start, 8));
        }
    }

    #[test]
    fn unreachable_vertex_gives_none() {
        let g = static_graph(3, 4, &[(0, 1)]);
        assert_eq!(optimal_exploration(&g, 0, 4).unwrap(), None);
    }

    #[test]
    fn single_vertex_and_clamping() {
        let g = TemporalGraph::build(1, 0, vec![]).unwrap();
        let w = optimal_exploration(&g, 0, 10).unwrap().unwrap();
        assert_eq!(w, TemporalWalk::stationary(1, 0));
        let g = complete(3, 1);
        assert_eq!(optimal_exploration(&g, 0, 100).unwrap(), None);
    }

    #[test]
    fn cap_enforced() {
        let g = complete(13, 2);
        assert!(matches!(
            optimal_exploration(&g, 0, 2),
            Err(OracleError::InstanceTooLarge { got: 13, .. })
        ));
        assert!(optimal_exploration_capped(&g, 0, 2, 13).unwrap().is_none());
    }

    #[test]
    fn naive_sets() {
        let g = ex1();
        assert_eq!(
            naive_forward_set(&g, 0, TimeInterval::new(1, 3)).unwrap(),
            VertexSet::full(4)
        );
        assert_eq!(
            naive_forward_set(&g, 0, TimeInterval::empty_at(2)).unwrap(),
            VertexSet::singleton(4, 0)
        );
        let bare = TemporalGraph::build(3, 3, vec![]).unwrap();
        assert_eq!(
            naive_forward_set(&bare, 1, bare.full_interval()).unwrap(),
            VertexSet::singleton(3, 1)
        );
        let big = complete(7, 1);
        assert!(naive_forward_set(&big, 0, big.full_interval()).is_err());
    }
}
