//! Instance families.
//!
//! Random families draw snapshot `t` from its own ChaCha8 stream: the
//! generator is seeded with `seed_from_u64(seed)` and switched to stream
//! `t`. Snapshots can therefore be produced in any order, and the same
//! `(spec, seed)` pair gives the same instance on every platform.

use crate::explorer::theorem_bound;
use crate::tempgraph::{SnapshotSource, TemporalGraph, VertexSet};
use num_rational::Ratio;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad generator spec: {0}")]
    BadSpec(String),
}

fn bad(msg: impl Into<String>) -> GenError {
    GenError::BadSpec(msg.into())
}

/// Uniform integer in `0..bound`: Lemire's multiply-shift with rejection,
/// drawing 32 bits at a time when `bound` fits in 32 bits.
pub fn below(rng: &mut impl RngCore, bound: u64) -> u64 {
    assert!(bound > 0);
    if let Ok(b) = u32::try_from(bound) {
        let mut m = rng.next_u32() as u64 * b as u64;
        if (m as u32) < b {
            let threshold = b.wrapping_neg() % b;
            while (m as u32) < threshold {
                m = rng.next_u32() as u64 * b as u64;
            }
        }
        return m >> 32;
    }
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

/// Fisher-Yates, last position first.
pub fn shuffle<T>(rng: &mut impl RngCore, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

pub fn snapshot_rng(seed: u64, t: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t as u64);
    rng
}

/// `rows x cols` grid plus `(deg - 4) * cols` leaves that hang off row `t`
/// in snapshot `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridLeavesSpec {
    pub rows: usize,
    pub cols: usize,
    pub deg: usize,
}

impl GridLeavesSpec {
    pub fn leaves_per_column(&self) -> usize {
        self.deg - 4
    }

    pub fn n(&self) -> usize {
        self.rows * self.cols + self.leaves_per_column() * self.cols
    }

    pub fn horizon(&self) -> usize {
        self.rows
    }

    /// Id of grid vertex `(r, c)`, both 1-based.
    pub fn grid_vertex(&self, r: usize, c: usize) -> usize {
        (r - 1) * self.cols + (c - 1)
    }

    /// Id of leaf slot `i` of column `c` (1-based).
    pub fn leaf(&self, c: usize, i: usize) -> usize {
        self.rows * self.cols + (c - 1) * self.leaves_per_column() + i
    }

    pub fn leaves(&self) -> VertexSet {
        let n = self.n();
        VertexSet::from_iter(n, self.rows * self.cols..n)
    }

    /// Row of a grid vertex, `None` for leaves.
    pub fn row_of(&self, v: usize) -> Option<usize> {
        (v < self.rows * self.cols).then(|| v / self.cols + 1)
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.rows < 1 || self.cols < 1 {
            return Err(bad("grid-leaves needs rows >= 1 and cols >= 1"));
        }
        if self.deg < 5 {
            return Err(bad("grid-leaves needs deg >= 5"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeKind {
    /// Uniform spanning tree of the complete graph.
    Ust,
    Star,
    Path,
}

impl TreeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TreeKind::Ust => "ust",
            TreeKind::Star => "star",
            TreeKind::Path => "path",
        }
    }
}

impl FromStr for TreeKind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        match s {
            "ust" => Ok(TreeKind::Ust),
            "star" => Ok(TreeKind::Star),
            "path" => Ok(TreeKind::Path),
            _ => Err(bad(format!("unknown tree kind {s:?} (ust, star, path)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    GridLeaves(GridLeavesSpec),
    RandomTrees { n: usize, horizon: usize, tree: TreeKind },
    RotatingStar { n: usize, horizon: usize },
    BoundedDegree { n: usize, horizon: usize, d: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::GridLeaves(_) => "grid-leaves",
            Family::RandomTrees { .. } => "random-trees",
            Family::RotatingStar { .. } => "rotating-star",
            Family::BoundedDegree { .. } => "bounded-degree",
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            Family::GridLeaves(s) => s.n(),
            Family::RandomTrees { n, .. }
            | Family::RotatingStar { n, .. }
            | Family::BoundedDegree { n, .. } => n,
        }
    }

    pub fn horizon(&self) -> usize {
        match *self {
            Family::GridLeaves(s) => s.horizon(),
            Family::RandomTrees { horizon, .. }
            | Family::RotatingStar { horizon, .. }
            | Family::BoundedDegree { horizon, .. } => horizon,
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Family::RandomTrees { .. } | Family::BoundedDegree { .. })
    }

    /// Same family with another horizon. Grid-leaves has a fixed horizon.
    pub fn with_horizon(self, h: usize) -> Result<Family, GenError> {
        Ok(match self {
            Family::GridLeaves(_) => return Err(bad("grid-leaves horizon is fixed by rows")),
            Family::RandomTrees { n, tree, .. } => Family::RandomTrees { n, horizon: h, tree },
            Family::RotatingStar { n, .. } => Family::RotatingStar { n, horizon: h },
            Family::BoundedDegree { n, d, .. } => Family::BoundedDegree { n, horizon: h, d },
        })
    }

    /// An upper bound on `D` for every instance of the family.
    pub fn degree_upper(&self) -> Ratio<u64> {
        let cap = self.n() as u64 - 1;
        let d = match *self {
            Family::GridLeaves(s) => s.deg as u64,
            Family::RandomTrees { tree: TreeKind::Path, .. } => 2,
            Family::RandomTrees { .. } | Family::RotatingStar { .. } => cap,
            Family::BoundedDegree { d, .. } => d as u64,
        };
        Ratio::from_integer(d.min(cap))
    }

    pub fn validate(&self) -> Result<(), GenError> {
        match *self {
            Family::GridLeaves(s) => s.validate(),
            Family::RandomTrees { n, .. } if n < 1 => Err(bad("random-trees needs n >= 1")),
            Family::RotatingStar { n, .. } if n < 2 => Err(bad("rotating-star needs n >= 2")),
            Family::BoundedDegree { n, d, .. } if n < 2 || d < 2 => {
                Err(bad("bounded-degree needs n >= 2 and d >= 2"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::GridLeaves(s) => {
                write!(f, "grid-leaves rows={} cols={} deg={}", s.rows, s.cols, s.deg)
            }
            Family::RandomTrees { n, horizon, tree } => write!(
                f,
                "random-trees n={n} horizon={horizon} tree={}",
                tree.as_str()
            ),
            Family::RotatingStar { n, horizon } => {
                write!(f, "rotating-star n={n} horizon={horizon}")
            }
            Family::BoundedDegree { n, horizon, d } => {
                write!(f, "bounded-degree n={n} horizon={horizon} d={d}")
            }
        }
    }
}

impl FromStr for Family {
    type Err = GenError;

    /// `<family> key=value ...`, keys in any order.
    fn from_str(s: &str) -> Result<Self, GenError> {
        let mut words = s.split_whitespace();
        let name = words.next().ok_or_else(|| bad("empty generator spec"))?;
        let mut pairs = Vec::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {w:?}")))?;
            if pairs.iter().any(|(key, _)| *key == k) {
                return Err(bad(format!("duplicate key {k:?}")));
            }
            pairs.push((k, v));
        }
        let allowed: &[&str] = match name {
            "grid-leaves" => &["rows", "cols", "deg"],
            "random-trees" => &["n", "horizon", "tree"],
            "rotating-star" => &["n", "horizon"],
            "bounded-degree" => &["n", "horizon", "d"],
            _ => return Err(bad(format!("unknown family {name:?}"))),
        };
        if let Some((k, _)) = pairs.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(bad(format!("unknown key {k:?} for {name}")));
        }
        let get = |key: &str| -> Result<&str, GenError> {
            pairs
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| bad(format!("{name} needs {key}=")))
        };
        let num = |key: &str| -> Result<usize, GenError> {
            let v = get(key)?;
            v.parse()
                .map_err(|_| bad(format!("{key}={v} is not a non-negative integer")))
        };
        let family = match name {
            "grid-leaves" => Family::GridLeaves(GridLeavesSpec {
                rows: num("rows")?,
                cols: num("cols")?,
                deg: num("deg")?,
            }),
            "random-trees" => Family::RandomTrees {
                n: num("n")?,
                horizon: num("horizon")?,
                tree: get("tree")?.parse()?,
            },
            "rotating-star" => Family::RotatingStar {
                n: num("n")?,
                horizon: num("horizon")?,
            },
            _ => Family::BoundedDegree {
                n: num("n")?,
                horizon: num("horizon")?,
                d: num("d")?,
            },
        };
        family.validate()?;
        Ok(family)
    }
}

/// A validated family together with its seed; produces snapshots on demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    family: Family,
    seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, seed: u64) -> Result<Self, GenError> {
        family.validate()?;
        Ok(GenSpec { family, seed })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn seed_value(&self) -> u64 {
        self.seed
    }

    /// Lazy graph; snapshots are regenerated on every access.
    pub fn graph(&self) -> TemporalGraph {
        TemporalGraph::lazy(Arc::new(*self))
    }

    /// All snapshots generated up front.
    pub fn materialize(&self) -> TemporalGraph {
        TemporalGraph::materialize_source(Arc::new(*self))
    }
}

impl SnapshotSource for GenSpec {
    fn vertex_count(&self) -> usize {
        self.family.n()
    }

    fn horizon(&self) -> usize {
        self.family.horizon()
    }

    fn write_snapshot(&self, t: usize, out: &mut Vec<(u32, u32)>) {
        match self.family {
            Family::GridLeaves(s) => grid_leaves_snapshot(&s, t, out),
            Family::RandomTrees { n, tree, .. } => {
                let mut rng = snapshot_rng(self.seed, t);
                match tree {
                    TreeKind::Ust => ust_edges(&mut rng, n, out),
                    TreeKind::Star => {
                        let c = below(&mut rng, n as u64) as u32;
                        out.extend((0..n as u32).filter(|&v| v != c).map(|v| (c, v)));
                    }
                    TreeKind::Path => path_edges(&mut rng, n, out),
                }
            }
            Family::RotatingStar { n, .. } => {
                let c = (t % n) as u32;
                out.extend((0..n as u32).filter(|&v| v != c).map(|v| (c, v)));
            }
            Family::BoundedDegree { n, d, .. } => {
                let mut rng = snapshot_rng(self.seed, t);
                bounded_degree_edges(&mut rng, n, d, out)
            }
        }
    }

    fn describe(&self) -> String {
        self.family.to_string()
    }

    fn seed(&self) -> Option<u64> {
        self.family.is_random().then_some(self.seed)
    }

    fn max_degree(&self) -> Option<usize> {
        match self.family {
            Family::RandomTrees { tree: TreeKind::Path, .. } => Some(2),
            Family::BoundedDegree { d, .. } => Some(d),
            _ => None,
        }
    }
}

fn grid_leaves_snapshot(s: &GridLeavesSpec, t: usize, out: &mut Vec<(u32, u32)>) {
    for r in 1..=s.rows {
        for c in 1..=s.cols {
            let v = s.grid_vertex(r, c) as u32;
            if c < s.cols {
                out.push((v, s.grid_vertex(r, c + 1) as u32));
            }
            if r < s.rows {
                out.push((v, s.grid_vertex(r + 1, c) as u32));
            }
        }
    }
    for c in 1..=s.cols {
        let anchor = s.grid_vertex(t, c) as u32;
        for i in 0..s.leaves_per_column() {
            out.push((anchor, s.leaf(c, i) as u32));
        }
    }
}

/// Uniform labelled tree on `0..n`: a uniform Prufer sequence, decoded in
/// linear time. Labelled trees are exactly the spanning trees of `K_n`.
pub fn ust_edges(rng: &mut impl RngCore, n: usize, out: &mut Vec<(u32, u32)>) {
    if n < 2 {
        return;
    }
    let seq: Vec<u32> = (0..n - 2).map(|_| below(rng, n as u64) as u32).collect();
    let mut degree = vec![1u32; n];
    for &x in &seq {
        degree[x as usize] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in &seq {
        let x = x as usize;
        out.push((leaf as u32, x as u32));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    out.push((leaf as u32, n as u32 - 1));
}

fn path_edges(rng: &mut impl RngCore, n: usize, out: &mut Vec<(u32, u32)>) {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    shuffle(rng, &mut perm);
    out.extend(perm.windows(2).map(|w| (w[0], w[1])));
}

/// Random Hamiltonian path, then `n` attempts at extra edges between
/// uniform vertex pairs, each kept only if both degrees stay `<= d`.
/// Extras are only tried for `d >= 3`, so `d = 2` gives plain paths.
fn bounded_degree_edges(rng: &mut impl RngCore, n: usize, d: usize, out: &mut Vec<(u32, u32)>) {
    let base = out.len();
    path_edges(rng, n, out);
    if d < 3 {
        return;
    }
    // neighbors of v live in adj[v * d .. v * d + deg[v]]
    let mut adj = vec![0u32; n * d];
    let mut deg = vec![0usize; n];
    let link = |adj: &mut [u32], deg: &mut [usize], a: usize, b: usize| {
        adj[a * d + deg[a]] = b as u32;
        deg[a] += 1;
        adj[b * d + deg[b]] = a as u32;
        deg[b] += 1;
    };
    for i in base..out.len() {
        let (a, b) = out[i];
        link(&mut adj, &mut deg, a as usize, b as usize);
    }
    for _ in 0..n {
        let a = below(rng, n as u64) as usize;
        let b = below(rng, n as u64) as usize;
        if a == b || deg[a] >= d || deg[b] >= d || adj[a * d..a * d + deg[a]].contains(&(b as u32)) {
            continue;
        }
        link(&mut adj, &mut deg, a, b);
        out.push((a as u32, b as u32));
    }
}

/// The grid-leaves instance and its leaf set `X`.
pub fn gen_grid_leaves(spec: GridLeavesSpec) -> Result<(TemporalGraph, VertexSet), GenError> {
    let g = GenSpec::new(Family::GridLeaves(spec), 0)?.materialize();
    Ok((g, spec.leaves()))
}

pub fn gen_random_trees(
    n: usize,
    horizon: usize,
    tree: TreeKind,
    seed: u64,
) -> Result<TemporalGraph, GenError> {
    Ok(GenSpec::new(Family::RandomTrees { n, horizon, tree }, seed)?.graph())
}

pub fn gen_rotating_star(n: usize, horizon: usize) -> Result<TemporalGraph, GenError> {
    Ok(GenSpec::new(Family::RotatingStar { n, horizon }, 0)?.graph())
}

pub fn gen_bounded_degree(
    n: usize,
    horizon: usize,
    d: usize,
    seed: u64,
) -> Result<TemporalGraph, GenError> {
    Ok(GenSpec::new(Family::BoundedDegree { n, horizon, d }, seed)?.graph())
}

/// Horizon that lets `explore` finish on any instance with `D <= d_upper`.
pub fn required_horizon(n: usize, d_upper: Ratio<u64>) -> u64 {
    theorem_bound(n, d_upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_forward_set;
    use crate::reachability::forward_trace;
    use crate::tempgraph::TimeInterval;
    use std::collections::BTreeSet;

    #[test]
    fn grid_two_by_two() {
        let spec = GridLeavesSpec { rows: 2, cols: 2, deg: 5 };
        let (g, x) = gen_grid_leaves(spec).unwrap();
        assert_eq!((g.n(), g.horizon(), x.len()), (6, 2, 2));
        let leaves: Vec<_> = x.iter().collect();
        for &a in &leaves {
            let reach = naive_forward_set(&g, a, g.full_interval()).unwrap();
            for &b in &leaves {
                assert!(a == b || !reach.contains(b));
            }
        }
        assert!(g.check_always_connected(g.full_interval()));
    }

    #[test]
    fn grid_single_cell() {
        let (g, x) = gen_grid_leaves(GridLeavesSpec { rows: 1, cols: 1, deg: 5 }).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(x, VertexSet::singleton(2, 1));
        assert_eq!(g.snapshot(1).edges(), &[(0, 1)]);
    }

    #[test]
    fn grid_leaves_stay_apart() {
        let spec = GridLeavesSpec { rows: 5, cols: 3, deg: 8 };
        let (g, x) = gen_grid_leaves(spec).unwrap();
        assert_eq!((g.n(), x.len()), (27, 12));
        for leaf in x.iter() {
            let mut others = x.clone();
            others.remove(leaf);
            let trace = forward_trace(&g, leaf, TimeInterval::new(1, 5)).unwrap();
            assert!(!trace.final_layer().intersects(&others));
        }
        // interior grid vertex of the anchored row has degree deg
        assert_eq!(g.degree(spec.grid_vertex(2, 2), 2), 8);
    }

    #[test]
    fn grid_rejects_small_degree() {
        assert!(gen_grid_leaves(GridLeavesSpec { rows: 2, cols: 2, deg: 4 }).is_err());
        assert!(gen_grid_leaves(GridLeavesSpec { rows: 0, cols: 2, deg: 6 }).is_err());
    }

    #[test]
    fn random_paths_on_three_vertices() {
        let g = gen_random_trees(3, 60, TreeKind::Path, 11).unwrap();
        let mut seen = BTreeSet::new();
        for t in 1..=60 {
            let s = g.snapshot(t);
            assert_eq!(s.edge_count(), 2);
            seen.insert(s.edges().to_vec());
        }
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn ust_snapshots_are_trees() {
        let g = gen_random_trees(16, 100, TreeKind::Ust, 7).unwrap();
        assert!(g.check_always_connected(g.full_interval()));
        for t in 1..=100 {
            assert_eq!(g.snapshot(t).edge_count(), 15);
        }
    }

    #[test]
    fn ust_is_roughly_uniform_on_four_vertices() {
        // K4 has 16 labelled spanning trees
        let g = gen_random_trees(4, 8000, TreeKind::Ust, 3).unwrap();
        let mut counts = std::collections::BTreeMap::new();
        for t in 1..=8000 {
            *counts.entry(g.snapshot(t).edges().to_vec()).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 16);
        assert!(counts.values().all(|&c| (380..620).contains(&c)));
    }

    #[test]
    fn seeds_reproduce() {
        let a = gen_random_trees(20, 30, TreeKind::Ust, 5).unwrap().materialize();
        let b = gen_random_trees(20, 30, TreeKind::Ust, 5).unwrap().materialize();
        let c = gen_random_trees(20, 30, TreeKind::Ust, 6).unwrap().materialize();
        assert_eq!(a, b);
        assert_ne!(a, c);
        let s = gen_random_trees(9, 40, TreeKind::Star, 2).unwrap();
        assert!(s.check_always_connected(s.full_interval()));
    }

    #[test]
    fn longer_horizon_keeps_prefix() {
        let short = gen_bounded_degree(12, 10, 4, 9).unwrap();
        let long = gen_bounded_degree(12, 50, 4, 9).unwrap();
        for t in 1..=10 {
            assert_eq!(short.snapshot(t).edges(), long.snapshot(t).edges());
        }
    }

    #[test]
    fn rotating_star_degrees() {
        let g = gen_rotating_star(4, 4).unwrap();
        assert_eq!(g.profile().unwrap().average(), Ratio::from_integer(3));
        let two = gen_rotating_star(2, 5).unwrap();
        for t in 1..=5 {
            assert_eq!(two.snapshot(t).edges(), &[(0, 1)]);
        }
        let g = gen_rotating_star(5, 2).unwrap();
        let p = g.degree_profile(g.full_interval()).unwrap();
        assert_eq!(p.d_max(), &[1, 4, 4, 1, 1]);
        assert!(gen_rotating_star(1, 3).is_err());
    }

    #[test]
    fn bounded_degree_caps() {
        let g = gen_bounded_degree(64, 200, 4, 1).unwrap();
        assert!(g.check_always_connected(g.full_interval()));
        for t in 1..=200 {
            let s = g.snapshot(t);
            assert!((0..64).all(|v| s.degree(v) <= 4));
        }
        assert!(g.profile().unwrap().average() <= Ratio::from_integer(4));
        let p = gen_bounded_degree(10, 20, 2, 4).unwrap();
        for t in 1..=20 {
            let s = p.snapshot(t);
            assert_eq!(s.edge_count(), 9);
            assert!((0..10).all(|v| s.degree(v) <= 2));
        }
        assert!(p.check_always_connected(p.full_interval()));
    }

    #[test]
    fn profile_shortcut_matches_full_scan() {
        use crate::validator::recompute_profile;
        for g in [
            gen_bounded_degree(40, 3000, 3, 2).unwrap(),
            gen_bounded_degree(40, 3000, 5, 2).unwrap(),
            gen_random_trees(30, 2000, TreeKind::Path, 1).unwrap(),
            gen_random_trees(30, 500, TreeKind::Ust, 1).unwrap(),
            gen_rotating_star(12, 100).unwrap(),
        ] {
            let full = recompute_profile(&g, g.full_interval()).unwrap();
            assert_eq!(g.profile().unwrap(), &full);
        }
    }

    #[test]
    fn horizon_sizing() {
        assert_eq!(required_horizon(1, Ratio::from_integer(3)), 0);
        assert_eq!(
            required_horizon(32, Ratio::from_integer(2)),
            theorem_bound(32, Ratio::from_integer(2))
        );
        for n in [2, 5, 17, 64, 100] {
            for d in 1..10u64 {
                assert!(
                    required_horizon(n, Ratio::from_integer(d + 1))
                        >= required_horizon(n, Ratio::from_integer(d))
                );
            }
        }
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "grid-leaves rows=5 cols=3 deg=8",
            "random-trees n=16 horizon=100 tree=ust",
            "rotating-star n=8 horizon=64",
            "bounded-degree n=64 horizon=200 d=4",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("random-trees n=16 horizon=100".parse::<Family>().is_err());
        assert!("rotating-star n=8 horizon=64 d=3".parse::<Family>().is_err());
        assert!("cube n=3".parse::<Family>().is_err());
        assert!("".parse::<Family>().is_err());
    }

    #[test]
    fn below_stays_in_range() {
        let mut rng = snapshot_rng(1, 1);
        for bound in 1..50 {
            assert!(below(&mut rng, bound) < bound);
        }
    }
}
