//! Temporal graphs: a fixed vertex set `0..n` and one undirected simple
//! snapshot per time step `1..=T`.
//!
//! Snapshots are either held in memory or produced on demand by a
//! [`SnapshotSource`], which keeps instances with very long horizons cheap.

mod interval;
mod profile;
mod vertex_set;
mod walk;

pub use interval::TimeInterval;
pub use profile::DegreeProfile;
pub use vertex_set::VertexSet;
pub use walk::{TemporalWalk, WalkError};

use std::fmt;
use std::ops::{ControlFlow, Deref};
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a temporal graph needs at least one vertex")]
    NoVertices,
    #[error("edge endpoint {vertex} in snapshot {snapshot} is not a vertex of a graph with {n} vertices")]
    InvalidVertex {
        vertex: usize,
        snapshot: usize,
        n: usize,
    },
    #[error("self-loop at vertex {vertex} in snapshot {snapshot}")]
    SelfLoop { vertex: usize, snapshot: usize },
    #[error("snapshot index {index} outside [1, {horizon}]")]
    BadSnapshotIndex { index: usize, horizon: usize },
    #[error("empty time interval")]
    EmptyInterval,
    #[error("interval {interval} exceeds the horizon {horizon}")]
    IntervalOutOfRange {
        interval: TimeInterval,
        horizon: usize,
    },
}

/// Produces snapshots on demand. Implementations must be deterministic and
/// emit simple edges (no self-loops, no duplicates) on `0..vertex_count()`.
pub trait SnapshotSource: Send + Sync + fmt::Debug {
    fn vertex_count(&self) -> usize;
    fn horizon(&self) -> usize;
    /// Appends the edges of snapshot `t` (1-based) to `out`.
    fn write_snapshot(&self, t: usize, out: &mut Vec<(u32, u32)>);
    /// One-line description that regenerates this source.
    fn describe(&self) -> String;
    fn seed(&self) -> Option<u64>;
    /// A bound on every degree in every snapshot, if the source guarantees
    /// one below `n - 1`.
    fn max_degree(&self) -> Option<usize> {
        None
    }
}

/// CSR adjacency of one snapshot.
#[derive(Clone, Debug)]
struct Adjacency {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

/// One snapshot in canonical form: endpoint-sorted `(u, v)` pairs with
/// `u < v`, sorted lexicographically, without duplicates.
#[derive(Clone, Debug)]
pub struct Snapshot {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: OnceLock<Adjacency>,
}

impl Snapshot {
    fn from_canonical(n: usize, edges: Vec<(u32, u32)>) -> Self {
        Snapshot {
            n,
            edges,
            adj: OnceLock::new(),
        }
    }

    fn canonicalize(n: usize, mut edges: Vec<(u32, u32)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Snapshot::from_canonical(n, edges)
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search(&(key.0 as u32, key.1 as u32))
            .is_ok()
    }

    /// Sorted neighbours of `v`. Builds the adjacency on first use.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        let adj = self.adj.get_or_init(|| self.build_adjacency());
        &adj.targets[adj.offsets[v] as usize..adj.offsets[v + 1] as usize]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn build_adjacency(&self) -> Adjacency {
        let mut offsets = vec![0u32; self.n + 1];
        for &(a, b) in &self.edges {
            offsets[a as usize + 1] += 1;
            offsets[b as usize + 1] += 1;
        }
        for i in 0..self.n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; 2 * self.edges.len()];
        // edges are sorted, so each neighbour list comes out sorted
        for &(a, b) in &self.edges {
            targets[fill[a as usize] as usize] = b;
            fill[a as usize] += 1;
        }
        for &(a, b) in &self.edges {
            targets[fill[b as usize] as usize] = a;
            fill[b as usize] += 1;
        }
        for v in 0..self.n {
            targets[offsets[v] as usize..offsets[v + 1] as usize].sort_unstable();
        }
        Adjacency { offsets, targets }
    }
}

/// Borrowed or freshly generated snapshot.
pub enum SnapshotRef<'a> {
    Borrowed(&'a Snapshot),
    Owned(Snapshot),
}

impl Deref for SnapshotRef<'_> {
    type Target = Snapshot;

    fn deref(&self) -> &Snapshot {
        match self {
            SnapshotRef::Borrowed(s) => s,
            SnapshotRef::Owned(s) => s,
        }
    }
}

#[derive(Clone)]
enum Store {
    Explicit(Vec<Snapshot>),
    Lazy(Arc<dyn SnapshotSource>),
}

/// An immutable temporal graph.
#[derive(Clone)]
pub struct TemporalGraph {
    n: usize,
    horizon: usize,
    store: Store,
    origin: Option<Arc<dyn SnapshotSource>>,
    full_profile: OnceLock<Option<DegreeProfile>>,
}

impl TemporalGraph {
    /// Builds a graph from per-snapshot edge lists; `snapshots[t - 1]` holds
    /// snapshot `t`, and missing trailing snapshots are edgeless. Duplicate
    /// edges are merged.
    pub fn build(
        n: usize,
        horizon: usize,
        snapshots: Vec<Vec<(usize, usize)>>,
    ) -> Result<Self, GraphError> {
        if snapshots.len() > horizon {
            return Err(GraphError::BadSnapshotIndex {
                index: snapshots.len(),
                horizon,
            });
        }
        let timed = snapshots
            .into_iter()
            .enumerate()
            .flat_map(|(i, es)| es.into_iter().map(move |(u, v)| (i + 1, u, v)));
        TemporalGraph::from_timed_edges(n, horizon, timed)
    }

    /// Builds a graph from `(t, u, v)` triples.
    pub fn from_timed_edges<I>(n: usize, horizon: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        assert!(n <= u32::MAX as usize);
        let mut raw: Vec<Vec<(u32, u32)>> = vec![Vec::new(); horizon];
        for (t, u, v) in edges {
            if t == 0 || t > horizon {
                return Err(GraphError::BadSnapshotIndex { index: t, horizon });
            }
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::InvalidVertex {
                        vertex: x,
                        snapshot: t,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop {
                    vertex: u,
                    snapshot: t,
                });
            }
            raw[t - 1].push((u as u32, v as u32));
        }
        let snapshots = raw
            .into_iter()
            .map(|es| Snapshot::canonicalize(n, es))
            .collect();
        Ok(TemporalGraph {
            n,
            horizon,
            store: Store::Explicit(snapshots),
            origin: None,
            full_profile: OnceLock::new(),
        })
    }

    /// A graph whose snapshots are generated on access.
    pub fn lazy(source: Arc<dyn SnapshotSource>) -> Self {
        assert!(source.vertex_count() >= 1);
        TemporalGraph {
            n: source.vertex_count(),
            horizon: source.horizon(),
            store: Store::Lazy(source.clone()),
            origin: Some(source),
            full_profile: OnceLock::new(),
        }
    }

    /// Generates every snapshot of `source` into memory.
    pub fn materialize_source(source: Arc<dyn SnapshotSource>) -> Self {
        TemporalGraph::lazy(source).materialize()
    }

    /// In-memory copy of this graph; keeps the origin.
    pub fn materialize(&self) -> Self {
        let snapshots = (1..=self.horizon)
            .map(|t| match self.snapshot(t) {
                SnapshotRef::Borrowed(s) => Snapshot::from_canonical(self.n, s.edges.clone()),
                SnapshotRef::Owned(s) => s,
            })
            .collect();
        TemporalGraph {
            n: self.n,
            horizon: self.horizon,
            store: Store::Explicit(snapshots),
            origin: self.origin.clone(),
            full_profile: OnceLock::new(),
        }
    }

    pub fn with_origin(mut self, origin: Arc<dyn SnapshotSource>) -> Self {
        self.origin = Some(origin);
        self
    }

    /// The generator this graph came from, if any.
    pub fn origin(&self) -> Option<&Arc<dyn SnapshotSource>> {
        self.origin.as_ref()
    }

    pub fn is_lazy(&self) -> bool {
        matches!(self.store, Store::Lazy(_))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn full_interval(&self) -> TimeInterval {
        TimeInterval::new(1, self.horizon)
    }

    pub fn check_interval(&self, interval: &TimeInterval) -> Result<(), GraphError> {
        if interval.hi() > self.horizon {
            return Err(GraphError::IntervalOutOfRange {
                interval: *interval,
                horizon: self.horizon,
            });
        }
        Ok(())
    }

    /// Snapshot `t`. Panics if `t` is outside `[1, T]`.
    pub fn snapshot(&self, t: usize) -> SnapshotRef<'_> {
        assert!(
            t >= 1 && t <= self.horizon,
            "snapshot {t} outside [1, {}]",
            self.horizon
        );
        match &self.store {
            Store::Explicit(s) => SnapshotRef::Borrowed(&s[t - 1]),
            Store::Lazy(src) => {
                let mut raw = Vec::new();
                src.write_snapshot(t, &mut raw);
                SnapshotRef::Owned(Snapshot::canonicalize(self.n, raw))
            }
        }
    }

    /// Calls `f(t, edges)` for every `t` in `interval`. Edges are canonical
    /// for in-memory graphs and in generation order for lazy ones.
    pub fn for_each_raw<F>(&self, interval: TimeInterval, mut f: F)
    where
        F: FnMut(usize, &[(u32, u32)]),
    {
        self.scan_raw(interval, |t, edges| {
            f(t, edges);
            ControlFlow::Continue(())
        });
    }

    /// Like [`for_each_raw`](Self::for_each_raw), stopping once `f` breaks.
    pub fn scan_raw<F>(&self, interval: TimeInterval, mut f: F)
    where
        F: FnMut(usize, &[(u32, u32)]) -> ControlFlow<()>,
    {
        self.check_interval(&interval).unwrap();
        match &self.store {
            Store::Explicit(s) => {
                for t in interval.steps() {
                    if f(t, &s[t - 1].edges).is_break() {
                        return;
                    }
                }
            }
            Store::Lazy(src) => {
                let mut buf = Vec::new();
                for t in interval.steps() {
                    buf.clear();
                    src.write_snapshot(t, &mut buf);
                    if f(t, &buf).is_break() {
                        return;
                    }
                }
            }
        }
    }

    /// Largest degree any vertex can have in any snapshot.
    pub fn degree_cap(&self) -> usize {
        let generic = self.n - 1;
        match &self.store {
            Store::Lazy(src) => src.max_degree().map_or(generic, |d| d.min(generic)),
            Store::Explicit(_) => generic,
        }
    }

    /// Degree of `v` in snapshot `t`.
    pub fn degree(&self, v: usize, t: usize) -> usize {
        assert!(v < self.n);
        self.snapshot(t).degree(v)
    }

    pub fn degree_profile(&self, interval: TimeInterval) -> Result<DegreeProfile, GraphError> {
        if interval.is_empty() {
            return Err(GraphError::EmptyInterval);
        }
        self.check_interval(&interval)?;
        let mut d_max = vec![0u32; self.n];
        let mut deg = vec![0u32; self.n];
        // once every vertex has reached the cap nothing can change
        let cap = self.degree_cap() as u32;
        let mut at_cap = 0;
        self.scan_raw(interval, |_, edges| {
            deg.fill(0);
            for &(a, b) in edges {
                deg[a as usize] += 1;
                deg[b as usize] += 1;
            }
            for (m, &d) in d_max.iter_mut().zip(&deg) {
                if d > *m {
                    *m = d;
                    at_cap += (d == cap) as usize;
                }
            }
            if at_cap == self.n {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        Ok(DegreeProfile::from_maxima(d_max))
    }

    /// Degree profile over `[1, T]`, computed once and cached. `None` when
    /// the horizon is zero.
    pub fn profile(&self) -> Option<&DegreeProfile> {
        self.full_profile
            .get_or_init(|| {
                (self.horizon >= 1).then(|| self.degree_profile(self.full_interval()).unwrap())
            })
            .as_ref()
    }

    /// Whether every snapshot in `interval` is connected on all `n` vertices.
    pub fn check_always_connected(&self, interval: TimeInterval) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut dsu = Dsu::new(self.n);
        let mut ok = true;
        self.scan_raw(interval, |_, edges| {
            dsu.reset();
            let mut components = self.n;
            for &(a, b) in edges {
                if dsu.union(a as usize, b as usize) {
                    components -= 1;
                }
            }
            ok = components == 1;
            if ok {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(())
            }
        });
        ok
    }
}

impl PartialEq for TemporalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.horizon == other.horizon
            && (1..=self.horizon).all(|t| self.snapshot(t).edges() == other.snapshot(t).edges())
    }
}

impl fmt::Debug for TemporalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("TemporalGraph");
        d.field("n", &self.n).field("horizon", &self.horizon);
        if let Some(o) = &self.origin {
            d.field("origin", &o.describe());
        }
        match &self.store {
            Store::Explicit(s) if s.len() <= 16 => {
                d.field(
                    "snapshots",
                    &s.iter().map(|s| &s.edges).collect::<Vec<_>>(),
                );
            }
            Store::Explicit(_) => {}
            Store::Lazy(_) => {
                d.field("lazy", &true);
            }
        }
        d.finish()
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
