use super::VertexSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk ends at {left_end} but the next walk starts at {right_start}")]
    EndpointMismatch { left_end: usize, right_start: usize },
    #[error("next walk starts at step {right_start}, but steps up to {} are already used", .free_from - 1)]
    TimeOverlap { free_from: usize, right_start: usize },
}

/// A temporal walk: the agent is at `vertices[j]` at time `start + j`, and
/// step `start + j` takes it to `vertices[j + 1]`.
///
/// A repeated vertex is a wait. A walk with a single vertex spans zero steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TemporalWalk {
    start: usize,
    vertices: Vec<usize>,
}

impl TemporalWalk {
    /// Panics on an empty vertex sequence or `start == 0`.
    pub fn new(start: usize, vertices: Vec<usize>) -> Self {
        assert!(start >= 1, "time steps are 1-based");
        assert!(!vertices.is_empty(), "a walk has at least one vertex");
        TemporalWalk { start, vertices }
    }

    pub fn stationary(start: usize, v: usize) -> Self {
        TemporalWalk::new(start, vec![v])
    }

    /// Time step of the first move.
    pub fn start(&self) -> usize {
        self.start
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of time steps spanned.
    pub fn span(&self) -> usize {
        self.vertices.len() - 1
    }

    /// First time step not used by this walk.
    pub fn end_step(&self) -> usize {
        self.start + self.span()
    }

    /// Last time step used, or `start - 1` for a zero-step walk.
    pub fn last_step(&self) -> usize {
        self.end_step() - 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Position before step `t` is taken, for `t` in `[start, start + span]`.
    pub fn position_at(&self, t: usize) -> Option<usize> {
        t.checked_sub(self.start)
            .and_then(|j| self.vertices.get(j).copied())
    }

    /// Iterates `(t, from, to)` for every step.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.vertices
            .windows(2)
            .enumerate()
            .map(move |(j, w)| (self.start + j, w[0], w[1]))
    }

    pub fn covered(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.vertices.iter().copied())
    }

    /// Appends `next`, waiting at the shared vertex across any gap in time.
    pub fn concat(&self, next: &TemporalWalk) -> Result<TemporalWalk, WalkError> {
        let mut out = self.clone();
        out.extend(next)?;
        Ok(out)
    }

    /// In-place form of [`concat`](Self::concat).
    pub fn extend(&mut self, next: &TemporalWalk) -> Result<(), WalkError> {
        if self.last() != next.first() {
            return Err(WalkError::EndpointMismatch {
                left_end: self.last(),
                right_start: next.first(),
            });
        }
        if next.start < self.end_step() {
            return Err(WalkError::TimeOverlap {
                free_from: self.end_step(),
                right_start: next.start,
            });
        }
        self.pad_until(next.start);
        self.vertices.extend_from_slice(&next.vertices[1..]);
        Ok(())
    }

    /// Waits at the last vertex until `end_step() == step`. No-op if the
    /// walk already reaches that far.
    pub fn pad_until(&mut self, step: usize) {
        let last = self.last();
        while self.end_step() < step {
            self.vertices.push(last);
        }
    }

    /// Drops waits at the end of the walk.
    pub fn trim_trailing_waits(&mut self) {
        while self.vertices.len() >= 2 {
            let k = self.vertices.len();
            if self.vertices[k - 1] != self.vertices[k - 2] {
                break;
            }
            self.vertices.pop();
        }
    }
}
