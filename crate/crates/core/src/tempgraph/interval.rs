use std::fmt;

/// Inclusive range of time steps `[lo, hi]`. Time steps are 1-based.
///
/// `hi == lo - 1` encodes the empty interval starting at `lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TimeInterval {
    lo: usize,
    hi: usize,
}

impl TimeInterval {
    /// Panics if `lo == 0` or `hi + 1 < lo`.
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo >= 1, "time steps are 1-based");
        assert!(hi + 1 >= lo, "interval [{lo}, {hi}] is reversed");
        TimeInterval { lo, hi }
    }

    /// The `len` steps starting at `lo`.
    pub fn with_len(lo: usize, len: usize) -> Self {
        TimeInterval::new(lo, lo + len - 1)
    }

    pub fn empty_at(lo: usize) -> Self {
        TimeInterval::new(lo, lo - 1)
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.hi + 1 - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, t: usize) -> bool {
        self.lo <= t && t <= self.hi
    }

    pub fn steps(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    /// Splits into `parts` consecutive pieces of `len / parts` steps, the
    /// remainder going to the last piece.
    pub fn partition(&self, parts: usize) -> Vec<TimeInterval> {
        assert!(parts >= 1 && parts <= self.len().max(1));
        let base = self.len() / parts;
        (0..parts)
            .map(|i| {
                let lo = self.lo + i * base;
                let hi = if i + 1 == parts { self.hi } else { lo + base - 1 };
                TimeInterval::new(lo, hi)
            })
            .collect()
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
