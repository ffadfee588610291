//! Step-cost instrumentation.
//!
//! Every generator step is written once, generic over a [`Meter`]. The
//! production path uses [`Unmetered`], whose methods compile to nothing; the
//! benchmark and the tests pass an [`OpCounter`] and read off how many
//! primitive operations (array reads, array writes, comparisons) one step
//! performed.

/// Sink for instrumented operation counts.
pub trait Meter {
    fn tick(&mut self, ops: u64);
}

/// Zero-cost meter used on the production path.
#[derive(Debug, Default, Clone, Copy)]
pub struct Unmetered;

impl Meter for Unmetered {
    #[inline(always)]
    fn tick(&mut self, _ops: u64) {}
}

/// Running total of instrumented operations.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    total: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Returns the count accumulated since the last call and resets it.
    pub fn take(&mut self) -> u64 {
        std::mem::take(&mut self.total)
    }
}

impl Meter for OpCounter {
    #[inline]
    fn tick(&mut self, ops: u64) {
        self.total += ops;
    }
}

/// Max/mean summary of per-step costs.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct StepStats {
    pub steps: u64,
    pub max: u64,
    pub total: u64,
}

impl StepStats {
    pub fn record(&mut self, cost: u64) {
        self.steps += 1;
        self.total += cost;
        self.max = self.max.max(cost);
    }

    pub fn mean(&self) -> f64 {
        if self.steps == 0 {
            0.0
        } else {
            self.total as f64 / self.steps as f64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_take_resets() {
        let mut c = OpCounter::new();
        c.tick(3);
        c.tick(4);
        assert_eq!(c.total(), 7);
        assert_eq!(c.take(), 7);
        assert_eq!(c.total(), 0);
    }

    #[test]
    fn stats_track_max_and_mean() {
        let mut s = StepStats::default();
        for cost in [4, 9, 5] {
            s.record(cost);
        }
        assert_eq!(s.max, 9);
        assert_eq!(s.steps, 3);
        assert!((s.mean() - 6.0).abs() < 1e-12);
        assert_eq!(StepStats::default().mean(), 0.0);
    }
}
