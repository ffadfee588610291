use crate::delta::DeltaEvent;
use crate::meter::{Meter, OpCounter, Unmetered};

/// A generator that holds its current object in a container and moves to the
/// next object by a single transposition.
///
/// The initial object is visible through [`current`](DeltaSource::current)
/// before the first call to [`next_delta`](DeltaSource::next_delta).
pub trait DeltaSource {
    /// The current container, positions `1..=len` mapped to slice indices
    /// `0..len`.
    fn current(&self) -> &[usize];

    /// Advances one step, charging instrumented work to `meter`.
    fn step<M: Meter>(&mut self, meter: &mut M) -> Option<DeltaEvent>;

    fn next_delta(&mut self) -> Option<DeltaEvent> {
        self.step(&mut Unmetered)
    }

    /// Advances one step and reports how many instrumented operations it took.
    fn next_delta_counted(&mut self) -> (Option<DeltaEvent>, u64) {
        let mut counter = OpCounter::new();
        let event = self.step(&mut counter);
        (event, counter.total())
    }

    /// Iterator over owned copies of every object, starting with the current one.
    fn objects(self) -> Objects<Self>
    where
        Self: Sized,
    {
        Objects {
            source: self,
            started: false,
        }
    }
}

/// See [`DeltaSource::objects`].
#[derive(Debug, Clone)]
pub struct Objects<S> {
    source: S,
    started: bool,
}

impl<S: DeltaSource> Iterator for Objects<S> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.started {
            self.source.next_delta()?;
        }
        self.started = true;
        Some(self.source.current().to_vec())
    }
}
