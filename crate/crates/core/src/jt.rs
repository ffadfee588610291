//! Johnson-Trotter permutations of `1..=n`, one adjacent transposition per
//! step.
//!
//! Level `i` of the traversal is item `i`. Item `i` sweeps across the items
//! above it, `c[i]` counts the children visited at that level, and `up`
//! records where to resume once a level runs out of children.

use crate::delta::DeltaEvent;
use crate::error::{Error, Result};
use crate::meter::Meter;
use crate::source::DeltaSource;

#[derive(Debug, Clone)]
pub struct JohnsonTrotter {
    n: usize,
    /// position -> item, 1-based; slot 0 unused.
    a: Vec<usize>,
    /// item -> position.
    p: Vec<usize>,
    /// +1 right, -1 left.
    d: Vec<isize>,
    c: Vec<usize>,
    up: Vec<usize>,
    exhausted: bool,
}

impl JohnsonTrotter {
    /// Starts at the identity `(1, 2, …, n)`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let ident: Vec<usize> = (0..=n).collect();
        Ok(Self {
            n,
            a: ident.clone(),
            p: ident.clone(),
            d: vec![1; n + 1],
            c: vec![1; n + 1],
            up: ident,
            exhausted: false,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Position of `item` (1-based).
    pub fn position_of(&self, item: usize) -> usize {
        self.p[item]
    }
}

impl DeltaSource for JohnsonTrotter {
    fn current(&self) -> &[usize] {
        &self.a[1..]
    }

    fn step<M: Meter>(&mut self, meter: &mut M) -> Option<DeltaEvent> {
        meter.tick(1);
        if self.exhausted {
            return None;
        }
        let i = self.up[1];
        self.up[1] = 1;
        meter.tick(3);
        if i == self.n {
            self.exhausted = true;
            return None;
        }

        // move(i)
        let from = self.p[i];
        let to = from.wrapping_add_signed(self.d[i]);
        let w = self.a[to];
        self.a[to] = i;
        self.a[from] = w;
        self.p[w] = from;
        self.p[i] = to;
        self.c[i] += 1;
        meter.tick(10);

        meter.tick(2);
        if self.c[i] == self.n - i + 1 {
            // Last child at level i: inherit the parent's jump target.
            self.up[i] = self.up[i + 1];
            self.up[i + 1] = i + 1;
            self.c[i] = 1;
            self.d[i] = -self.d[i];
            meter.tick(6);
        }
        Some(DeltaEvent::new(from, to, i))
    }
}
