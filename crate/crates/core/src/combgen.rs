//! Loopless in-place generation of `n`-combinations of `{1, …, r}`.
//!
//! The combination lives in `q` as `n` values in no particular order; each
//! step overwrites exactly one slot. Seen as a binary vector of length `r`,
//! the step moves a single 1 across a block of 1s and never reorders the 0s.
//! A forward run starts with the 1s at the left end and finishes with them at
//! the right end. Once a run completes, [`CombinationServer::reverse`] rewinds
//! the traversal in O(1) and the next run replays the same combinations in
//! reverse order.
//!
//! The traversal walks a twisted lexico-tree whose level-`i` labels are kept
//! in `a`. Only the labels at the difference point and the solution point are
//! updated per step; `mark[i]` flags a parent label `a[i-1]` that is stale and
//! must be rebuilt from its child before use. `pos` maps each value to its
//! slot in `q`, `solve` holds solution points, and `up`/`down` are the jump
//! tables that skip over single-child chains.

use crate::error::{Error, Result};
use crate::meter::{Meter, Unmetered};

/// Old and new occupant of the slot of `q` that changed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValueChange {
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone)]
pub struct CombinationServer {
    n: usize,
    r: usize,
    // Level-indexed arrays, 0..=n+1.
    a: Vec<usize>,
    q: Vec<usize>,
    d: Vec<isize>,
    up: Vec<usize>,
    down: Vec<usize>,
    solve: Vec<usize>,
    mark: Vec<bool>,
    // Value-indexed, 0..=r+1.
    pos: Vec<usize>,
    i: usize,
}

impl CombinationServer {
    /// Initializes the first combination `q = (1, …, n)`; O(n).
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 || n > r {
            return Err(Error::BadCombination { n, r });
        }
        let mut s = Self::with_capacity(n, r);
        s.begin(r);
        for _ in 0..n {
            s.push_level();
        }
        s.close();
        Ok(s)
    }

    pub(crate) fn with_capacity(levels: usize, values: usize) -> Self {
        Self {
            n: 0,
            r: 0,
            a: vec![0; levels + 2],
            q: vec![0; levels + 2],
            d: vec![0; levels + 2],
            up: vec![0; levels + 2],
            down: vec![0; levels + 2],
            solve: vec![0; levels + 2],
            mark: vec![false; levels + 2],
            pos: vec![0; values + 2],
            i: 0,
        }
    }

    /// Starts an incremental (re)initialization over `r` values. Each call of
    /// [`push_level`](Self::push_level) then sets up one more level in O(1),
    /// and [`close`](Self::close) seals the combination size.
    pub(crate) fn begin(&mut self, r: usize) {
        debug_assert!(self.pos.len() >= r + 2);
        self.n = 0;
        self.r = r;
        self.a[0] = 0;
        self.d[0] = 0;
        self.up[0] = 0;
        self.down[0] = 0;
        self.pos[0] = 0;
        self.solve[0] = 0;
        self.mark[0] = false;
    }

    pub(crate) fn push_level(&mut self) {
        let t = self.n + 1;
        debug_assert!(t + 1 < self.a.len() && t <= self.r);
        self.a[t] = t;
        self.q[t] = t;
        self.d[t] = 1;
        self.up[t] = t;
        self.down[t] = t;
        self.pos[t] = t;
        self.solve[t] = t;
        self.mark[t] = false;
        self.n = t;
    }

    pub(crate) fn close(&mut self) {
        let n = self.n;
        self.d[n + 1] = -1;
        self.mark[n + 1] = false;
        self.a[n + 1] = 0;
        // n == r admits one combination only: the run is complete at once.
        self.i = if n == self.r { 0 } else { n };
    }

    /// Combination size `n`.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Universe size `r`.
    pub fn universe(&self) -> usize {
        self.r
    }

    /// The in-place combination, `n` distinct values of `1..=r`.
    pub fn current(&self) -> &[usize] {
        &self.q[1..=self.n]
    }

    /// True once the current run has emitted its last combination.
    pub fn is_run_complete(&self) -> bool {
        self.i == 0
    }

    /// Slot (1-based) of value `v` in [`current`](Self::current), if present.
    pub fn slot_of(&self, v: usize) -> Option<usize> {
        let slot = *self.pos.get(v)?;
        (slot >= 1 && slot <= self.n && self.q[slot] == v).then_some(slot)
    }

    /// Bit `j` (0-based) is 1 iff `j + 1` is in the combination.
    pub fn as_binary_vector(&self) -> Vec<u8> {
        let mut bits = vec![0u8; self.r];
        for &v in self.current() {
            bits[v - 1] = 1;
        }
        bits
    }

    pub fn next_change(&mut self) -> Option<ValueChange> {
        self.step(&mut Unmetered)
    }

    /// Rewinds a completed run so the next run emits the same combinations in
    /// reverse order. O(1).
    pub fn reverse(&mut self) -> Result<()> {
        if self.i != 0 {
            return Err(Error::RunInProgress);
        }
        self.reverse_unchecked();
        Ok(())
    }

    #[inline]
    pub(crate) fn reverse_unchecked(&mut self) {
        self.i = self.down[0];
    }

    /// One step of the traversal. Returns `None` once the run is complete.
    pub fn step<M: Meter>(&mut self, meter: &mut M) -> Option<ValueChange> {
        let ii = self.i;
        meter.tick(2);
        if ii == 0 {
            return None;
        }

        meter.tick(1);
        if self.mark[ii] {
            // Parent label was left stale; rebuild it from this level.
            self.a[ii - 1] = self.a[ii] - 1;
            self.mark[ii] = false;
            meter.tick(3);
        }

        let dir = self.d[ii];
        let ai = self.a[ii];
        meter.tick(3);
        let change = if self.d[ii + 1] < 0 {
            let slot = self.pos[ai];
            let from = self.q[slot];
            let to = ai.wrapping_add_signed(dir);
            self.q[slot] = to;
            self.pos[to] = slot;
            meter.tick(5);
            ValueChange { from, to }
        } else if dir > 0 {
            let slot = self.pos[ai];
            let from = self.q[slot];
            let to = self.a[self.solve[ii]].wrapping_add_signed(dir);
            self.q[slot] = to;
            self.pos[to] = slot;
            meter.tick(8);
            ValueChange { from, to }
        } else {
            let slot = self.pos[self.a[self.solve[ii]]];
            let from = self.q[slot];
            let to = ai.wrapping_add_signed(dir);
            self.q[slot] = to;
            self.pos[to] = slot;
            meter.tick(8);
            ValueChange { from, to }
        };

        self.a[ii] = ai.wrapping_add_signed(dir);
        meter.tick(2);
        if self.d[ii + 1] > 0 {
            let s = self.solve[ii];
            self.a[s] = self.a[s].wrapping_add_signed(dir);
            meter.tick(3);
        }
        self.up[ii] = ii;
        meter.tick(2);

        let last_child = if dir > 0 {
            self.a[ii] == self.r - self.n + ii
        } else {
            self.a[ii] == self.a[ii - 1] + 1
        };
        meter.tick(3);
        if last_child {
            self.up[ii] = self.up[ii - 1];
            self.up[ii - 1] = ii - 1;
            let top = self.up[ii];
            self.down[top] = ii;
            meter.tick(5);
            if dir < 0 {
                self.solve[top] = ii;
                self.mark[ii] = true;
                meter.tick(2);
            }
            self.d[ii] = -dir;
            self.i = if -dir < 0 || ii == self.n {
                self.up[ii]
            } else {
                self.down[ii]
            };
            meter.tick(5);
        } else {
            self.i = self.down[ii];
            meter.tick(2);
        }
        Some(change)
    }
}
