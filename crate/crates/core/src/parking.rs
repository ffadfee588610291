//! Parking functions in O(1) time per function, on three levels.
//!
//! Every parking function is a rearrangement of exactly one *standard*
//! sequence: a nondecreasing `q` with `q(i) <= i`. The top level walks the
//! standard sequences; below it, a [`MultisetPermutations`] generator (itself
//! two levels) rearranges the current one.
//!
//! A multiset-permutation generator cannot be rewound in O(1), so two of them
//! take turns. While one emits its block, the other is rebuilt for the next
//! standard sequence a few constant-size micro-steps at a time ("time
//! stealing"). A micro-step consumes one bit of the cursor's Dyck word and, for
//! a 1 bit, appends one item to the standby container. The rebuild therefore
//! takes at most `2n - 1` micro-steps, while every block other than the
//! all-ones sequence has at least `n` outputs; a budget of two micro-steps per
//! output finishes with room to spare. The all-ones sequence comes first and
//! is prepared, together with its successor, when the generator is built.

use std::fmt;

use crate::delta::{format_labels, DeltaEvent};
use crate::error::{Error, Result};
use crate::meter::{Meter, Unmetered};
use crate::multiperm::MultisetPermutations;
use crate::multiset::DEFAULT_MAX_TOTAL;
use crate::source::DeltaSource;

/// Preparation micro-steps charged to each emitted parking function.
pub const DEFAULT_STEAL_BUDGET: usize = 2;

/// Runs cars `1..=n` down the one-way alley; true iff every car parks.
///
/// Car `i` tries lot `p[i-1]` and takes the first free lot at or after it.
///
/// ```
/// use loopless::parking::is_parking_function;
///
/// assert_eq!(is_parking_function(&[1, 2, 2]), Ok(true));
/// assert_eq!(is_parking_function(&[2, 1, 2]), Ok(true));
/// assert_eq!(is_parking_function(&[1, 3, 3]), Ok(false));
/// ```
pub fn is_parking_function(p: &[usize]) -> Result<bool> {
    let n = p.len();
    if let Some((index, &value)) = p.iter().enumerate().find(|(_, &v)| v == 0 || v > n) {
        return Err(Error::EntryOutOfRange {
            index: index + 1,
            value,
            n,
        });
    }
    let mut taken = vec![false; n + 1];
    for &want in p {
        match (want..=n).find(|&lot| !taken[lot]) {
            Some(lot) => taken[lot] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// A nondecreasing sequence with `q(i) <= i`: the sorted form of a parking
/// function.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardSequence(Vec<usize>);

impl StandardSequence {
    pub fn new(q: Vec<usize>) -> Option<Self> {
        let ok = q.iter().enumerate().all(|(i, &v)| v >= 1 && v <= i + 1)
            && q.windows(2).all(|w| w[0] <= w[1]);
        ok.then_some(Self(q))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for StandardSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_labels(&self.0))
    }
}

/// Loopless cursor over the standard sequences of length `n`.
///
/// The sequence is held as a Dyck word of `n` ones and `n` zeros: the `i`-th
/// one stands for `q(i) = 1 + (zeros before it)`. Successive words follow the
/// cool-lex order, in which every successor is a constant number of bit
/// writes. The first word is `1…10…0`, the all-ones sequence.
#[derive(Debug, Clone)]
pub struct CatalanCursor {
    n: usize,
    /// 1-based Dyck word; slot 0 unused.
    bits: Vec<u8>,
    x: usize,
    y: usize,
}

impl CatalanCursor {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let mut bits = vec![0u8; 2 * n + 1];
        bits[1..=n].fill(1);
        Ok(Self {
            n,
            bits,
            x: n,
            y: n,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Current Dyck word, `2n` bits.
    pub fn word(&self) -> &[u8] {
        &self.bits[1..]
    }

    fn bit(&self, index: usize) -> u8 {
        self.bits[index]
    }

    /// Moves to the next word. Constant work; false once every word has
    /// been visited.
    pub fn advance<M: Meter>(&mut self, meter: &mut M) -> bool {
        meter.tick(1);
        if self.x + 1 >= 2 * self.n {
            return false;
        }
        self.bits[self.x] = 0;
        self.bits[self.y] = 1;
        self.x += 1;
        self.y += 1;
        meter.tick(5);
        if self.bits[self.x] == 0 {
            meter.tick(1);
            if self.x + 2 == 2 * self.y {
                self.x += 1;
            } else {
                self.bits[self.x] = 1;
                self.bits[2] = 0;
                self.x = 3;
                self.y = 2;
                meter.tick(4);
            }
        }
        true
    }

    /// Decodes the current word. O(n).
    pub fn sequence(&self) -> StandardSequence {
        let mut zeros = 0;
        let mut q = Vec::with_capacity(self.n);
        for &b in self.word() {
            if b == 0 {
                zeros += 1;
            } else {
                q.push(zeros + 1);
            }
        }
        StandardSequence(q)
    }
}

/// Iterator over every standard sequence of length `n`.
#[derive(Debug, Clone)]
pub struct StandardSequences {
    cursor: CatalanCursor,
    started: bool,
    done: bool,
}

impl StandardSequences {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            cursor: CatalanCursor::new(n)?,
            started: false,
            done: false,
        })
    }
}

impl Iterator for StandardSequences {
    type Item = StandardSequence;

    fn next(&mut self) -> Option<StandardSequence> {
        if self.done {
            return None;
        }
        if self.started && !self.cursor.advance(&mut Unmetered) {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.cursor.sequence())
    }
}

/// What one call of [`ParkingFunctions::advance`] did to the current
/// function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParkingStep {
    /// A new standard sequence's block began; the whole function changed.
    Block,
    /// Two lots swapped within the current block.
    Swap(DeltaEvent),
}

#[derive(Debug, Clone)]
struct Block {
    perms: MultisetPermutations,
    /// Lot values mirroring the label container, 1-based.
    lots: Vec<usize>,
    /// class -> lot value.
    values: Vec<usize>,
}

impl Block {
    fn with_capacity(n: usize) -> Self {
        Self {
            perms: MultisetPermutations::with_capacity(n),
            lots: vec![0; n + 1],
            values: vec![0; n + 1],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Standby {
    /// No standard sequence left to prepare.
    Idle,
    Preparing(Prep),
    Ready,
}

/// Instrumented cost of one preparation micro-step.
const MICRO_STEP_OPS: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Prep {
    bit: usize,
    zeros: usize,
    filled: usize,
    last_value: usize,
}

/// Instrumentation for the time-stealing budget.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct StealStats {
    /// Most preparation micro-steps charged to a single call.
    pub max_per_call: usize,
    /// Micro-steps that had to run past the budget because a block ended
    /// before its successor was ready.
    pub overrun: usize,
    pub total: usize,
}

/// Generator of all parking functions of length `n`.
///
/// ```
/// use loopless::parking::ParkingFunctions;
///
/// let all: Vec<Vec<usize>> = ParkingFunctions::new(2).unwrap().collect();
/// assert_eq!(all, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
/// ```
#[derive(Debug, Clone)]
pub struct ParkingFunctions {
    n: usize,
    cursor: CatalanCursor,
    blocks: [Block; 2],
    active: usize,
    standby: Standby,
    budget: usize,
    started: bool,
    exhausted: bool,
    stats: StealStats,
}

impl ParkingFunctions {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_budget(n, DEFAULT_STEAL_BUDGET)
    }

    pub fn with_budget(n: usize, budget: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if n > DEFAULT_MAX_TOTAL {
            return Err(Error::TooLarge {
                total: n,
                max: DEFAULT_MAX_TOTAL,
            });
        }
        let mut g = Self {
            n,
            cursor: CatalanCursor::new(n)?,
            blocks: [Block::with_capacity(n), Block::with_capacity(n)],
            active: 1,
            standby: Standby::Idle,
            budget,
            started: false,
            exhausted: false,
            stats: StealStats::default(),
        };
        // The first two blocks are built up front; the first one is the
        // single-output all-ones sequence.
        g.begin_prep();
        g.finish_prep();
        g.active = 0;
        g.standby = Standby::Idle;
        if g.cursor.advance(&mut Unmetered) {
            g.begin_prep();
            g.finish_prep();
        }
        g.stats = StealStats::default();
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn steal_stats(&self) -> StealStats {
        self.stats
    }

    /// The current parking function; meaningful after the first `advance`.
    pub fn current(&self) -> &[usize] {
        &self.blocks[self.active].lots[1..]
    }

    /// Moves to the next parking function.
    pub fn advance(&mut self) -> Option<ParkingStep> {
        self.advance_with(&mut Unmetered)
    }

    /// [`advance`](Self::advance), charging instrumented work to `meter`.
    pub fn advance_with<M: Meter>(&mut self, meter: &mut M) -> Option<ParkingStep> {
        let mut spent = 0;
        let step = if !self.started {
            self.started = true;
            Some(ParkingStep::Block)
        } else if self.exhausted {
            None
        } else if let Some(e) = self.blocks[self.active].perms.step(meter) {
            meter.tick(3);
            let block = &mut self.blocks[self.active];
            block.lots.swap(e.from, e.to);
            Some(ParkingStep::Swap(DeltaEvent::new(
                e.from,
                e.to,
                block.values[e.moved_value],
            )))
        } else {
            match self.standby {
                Standby::Idle => {
                    self.exhausted = true;
                    None
                }
                Standby::Preparing(_) | Standby::Ready => {
                    if matches!(self.standby, Standby::Preparing(_)) {
                        let before = self.stats.total;
                        self.finish_prep();
                        let late = self.stats.total - before;
                        self.stats.overrun += late;
                        spent += late;
                    }
                    meter.tick(2);
                    self.active ^= 1;
                    self.standby = Standby::Idle;
                    if self.cursor.advance(meter) {
                        self.begin_prep();
                    }
                    Some(ParkingStep::Block)
                }
            }
        };

        let mut stolen = 0;
        while stolen < self.budget && matches!(self.standby, Standby::Preparing(_)) {
            meter.tick(MICRO_STEP_OPS);
            self.micro_step();
            stolen += 1;
        }
        spent += stolen;
        self.stats.max_per_call = self.stats.max_per_call.max(spent);
        step
    }

    fn standby_index(&self) -> usize {
        self.active ^ 1
    }

    fn begin_prep(&mut self) {
        let idx = self.standby_index();
        self.blocks[idx].perms.begin(self.n);
        self.standby = Standby::Preparing(Prep {
            bit: 1,
            zeros: 0,
            filled: 0,
            last_value: 0,
        });
    }

    fn finish_prep(&mut self) {
        while matches!(self.standby, Standby::Preparing(_)) {
            self.micro_step();
        }
    }

    /// Consumes one bit of the cursor's word. Constant work.
    fn micro_step(&mut self) {
        let Standby::Preparing(mut prep) = self.standby else {
            return;
        };
        self.stats.total += 1;
        let bit = self.cursor.bit(prep.bit);
        prep.bit += 1;
        if bit == 0 {
            prep.zeros += 1;
            self.standby = Standby::Preparing(prep);
            return;
        }
        let value = prep.zeros + 1;
        let new_class = prep.filled == 0 || value != prep.last_value;
        let idx = self.standby_index();
        let block = &mut self.blocks[idx];
        let class = block.perms.push_item(new_class);
        prep.filled += 1;
        block.lots[prep.filled] = value;
        block.values[class] = value;
        prep.last_value = value;
        if prep.filled == self.n {
            block.perms.finish();
            self.standby = Standby::Ready;
        } else {
            self.standby = Standby::Preparing(prep);
        }
    }
}

impl Iterator for ParkingFunctions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance()?;
        Some(self.current().to_vec())
    }
}
