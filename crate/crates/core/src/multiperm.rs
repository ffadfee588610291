//! Two-level loopless generation of multiset permutations.
//!
//! The upper level is Johnson-Trotter over the item classes `1..=k`: it
//! decides which class moves next. Underneath, class `i < k` owns a
//! [`CombinationServer`] enumerating `n[i]`-combinations of its capsule
//! `1..=limit[i]`; the server's value change is the move of one item `i`
//! inside the capsule. Whenever class `i` moves, every lower class sits
//! bunched at one end of its own capsule, so the capsule of class `i` is a
//! contiguous run of the container starting after the lower items parked on
//! the left. Class `k` never moves actively; selecting it ends the
//! enumeration.
//!
//! A completed server run plays the role of the last child at that level:
//! the server is reversed in O(1), the jump table inherits the parent's
//! target, and the class direction flips.
//!
//! The capsule offset of class `i` is the number of lower items parked on the
//! left, `Σ n[j]` over the classes `j < i` heading right. Looking only at
//! class `i - 1` is not enough: with five distinct items, classes 1 and 2 sit
//! on opposite ends when class 3 first moves. The sum is carried in `shift`
//! alongside `up`: when class `j` completes it joins the block of completed
//! classes above it, and its contribution joins the block's sum. The class
//! selected through `up[1]` reads the whole sum from `shift[1]`.

use crate::combgen::CombinationServer;
use crate::count;
use crate::delta::DeltaEvent;
use crate::error::Result;
use crate::meter::Meter;
use crate::multiset::MultisetSpec;
use crate::source::DeltaSource;

#[derive(Debug, Clone)]
pub struct MultisetPermutations {
    spec: MultisetSpec,
    /// Container `M[1..=R]`; slot 0 unused.
    m: Vec<usize>,
    /// `servers[i - 1]` serves class `i`.
    servers: Vec<CombinationServer>,
    /// Upper jump table, `1..=k`.
    up: Vec<usize>,
    /// Upper directions, `1..=k`; +1 while the class is parked on the left.
    dir: Vec<isize>,
    /// Items parked on the left by the block of completed classes whose
    /// lowest member is the index; zero everywhere else.
    shift: Vec<usize>,
    filled: usize,
    exhausted: bool,
}

impl MultisetPermutations {
    /// Sets up the sorted container `(1,…,1, 2,…,2, …)` and one server per
    /// class. O(R).
    pub fn new(spec: &MultisetSpec) -> Self {
        let servers = (1..=spec.classes())
            .map(|c| CombinationServer::with_capacity(spec.multiplicity(c), spec.limit(c)))
            .collect();
        let mut g = Self::with_buffers(spec.total(), spec.classes(), servers);
        g.begin(spec.total());
        for &mult in spec.multiplicities() {
            g.push_item(true);
            for _ in 1..mult {
                g.push_item(false);
            }
        }
        g.finish();
        debug_assert_eq!(&g.spec, spec);
        g
    }

    /// Empty generator able to hold any multiset of total size `total`
    /// without reallocating; fill it with `begin`/`push_item`/`finish`.
    pub(crate) fn with_capacity(total: usize) -> Self {
        let servers = (0..total)
            .map(|_| CombinationServer::with_capacity(total, total))
            .collect();
        let mut g = Self::with_buffers(total, total, servers);
        g.exhausted = true;
        g
    }

    fn with_buffers(total: usize, classes: usize, servers: Vec<CombinationServer>) -> Self {
        Self {
            spec: MultisetSpec::with_capacity(total),
            m: vec![0; total + 1],
            servers,
            up: vec![0; classes + 2],
            dir: vec![0; classes + 2],
            shift: vec![0; classes + 2],
            filled: 0,
            exhausted: false,
        }
    }

    pub(crate) fn begin(&mut self, total: usize) {
        self.spec.reset(total);
        self.filled = 0;
        self.up[0] = 0;
        self.exhausted = true;
    }

    /// Appends the next item of the sorted container, opening a new class when
    /// `new_class` is set. Constant work.
    pub(crate) fn push_item(&mut self, new_class: bool) -> usize {
        let opened = new_class || self.spec.classes() == 0;
        let class = self.spec.push_item(self.filled, opened);
        if opened {
            if class > 1 {
                self.servers[class - 2].close();
            }
            self.servers[class - 1].begin(self.spec.limit(class));
            self.up[class] = class;
            self.dir[class] = 1;
            self.shift[class] = 0;
        }
        self.filled += 1;
        self.m[self.filled] = class;
        self.servers[class - 1].push_level();
        class
    }

    pub(crate) fn finish(&mut self) {
        let k = self.spec.classes();
        debug_assert_eq!(self.filled, self.spec.total());
        self.servers[k - 1].close();
        self.up[k + 1] = k + 1;
        self.shift[k + 1] = 0;
        self.exhausted = false;
    }

    pub fn spec(&self) -> &MultisetSpec {
        &self.spec
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Number of permutations this generator emits in total.
    pub fn count(&self) -> Result<u64> {
        mp_count(&self.spec)
    }
}

impl DeltaSource for MultisetPermutations {
    fn current(&self) -> &[usize] {
        &self.m[1..=self.spec.total()]
    }

    fn step<M: Meter>(&mut self, meter: &mut M) -> Option<DeltaEvent> {
        meter.tick(1);
        if self.exhausted {
            return None;
        }
        let class = self.up[1];
        self.up[1] = 1;
        let offset = self.shift[1];
        self.shift[1] = 0;
        meter.tick(5);
        if class == self.spec.classes() {
            self.exhausted = true;
            return None;
        }

        let server = &mut self.servers[class - 1];
        let change = server
            .step(meter)
            .expect("a selected server always has a run in progress");

        let (from, to) = (change.from + offset, change.to + offset);
        self.m.swap(from, to);
        meter.tick(6);

        meter.tick(1);
        if server.is_run_complete() {
            server.reverse_unchecked();
            self.up[class] = self.up[class + 1];
            self.up[class + 1] = class + 1;
            self.dir[class] = -self.dir[class];
            let parked = if self.dir[class] > 0 {
                self.spec.multiplicity(class)
            } else {
                0
            };
            self.shift[class] = parked + self.shift[class + 1];
            self.shift[class + 1] = 0;
            meter.tick(14);
        }
        Some(DeltaEvent::new(from, to, class))
    }
}

/// `R! / (n[1]! ⋯ n[k]!)`, or [`Error::CountOverflow`](crate::Error::CountOverflow).
pub fn mp_count(spec: &MultisetSpec) -> Result<u64> {
    count::multinomial(spec.multiplicities())
}
